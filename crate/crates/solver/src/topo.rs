use std::time::Instant;

use xing_crossings::{extract_drawing, pair_admissible, planarize, CombinatorialDrawing, CrossingPairing, TypeSet};
use xing_decomp::{skeleton_plus, spr_tree, NodeKind};
use xing_graph::{biconnected_components, density_screen, is_biconnected, is_planar, planar_embedding, Edge, Graph};

use crate::search::{find_pairing, Budget};
use crate::{Decision, PieceWitness, SolveOptions, SolveResult, SolverError, Stats, Witness, WHOLE_GRAPH_EDGE_GUARD};

/// Default edge limit of [`oracle_enumerate`].
pub const ORACLE_EDGE_GUARD: usize = 16;

/// Drawing of `g` from a pairing with planar planarization, outer face 0.
pub(crate) fn drawing_for(g: &Graph, pairs: &[(Edge, Edge)]) -> Result<CombinatorialDrawing, SolverError> {
    let m = CrossingPairing::new(g, pairs)?;
    let p = planarize(g, &m)?;
    let emb = planar_embedding(&p.graph)
        .ok_or_else(|| SolverError::Inconsistent("pairing does not planarize".into()))?;
    Ok(extract_drawing(g, &m, &emb, 0)?)
}

fn yes(g: &Graph, pairs: &[(Edge, Edge)], pieces: Vec<PieceWitness>, stats: Stats) -> Result<SolveResult, SolverError> {
    let drawing = drawing_for(g, pairs)?;
    Ok(SolveResult {
        decision: Decision::Yes,
        witness: Some(Witness { pairing: drawing.pairing.clone(), drawing: Some(drawing), pieces }),
        stats,
    })
}

fn no(stats: Stats) -> SolveResult {
    SolveResult { decision: Decision::No, witness: None, stats }
}

/// Search on an internally 3-connected graph (any biconnected graph is
/// accepted). With a type set inside {full, almostfull, bowtie}, edges at
/// degree-two vertices are never paired.
pub fn solve_i3c(g: &Graph, s: TypeSet, opts: SolveOptions) -> Result<SolveResult, SolverError> {
    if !is_biconnected(g.adjacency()) {
        return Err(SolverError::NotBiconnected);
    }
    let start = Instant::now();
    let budget = Budget::new(opts.budget);
    let r = find_pairing(g, s, s.is_decomposable(), &budget, opts.parallel)?;
    let stats = Stats { nodes: budget.used(), elapsed: start.elapsed() };
    match r {
        Some(pairs) => yes(g, &pairs, Vec::new(), stats),
        None => Ok(no(stats)),
    }
}

/// Decides whether `g` has a 1-planar drawing with every crossing type in
/// `s`.
pub fn solve(g: &Graph, s: TypeSet, opts: SolveOptions) -> Result<SolveResult, SolverError> {
    let start = Instant::now();
    let budget = Budget::new(opts.budget);
    let stats = |b: &Budget| Stats { nodes: b.used(), elapsed: start.elapsed() };
    if g.n() >= 3 && !density_screen(g)? {
        return Ok(no(stats(&budget)));
    }
    if is_planar(g) {
        return yes(g, &[], Vec::new(), stats(&budget));
    }
    if !s.is_decomposable() {
        if g.m() > WHOLE_GRAPH_EDGE_GUARD {
            return Err(SolverError::UnsupportedTypeset(s.to_string(), g.m(), WHOLE_GRAPH_EDGE_GUARD));
        }
        return match find_pairing(g, s, false, &budget, opts.parallel)? {
            Some(pairs) => yes(g, &pairs, Vec::new(), stats(&budget)),
            None => Ok(no(stats(&budget))),
        };
    }
    let (blocks, _) = biconnected_components(g.adjacency());
    let mut pairs = Vec::new();
    let mut pieces = Vec::new();
    let mut hard_blocks = Vec::new();
    for block in &blocks {
        let (bg, bmap) = g.edge_subgraph(block);
        if is_planar(&bg) {
            continue;
        }
        let t = spr_tree(&bg).map_err(|e| SolverError::Inconsistent(e.to_string()))?;
        for node in (0..t.nodes.len()).filter(|&x| t.nodes[x].kind == NodeKind::R) {
            let sp = skeleton_plus(&t, node, &bg);
            if is_planar(&sp.graph) {
                continue;
            }
            let Some(ps) = find_pairing(&sp.graph, s, true, &budget, opts.parallel)? else {
                return Ok(no(stats(&budget)));
            };
            let host = |x: usize| -> Result<usize, SolverError> {
                sp.host_vertex[x]
                    .map(|v| bmap[v])
                    .ok_or_else(|| SolverError::Inconsistent("subdivision edge paired".into()))
            };
            for &(e, f) in &ps {
                pairs.push(((host(e.0)?, host(e.1)?), (host(f.0)?, host(f.1)?)));
            }
            pieces.push(PieceWitness { drawing: drawing_for(&sp.graph, &ps)?, graph: sp.graph });
        }
        hard_blocks.push((bg, bmap));
    }
    // the union of the piece pairings usually planarizes the whole graph;
    // when it does not, search each block directly
    let assembled = CrossingPairing::new(g, &pairs)
        .ok()
        .filter(|m| planarize(g, m).is_ok_and(|p| is_planar(&p.graph)));
    if assembled.is_none() {
        pairs.clear();
        for (bg, bmap) in &hard_blocks {
            let Some(ps) = find_pairing(bg, s, true, &budget, opts.parallel)? else {
                return Err(SolverError::Inconsistent(
                    "every skeleton+ is drawable but a block has no drawing".into(),
                ));
            };
            pairs.extend(ps.iter().map(|&(e, f)| ((bmap[e.0], bmap[e.1]), (bmap[f.0], bmap[f.1]))));
        }
    }
    yes(g, &pairs, pieces, stats(&budget))
}

/// Brute force over every set of disjoint admissible pairs.
pub fn oracle_enumerate(g: &Graph, s: TypeSet) -> Result<Decision, SolverError> {
    oracle_enumerate_with_guard(g, s, ORACLE_EDGE_GUARD)
}

pub fn oracle_enumerate_with_guard(g: &Graph, s: TypeSet, guard: usize) -> Result<Decision, SolverError> {
    if g.m() > guard {
        return Err(SolverError::TooLarge(g.m(), guard));
    }
    let edges = g.edges();
    let mut used = vec![false; edges.len()];
    let mut pairs = Vec::new();
    Ok(rec(g, s, &edges, 0, &mut used, &mut pairs).into())
}

fn rec(g: &Graph, s: TypeSet, edges: &[Edge], i: usize, used: &mut [bool], pairs: &mut Vec<(Edge, Edge)>) -> bool {
    if i == edges.len() {
        let m = CrossingPairing::new(g, pairs).expect("disjoint independent pairs");
        return is_planar(&planarize(g, &m).expect("valid pairing").graph);
    }
    if used[i] {
        return rec(g, s, edges, i + 1, used, pairs);
    }
    if rec(g, s, edges, i + 1, used, pairs) {
        return true;
    }
    let e = edges[i];
    for j in i + 1..edges.len() {
        let f = edges[j];
        if used[j] || !pair_admissible(g, e, f, s).unwrap_or(false) {
            continue;
        }
        used[i] = true;
        used[j] = true;
        pairs.push((e, f));
        let ok = rec(g, s, edges, i + 1, used, pairs);
        pairs.pop();
        used[i] = false;
        used[j] = false;
        if ok {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use xing_crossings::{verify_drawing, CrossingType};

    fn full() -> TypeSet {
        TypeSet::single(CrossingType::Full)
    }

    #[test]
    fn fixtures() {
        let o = SolveOptions::default();
        assert!(solve(&Graph::cycle(4), TypeSet::single(CrossingType::X), o).unwrap().is_yes());
        let k5 = solve(&Graph::complete(5), full(), o).unwrap();
        assert!(k5.is_yes());
        let w = k5.witness.unwrap();
        assert_eq!(w.pairing.len(), 1);
        assert!(verify_drawing(w.drawing.as_ref().unwrap(), full()).unwrap().pass);
        assert!(!solve(&Graph::complete(5), TypeSet::single(CrossingType::X), o).unwrap().is_yes());
        assert!(solve(&Graph::complete(6), full(), o).unwrap().is_yes());
        let k7 = solve(&Graph::complete(7), TypeSet::all(), o).unwrap();
        assert_eq!(k7.decision, Decision::No);
        assert_eq!(k7.stats.nodes, 0);
    }

    #[test]
    fn oracle_fixtures() {
        assert_eq!(oracle_enumerate(&Graph::cycle(4), full()).unwrap(), Decision::Yes);
        assert_eq!(oracle_enumerate(&Graph::complete(5), full()).unwrap(), Decision::Yes);
        assert_eq!(oracle_enumerate(&Graph::complete(5), TypeSet::single(CrossingType::X)).unwrap(), Decision::No);
        assert!(matches!(oracle_enumerate(&Graph::complete(7), full()), Err(SolverError::TooLarge(21, 16))));
    }

    #[test]
    fn i3c_requires_biconnected() {
        assert_eq!(solve_i3c(&Graph::path(4), full(), SolveOptions::default()), Err(SolverError::NotBiconnected));
    }
}
