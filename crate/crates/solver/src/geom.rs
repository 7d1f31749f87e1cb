//! Geometric variant: drawings without B- or W-configurations, optionally
//! with a prescribed vertex on the outer face.

use std::time::Instant;

use xing_crossings::{
    detect_b_configs, detect_w_configs, extract_drawing, pair_admissible, planarize, side_edges,
    CombinatorialDrawing, CrossingPairing, TypeSet,
};
use xing_decomp::{bc_tree, is_internally_3connected, spr_side_graph, spr_tree, NodeKind};
use xing_graph::{density_screen, enumerate_embeddings, is_biconnected, is_planar, Edge, Graph, GraphError};

use crate::search::Budget;
use crate::topo::drawing_for;
use crate::{
    Decision, OuterRequirement, PieceWitness, SolveOptions, SolveResult, SolverError, Stats, Witness,
    GEOM_WITNESS_EDGE_GUARD, ORACLE_EDGE_GUARD, WHOLE_GRAPH_EDGE_GUARD,
};

/// Embedding enumeration cap per planarization.
const EMBEDDING_BUDGET: usize = 2_000_000;

struct PairingWalk<'a> {
    g: &'a Graph,
    s: TypeSet,
    confined: bool,
    edges: Vec<Edge>,
    used: Vec<bool>,
    pairs: Vec<(Edge, Edge)>,
}

impl PairingWalk<'_> {
    /// A new pair keeps the pairing crossing confined.
    fn confined_with(&self, p: (Edge, Edge)) -> bool {
        if !self.confined {
            return true;
        }
        let sides = side_edges(self.g, p);
        self.pairs.iter().all(|&q| {
            let qs = side_edges(self.g, q);
            !sides.iter().any(|x| *x == q.0 || *x == q.1) && !qs.iter().any(|x| *x == p.0 || *x == p.1)
        })
    }

    fn walk<T>(
        &mut self,
        i: usize,
        leaf: &mut dyn FnMut(&[(Edge, Edge)]) -> Result<Option<T>, SolverError>,
    ) -> Result<Option<T>, SolverError> {
        if i == self.edges.len() {
            return leaf(&self.pairs);
        }
        if let Some(t) = self.walk(i + 1, leaf)? {
            return Ok(Some(t));
        }
        if self.used[i] {
            return Ok(None);
        }
        let e = self.edges[i];
        for j in i + 1..self.edges.len() {
            let f = self.edges[j];
            if self.used[j] || !pair_admissible(self.g, e, f, self.s).unwrap_or(false) || !self.confined_with((e, f)) {
                continue;
            }
            self.used[i] = true;
            self.used[j] = true;
            self.pairs.push((e, f));
            let r = self.walk(i + 1, leaf);
            self.pairs.pop();
            self.used[i] = false;
            self.used[j] = false;
            if let Some(t) = r? {
                return Ok(Some(t));
            }
        }
        Ok(None)
    }
}

/// First drawing, over pairings, embeddings up to reflection and outer faces,
/// that has `o` on its outer face and no B- or W-configuration.
fn geom_search(
    g: &Graph,
    o: Option<usize>,
    s: TypeSet,
    confined: bool,
    budget: &Budget,
) -> Result<Option<CombinatorialDrawing>, SolverError> {
    let mut w = PairingWalk {
        g,
        s,
        confined,
        edges: g.edges(),
        used: vec![false; g.m()],
        pairs: Vec::new(),
    };
    let mut leaf = |pairs: &[(Edge, Edge)]| -> Result<Option<CombinatorialDrawing>, SolverError> {
        budget.tick()?;
        let m = CrossingPairing::new(g, pairs)?;
        let p = planarize(g, &m)?;
        if !is_planar(&p.graph) {
            return Ok(None);
        }
        let embs = enumerate_embeddings(&p.graph, usize::MAX, EMBEDDING_BUDGET).map_err(|e| match e {
            GraphError::Exhausted => SolverError::ResourceExhausted(EMBEDDING_BUDGET as u64),
            e => e.into(),
        })?;
        for emb in embs {
            for (fi, face) in emb.faces().iter().enumerate() {
                if o.is_some_and(|v| !face.contains(&v)) {
                    continue;
                }
                budget.tick()?;
                let d = extract_drawing(g, &m, &emb, fi)?;
                if detect_b_configs(&d).is_empty() && detect_w_configs(&d).is_empty() {
                    return Ok(Some(d));
                }
            }
        }
        Ok(None)
    };
    w.walk(0, &mut leaf)
}

fn finish(d: Option<CombinatorialDrawing>, stats: Stats) -> SolveResult {
    match d {
        Some(d) => SolveResult {
            decision: Decision::Yes,
            witness: Some(Witness { pairing: d.pairing.clone(), drawing: Some(d), pieces: Vec::new() }),
            stats,
        },
        None => SolveResult { decision: Decision::No, witness: None, stats },
    }
}

/// Search restricted to crossing-confined pairings, on any graph.
pub fn solve_geom_confined(
    g: &Graph,
    o: &OuterRequirement,
    s: TypeSet,
    opts: SolveOptions,
) -> Result<SolveResult, SolverError> {
    let start = Instant::now();
    let o = o.resolve(g)?;
    let budget = Budget::new(opts.budget);
    let d = geom_search(g, o, s, true, &budget)?;
    Ok(finish(d, Stats { nodes: budget.used(), elapsed: start.elapsed() }))
}

pub fn solve_geom_i3c(g: &Graph, o: &OuterRequirement, s: TypeSet, opts: SolveOptions) -> Result<SolveResult, SolverError> {
    if !is_internally_3connected(g) {
        return Err(SolverError::NotInternally3Connected);
    }
    solve_geom_confined(g, o, s, opts)
}

/// Exhaustive search without the confinedness restriction.
pub fn oracle_geom(g: &Graph, o: &OuterRequirement, s: TypeSet) -> Result<Decision, SolverError> {
    if g.m() > ORACLE_EDGE_GUARD {
        return Err(SolverError::TooLarge(g.m(), ORACLE_EDGE_GUARD));
    }
    let o = o.resolve(g)?;
    let budget = Budget::new(u64::MAX);
    Ok(geom_search(g, o, s, false, &budget)?.is_some().into())
}

struct Ctx<'a> {
    s: TypeSet,
    budget: &'a Budget,
    pieces: Vec<PieceWitness>,
}

fn contains(h: &Graph, o: &Option<String>) -> bool {
    o.as_ref().is_none_or(|v| h.index_of(v).is_some())
}

fn is_series_parallel(g: &Graph) -> Result<bool, SolverError> {
    let t = spr_tree(g).map_err(|e| SolverError::Inconsistent(e.to_string()))?;
    Ok(t.count(NodeKind::R) == 0)
}

fn solve_1con(g: &Graph, o: Option<String>, ctx: &mut Ctx) -> Result<bool, SolverError> {
    if g.n() <= 2 {
        return Ok(true);
    }
    if is_biconnected(g.adjacency()) {
        return solve_2con(g, o, ctx);
    }
    let bc = bc_tree(g).map_err(|e| SolverError::Inconsistent(e.to_string()))?;
    let leaf = bc.leaf_blocks()[0];
    let verts = &bc.block_vertices[leaf];
    let cut = *verts
        .iter()
        .find(|v| bc.cutvertices.binary_search(v).is_ok())
        .ok_or_else(|| SolverError::Inconsistent("leaf block without cutvertex".into()))?;
    let (g1, _) = g.edge_subgraph(&bc.blocks[leaf]);
    let keep: Vec<usize> = (0..g.n()).filter(|v| *v == cut || verts.binary_search(v).is_err()).collect();
    let (g2, _) = g.induced(&keep);
    let sname = Some(g.name(cut).to_string());
    if contains(&g2, &o) && solve_2con(&g1, sname.clone(), ctx)? {
        return solve_1con(&g2, o, ctx);
    }
    if contains(&g1, &o) && solve_2con(&g1, o, ctx)? {
        return solve_1con(&g2, sname, ctx);
    }
    Ok(false)
}

fn solve_2con(g: &Graph, o: Option<String>, ctx: &mut Ctx) -> Result<bool, SolverError> {
    if g.n() <= 3 || is_series_parallel(g)? {
        return Ok(true);
    }
    if is_internally_3connected(g) {
        let ov = o.as_ref().map(|v| g.index_of(v).expect("outer vertex in graph"));
        return Ok(match geom_search(g, ov, ctx.s, true, ctx.budget)? {
            Some(d) => {
                ctx.pieces.push(PieceWitness { graph: g.clone(), drawing: d });
                true
            }
            None => false,
        });
    }
    let t = spr_tree(g).map_err(|e| SolverError::Inconsistent(e.to_string()))?;
    let mut chosen = None;
    'outer: for te in &t.tree_edges {
        for (mu, nu) in [(te.a, te.b), (te.b, te.a)] {
            let g1 = spr_side_graph(&t, mu, nu, g).map_err(|e| SolverError::Inconsistent(e.to_string()))?;
            if is_internally_3connected(&g1) || (g1.n() >= 5 && is_series_parallel(&g1)?) {
                chosen = Some((mu, nu, g1));
                break 'outer;
            }
        }
    }
    let (mu, nu, g1) = chosen.ok_or_else(|| SolverError::Inconsistent("no reducible SPR-tree edge".into()))?;
    let g2 = spr_side_graph(&t, nu, mu, g).map_err(|e| SolverError::Inconsistent(e.to_string()))?;
    let t1 = Some(g1.name(g1.n() - 1).to_string());
    let t2 = Some(g2.name(g2.n() - 1).to_string());
    if contains(&g2, &o) && solve_2con(&g1, t1, ctx)? {
        return solve_2con(&g2, o, ctx);
    }
    if contains(&g1, &o) && solve_2con(&g1, o, ctx)? {
        return solve_2con(&g2, t2, ctx);
    }
    Ok(false)
}

/// Decides whether `g` has a 1-planar drawing with straight-line edges and
/// every crossing type in `s`.
pub fn solve_geom(g: &Graph, s: TypeSet, opts: SolveOptions) -> Result<SolveResult, SolverError> {
    solve_geom_with_outer(g, &OuterRequirement::none(), s, opts)
}

/// [`solve_geom`] with the vertex of `o`, if any, on the outer face.
pub fn solve_geom_with_outer(
    g: &Graph,
    o: &OuterRequirement,
    s: TypeSet,
    opts: SolveOptions,
) -> Result<SolveResult, SolverError> {
    let start = Instant::now();
    let ov = o.resolve(g)?;
    let budget = Budget::new(opts.budget);
    let stats = |b: &Budget| Stats { nodes: b.used(), elapsed: start.elapsed() };
    if g.n() >= 3 && !density_screen(g)? {
        return Ok(finish(None, stats(&budget)));
    }
    if is_planar(g) {
        let d = drawing_for(g, &[])?;
        let d = match ov {
            Some(v) => outer_at(&d, v)?,
            None => d,
        };
        return Ok(finish(Some(d), stats(&budget)));
    }
    if !s.is_decomposable() {
        if g.m() > WHOLE_GRAPH_EDGE_GUARD {
            return Err(SolverError::UnsupportedTypeset(s.to_string(), g.m(), WHOLE_GRAPH_EDGE_GUARD));
        }
        let d = geom_search(g, ov, s, false, &budget)?;
        return Ok(finish(d, stats(&budget)));
    }
    let mut ctx = Ctx { s, budget: &budget, pieces: Vec::new() };
    for comp in g.components() {
        let (h, _) = g.induced(&comp);
        let oh = o.vertex.clone().filter(|v| h.index_of(v).is_some());
        if !solve_1con(&h, oh, &mut ctx)? {
            return Ok(finish(None, stats(&budget)));
        }
    }
    let pieces = ctx.pieces;
    if g.m() > GEOM_WITNESS_EDGE_GUARD {
        return Ok(SolveResult {
            decision: Decision::Yes,
            witness: Some(Witness { pairing: CrossingPairing::empty(), drawing: None, pieces }),
            stats: stats(&budget),
        });
    }
    let d = geom_search(g, ov, s, true, &budget)?
        .ok_or_else(|| SolverError::Inconsistent("reductions say YES but no confined drawing exists".into()))?;
    let mut r = finish(Some(d), stats(&budget));
    if let Some(w) = r.witness.as_mut() {
        w.pieces = pieces;
    }
    Ok(r)
}

/// The same drawing with the first face through `v` as the outer face. Only
/// safe where the outer face does not matter: topological drawings, and
/// drawings without crossings.
pub fn outer_at(d: &CombinatorialDrawing, v: usize) -> Result<CombinatorialDrawing, SolverError> {
    let fi = d
        .embedding
        .faces()
        .iter()
        .position(|f| f.contains(&v))
        .ok_or_else(|| SolverError::Inconsistent(format!("vertex {v} lies on no face")))?;
    Ok(extract_drawing(&d.host, &d.pairing, &d.embedding, fi)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use xing_crossings::CrossingType;

    fn full() -> TypeSet {
        TypeSet::single(CrossingType::Full)
    }

    #[test]
    fn planar_with_outer_vertex() {
        let c4 = Graph::cycle(4);
        for v in 0..4 {
            let o = OuterRequirement::vertex(c4.name(v));
            assert_eq!(oracle_geom(&c4, &o, TypeSet::all()).unwrap(), Decision::Yes);
            let r = solve_geom_confined(&c4, &o, TypeSet::all(), SolveOptions::default()).unwrap();
            assert!(r.is_yes());
            assert!(r.witness.unwrap().drawing.unwrap().outer_face().contains(&v));
        }
    }

    #[test]
    fn k5_full() {
        let k5 = Graph::complete(5);
        let r = solve_geom_i3c(&k5, &OuterRequirement::none(), full(), SolveOptions::default()).unwrap();
        assert!(r.is_yes());
        let d = r.witness.unwrap().drawing.unwrap();
        assert!(detect_b_configs(&d).is_empty() && detect_w_configs(&d).is_empty());
        assert_eq!(oracle_geom(&k5, &OuterRequirement::none(), full()).unwrap(), Decision::Yes);
        assert!(solve_geom(&k5, full(), SolveOptions::default()).unwrap().is_yes());
    }

    #[test]
    fn recursion_examples() {
        let o = SolveOptions::default();
        assert!(solve_geom(&Graph::path(5), full(), o).unwrap().is_yes());
        // two K5 blocks glued at vertex 4
        let mut es: Vec<(usize, usize)> = Graph::complete(5).edges();
        es.extend(Graph::complete(5).edges().iter().map(|&(u, v)| (if u == 0 { 4 } else { u + 4 }, v + 4)));
        let g = Graph::from_edges(9, &es).unwrap();
        assert!(!is_biconnected(g.adjacency()));
        let r = solve_geom(&g, full(), o).unwrap();
        assert!(r.is_yes());
        assert_eq!(r.witness.unwrap().pieces.len(), 2);
        assert_eq!(solve_geom(&Graph::complete(7), TypeSet::all(), o).unwrap().decision, Decision::No);
    }
}
