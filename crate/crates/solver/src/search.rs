//! Kuratowski-guided search for a crossing pairing with planar planarization.
//!
//! Every pairing that resolves the current Kuratowski subdivision must pair
//! one of its host edges, so the children of a node are the admissible pairs
//! through those edges. A pair explored by an earlier sibling is forbidden in
//! later siblings, so no pairing is visited twice.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use xing_crossings::{pair_admissible, TypeSet};
use xing_graph::{edge_key, is_planar_adj, kuratowski_edges, Edge, Graph};

use crate::SolverError;

/// Shared node counter with a hard limit.
pub(crate) struct Budget {
    used: AtomicU64,
    limit: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Budget { used: AtomicU64::new(0), limit }
    }

    pub(crate) fn tick(&self) -> Result<(), SolverError> {
        let u = self.used.fetch_add(1, Ordering::Relaxed) + 1;
        if u > self.limit {
            return Err(SolverError::ResourceExhausted(self.limit));
        }
        Ok(())
    }

    pub(crate) fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed).min(self.limit)
    }
}

/// Admissible partners of every edge, by index into `g.edges()`.
pub(crate) struct Candidates {
    pub(crate) edges: Vec<Edge>,
    pub(crate) index: HashMap<Edge, usize>,
    pub(crate) partners: Vec<Vec<usize>>,
}

impl Candidates {
    /// With `skip_deg2`, edges at degree-two vertices never cross.
    pub(crate) fn new(g: &Graph, s: TypeSet, skip_deg2: bool) -> Self {
        let edges = g.edges();
        let index = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let usable = |e: Edge| !skip_deg2 || (g.degree(e.0) != 2 && g.degree(e.1) != 2);
        let partners = edges
            .iter()
            .map(|&e| {
                (0..edges.len())
                    .filter(|&j| {
                        let f = edges[j];
                        usable(e)
                            && usable(f)
                            && e.0 != f.0
                            && e.0 != f.1
                            && e.1 != f.0
                            && e.1 != f.1
                            && pair_admissible(g, e, f, s).unwrap_or(false)
                    })
                    .collect()
            })
            .collect();
        Candidates { edges, index, partners }
    }
}

/// Adjacency of the planarization for pairs given by edge indices; crossing
/// vertex of pair `k` is `n + k`.
pub(crate) fn planarization_adj(n: usize, c: &Candidates, paired: &[bool], pairs: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n + pairs.len()];
    for (i, &(u, v)) in c.edges.iter().enumerate() {
        if !paired[i] {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    for (k, &(i, j)) in pairs.iter().enumerate() {
        let x = n + k;
        for e in [c.edges[i], c.edges[j]] {
            for a in [e.0, e.1] {
                adj[a].push(x);
                adj[x].push(a);
            }
        }
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    adj
}

struct State {
    paired: Vec<bool>,
    pairs: Vec<(usize, usize)>,
    forbidden: Vec<(usize, usize)>,
}

/// Children of the current node, in deterministic order; `None` when the
/// planarization is already planar.
fn children(n: usize, c: &Candidates, st: &State) -> Option<Vec<(usize, usize)>> {
    let adj = planarization_adj(n, c, &st.paired, &st.pairs);
    if is_planar_adj(&adj) {
        return None;
    }
    let k = kuratowski_edges(&adj).expect("non-planar graph has a Kuratowski subgraph");
    let mut out = Vec::new();
    for (a, b) in k {
        if a >= n || b >= n {
            continue;
        }
        let i = c.index[&edge_key(a, b)];
        if st.paired[i] {
            continue;
        }
        for &j in &c.partners[i] {
            let p = (i.min(j), i.max(j));
            if !st.paired[j] && !st.forbidden.contains(&p) {
                out.push(p);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Some(out)
}

fn dfs(n: usize, c: &Candidates, st: &mut State, budget: &Budget) -> Result<Option<Vec<(usize, usize)>>, SolverError> {
    budget.tick()?;
    let Some(kids) = children(n, c, st) else {
        return Ok(Some(st.pairs.clone()));
    };
    let mark = st.forbidden.len();
    let mut found = None;
    for p in kids {
        st.paired[p.0] = true;
        st.paired[p.1] = true;
        st.pairs.push(p);
        let r = dfs(n, c, st, budget);
        st.pairs.pop();
        st.paired[p.0] = false;
        st.paired[p.1] = false;
        match r {
            Ok(Some(sol)) => {
                found = Some(sol);
                break;
            }
            Ok(None) => st.forbidden.push(p),
            Err(e) => {
                st.forbidden.truncate(mark);
                return Err(e);
            }
        }
    }
    st.forbidden.truncate(mark);
    Ok(found)
}

#[cfg(feature = "parallel")]
fn par_dfs(
    n: usize,
    c: &Candidates,
    st: State,
    budget: &Budget,
    depth: usize,
) -> Result<Option<Vec<(usize, usize)>>, SolverError> {
    use rayon::prelude::*;
    if depth == 0 {
        let mut st = st;
        return dfs(n, c, &mut st, budget);
    }
    budget.tick()?;
    let Some(kids) = children(n, c, &st) else {
        return Ok(Some(st.pairs));
    };
    // child k sees the first k children as forbidden, exactly as in the
    // sequential order, so the first solution in child order is the same
    let r = (0..kids.len()).into_par_iter().find_map_first(|k| {
        let p = kids[k];
        let mut child = State { paired: st.paired.clone(), pairs: st.pairs.clone(), forbidden: st.forbidden.clone() };
        child.forbidden.extend_from_slice(&kids[..k]);
        child.paired[p.0] = true;
        child.paired[p.1] = true;
        child.pairs.push(p);
        match par_dfs(n, c, child, budget, depth - 1) {
            Ok(Some(sol)) => Some(Ok(sol)),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        }
    });
    r.transpose()
}

/// Pairs (as host edges) of a pairing with planar planarization, if any.
pub(crate) fn find_pairing(
    g: &Graph,
    s: TypeSet,
    skip_deg2: bool,
    budget: &Budget,
    parallel: bool,
) -> Result<Option<Vec<(Edge, Edge)>>, SolverError> {
    let c = Candidates::new(g, s, skip_deg2);
    let st = State { paired: vec![false; c.edges.len()], pairs: Vec::new(), forbidden: Vec::new() };
    let r = run(g.n(), &c, st, budget, parallel)?;
    Ok(r.map(|ps| ps.into_iter().map(|(i, j)| (c.edges[i], c.edges[j])).collect()))
}

#[cfg(feature = "parallel")]
fn run(n: usize, c: &Candidates, st: State, budget: &Budget, parallel: bool) -> Result<Option<Vec<(usize, usize)>>, SolverError> {
    if parallel {
        par_dfs(n, c, st, budget, 2)
    } else {
        let mut st = st;
        dfs(n, c, &mut st, budget)
    }
}

#[cfg(not(feature = "parallel"))]
fn run(n: usize, c: &Candidates, st: State, budget: &Budget, _parallel: bool) -> Result<Option<Vec<(usize, usize)>>, SolverError> {
    let mut st = st;
    dfs(n, c, &mut st, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use xing_crossings::CrossingType;

    #[test]
    fn k5_needs_one_full_pair() {
        let g = Graph::complete(5);
        let b = Budget::new(1000);
        let full = TypeSet::single(CrossingType::Full);
        let r = find_pairing(&g, full, false, &b, false).unwrap().unwrap();
        assert_eq!(r.len(), 1);
        assert!(find_pairing(&g, TypeSet::single(CrossingType::X), false, &Budget::new(1000), false)
            .unwrap()
            .is_none());
    }

    #[test]
    fn budget_exhaustion_is_not_no() {
        let g = Graph::complete(6);
        let r = find_pairing(&g, TypeSet::all(), false, &Budget::new(1), false);
        assert_eq!(r, Err(SolverError::ResourceExhausted(1)));
    }

    #[test]
    fn parallel_matches_sequential() {
        for g in [Graph::complete(6), Graph::complete_bipartite(3, 4)] {
            let a = find_pairing(&g, TypeSet::all(), false, &Budget::new(1 << 20), false).unwrap();
            let b = find_pairing(&g, TypeSet::all(), false, &Budget::new(1 << 20), true).unwrap();
            assert_eq!(a, b);
        }
    }
}
