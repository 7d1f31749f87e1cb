use std::collections::HashSet;

use xing_graph::{edge_key, Edge, Graph};

use crate::{edge_label, CrossingError};

/// Disjoint unordered pairs of independent host edges, normalized: each pair
/// is `(e, f)` with `e < f`, pairs sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CrossingPairing {
    pairs: Vec<(Edge, Edge)>,
}

impl CrossingPairing {
    pub fn new(g: &Graph, pairs: &[(Edge, Edge)]) -> Result<Self, CrossingError> {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(pairs.len());
        for &(e, f) in pairs {
            let (e, f) = (edge_key(e.0, e.1), edge_key(f.0, f.1));
            for x in [e, f] {
                if !g.has_edge(x.0, x.1) {
                    return Err(CrossingError::MissingEdge(g.name(x.0).into(), g.name(x.1).into()));
                }
                if !seen.insert(x) {
                    return Err(CrossingError::Reused(edge_label(g, x)));
                }
            }
            if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                return Err(CrossingError::Adjacent(edge_label(g, e), edge_label(g, f)));
            }
            out.push((e.min(f), e.max(f)));
        }
        out.sort_unstable();
        Ok(CrossingPairing { pairs: out })
    }

    /// Builds without validation; callers guarantee the invariants.
    pub fn from_sorted_unchecked(pairs: Vec<(Edge, Edge)>) -> Self {
        CrossingPairing { pairs }
    }

    pub fn empty() -> Self {
        CrossingPairing::default()
    }

    pub fn pairs(&self) -> &[(Edge, Edge)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn paired_edges(&self) -> HashSet<Edge> {
        self.pairs.iter().flat_map(|&(e, f)| [e, f]).collect()
    }

    pub fn partner(&self, e: Edge) -> Option<Edge> {
        self.pairs.iter().find_map(|&(a, b)| {
            if a == e {
                Some(b)
            } else if b == e {
                Some(a)
            } else {
                None
            }
        })
    }
}

/// Host edges among the endpoints of a pair, other than the pair itself.
pub fn side_edges(g: &Graph, (e, f): (Edge, Edge)) -> Vec<Edge> {
    let mut out = Vec::new();
    for a in [e.0, e.1] {
        for b in [f.0, f.1] {
            if g.has_edge(a, b) {
                out.push(edge_key(a, b));
            }
        }
    }
    out
}

/// No side edge of any pair takes part in a crossing.
pub fn is_crossing_confined(g: &Graph, m: &CrossingPairing) -> bool {
    let paired = m.paired_edges();
    m.pairs()
        .iter()
        .all(|&p| side_edges(g, p).iter().all(|s| !paired.contains(s)))
}

/// A planarization: paired edges replaced by a crossing vertex adjacent to
/// the four endpoints. Host vertices keep their indices; crossing vertex of
/// pair `i` is `cross[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Planarization {
    pub graph: Graph,
    pub cross: Vec<usize>,
}

impl Planarization {
    pub fn is_cross(&self, v: usize) -> bool {
        v >= self.graph.n() - self.cross.len()
    }

    pub fn pair_of(&self, x: usize) -> Option<usize> {
        let base = self.graph.n() - self.cross.len();
        (x >= base).then(|| x - base)
    }
}

pub fn planarize(g: &Graph, m: &CrossingPairing) -> Result<Planarization, CrossingError> {
    let m = CrossingPairing::new(g, m.pairs())?;
    Ok(planarize_unchecked(g, &m))
}

pub(crate) fn planarize_unchecked(g: &Graph, m: &CrossingPairing) -> Planarization {
    let mut h = g.clone();
    let mut cross = Vec::with_capacity(m.len());
    for (i, &(e, f)) in m.pairs().iter().enumerate() {
        let name = h.fresh_name(&format!("cross{i}"));
        let x = h.add_vertex(name).expect("fresh");
        for (a, b) in [e, f] {
            h.remove_edge(a, b);
            h.add_edge(a, x).unwrap();
            h.add_edge(b, x).unwrap();
        }
        cross.push(x);
    }
    Planarization { graph: h, cross }
}
