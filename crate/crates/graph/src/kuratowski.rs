//! Kuratowski subdivisions extracted by greedy edge deletion.

use std::collections::{BTreeSet, HashSet};

use crate::graph::{biconnected_components, Edge};
use crate::planarity::is_planar_adj;
use crate::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of K5 or K3,3 inside a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    /// Sorted. For K3,3 the first three form one side.
    pub branch: Vec<usize>,
    /// Each path runs between two branch vertices; internal vertices have
    /// degree two in the subdivision.
    pub paths: Vec<Vec<usize>>,
}

impl KuratowskiWitness {
    pub fn edges(&self) -> Vec<Edge> {
        let mut e: Vec<Edge> = self
            .paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| crate::edge_key(w[0], w[1])))
            .collect();
        e.sort_unstable();
        e
    }

    /// Checks the witness against `g` explicitly.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let want = match self.kind {
            KuratowskiKind::K5 => (5, 10),
            KuratowskiKind::K33 => (6, 9),
        };
        if self.branch.len() != want.0 || self.paths.len() != want.1 {
            return Err(format!(
                "{:?} needs {} branch vertices and {} paths",
                self.kind, want.0, want.1
            ));
        }
        let branch: HashSet<usize> = self.branch.iter().copied().collect();
        if branch.len() != want.0 {
            return Err("repeated branch vertex".into());
        }
        let mut inner = HashSet::new();
        let mut ends = BTreeSet::new();
        for p in &self.paths {
            if p.len() < 2 {
                return Err("path shorter than one edge".into());
            }
            let (a, b) = (p[0], p[p.len() - 1]);
            if !branch.contains(&a) || !branch.contains(&b) || a == b {
                return Err(format!("path {p:?} does not join two branch vertices"));
            }
            if !ends.insert(crate::edge_key(a, b)) {
                return Err(format!("two paths join {a} and {b}"));
            }
            for w in p.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return Err(format!("{}-{} is not an edge", w[0], w[1]));
                }
            }
            for &x in &p[1..p.len() - 1] {
                if branch.contains(&x) || !inner.insert(x) {
                    return Err(format!("paths are not internally disjoint at {x}"));
                }
            }
        }
        if self.kind == KuratowskiKind::K33 {
            let (l, r) = self.branch.split_at(3);
            for &a in l {
                for &b in r {
                    if !ends.contains(&crate::edge_key(a, b)) {
                        return Err(format!("missing K3,3 path {a}-{b}"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Edges of a minimal non-planar subgraph, or `None` if planar.
pub fn kuratowski_edges(adj: &[Vec<usize>]) -> Option<Vec<Edge>> {
    if is_planar_adj(adj) {
        return None;
    }
    let n = adj.len();
    // restrict to one non-planar block
    let (blocks, _) = biconnected_components(adj);
    let mut edges: Vec<Edge> = blocks
        .into_iter()
        .find(|b| !is_planar_adj(&adjacency(n, b)))
        .expect("a non-planar graph has a non-planar block");
    let mut i = 0;
    while i < edges.len() {
        let e = edges.remove(i);
        if is_planar_adj(&adjacency(n, &edges)) {
            edges.insert(i, e);
            i += 1;
        }
    }
    Some(edges)
}

fn adjacency(n: usize, edges: &[Edge]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    adj
}

/// A Kuratowski subdivision of `g`, or `None` iff `g` is planar.
pub fn kuratowski_witness(g: &Graph) -> Option<KuratowskiWitness> {
    let edges = kuratowski_edges(g.adjacency())?;
    Some(witness_from_edges(g.n(), &edges))
}

pub(crate) fn witness_from_edges(n: usize, edges: &[Edge]) -> KuratowskiWitness {
    let adj = adjacency(n, edges);
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() > 2).collect();
    let kind = match (branch.len(), adj[branch[0]].len()) {
        (5, 4) => KuratowskiKind::K5,
        (6, 3) => KuratowskiKind::K33,
        other => panic!("minimal non-planar subgraph with branch profile {other:?}"),
    };
    let mut paths = Vec::new();
    for &b in &branch {
        for &first in &adj[b] {
            let mut path = vec![b, first];
            let (mut prev, mut cur) = (b, first);
            while adj[cur].len() == 2 {
                let nx = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = nx;
                path.push(cur);
            }
            if b < cur {
                paths.push(path);
            }
        }
    }
    paths.sort();
    let mut branch = branch;
    if kind == KuratowskiKind::K33 {
        // side of the smallest branch vertex first
        let b0 = branch[0];
        let ends: HashSet<(usize, usize)> = paths
            .iter()
            .map(|p| crate::edge_key(p[0], p[p.len() - 1]))
            .collect();
        let (mut l, mut r): (Vec<usize>, Vec<usize>) =
            branch.iter().partition(|&&x| x == b0 || !ends.contains(&crate::edge_key(b0, x)));
        l.sort_unstable();
        r.sort_unstable();
        l.extend(r);
        branch = l;
    }
    KuratowskiWitness { kind, branch, paths }
}
