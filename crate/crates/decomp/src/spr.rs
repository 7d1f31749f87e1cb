//! SPR-trees by repeated splitting at separation pairs, followed by merging
//! of adjacent bonds and adjacent polygons.

use std::collections::BTreeMap;

use xing_graph::{biconnected_components, is_biconnected, Graph};

use crate::DecompError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeKind {
    S,
    P,
    R,
}

/// Skeleton edge between host vertices `u < v`; `virt` names the tree edge
/// for virtual edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkelEdge {
    pub u: usize,
    pub v: usize,
    pub virt: Option<usize>,
}

impl SkelEdge {
    fn new(a: usize, b: usize, virt: Option<usize>) -> Self {
        SkelEdge { u: a.min(b), v: a.max(b), virt }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SprNode {
    pub kind: NodeKind,
    /// Host vertex indices, sorted.
    pub vertices: Vec<usize>,
    /// Skeleton multigraph, sorted.
    pub edges: Vec<SkelEdge>,
}

impl SprNode {
    pub fn virtual_edges(&self) -> impl Iterator<Item = &SkelEdge> {
        self.edges.iter().filter(|e| e.virt.is_some())
    }
}

/// Tree edge `a < b`; virtual id `i` refers to `tree_edges[i]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    /// The separation pair shared by both skeletons.
    pub pair: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SprTree {
    pub nodes: Vec<SprNode>,
    pub tree_edges: Vec<TreeEdge>,
}

impl SprTree {
    pub fn neighbors(&self, x: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .tree_edges
            .iter()
            .filter_map(|t| if t.a == x { Some(t.b) } else if t.b == x { Some(t.a) } else { None })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn tree_edge(&self, x: usize, y: usize) -> Option<usize> {
        let (a, b) = (x.min(y), x.max(y));
        self.tree_edges.iter().position(|t| t.a == a && t.b == b)
    }

    /// Nodes on `mu`'s side once the tree edge `mu nu` is removed. An
    /// out-of-range `nu` yields every node reachable from `mu`.
    pub fn side(&self, mu: usize, nu: usize) -> Vec<usize> {
        let mut seen = vec![false; self.nodes.len()];
        seen[mu] = true;
        if let Some(x) = seen.get_mut(nu) {
            *x = true;
        }
        let mut stack = vec![mu];
        let mut out = vec![mu];
        while let Some(x) = stack.pop() {
            for y in self.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    stack.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn count(&self, kind: NodeKind) -> usize {
        self.nodes.iter().filter(|n| n.kind == kind).count()
    }
}

pub fn spr_tree(g: &Graph) -> Result<SprTree, DecompError> {
    if !is_biconnected(g.adjacency()) {
        return Err(DecompError::NotBiconnected);
    }
    let mut next_virt = 0usize;
    let mut fresh = || {
        next_virt += 1;
        next_virt - 1
    };
    let mut work: Vec<Vec<SkelEdge>> =
        vec![g.edges().into_iter().map(|(u, v)| SkelEdge::new(u, v, None)).collect()];
    let mut done: Vec<(NodeKind, Vec<SkelEdge>)> = Vec::new();

    while let Some(mut comp) = work.pop() {
        let mut groups: BTreeMap<(usize, usize), Vec<SkelEdge>> = BTreeMap::new();
        for e in &comp {
            groups.entry((e.u, e.v)).or_default().push(*e);
        }
        if groups.len() == 1 {
            done.push((NodeKind::P, comp));
            continue;
        }
        if groups.values().any(|g| g.len() > 1) {
            comp.clear();
            for ((u, v), mut es) in groups {
                if es.len() == 1 {
                    comp.push(es[0]);
                } else {
                    let x = Some(fresh());
                    es.push(SkelEdge::new(u, v, x));
                    done.push((NodeKind::P, es));
                    comp.push(SkelEdge::new(u, v, x));
                }
            }
        }
        let mut verts: Vec<usize> = comp.iter().flat_map(|e| [e.u, e.v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let local = |x: usize| verts.binary_search(&x).unwrap();
        let k = verts.len();
        let mut adj = vec![Vec::new(); k];
        for e in &comp {
            adj[local(e.u)].push(local(e.v));
            adj[local(e.v)].push(local(e.u));
        }
        if adj.iter().all(|l| l.len() == 2) {
            done.push((NodeKind::S, comp));
            continue;
        }
        match separation_pair(&adj) {
            None => done.push((NodeKind::R, comp)),
            Some((a, b, side)) => {
                let (a, b) = (verts[a], verts[b]);
                let inside: Vec<usize> = side.iter().map(|&i| verts[i]).collect();
                let (mut s1, mut s2): (Vec<SkelEdge>, Vec<SkelEdge>) = comp
                    .into_iter()
                    .partition(|e| inside.binary_search(&e.u).is_ok() || inside.binary_search(&e.v).is_ok());
                let x = Some(fresh());
                s1.push(SkelEdge::new(a, b, x));
                s2.push(SkelEdge::new(a, b, x));
                work.push(s2);
                work.push(s1);
            }
        }
    }

    // merge bonds with bonds and polygons with polygons
    loop {
        let mut merged = false;
        'outer: for i in 0..done.len() {
            if done[i].0 == NodeKind::R {
                continue;
            }
            for j in i + 1..done.len() {
                if done[j].0 != done[i].0 {
                    continue;
                }
                let shared = done[i]
                    .1
                    .iter()
                    .filter_map(|e| e.virt)
                    .find(|&x| done[j].1.iter().any(|f| f.virt == Some(x)));
                if let Some(x) = shared {
                    let (_, ej) = done.remove(j);
                    let ei = &mut done[i].1;
                    ei.retain(|e| e.virt != Some(x));
                    ei.extend(ej.into_iter().filter(|e| e.virt != Some(x)));
                    merged = true;
                    break 'outer;
                }
            }
        }
        if !merged {
            break;
        }
    }

    // deterministic node order and virtual ids
    let mut nodes: Vec<SprNode> = done
        .into_iter()
        .map(|(kind, edges)| {
            let mut vertices: Vec<usize> = edges.iter().flat_map(|e| [e.u, e.v]).collect();
            vertices.sort_unstable();
            vertices.dedup();
            SprNode { kind, vertices, edges }
        })
        .collect();
    nodes.sort_by(|a, b| {
        let key = |n: &SprNode| {
            let mut real: Vec<(usize, usize)> =
                n.edges.iter().filter(|e| e.virt.is_none()).map(|e| (e.u, e.v)).collect();
            real.sort_unstable();
            (n.vertices.clone(), n.kind, real)
        };
        key(a).cmp(&key(b))
    });
    let mut owners: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, n) in nodes.iter().enumerate() {
        for e in n.virtual_edges() {
            owners.entry(e.virt.unwrap()).or_default().push(i);
        }
    }
    let mut tree: Vec<(usize, usize, usize, (usize, usize))> = owners
        .iter()
        .map(|(&x, o)| {
            assert_eq!(o.len(), 2, "virtual edge shared by two skeletons");
            let e = nodes[o[0]].edges.iter().find(|e| e.virt == Some(x)).unwrap();
            (o[0].min(o[1]), o[0].max(o[1]), x, (e.u, e.v))
        })
        .collect();
    tree.sort_unstable();
    let mut rename = BTreeMap::new();
    for (i, t) in tree.iter().enumerate() {
        rename.insert(t.2, i);
    }
    for n in &mut nodes {
        for e in &mut n.edges {
            e.virt = e.virt.map(|x| rename[&x]);
        }
        n.edges.sort_unstable();
    }
    let tree_edges = tree.into_iter().map(|(a, b, _, pair)| TreeEdge { a, b, pair }).collect();
    Ok(SprTree { nodes, tree_edges })
}

/// A pair `{a, b}` with `b` a cutvertex of `G - a`, plus the vertex set of
/// one component of `G - {a, b}`.
fn separation_pair(adj: &[Vec<usize>]) -> Option<(usize, usize, Vec<usize>)> {
    let k = adj.len();
    for a in 0..k {
        let sub: Vec<Vec<usize>> = (0..k)
            .map(|v| if v == a { Vec::new() } else { adj[v].iter().copied().filter(|&w| w != a).collect() })
            .collect();
        let (_, cuts) = biconnected_components(&sub);
        if let Some(&b) = cuts.first() {
            let start = (0..k).find(|&v| v != a && v != b).unwrap();
            let mut seen = vec![false; k];
            seen[a] = true;
            seen[b] = true;
            seen[start] = true;
            let mut side = vec![start];
            let mut i = 0;
            while i < side.len() {
                let v = side[i];
                i += 1;
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        side.push(w);
                    }
                }
            }
            side.sort_unstable();
            return Some((a, b, side));
        }
    }
    None
}
