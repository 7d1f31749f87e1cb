//! Rotation-system embeddings, face tracing, and enumeration of all planar
//! embeddings up to reflection.

use std::collections::BTreeSet;

use crate::graph::{biconnected_components, components_of};
use crate::planarity::{all_block_rotations, block_adjacency};
use crate::{Graph, GraphError};

/// A combinatorial embedding given by the cyclic order of neighbours around
/// every vertex, plus a designated outer face (index into [`faces`]).
///
/// [`faces`]: PlanarEmbedding::faces
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarEmbedding {
    rot: Vec<Vec<usize>>,
    pub outer: usize,
}

impl PlanarEmbedding {
    pub fn new(rot: Vec<Vec<usize>>) -> Self {
        PlanarEmbedding { rot, outer: 0 }
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rot
    }

    pub fn into_rotations(self) -> Vec<Vec<usize>> {
        self.rot
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    /// The dart following `(u, v)` on its face.
    #[inline]
    pub fn next_dart(&self, u: usize, v: usize) -> (usize, usize) {
        let r = &self.rot[v];
        let p = r.iter().position(|&x| x == u).expect("dart in rotation");
        (v, r[(p + 1) % r.len()])
    }

    /// `twins()[u][i]` is the position of `u` in the rotation of
    /// `rot[u][i]`, so the reverse of every dart is found in constant time.
    pub fn twins(&self) -> Vec<Vec<usize>> {
        let n = self.rot.len();
        let mut incoming: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (u, r) in self.rot.iter().enumerate() {
            for (i, &w) in r.iter().enumerate() {
                incoming[w].push((u, i));
            }
        }
        let mut mark = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = self.rot.iter().map(|r| vec![usize::MAX; r.len()]).collect();
        for w in 0..n {
            for (j, &u) in self.rot[w].iter().enumerate() {
                mark[u] = j;
            }
            for &(u, i) in &incoming[w] {
                out[u][i] = mark[u];
            }
            for &u in &self.rot[w] {
                mark[u] = usize::MAX;
            }
        }
        out
    }

    /// Traces every face once; `visit(f, v, i)` sees dart `(v, rot[v][i])`
    /// of face `f`, isolated vertices report `i == usize::MAX`.
    fn trace(&self, mut visit: impl FnMut(usize, usize, usize)) -> usize {
        let tw = self.twins();
        let mut seen: Vec<Vec<bool>> = self.rot.iter().map(|r| vec![false; r.len()]).collect();
        let mut f = 0;
        for v in 0..self.rot.len() {
            if self.rot[v].is_empty() {
                visit(f, v, usize::MAX);
                f += 1;
                continue;
            }
            for i in 0..self.rot[v].len() {
                if seen[v][i] {
                    continue;
                }
                let (mut a, mut k) = (v, i);
                while !seen[a][k] {
                    seen[a][k] = true;
                    visit(f, a, k);
                    let b = self.rot[a][k];
                    k = (tw[a][k] + 1) % self.rot[b].len();
                    a = b;
                }
                f += 1;
            }
        }
        f
    }

    /// Boundary walks as vertex sequences; the walk `[a, b, c]` consists of
    /// darts a→b, b→c, c→a. Isolated vertices form a one-vertex walk.
    /// Order is deterministic: by first unvisited dart in vertex/rotation
    /// order.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        self.trace(|f, v, _| {
            if f == out.len() {
                out.push(Vec::new());
            }
            out[f].push(v);
        });
        out
    }

    /// For every dart `(u, rot[u][i])`, the index of its face in [`faces`].
    ///
    /// [`faces`]: PlanarEmbedding::faces
    pub fn dart_faces(&self) -> Vec<Vec<usize>> {
        let mut idx: Vec<Vec<usize>> = self.rot.iter().map(|r| vec![usize::MAX; r.len()]).collect();
        self.trace(|f, v, i| {
            if i != usize::MAX {
                idx[v][i] = f;
            }
        });
        idx
    }

    /// Number of faces.
    pub fn face_count(&self) -> usize {
        self.trace(|_, _, _| {})
    }

    /// Every rotation lists exactly the neighbours of its vertex in `g`.
    pub fn is_consistent_with(&self, g: &Graph) -> bool {
        self.rot.len() == g.n()
            && (0..g.n()).all(|v| {
                let mut r = self.rot[v].clone();
                r.sort_unstable();
                r == g.neighbors(v)
            })
    }

    /// Euler's formula `V - E + F = 2` on every connected component.
    pub fn is_planar(&self) -> bool {
        let comps = components_of(&self.rot);
        let faces = self.faces();
        let mut comp_of = vec![0; self.rot.len()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut fcount = vec![0usize; comps.len()];
        for f in &faces {
            fcount[comp_of[f[0]]] += 1;
        }
        comps.iter().enumerate().all(|(i, c)| {
            let e: usize = c.iter().map(|&v| self.rot[v].len()).sum::<usize>() / 2;
            c.len() + fcount[i] == e + 2
        })
    }

    /// The mirror image.
    pub fn reflected(&self) -> Self {
        let rot = self
            .rot
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        PlanarEmbedding { rot, outer: 0 }
    }

    /// A key equal for two embeddings iff they coincide up to reflection.
    pub fn canonical_key(&self) -> Vec<Vec<usize>> {
        let a = normalize(&self.rot);
        let b = normalize(&self.reflected().rot);
        a.min(b)
    }
}

fn normalize(rot: &[Vec<usize>]) -> Vec<Vec<usize>> {
    rot.iter()
        .map(|r| {
            let Some(p) = r.iter().enumerate().min_by_key(|x| x.1).map(|x| x.0) else {
                return Vec::new();
            };
            r[p..].iter().chain(&r[..p]).copied().collect()
        })
        .collect()
}

/// All planar embeddings of `g`, pairwise distinct up to reflection, at most
/// `limit` of them. `budget` bounds the search steps.
///
/// Embeddings of each block come from path-addition branching over every
/// admissible face; blocks are then glued in block-tree order by trying
/// every cyclic interleaving at the shared cutvertex and keeping the planar
/// ones. Components are combined independently.
pub fn enumerate_embeddings(
    g: &Graph,
    limit: usize,
    budget: usize,
) -> Result<Vec<PlanarEmbedding>, GraphError> {
    let adj = g.adjacency();
    let mut budget = budget;
    let mut per_comp: Vec<Vec<Vec<Vec<usize>>>> = Vec::new();
    for comp in components_of(adj) {
        per_comp.push(component_rotations(adj, &comp, &mut budget)?);
    }
    // cartesian product over components, deduplicated up to reflection
    let mut partial: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); g.n()]];
    for options in &per_comp {
        let mut next = Vec::new();
        for p in &partial {
            for o in options {
                let mut r = p.clone();
                for (v, list) in o.iter().enumerate() {
                    if !list.is_empty() {
                        r[v] = list.clone();
                    }
                }
                next.push(r);
                if budget == 0 {
                    return Err(GraphError::Exhausted);
                }
                budget -= 1;
            }
        }
        partial = next;
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in partial {
        let e = PlanarEmbedding::new(r);
        if seen.insert(e.canonical_key()) {
            out.push(e);
            if out.len() == limit {
                break;
            }
        }
    }
    Ok(out)
}

/// Every rotation system (mirrors included) of one connected component,
/// given as full-length rotation vectors with empty lists outside it.
fn component_rotations(
    adj: &[Vec<usize>],
    comp: &[usize],
    budget: &mut usize,
) -> Result<Vec<Vec<Vec<usize>>>, GraphError> {
    let n = adj.len();
    if comp.len() == 1 {
        return Ok(vec![vec![Vec::new(); n]]);
    }
    let sub: Vec<Vec<usize>> = (0..n)
        .map(|v| if comp.binary_search(&v).is_ok() { adj[v].clone() } else { Vec::new() })
        .collect();
    let (blocks, _) = biconnected_components(&sub);
    // order blocks so that each one meets the union of its predecessors
    let mut order = Vec::with_capacity(blocks.len());
    let mut used = vec![false; blocks.len()];
    let mut present = vec![false; n];
    for _ in 0..blocks.len() {
        let next = (0..blocks.len())
            .find(|&b| {
                !used[b] && (order.is_empty() || blocks[b].iter().any(|&(u, v)| present[u] || present[v]))
            })
            .expect("connected component");
        used[next] = true;
        order.push(next);
        for &(u, v) in &blocks[next] {
            present[u] = true;
            present[v] = true;
        }
    }

    let mut present = vec![false; n];
    let mut partial: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]];
    for &b in &order {
        let (local, verts) = block_adjacency(&blocks[b]);
        let brots = all_block_rotations(&local, budget).ok_or(GraphError::Exhausted)?;
        if brots.is_empty() {
            return Err(GraphError::NotPlanar);
        }
        let cut = verts.iter().copied().find(|&v| present[v]);
        let mut next = Vec::new();
        for p in &partial {
            for br in &brots {
                let mut r = p.clone();
                for (i, list) in br.iter().enumerate() {
                    if Some(verts[i]) != cut {
                        r[verts[i]] = list.iter().map(|&w| verts[w]).collect();
                    }
                }
                let Some(c) = cut else {
                    next.push(r);
                    continue;
                };
                let ci = verts.binary_search(&c).unwrap();
                let incoming: Vec<usize> = br[ci].iter().map(|&w| verts[w]).collect();
                for merged in cyclic_merges(&p[c], &incoming) {
                    if *budget == 0 {
                        return Err(GraphError::Exhausted);
                    }
                    *budget -= 1;
                    let mut r2 = r.clone();
                    r2[c] = merged;
                    if PlanarEmbedding::new(r2.clone()).is_planar() {
                        next.push(r2);
                    }
                }
            }
        }
        for &v in &verts {
            present[v] = true;
        }
        partial = next;
    }
    Ok(partial)
}

/// All cyclic sequences containing `a` and `b` as cyclic subsequences,
/// each written starting at `a[0]`.
fn cyclic_merges(a: &[usize], b: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let tail = &a[1..];
    for k in 0..b.len() {
        let rb: Vec<usize> = b[k..].iter().chain(&b[..k]).copied().collect();
        let mut cur = vec![a[0]];
        interleave(tail, &rb, &mut cur, &mut out);
    }
    out
}

fn interleave(x: &[usize], y: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if x.is_empty() || y.is_empty() {
        let mut r = cur.clone();
        r.extend_from_slice(x);
        r.extend_from_slice(y);
        out.push(r);
        return;
    }
    cur.push(x[0]);
    interleave(&x[1..], y, cur, out);
    cur.pop();
    cur.push(y[0]);
    interleave(x, &y[1..], cur, out);
    cur.pop();
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(g: &Graph) -> usize {
        enumerate_embeddings(g, usize::MAX, 1_000_000).unwrap().len()
    }

    #[test]
    fn face_counts() {
        let e = crate::planar_embedding(&Graph::cycle(4)).unwrap();
        let f = e.faces();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|w| w.len() == 4));
        let e = crate::planar_embedding(&Graph::complete(4)).unwrap();
        assert_eq!(e.faces().len(), 4);
        assert!(e.faces().iter().all(|w| w.len() == 3));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(count(&Graph::complete(4)), 1);
        assert_eq!(count(&Graph::cycle(4)), 1);
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(count(&bowtie), 2);
        assert_eq!(count(&Graph::path(4)), 1);
    }

    #[test]
    fn merges_preserve_both_orders() {
        let m = cyclic_merges(&[1, 2], &[3, 4]);
        // 2 rotations of b times C(3,2)=3 interleavings of [2] with b
        assert_eq!(m.len(), 6);
        assert!(m.iter().all(|s| s[0] == 1 && s.len() == 4));
    }

    #[test]
    fn budget_is_reported() {
        assert_eq!(
            enumerate_embeddings(&Graph::complete(4), usize::MAX, 1),
            Err(GraphError::Exhausted)
        );
    }
}
