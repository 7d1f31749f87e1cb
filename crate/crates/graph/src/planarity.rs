//! Planarity testing by the Demoucron–Malgrange–Pertuiset path-addition
//! method, run independently on every biconnected block.

use std::collections::HashSet;

use crate::graph::{biconnected_components, edge_key, Edge};
use crate::{Graph, PlanarEmbedding};

pub fn is_planar(g: &Graph) -> bool {
    is_planar_adj(g.adjacency())
}

pub fn is_planar_adj(adj: &[Vec<usize>]) -> bool {
    planar_rotation(adj).is_some()
}

/// A planar embedding, or `None` if the graph is not planar.
pub fn planar_embedding(g: &Graph) -> Option<PlanarEmbedding> {
    planar_rotation(g.adjacency()).map(PlanarEmbedding::new)
}

/// Rotation system of some planar embedding of `adj`.
pub fn planar_rotation(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if n >= 3 && m > 3 * n - 6 {
        return None;
    }
    let mut rot = vec![Vec::new(); n];
    let (blocks, _) = biconnected_components(adj);
    for block in blocks {
        let (local, verts) = block_adjacency(&block);
        let r = if local.len() < 3 {
            vec![vec![1], vec![0]]
        } else {
            let mut st = Dmp::start(&local)?;
            loop {
                match st.step() {
                    Step::Done => break st.rotation(),
                    Step::NonPlanar => return None,
                    Step::Branch { path, faces } => st.embed_path(&path, faces[0]),
                }
            }
        };
        for (i, r) in r.into_iter().enumerate() {
            rot[verts[i]].extend(r.into_iter().map(|w| verts[w]));
        }
    }
    Some(rot)
}

/// Local adjacency of a block given by its edges, plus the local-to-global
/// vertex map (sorted).
pub(crate) fn block_adjacency(block: &[Edge]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let mut adj = vec![Vec::new(); verts.len()];
    for &(u, v) in block {
        let a = verts.binary_search(&u).unwrap();
        let b = verts.binary_search(&v).unwrap();
        adj[a].push(b);
        adj[b].push(a);
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    (adj, verts)
}

/// Every rotation system of a biconnected graph (both mirror images).
pub(crate) fn all_block_rotations(
    adj: &[Vec<usize>],
    budget: &mut usize,
) -> Option<Vec<Vec<Vec<usize>>>> {
    if adj.len() < 3 {
        return Some(vec![vec![vec![1], vec![0]]]);
    }
    let mut out = Vec::new();
    if let Some(st) = Dmp::start(adj) {
        branch(st, budget, &mut out)?;
    }
    Some(out)
}

fn branch(mut st: Dmp, budget: &mut usize, out: &mut Vec<Vec<Vec<usize>>>) -> Option<()> {
    loop {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        match st.step() {
            Step::Done => {
                out.push(st.rotation());
                return Some(());
            }
            Step::NonPlanar => return Some(()),
            Step::Branch { path, faces } if faces.len() == 1 => st.embed_path(&path, faces[0]),
            Step::Branch { path, faces } => {
                for &f in &faces {
                    let mut child = st.clone();
                    child.embed_path(&path, f);
                    branch(child, budget, out)?;
                }
                return Some(());
            }
        }
    }
}

enum Step {
    Done,
    NonPlanar,
    Branch { path: Vec<usize>, faces: Vec<usize> },
}

/// Partial embedding of a biconnected graph: each face is a cycle stored as
/// a vertex sequence whose consecutive pairs are the darts of that face.
#[derive(Clone)]
struct Dmp<'a> {
    adj: &'a [Vec<usize>],
    placed: Vec<bool>,
    edges: HashSet<Edge>,
    faces: Vec<Vec<usize>>,
}

impl<'a> Dmp<'a> {
    fn start(adj: &'a [Vec<usize>]) -> Option<Self> {
        let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
        if m > 3 * adj.len() - 6 {
            return None;
        }
        let cycle = find_cycle(adj);
        let mut st = Dmp {
            adj,
            placed: vec![false; adj.len()],
            edges: HashSet::new(),
            faces: Vec::new(),
        };
        for (i, &v) in cycle.iter().enumerate() {
            st.placed[v] = true;
            st.edges.insert(edge_key(v, cycle[(i + 1) % cycle.len()]));
        }
        let mut rev = cycle.clone();
        rev.reverse();
        st.faces = vec![cycle, rev];
        Some(st)
    }

    fn step(&self) -> Step {
        let m: usize = self.adj.iter().map(Vec::len).sum::<usize>() / 2;
        if self.edges.len() == m {
            return Step::Done;
        }
        let n = self.adj.len();
        let mut vface: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (fi, f) in self.faces.iter().enumerate() {
            for &v in f {
                vface[v].push(fi);
            }
        }
        let admissible = |att: &[usize]| -> Vec<usize> {
            let mut fs = vface[att[0]].clone();
            for &a in &att[1..] {
                fs.retain(|f| vface[a].contains(f));
            }
            fs
        };

        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        fn keep(best: &mut Option<(Vec<usize>, Vec<usize>)>, path: Vec<usize>, fs: Vec<usize>) {
            if best.as_ref().map_or(true, |(_, b)| fs.len() < b.len()) {
                *best = Some((path, fs));
            }
        }

        // chords between placed vertices
        for u in 0..n {
            if !self.placed[u] {
                continue;
            }
            for &v in &self.adj[u] {
                if v > u && self.placed[v] && !self.edges.contains(&(u, v)) {
                    let fs = admissible(&[u, v]);
                    if fs.is_empty() {
                        return Step::NonPlanar;
                    }
                    keep(&mut best, vec![u, v], fs);
                }
            }
        }

        // components of unplaced vertices
        let mut comp = vec![usize::MAX; n];
        let mut cid = 0;
        for s in 0..n {
            if self.placed[s] || comp[s] != usize::MAX {
                continue;
            }
            comp[s] = cid;
            let mut members = vec![s];
            let mut i = 0;
            let mut att = Vec::new();
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &w in &self.adj[v] {
                    if self.placed[w] {
                        att.push(w);
                    } else if comp[w] == usize::MAX {
                        comp[w] = cid;
                        members.push(w);
                    }
                }
            }
            att.sort_unstable();
            att.dedup();
            let fs = admissible(&att);
            if fs.is_empty() {
                return Step::NonPlanar;
            }
            if best.as_ref().is_some_and(|(_, b)| b.len() <= fs.len()) {
                cid += 1;
                continue;
            }
            let path = self.fragment_path(&comp, cid, &att);
            keep(&mut best, path, fs);
            cid += 1;
        }
        let (path, faces) = best.expect("unembedded edges imply a fragment");
        Step::Branch { path, faces }
    }

    /// Path from the first attachment through the component to another
    /// attachment.
    fn fragment_path(&self, comp: &[usize], cid: usize, att: &[usize]) -> Vec<usize> {
        let a = att[0];
        let c = *self.adj[a]
            .iter()
            .find(|&&w| !self.placed[w] && comp[w] == cid)
            .expect("attachment touches component");
        let n = self.adj.len();
        let mut parent = vec![usize::MAX; n];
        parent[c] = c;
        let mut queue = std::collections::VecDeque::from([c]);
        while let Some(v) = queue.pop_front() {
            if let Some(&b) = self.adj[v].iter().find(|&&b| self.placed[b] && b != a) {
                let mut path = vec![b];
                let mut x = v;
                loop {
                    path.push(x);
                    if x == c {
                        break;
                    }
                    x = parent[x];
                }
                path.push(a);
                path.reverse();
                return path;
            }
            for &w in &self.adj[v] {
                if !self.placed[w] && parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        unreachable!("fragment of a biconnected graph has two attachments")
    }

    fn embed_path(&mut self, path: &[usize], fi: usize) {
        let (a, b) = (path[0], *path.last().unwrap());
        let f = std::mem::take(&mut self.faces[fi]);
        let k = f.len();
        let i = f.iter().position(|&x| x == a).unwrap();
        let j = f.iter().position(|&x| x == b).unwrap();
        let inner = &path[1..path.len() - 1];
        let walk = |from: usize, to: usize| -> Vec<usize> {
            let mut out = Vec::new();
            let mut p = from;
            loop {
                out.push(f[p]);
                if p == to {
                    break;
                }
                p = (p + 1) % k;
            }
            out
        };
        let mut f1 = walk(i, j);
        f1.extend(inner.iter().rev());
        let mut f2 = walk(j, i);
        f2.extend(inner.iter());
        self.faces[fi] = f1;
        self.faces.push(f2);
        for w in path.windows(2) {
            self.edges.insert(edge_key(w[0], w[1]));
        }
        for &v in inner {
            self.placed[v] = true;
        }
    }

    /// Rotation where the successor of `u` around `v` is `w` whenever
    /// `u v w` is consecutive on a face.
    fn rotation(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for f in &self.faces {
            let k = f.len();
            for i in 0..k {
                let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
                succ[v].push((u, w));
            }
        }
        succ.into_iter()
            .map(|s| {
                let mut out = Vec::with_capacity(s.len());
                let mut cur = s.iter().map(|p| p.0).min().unwrap();
                for _ in 0..s.len() {
                    out.push(cur);
                    cur = s.iter().find(|p| p.0 == cur).unwrap().1;
                }
                out
            })
            .collect()
    }
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    let mut stack = vec![(0usize, 0usize)];
    while let Some(&mut (v, ref mut pos)) = stack.last_mut() {
        if *pos == adj[v].len() {
            stack.pop();
            continue;
        }
        let w = adj[v][*pos];
        *pos += 1;
        if depth[w] == usize::MAX {
            depth[w] = depth[v] + 1;
            parent[w] = v;
            stack.push((w, 0));
        } else if w != parent[v] && depth[w] < depth[v] {
            let mut cycle = vec![v];
            let mut x = v;
            while x != w {
                x = parent[x];
                cycle.push(x);
            }
            cycle.reverse();
            return cycle;
        }
    }
    unreachable!("biconnected graph has a cycle")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(is_planar(&Graph::complete(4)));
        assert!(!is_planar(&Graph::complete(5)));
        assert!(!is_planar(&Graph::complete_bipartite(3, 3)));
        assert!(is_planar(&Graph::complete_bipartite(2, 5)));
        assert!(is_planar(&Graph::path(5)));
        assert!(is_planar(&Graph::new()));
        let mut k5e = Graph::complete(5);
        k5e.remove_edge(0, 1);
        assert!(is_planar(&k5e));
    }

    #[test]
    fn petersen_is_not_planar() {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        assert!(!is_planar(&Graph::from_edges(10, &e).unwrap()));
    }

    #[test]
    fn embeddings_satisfy_euler() {
        let cube = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap();
        for g in [Graph::complete(4), cube, Graph::cycle(6), Graph::complete_bipartite(2, 4)] {
            let e = planar_embedding(&g).unwrap();
            assert!(e.is_consistent_with(&g));
            assert!(e.is_planar());
        }
    }
}
