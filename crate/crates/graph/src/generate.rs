//! Exhaustive generation of small graphs up to isomorphism.

use std::collections::BTreeMap;

use crate::Graph;

const MAX_N: usize = 11;

/// Canonical form of a graph on at most 11 vertices: the lexicographically
/// smallest upper-triangle adjacency bitstring over all labelings reachable by
/// individualization and equitable refinement. Two graphs get the same key
/// iff they are isomorphic.
pub fn canonical_key(g: &Graph) -> u64 {
    assert!(g.n() <= MAX_N, "canonical keys support at most {MAX_N} vertices");
    let adj: Vec<u16> = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w))
        .collect();
    canon(&adj).0
}

fn canon(adj: &[u16]) -> (u64, Vec<usize>) {
    let n = adj.len();
    let cells = refine(adj, vec![(0..n).collect()]);
    let mut best = (u64::MAX, Vec::new());
    search(adj, cells, &mut best);
    best
}

fn search(adj: &[u16], cells: Vec<Vec<usize>>, best: &mut (u64, Vec<usize>)) {
    let Some(ci) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let key = key_of(adj, &order);
        if key < best.0 {
            *best = (key, order);
        }
        return;
    };
    for &v in &cells[ci] {
        let mut next = cells[..ci].to_vec();
        next.push(vec![v]);
        next.push(cells[ci].iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[ci + 1..]);
        search(adj, refine(adj, next), best);
    }
}

/// Splits cells by neighbour counts into every cell until stable.
fn refine(adj: &[u16], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u16> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let mut next = Vec::with_capacity(cells.len());
        for c in &cells {
            let mut sig: Vec<(Vec<u32>, usize)> = c
                .iter()
                .map(|&v| (masks.iter().map(|&m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            sig.sort();
            let mut group = vec![sig[0].1];
            for w in sig.windows(2) {
                if w[0].0 != w[1].0 {
                    next.push(std::mem::take(&mut group));
                }
                group.push(w[1].1);
            }
            next.push(group);
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn key_of(adj: &[u16], order: &[usize]) -> u64 {
    let n = order.len();
    let mut key = 0u64;
    for j in 1..n {
        for i in 0..j {
            key = key << 1 | (adj[order[i]] >> order[j] & 1) as u64;
        }
    }
    key
}

fn from_key(n: usize, key: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> (total - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("valid key")
}

/// All graphs on exactly `n` vertices up to isomorphism, canonically
/// labeled, sorted by canonical key.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_N);
    let mut level: BTreeMap<u64, ()> = BTreeMap::new();
    level.insert(0, ());
    for k in 1..n {
        // extend every graph on k vertices by a vertex with any neighbourhood
        let mut next = BTreeMap::new();
        for &key in level.keys() {
            let g = from_key(k, key);
            let base: Vec<u16> = (0..k)
                .map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w))
                .collect();
            for s in 0u16..(1 << k) {
                let mut adj = base.clone();
                adj.push(s);
                for (v, a) in adj.iter_mut().enumerate().take(k) {
                    if s >> v & 1 == 1 {
                        *a |= 1 << k;
                    }
                }
                next.insert(canon(&adj).0, ());
            }
        }
        level = next;
    }
    if n == 0 {
        return vec![Graph::new()];
    }
    level.keys().map(|&k| from_key(n, k)).collect()
}

/// Connected graphs on `1..=max_n` vertices up to isomorphism.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(all_graphs)
        .filter(Graph::is_connected)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphic_graphs_share_a_key() {
        let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(canonical_key(&a), canonical_key(&b));
        assert_ne!(canonical_key(&a), canonical_key(&star));
    }

    #[test]
    fn counts_small() {
        // OEIS A000088 and A001349
        let total: Vec<usize> = (1..=5).map(|n| all_graphs(n).len()).collect();
        assert_eq!(total, [1, 2, 4, 11, 34]);
        let conn: Vec<usize> = (1..=5)
            .map(|n| all_graphs(n).iter().filter(|g| g.is_connected()).count())
            .collect();
        assert_eq!(conn, [1, 1, 2, 6, 21]);
    }
}
