use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use xing_graph::io::{parse_edge_list, parse_graph6, to_graph6, write_edge_list};
use xing_graph::*;

struct AtlasEntry {
    g: Graph,
    planar: bool,
    connected: bool,
}

fn atlas() -> Vec<AtlasEntry> {
    include_str!("data/atlas.txt")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let t: Vec<&str> = l.split(' ').collect();
            AtlasEntry { g: parse_graph6(t[0]).unwrap(), planar: t[1] == "1", connected: t[2] == "1" }
        })
        .collect()
}

fn is_3_connected(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 || !g.is_connected() {
        return false;
    }
    for a in 0..n {
        for b in a + 1..n {
            let rest: Vec<usize> = (0..n).filter(|&v| v != a && v != b).collect();
            if !g.induced(&rest).0.is_connected() {
                return false;
            }
        }
    }
    true
}

/// Independent oracle: every combination of cyclic orders, keeping those
/// that satisfy Euler's formula, deduplicated up to reflection.
fn brute_force_embeddings(g: &Graph) -> usize {
    fn cyclic_orders(nb: &[usize]) -> Vec<Vec<usize>> {
        if nb.len() <= 2 {
            return vec![nb.to_vec()];
        }
        let mut out = Vec::new();
        let rest = &nb[1..];
        let mut perm = rest.to_vec();
        permute(&mut perm, 0, &mut |p| {
            let mut r = vec![nb[0]];
            r.extend_from_slice(p);
            out.push(r);
        });
        out
    }
    fn permute(a: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == a.len() {
            f(a);
            return;
        }
        for i in k..a.len() {
            a.swap(k, i);
            permute(a, k + 1, f);
            a.swap(k, i);
        }
    }
    let options: Vec<Vec<Vec<usize>>> = (0..g.n()).map(|v| cyclic_orders(g.neighbors(v))).collect();
    let mut seen = BTreeSet::new();
    let mut idx = vec![0; g.n()];
    loop {
        let rot: Vec<Vec<usize>> = (0..g.n()).map(|v| options[v][idx[v]].clone()).collect();
        let e = PlanarEmbedding::new(rot);
        if e.is_planar() {
            seen.insert(e.canonical_key());
        }
        let mut v = 0;
        loop {
            if v == g.n() {
                return seen.len();
            }
            idx[v] += 1;
            if idx[v] < options[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

fn rotation_space(g: &Graph) -> u64 {
    (0..g.n())
        .map(|v| (1..g.degree(v).max(1) as u64).product::<u64>())
        .product()
}

#[test]
fn generator_matches_networkx_atlas() {
    let mut by_n: BTreeMap<usize, BTreeSet<u64>> = BTreeMap::new();
    for e in atlas() {
        assert!(by_n.entry(e.g.n()).or_default().insert(canonical_key(&e.g)));
    }
    for (n, keys) in by_n {
        let gen: BTreeSet<u64> = all_graphs(n).iter().map(canonical_key).collect();
        assert_eq!(gen, keys, "n = {n}");
    }
}

#[test]
fn generator_counts_through_eight() {
    let counts: Vec<usize> = (1..=8).map(|n| all_graphs(n).len()).collect();
    assert_eq!(counts, [1, 2, 4, 11, 34, 156, 1044, 12346]);
    let conn: Vec<usize> = (1..=6)
        .map(|n| all_graphs(n).iter().filter(|g| g.is_connected()).count())
        .collect();
    assert_eq!(conn, [1, 1, 2, 6, 21, 112]);
    assert_eq!(connected_graphs(6).len(), 143);
}

#[test]
fn planarity_matches_networkx() {
    for e in atlas() {
        assert_eq!(is_planar(&e.g), e.planar, "{}", to_graph6(&e.g));
        assert_eq!(e.g.is_connected(), e.connected);
        match kuratowski_witness(&e.g) {
            None => assert!(e.planar),
            Some(w) => {
                assert!(!e.planar);
                w.validate(&e.g).unwrap();
            }
        }
    }
}

#[test]
fn embeddings_are_planar_rotation_systems() {
    for e in atlas().into_iter().filter(|e| e.planar) {
        let emb = planar_embedding(&e.g).unwrap();
        assert!(emb.is_consistent_with(&e.g));
        assert!(emb.is_planar(), "{}", to_graph6(&e.g));
        // every dart lies on exactly one face
        let darts: usize = emb.faces().iter().filter(|f| f.len() > 1 || e.g.degree(f[0]) > 0).map(Vec::len).sum();
        assert_eq!(darts, 2 * e.g.m());
    }
}

#[test]
fn enumeration_matches_brute_force() {
    let mut checked = 0;
    for e in atlas().into_iter().filter(|e| e.planar) {
        if rotation_space(&e.g) > 50_000 {
            continue;
        }
        let all = enumerate_embeddings(&e.g, usize::MAX, 10_000_000).unwrap();
        for emb in &all {
            assert!(emb.is_consistent_with(&e.g) && emb.is_planar());
        }
        assert_eq!(all.len(), brute_force_embeddings(&e.g), "{}", to_graph6(&e.g));
        checked += 1;
    }
    assert!(checked > 700, "only {checked} graphs checked");
}

#[test]
fn three_connected_planar_graphs_embed_uniquely() {
    let mut seen = 0;
    for e in atlas().into_iter().filter(|e| e.planar && is_3_connected(&e.g)) {
        assert_eq!(enumerate_embeddings(&e.g, usize::MAX, 10_000_000).unwrap().len(), 1);
        seen += 1;
    }
    assert!(seen > 10);
}

#[test]
fn cube_has_six_quadrilaterals() {
    let cube = parse_edge_list(
        "000 001\n000 010\n000 100\n001 011\n001 101\n010 011\n010 110\n011 111\n100 101\n100 110\n101 111\n110 111\n",
    )
    .unwrap();
    let faces = planar_embedding(&cube).unwrap().faces();
    assert_eq!(faces.len(), 6);
    assert!(faces.iter().all(|f| f.len() == 4));
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..10).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn witness_iff_nonplanar(g in arb_graph()) {
        let w = kuratowski_witness(&g);
        prop_assert_eq!(w.is_none(), is_planar(&g));
        if let Some(w) = w {
            prop_assert!(w.validate(&g).is_ok());
        } else {
            let e = planar_embedding(&g).unwrap();
            prop_assert!(e.is_planar());
        }
    }

    #[test]
    fn text_formats_round_trip(g in arb_graph()) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap().edges(), g.edges());
        let back = parse_edge_list(&write_edge_list(&g)).unwrap();
        prop_assert_eq!(back.m(), g.m());
        prop_assert_eq!(canonical_key(&back), canonical_key(&g));
    }

    #[test]
    fn canonical_key_is_label_invariant(g in arb_graph(), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::from_edges(n, &edges).unwrap();
        prop_assert_eq!(canonical_key(&g), canonical_key(&h));
    }
}
