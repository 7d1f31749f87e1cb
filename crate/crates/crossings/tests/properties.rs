use proptest::prelude::*;
use xing_crossings::{
    classify_crossing, extract_drawing, planarize, verify_drawing, CombinatorialDrawing, CrossingPairing,
    CrossingType, TypeSet,
};
use xing_graph::{enumerate_embeddings, Graph};

/// Expected type by side-edge count and shape, written out per subset.
fn expected(mask: u8) -> CrossingType {
    // bits: 0 = u-a, 1 = u-b, 2 = v-a, 3 = v-b for e = uv, f = ab
    match mask {
        0b0000 => CrossingType::X,
        0b0001 | 0b0010 | 0b0100 | 0b1000 => CrossingType::Chair,
        0b1001 | 0b0110 => CrossingType::Bowtie,
        0b0011 | 0b1100 | 0b0101 | 0b1010 => CrossingType::Arrow,
        0b1111 => CrossingType::Full,
        _ => CrossingType::AlmostFull,
    }
}

fn four_vertex(mask: u8) -> Graph {
    let mut edges = vec![(0, 1), (2, 3)];
    for (bit, e) in [(0, (0, 2)), (1, (0, 3)), (2, (1, 2)), (3, (1, 3))] {
        if mask >> bit & 1 == 1 {
            edges.push(e);
        }
    }
    Graph::from_edges(4, &edges).unwrap()
}

#[test]
fn classification_is_exhaustive_over_side_subsets() {
    let mut counts = [0usize; 6];
    for mask in 0..16u8 {
        let g = four_vertex(mask);
        let t = classify_crossing(&g, (0, 1), (2, 3)).unwrap();
        assert_eq!(t, expected(mask), "mask {mask:04b}");
        counts[t as usize] += 1;
    }
    assert_eq!(counts, [1, 4, 2, 4, 4, 1]);
}

#[test]
fn classification_symmetries() {
    for mask in 0..16u8 {
        let g = four_vertex(mask);
        let t = classify_crossing(&g, (0, 1), (2, 3)).unwrap();
        for (e, f) in [((1, 0), (2, 3)), ((0, 1), (3, 2)), ((2, 3), (0, 1)), ((3, 2), (1, 0))] {
            assert_eq!(classify_crossing(&g, e, f).unwrap(), t);
        }
    }
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (4usize..8).prop_flat_map(|n| {
        let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::sample::subsequence(all.clone(), 0..=all.len()).prop_map(move |es| Graph::from_edges(n, &es).unwrap())
    })
}

/// Greedy pairing of independent edges, seeded by a rotation of the edge list.
fn greedy_pairing(g: &Graph, shift: usize, max: usize) -> CrossingPairing {
    let mut es = g.edges();
    if !es.is_empty() {
        let k = shift % es.len();
        es.rotate_left(k);
    }
    let mut used = vec![false; es.len()];
    let mut pairs = Vec::new();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            let (e, f) = (es[i], es[j]);
            if pairs.len() < max && !used[i] && !used[j] && e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1 {
                used[i] = true;
                used[j] = true;
                pairs.push((e, f));
            }
        }
    }
    CrossingPairing::new(g, &pairs).unwrap()
}

proptest! {
    #[test]
    fn planarization_counts(g in arb_graph(), shift in 0usize..20, max in 0usize..4) {
        let m = greedy_pairing(&g, shift, max);
        let p = planarize(&g, &m).unwrap();
        prop_assert_eq!(p.graph.n(), g.n() + m.len());
        prop_assert_eq!(p.graph.m(), g.m() + 2 * m.len());
        for (i, &x) in p.cross.iter().enumerate() {
            prop_assert_eq!(p.graph.degree(x), 4);
            prop_assert_eq!(p.pair_of(x), Some(i));
        }
    }

    #[test]
    fn extracted_drawings_verify_and_round_trip(g in arb_graph(), shift in 0usize..20, max in 0usize..3) {
        let m = greedy_pairing(&g, shift, max);
        let p = planarize(&g, &m).unwrap();
        let Ok(embs) = enumerate_embeddings(&p.graph, 4, 100_000) else { return Ok(()) };
        let admissible: Vec<CrossingType> = m
            .pairs()
            .iter()
            .map(|&(e, f)| classify_crossing(&g, e, f).unwrap())
            .collect();
        for emb in embs {
            let d = extract_drawing(&g, &m, &emb, emb.faces().len() - 1).unwrap();
            let s = TypeSet::new(&admissible).unwrap_or(TypeSet::all());
            prop_assert!(verify_drawing(&d, s).unwrap().pass);
            let back = CombinatorialDrawing::from_json_str(&d.to_json_string()).unwrap();
            prop_assert_eq!(&back, &d);
            prop_assert_eq!(back.to_json_string(), d.to_json_string());
        }
    }
}
