//! Configuration detectors against the outer-face characterizations on
//! small internally 3-connected hosts.

use xing_crossings::{characterization_report, extract_drawing, is_crossing_confined, planarize, CrossingPairing};
use xing_decomp::is_internally_3connected;
use xing_graph::{connected_graphs, enumerate_embeddings, is_planar, Edge, Graph};

fn independent(e: Edge, f: Edge) -> bool {
    e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1
}

fn pairings(g: &Graph) -> Vec<CrossingPairing> {
    let es = g.edges();
    let mut cands = Vec::new();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            if independent(es[i], es[j]) {
                cands.push((es[i], es[j]));
            }
        }
    }
    let mut out = vec![CrossingPairing::empty()];
    for a in 0..cands.len() {
        out.push(CrossingPairing::new(g, &[cands[a]]).unwrap());
        for b in a + 1..cands.len() {
            if let Ok(m) = CrossingPairing::new(g, &[cands[a], cands[b]]) {
                out.push(m);
            }
        }
    }
    out
}

#[test]
fn detectors_match_outer_face_characterizations() {
    let (mut drawings, mut agree, mut with_b, mut with_w) = (0usize, 0usize, 0usize, 0usize);
    let (mut hanging, mut spine_edge) = (0usize, 0usize);
    for g in connected_graphs(6) {
        if g.n() < 4 || !is_internally_3connected(&g) {
            continue;
        }
        for m in pairings(&g) {
            if !is_crossing_confined(&g, &m) {
                continue;
            }
            let p = planarize(&g, &m).unwrap();
            if !is_planar(&p.graph) {
                continue;
            }
            for emb in enumerate_embeddings(&p.graph, usize::MAX, usize::MAX).unwrap() {
                for f in 0..emb.faces().len() {
                    let d = extract_drawing(&g, &m, &emb, f).unwrap();
                    let rep = characterization_report(&d);
                    assert!(rep.unexplained.is_empty(), "{:?} {:?} outer {f}: {:?}", g.edges(), m.pairs(), rep.unexplained);
                    drawings += 1;
                    agree += rep.agrees() as usize;
                    with_b += !rep.b_detected.is_empty() as usize;
                    with_w += !rep.w_detected.is_empty() as usize;
                    hanging += rep.b_hanging;
                    spine_edge += rep.w_spine_edge;
                }
            }
        }
    }
    eprintln!("{drawings} drawings, {agree} agree, {with_b} with B, {with_w} with W, gaps: {hanging} hanging B, {spine_edge} spine-edge W");
    assert!(drawings > 10_000);
    assert!(with_b > 0 && with_w > 0);
    // both lemma gaps occur on this corpus
    assert!(hanging > 0 && spine_edge > 0);
}
