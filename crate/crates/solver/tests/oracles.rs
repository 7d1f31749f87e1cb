//! Solver decisions against the brute-force oracles on every connected graph
//! with at most six vertices.

use xing_crossings::{detect_b_configs, detect_w_configs, verify_drawing, CrossingType, TypeSet};
use xing_decomp::is_internally_3connected;
use xing_graph::{connected_graphs, Graph};
use xing_solver::{
    chord_description_of, oracle_enumerate, oracle_geom, solve, solve_geom, solve_geom_i3c, solve_geom_with_outer, solve_i3c,
    validate_chord_description, Decision, OuterRequirement, SolveOptions,
};

fn panel() -> Vec<TypeSet> {
    use CrossingType::*;
    let mut p: Vec<TypeSet> = CrossingType::ALL.into_iter().map(TypeSet::single).collect();
    p.push(TypeSet::new(&[Full, AlmostFull, Bowtie]).unwrap());
    p.push(TypeSet::all());
    p
}

fn corpus() -> Vec<Graph> {
    connected_graphs(6)
}

#[test]
fn topological_matches_oracle() {
    let opts = SolveOptions::default();
    let mut yes = 0;
    for g in corpus() {
        for s in panel() {
            let r = solve(&g, s, opts).unwrap();
            assert_eq!(r.decision, oracle_enumerate(&g, s).unwrap(), "{s} on {:?}", g.edges());
            if let Some(w) = &r.witness {
                yes += 1;
                assert!(verify_drawing(w.drawing.as_ref().unwrap(), s).unwrap().pass);
            }
        }
    }
    assert!(yes > 500, "{yes}");
}

#[test]
fn monotone_in_the_type_set() {
    let opts = SolveOptions::default();
    let sets: Vec<TypeSet> = TypeSet::every().collect();
    for g in corpus().into_iter().filter(|g| g.n() >= 5) {
        let d: Vec<bool> = sets.iter().map(|&s| solve(&g, s, opts).unwrap().is_yes()).collect();
        for (i, &a) in sets.iter().enumerate() {
            for (j, &b) in sets.iter().enumerate() {
                if a.is_subset(b) && d[i] {
                    assert!(d[j], "{a} yes but {b} no on {:?}", g.edges());
                }
            }
        }
    }
}

#[test]
fn confined_geometric_matches_unconfined() {
    let opts = SolveOptions::default();
    for g in corpus().into_iter().filter(is_internally_3connected) {
        for s in panel() {
            let mut outers = vec![OuterRequirement::none()];
            outers.extend(g.names().iter().take(1).map(|v| OuterRequirement::vertex(v.clone())));
            for o in outers {
                let r = solve_geom_i3c(&g, &o, s, opts).unwrap();
                assert_eq!(r.decision, oracle_geom(&g, &o, s).unwrap(), "{s} {o:?} on {:?}", g.edges());
                if let Some(d) = r.witness.and_then(|w| w.drawing) {
                    assert!(detect_b_configs(&d).is_empty() && detect_w_configs(&d).is_empty());
                    assert!(verify_drawing(&d, s).unwrap().pass);
                }
            }
        }
    }
}

#[test]
fn geometric_implies_topological() {
    let opts = SolveOptions::default();
    let mut strict = 0;
    for g in corpus() {
        for s in panel() {
            let geo = solve_geom(&g, s, opts).unwrap();
            let top = solve(&g, s, opts).unwrap();
            if geo.is_yes() {
                assert!(top.is_yes(), "{s} on {:?}", g.edges());
                if let Some(d) = geo.witness.and_then(|w| w.drawing) {
                    assert!(detect_b_configs(&d).is_empty() && detect_w_configs(&d).is_empty());
                    assert!(verify_drawing(&d, s).unwrap().pass);
                }
            } else if top.is_yes() {
                strict += 1;
            }
            if g.m() <= 12 {
                assert_eq!(geo.decision, oracle_geom(&g, &OuterRequirement::none(), s).unwrap(), "{s} on {:?}", g.edges());
            }
        }
    }
    // no graph this small separates the two variants
    assert_eq!(strict, 0);
}

#[test]
fn outer_vertex_through_the_reductions() {
    use CrossingType::*;
    let sets = [TypeSet::single(Full), TypeSet::new(&[Full, AlmostFull, Bowtie]).unwrap()];
    for g in connected_graphs(6).into_iter().filter(|g| g.m() <= 12) {
        for s in sets {
            for v in 0..g.n() {
                let o = OuterRequirement::vertex(g.name(v));
                let r = solve_geom_with_outer(&g, &o, s, SolveOptions::default()).unwrap();
                assert_eq!(r.decision, oracle_geom(&g, &o, s).unwrap(), "{s} O={v} on {:?}", g.edges());
                if let Some(d) = r.witness.and_then(|w| w.drawing) {
                    assert!(d.outer_face().contains(&v));
                }
            }
        }
    }
}

#[test]
fn chord_descriptions_of_witnesses() {
    use CrossingType::*;
    let sets = [
        TypeSet::single(Full),
        TypeSet::single(AlmostFull),
        TypeSet::single(Bowtie),
        TypeSet::new(&[Full, AlmostFull, Bowtie]).unwrap(),
    ];
    let mut checked = 0;
    for g in corpus().into_iter().filter(is_internally_3connected) {
        for s in sets {
            let r = solve_i3c(&g, s, SolveOptions::default()).unwrap();
            let Some(w) = r.witness else { continue };
            let psi = chord_description_of(&g, &w.pairing).unwrap();
            assert!(validate_chord_description(&g, &psi, s), "{s} on {:?}", g.edges());
            assert!(psi.chord_load().values().all(|&l| l <= 2));
            assert_eq!(psi.crossing_pairs().len(), w.pairing.len());
            let d = psi.induced_drawing(&g).unwrap();
            assert!(verify_drawing(&d, s).unwrap().pass);
            checked += 1;
        }
    }
    assert!(checked > 20, "{checked}");
}

#[test]
fn k3_3_under_x_is_fixed_by_the_oracle() {
    let g = Graph::complete_bipartite(3, 3);
    let x = TypeSet::single(CrossingType::X);
    // any two disjoint edges of K3,3 have two kite edges between them
    assert_eq!(oracle_enumerate(&g, x).unwrap(), Decision::No);
    assert_eq!(solve(&g, x, SolveOptions::default()).unwrap().decision, Decision::No);
    assert!(solve(&g, TypeSet::single(CrossingType::Bowtie), SolveOptions::default()).unwrap().is_yes());
}
