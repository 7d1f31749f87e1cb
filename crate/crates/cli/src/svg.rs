//! SVG rendering of combinatorial drawings. The planarization gets a Tutte
//! barycentric layout with the outer face on a circle; each host edge is
//! then drawn through its crossing point, if it has one.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use xing_crossings::CombinatorialDrawing;
use xing_graph::{components_of, PlanarEmbedding};

const SWEEPS: usize = 20_000;
const TOLERANCE: f64 = 1e-10;

/// Distinct vertices of a boundary walk, in walk order.
fn distinct(walk: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(walk.len());
    for &v in walk {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// Positions in the plane for every vertex of `emb`. Each connected component
/// is laid out on its own in a unit disc, left to right; the component with
/// the outer face uses that face as its boundary, the others their longest
/// face.
pub fn tutte_layout(emb: &PlanarEmbedding) -> Vec<(f64, f64)> {
    let n = emb.n();
    let faces = emb.faces();
    let df = emb.dart_faces();
    let comps = components_of(emb.rotations());
    let mut pos = vec![(0.0, 0.0); n];
    let mut fixed = vec![false; n];
    for (ci, comp) in comps.iter().enumerate() {
        let x0 = 2.5 * ci as f64;
        let in_comp = |f: &Vec<usize>| comp.binary_search(&f[0]).is_ok();
        let boundary = if faces.get(emb.outer).is_some_and(in_comp) {
            distinct(&faces[emb.outer])
        } else {
            let mut best: Vec<usize> = vec![comp[0]];
            for &v in comp {
                for &f in &df[v] {
                    if faces[f].len() > best.len() {
                        best = faces[f].clone();
                    }
                }
            }
            distinct(&best)
        };
        let k = boundary.len();
        for (i, &v) in boundary.iter().enumerate() {
            let a = TAU * i as f64 / k as f64;
            pos[v] = if k == 1 { (x0, 0.0) } else { (x0 + a.cos(), -a.sin()) };
            fixed[v] = true;
        }
        for &v in comp {
            if !fixed[v] {
                pos[v] = (x0, 0.0);
            }
        }
    }
    for _ in 0..SWEEPS {
        let mut moved: f64 = 0.0;
        for v in 0..n {
            let r = emb.rotation(v);
            if fixed[v] || r.is_empty() {
                continue;
            }
            let (sx, sy) = r.iter().fold((0.0, 0.0), |(x, y), &w| (x + pos[w].0, y + pos[w].1));
            let p = (sx / r.len() as f64, sy / r.len() as f64);
            moved = moved.max((p.0 - pos[v].0).abs() + (p.1 - pos[v].1).abs());
            pos[v] = p;
        }
        if moved < TOLERANCE {
            break;
        }
    }
    pos
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// SVG 1.1 document: one `vertex` circle per host vertex, one `edge` element
/// per host edge, one `crossing` marker per pair (`crossing unrealized` for
/// touching pairs).
pub fn render_svg(d: &CombinatorialDrawing) -> String {
    let pos = tutte_layout(&d.embedding);
    let (scale, margin) = (160.0, 30.0);
    let minx = pos.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let maxx = pos.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let (minx, maxx) = if pos.is_empty() { (0.0, 0.0) } else { (minx, maxx) };
    let px = |v: usize| (margin + (pos[v].0 - minx) * scale, margin + (pos[v].1 + 1.0) * scale);
    let width = 2.0 * margin + (maxx - minx) * scale;
    let height = 2.0 * margin + 2.0 * scale;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.2} {height:.2}\">"
    );
    s.push_str(
        "<style>.edge{stroke:#333;stroke-width:1.5;fill:none}.vertex{fill:#fff;stroke:#000;stroke-width:1.5}\
.crossing{fill:#c00}.unrealized{fill:#fff;stroke:#c00}.label{font:11px sans-serif;text-anchor:middle}</style>\n",
    );
    let host = &d.host;
    for (u, v) in host.edges() {
        let (a, b) = (px(u), px(v));
        match d.pairing.pairs().iter().position(|&(e, f)| e == (u, v) || f == (u, v)) {
            Some(i) => {
                let x = px(d.cross_vertex(i));
                let _ = writeln!(
                    s,
                    "<polyline class=\"edge\" points=\"{:.2},{:.2} {:.2},{:.2} {:.2},{:.2}\"/>",
                    a.0, a.1, x.0, x.1, b.0, b.1
                );
            }
            None => {
                let _ = writeln!(s, "<line class=\"edge\" x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\"/>", a.0, a.1, b.0, b.1);
            }
        }
    }
    for i in 0..d.pairing.len() {
        let x = px(d.cross_vertex(i));
        let class = if d.realized[i] { "crossing" } else { "crossing unrealized" };
        let _ = writeln!(s, "<circle class=\"{class}\" cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\"/>", x.0, x.1);
    }
    for v in 0..host.n() {
        let p = px(v);
        let _ = writeln!(s, "<circle class=\"vertex\" cx=\"{:.2}\" cy=\"{:.2}\" r=\"7\"/>", p.0, p.1);
        let _ = writeln!(s, "<text class=\"label\" x=\"{:.2}\" y=\"{:.2}\">{}</text>", p.0, p.1 - 10.0, escape(host.name(v)));
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use xing_crossings::{extract_drawing, planarize, CrossingPairing};
    use xing_graph::{planar_embedding, Graph};

    fn count(svg: &str, needle: &str) -> usize {
        svg.matches(needle).count()
    }

    #[test]
    fn k5_counts() {
        let g = Graph::complete(5);
        let m = CrossingPairing::new(&g, &[((0, 2), (1, 3))]).unwrap();
        let p = planarize(&g, &m).unwrap();
        let d = extract_drawing(&g, &m, &planar_embedding(&p.graph).unwrap(), 0).unwrap();
        let svg = render_svg(&d);
        assert_eq!(count(&svg, "class=\"vertex\""), 5);
        assert_eq!(count(&svg, "class=\"edge\""), 10);
        assert_eq!(count(&svg, "class=\"crossing"), 1);
        assert_eq!(count(&svg, "unrealized"), 1, "only the stylesheet mentions it");
    }

    #[test]
    fn c4_without_crossings() {
        let g = Graph::cycle(4);
        let emb = planar_embedding(&g).unwrap();
        let d = extract_drawing(&g, &CrossingPairing::empty(), &emb, 0).unwrap();
        let svg = render_svg(&d);
        assert_eq!(count(&svg, "class=\"crossing"), 0);
        assert_eq!(count(&svg, "class=\"edge\""), 4);
    }

    #[test]
    fn interior_vertices_are_barycenters() {
        // wheel: hub 0 inside the rim 1..5
        let mut es: Vec<(usize, usize)> = (1..=5).map(|i| (0, i)).collect();
        es.extend((1..=5).map(|i| (i, i % 5 + 1)));
        let g = Graph::from_edges(6, &es).unwrap();
        let mut emb = planar_embedding(&g).unwrap();
        emb.outer = emb.faces().iter().position(|f| !f.contains(&0)).unwrap();
        let pos = tutte_layout(&emb);
        assert!(pos[0].0.abs() < 1e-6 && pos[0].1.abs() < 1e-6);
        for p in &pos[1..] {
            assert!((p.0.hypot(p.1) - 1.0).abs() < 1e-9);
        }
    }
}
