//! B- and W-configurations of a drawing, and the outer-face conditions on
//! the reduced planarization that characterize them.

use std::collections::{BTreeSet, HashSet, VecDeque};

use xing_graph::edge_key;

use crate::drawing::CombinatorialDrawing;

/// Edges `ss'`, `sb`, `s'b'` with `sb` crossing `s'b'` and `b`, `b'` inside
/// the curve along `ss'` and the two half edges. `s < s2`; `pair` indexes
/// the drawing's pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BConfig {
    pub s: usize,
    pub s2: usize,
    pub b: usize,
    pub b2: usize,
    pub pair: usize,
}

/// Edges `sw1`, `sw2`, `s'w1'`, `s'w2'` with `sw1 x s'w1'` (pair1) and
/// `sw2 x s'w2'` (pair2) realized, all four `w` inside the curve through
/// `s`, the first crossing, `s'` and the second crossing. `s < s2` and
/// `pair1 < pair2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WConfig {
    pub s: usize,
    pub s2: usize,
    pub w1: usize,
    pub w2: usize,
    pub w1p: usize,
    pub w2p: usize,
    pub pair1: usize,
    pub pair2: usize,
}

/// Face adjacency of a drawing's planarization, built once per detector run.
struct Dual {
    /// Face of the first dart of each vertex, `usize::MAX` if isolated.
    face_of: Vec<usize>,
    /// Neighbouring face and the planarization edge between them.
    adj: Vec<Vec<(usize, (usize, usize))>>,
    outer: usize,
}

impl Dual {
    fn new(d: &CombinatorialDrawing) -> Self {
        let emb = &d.embedding;
        let df = emb.dart_faces();
        let tw = emb.twins();
        let nf = emb.face_count();
        let mut adj = vec![Vec::new(); nf];
        for v in 0..emb.n() {
            for (i, &w) in emb.rotation(v).iter().enumerate() {
                if v < w {
                    let (f, g) = (df[v][i], df[w][tw[v][i]]);
                    adj[f].push((g, (v, w)));
                    adj[g].push((f, (v, w)));
                }
            }
        }
        let face_of = df.iter().map(|r| r.first().copied().unwrap_or(usize::MAX)).collect();
        Dual { face_of, adj, outer: emb.outer }
    }

    /// For each vertex of the planarization: strictly inside the cycle given
    /// by `cycle` (consecutive vertices), seen from the outer face. Vertices
    /// on the cycle report false.
    fn inside(&self, cycle: &[usize]) -> Vec<bool> {
        let k = cycle.len();
        let blocked: HashSet<(usize, usize)> = (0..k).map(|i| edge_key(cycle[i], cycle[(i + 1) % k])).collect();
        let mut seen = vec![false; self.adj.len()];
        seen[self.outer] = true;
        let mut q = VecDeque::from([self.outer]);
        while let Some(f) = q.pop_front() {
            for &(g, e) in &self.adj[f] {
                if !seen[g] && !blocked.contains(&e) {
                    seen[g] = true;
                    q.push_back(g);
                }
            }
        }
        let on: HashSet<usize> = cycle.iter().copied().collect();
        self.face_of
            .iter()
            .enumerate()
            .map(|(v, &f)| !on.contains(&v) && f != usize::MAX && !seen[f])
            .collect()
    }
}

fn other(e: (usize, usize), a: usize) -> Option<usize> {
    if e.0 == a {
        Some(e.1)
    } else if e.1 == a {
        Some(e.0)
    } else {
        None
    }
}

/// Crossing vertex of the planarization edge path between `a` and `b`:
/// `Some(None)` for an uncrossed edge, `Some(Some(y))` if `ab` is crossed
/// at `y`, `None` if `ab` is not a host edge.
fn edge_route(d: &CombinatorialDrawing, a: usize, b: usize) -> Option<Option<usize>> {
    if !d.host.has_edge(a, b) {
        return None;
    }
    let key = edge_key(a, b);
    Some(
        d.pairing
            .pairs()
            .iter()
            .position(|&(e, f)| e == key || f == key)
            .map(|i| d.cross_vertex(i)),
    )
}

/// Every B-configuration of the drawing. Unrealized pairs count as two
/// uncrossed edges.
pub fn detect_b_configs(d: &CombinatorialDrawing) -> Vec<BConfig> {
    let (r, map) = d.realized_only();
    let dual = Dual::new(&r);
    let mut out = BTreeSet::new();
    for (i, &(e, f)) in r.pairing.pairs().iter().enumerate() {
        let x = r.cross_vertex(i);
        for (s, b) in [(e.0, e.1), (e.1, e.0)] {
            for (s2, b2) in [(f.0, f.1), (f.1, f.0)] {
                let Some(route) = edge_route(&r, s, s2) else { continue };
                let cycle = match route {
                    None => vec![s, x, s2],
                    Some(y) => vec![s, x, s2, y],
                };
                debug_assert_ne!(b, b2);
                let ins = dual.inside(&cycle);
                if ins[b] && ins[b2] {
                    let c = if s < s2 {
                        BConfig { s, s2, b, b2, pair: map[i] }
                    } else {
                        BConfig { s: s2, s2: s, b: b2, b2: b, pair: map[i] }
                    };
                    out.insert(c);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Every W-configuration of the drawing.
pub fn detect_w_configs(d: &CombinatorialDrawing) -> Vec<WConfig> {
    let (r, map) = d.realized_only();
    let pairs = r.pairing.pairs();
    let dual = Dual::new(&r);
    let mut out = BTreeSet::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (x1, x2) = (r.cross_vertex(i), r.cross_vertex(j));
            let (pi, pj) = (pairs[i], pairs[j]);
            for (a, ap) in [(pi.0, pi.1), (pi.1, pi.0)] {
                for (c, cp) in [(pj.0, pj.1), (pj.1, pj.0)] {
                    for s in [a.0, a.1] {
                        let (Some(w1), Some(w2)) = (other(a, s), other(c, s)) else { continue };
                        for s2 in [ap.0, ap.1] {
                            let (Some(w1p), Some(w2p)) = (other(ap, s2), other(cp, s2)) else { continue };
                            let ins = dual.inside(&[s, x1, s2, x2]);
                            if [w1, w2, w1p, w2p].iter().all(|&w| ins[w]) {
                                let c = if s < s2 {
                                    WConfig { s, s2, w1, w2, w1p, w2p, pair1: map[i], pair2: map[j] }
                                } else {
                                    WConfig {
                                        s: s2,
                                        s2: s,
                                        w1: w1p,
                                        w2: w2p,
                                        w1p: w1,
                                        w2p: w2,
                                        pair1: map[i],
                                        pair2: map[j],
                                    }
                                };
                                out.insert(c);
                            }
                        }
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

/// Vertices on the outer face of the planarization after deleting every host
/// vertex outside `keep` whose neighbourhood is exactly `{s, s2}`. Crossing
/// vertices that lose one of their edges are dissolved and not reported.
fn reduced_outer_vertices(r: &CombinatorialDrawing, s: usize, s2: usize, keep: &[usize]) -> BTreeSet<usize> {
    let n = r.n_host();
    let spine = [s.min(s2), s.max(s2)];
    let gone: Vec<bool> = (0..n)
        .map(|v| !keep.contains(&v) && r.host.neighbors(v) == spine)
        .collect();
    let emb = &r.embedding;
    let np = emb.n();
    // host edge carried by each planarization edge
    let host_edge = |a: usize, b: usize| -> (usize, usize) {
        let (h, x) = if a < n { (a, b) } else { (b, a) };
        match r.planarization.pair_of(x) {
            Some(p) if x >= n => (h, r.through(p, h)),
            _ => (a, b),
        }
    };
    let dead = |a: usize, b: usize| {
        let (u, v) = host_edge(a, b);
        gone[u] || gone[v]
    };
    let df = emb.dart_faces();
    let tw = emb.twins();
    let mut uf: Vec<usize> = (0..emb.face_count()).collect();
    for v in 0..np {
        for (i, &w) in emb.rotation(v).iter().enumerate() {
            if v < w && dead(v, w) {
                let (a, b) = (find(&mut uf, df[v][i]), find(&mut uf, df[w][tw[v][i]]));
                uf[a] = b;
            }
        }
    }
    let outer = find(&mut uf, emb.outer);
    let mut out = BTreeSet::new();
    for v in 0..np {
        let live: Vec<usize> = (0..emb.rotation(v).len()).filter(|&i| !dead(v, emb.rotation(v)[i])).collect();
        if v >= n && live.len() < 4 {
            continue;
        }
        if v < n && gone[v] {
            continue;
        }
        if live.iter().any(|&i| find(&mut uf, df[v][i]) == outer) {
            out.insert(v);
        }
    }
    out
}

fn realized_pair_of(r: &CombinatorialDrawing, e: (usize, usize), f: (usize, usize)) -> Option<usize> {
    let (e, f) = (edge_key(e.0, e.1), edge_key(f.0, f.1));
    let key = (e.min(f), e.max(f));
    r.pairing.pairs().binary_search(&key).ok()
}

/// Outer-face side of the B characterization: `sb` and `s2b2` form a realized
/// crossing `x`, and after removing the degree-two vertices hanging on the
/// spine (other than `b`, `b2`) the outer face sees exactly `s`, `s2` and `x`.
pub fn b_outer_face_condition(d: &CombinatorialDrawing, s: usize, s2: usize, b: usize, b2: usize) -> bool {
    let (r, _) = d.realized_only();
    let Some(i) = realized_pair_of(&r, (s, b), (s2, b2)) else { return false };
    let x = r.cross_vertex(i);
    reduced_outer_vertices(&r, s, s2, &[b, b2]) == BTreeSet::from([s, s2, x])
}

/// Outer-face side of the W characterization, with crossings `sw1 x s2w1p`
/// and `sw2 x s2w2p`.
pub fn w_outer_face_condition(
    d: &CombinatorialDrawing,
    s: usize,
    s2: usize,
    (w1, w2): (usize, usize),
    (w1p, w2p): (usize, usize),
) -> bool {
    let (r, _) = d.realized_only();
    let Some(i) = realized_pair_of(&r, (s, w1), (s2, w1p)) else { return false };
    let Some(j) = realized_pair_of(&r, (s, w2), (s2, w2p)) else { return false };
    if i == j {
        return false;
    }
    let (x1, x2) = (r.cross_vertex(i), r.cross_vertex(j));
    reduced_outer_vertices(&r, s, s2, &[w1, w2, w1p, w2p]) == BTreeSet::from([s, s2, x1, x2])
}

/// How the detectors compare with the outer-face conditions on one drawing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CharacterizationReport {
    /// `(s, s2, b, b2)` with `s < s2`.
    pub b_detected: BTreeSet<(usize, usize, usize, usize)>,
    pub b_condition: BTreeSet<(usize, usize, usize, usize)>,
    /// `[s, s2, w1, w2, w1p, w2p]` with `s < s2`, in both orders of the two
    /// crossings.
    pub w_detected: BTreeSet<[usize; 6]>,
    pub w_condition: BTreeSet<[usize; 6]>,
    /// B mismatches where both `b` and `b2` have neighbourhood `{s, s2}`.
    pub b_hanging: usize,
    /// W mismatches where `ss2` is a host edge and the condition holds once
    /// that edge is removed from the drawing.
    pub w_spine_edge: usize,
    pub unexplained: Vec<String>,
}

impl CharacterizationReport {
    pub fn agrees(&self) -> bool {
        self.b_detected == self.b_condition && self.w_detected == self.w_condition
    }
}

/// The drawing with the uncrossed host edge `uv` erased.
fn without_edge(d: &CombinatorialDrawing, u: usize, v: usize) -> Option<CombinatorialDrawing> {
    let mut host = d.host.clone();
    host.remove_edge(u, v);
    let rot: Vec<Vec<usize>> = (0..d.embedding.n())
        .map(|a| {
            d.embedding
                .rotation(a)
                .iter()
                .copied()
                .filter(|&b| (a, b) != (u, v) && (a, b) != (v, u))
                .collect()
        })
        .collect();
    let f = d.outer_face();
    let k = f.len();
    let dart = (0..k)
        .map(|i| (f[i], f[(i + 1) % k]))
        .find(|&(a, b)| (a, b) != (u, v) && (a, b) != (v, u))?;
    let emb = xing_graph::PlanarEmbedding::new(rot);
    let df = emb.dart_faces();
    let i = emb.rotation(dart.0).iter().position(|&w| w == dart.1)?;
    crate::extract_drawing(&host, &d.pairing, &emb, df[dart.0][i]).ok()
}

/// Runs both detectors and both outer-face conditions over every candidate
/// configuration of the drawing and classifies the disagreements.
pub fn characterization_report(d: &CombinatorialDrawing) -> CharacterizationReport {
    let (r, _) = d.realized_only();
    let pairs = r.pairing.pairs().to_vec();
    let mut rep = CharacterizationReport {
        b_detected: detect_b_configs(d).iter().map(|c| (c.s, c.s2, c.b, c.b2)).collect(),
        w_detected: detect_w_configs(d)
            .iter()
            .flat_map(|c| [[c.s, c.s2, c.w1, c.w2, c.w1p, c.w2p], [c.s, c.s2, c.w2, c.w1, c.w2p, c.w1p]])
            .collect(),
        ..Default::default()
    };
    for (i, &(e, f)) in pairs.iter().enumerate() {
        let x = r.cross_vertex(i);
        for (s, b) in [(e.0, e.1), (e.1, e.0)] {
            for (s2, b2) in [(f.0, f.1), (f.1, f.0)] {
                if r.host.has_edge(s, s2)
                    && reduced_outer_vertices(&r, s, s2, &[b, b2]) == BTreeSet::from([s, s2, x])
                {
                    rep.b_condition.insert(if s < s2 { (s, s2, b, b2) } else { (s2, s, b2, b) });
                }
            }
        }
    }
    for i in 0..pairs.len() {
        for j in 0..pairs.len() {
            if i == j {
                continue;
            }
            let (x1, x2) = (r.cross_vertex(i), r.cross_vertex(j));
            for (a, ap) in [(pairs[i].0, pairs[i].1), (pairs[i].1, pairs[i].0)] {
                for (c, cp) in [(pairs[j].0, pairs[j].1), (pairs[j].1, pairs[j].0)] {
                    for s in [a.0, a.1] {
                        for s2 in [ap.0, ap.1] {
                            let (Some(w1), Some(w2), Some(w1p), Some(w2p)) =
                                (other(a, s), other(c, s), other(ap, s2), other(cp, s2))
                            else {
                                continue;
                            };
                            if s < s2
                                && reduced_outer_vertices(&r, s, s2, &[w1, w2, w1p, w2p])
                                    == BTreeSet::from([s, s2, x1, x2])
                            {
                                rep.w_condition.insert([s, s2, w1, w2, w1p, w2p]);
                            }
                        }
                    }
                }
            }
        }
    }
    let spine = |s: usize, s2: usize| [s.min(s2), s.max(s2)];
    for &(s, s2, b, b2) in rep.b_detected.symmetric_difference(&rep.b_condition) {
        let hanging = |v: usize| d.host.neighbors(v) == spine(s, s2);
        if rep.b_detected.contains(&(s, s2, b, b2)) && hanging(b) && hanging(b2) {
            rep.b_hanging += 1;
        } else {
            rep.unexplained.push(format!("B s={s} s'={s2} b={b} b'={b2}"));
        }
    }
    for c in rep.w_detected.symmetric_difference(&rep.w_condition) {
        let [s, s2, w1, w2, w1p, w2p] = *c;
        let explained = rep.w_detected.contains(c)
            && d.host.has_edge(s, s2)
            && without_edge(d, s, s2).is_some_and(|e| w_outer_face_condition(&e, s, s2, (w1, w2), (w1p, w2p)));
        if explained {
            rep.w_spine_edge += 1;
        } else {
            rep.unexplained.push(format!("W s={s} s'={s2} w={w1},{w2} w'={w1p},{w2p}"));
        }
    }
    rep
}
