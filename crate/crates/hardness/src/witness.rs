//! Witness drawings: the rotation system of the planarization is read off a
//! sketch in which every fence is a thin straight-line gadget laid along a
//! curve of a coarse layout.
//!
//! The coarse layout uses polar coordinates `(theta, r)`: the transmitter
//! center at the origin, its rim on `r = 1`, the collector rim on `r = 3`
//! and the collector center at infinity. Edges are straight in `(theta, r)`,
//! so the tangent at `x` towards `y` has angle `theta_x + atan2(r_x dtheta,
//! dr)` and that second term orders the darts at `x`.

use std::f64::consts::{PI, TAU};

use xing_crossings::{
    detect_b_configs, detect_w_configs, extract_drawing, planarize, CombinatorialDrawing, CrossingPairing,
};
use xing_graph::{edge_key, Edge, Graph, PlanarEmbedding};

use crate::fence::{Fence, FenceGraph, FenceVariant, BUNDLES, U, V, W1, W2, W3};
use crate::instance::HardInstance;
use crate::HardnessError;

/// Planarized straight-line fence in local coordinates: `u = (0,0)`,
/// `v = (4,0)`, everything else above the x-axis up to a thin sliver.
struct LocalFence {
    /// Local rotation of every local vertex; slots 0..5 are `u, v, w1, w2,
    /// w3`, slot 5 the crossing, then the bundle midpoints.
    rot: Vec<Vec<usize>>,
}

const CROSS: usize = 5;

impl LocalFence {
    fn new(variant: FenceVariant, ell: usize) -> Self {
        let mut pos: Vec<(f64, f64)> = vec![(0.0, 0.0), (4.0, 0.0), (1.6, 1.0), (2.4, 1.0), (2.0, 4.0), (2.0, 1.0 / 1.2)];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 6];
        let link = |adj: &mut Vec<Vec<usize>>, a: usize, b: usize| {
            adj[a].push(b);
            adj[b].push(a);
        };
        for x in [U, W2, V, W1] {
            link(&mut adj, x, CROSS);
        }
        if variant.has_uv() {
            link(&mut adj, U, V);
        }
        if variant.has_uw1() {
            link(&mut adj, U, W1);
        }
        let eps = 0.01;
        for &(x, y) in &BUNDLES {
            let ((x0, y0), (x1, y1)) = (pos[x], pos[y]);
            let len = ((x1 - x0).powi(2) + (y1 - y0).powi(2)).sqrt();
            let normal = (-(y1 - y0) / len, (x1 - x0) / len);
            for j in 0..ell {
                let off = eps * (j as f64 - ell as f64 / 2.0 + 0.25);
                pos.push(((x0 + x1) / 2.0 + normal.0 * off, (y0 + y1) / 2.0 + normal.1 * off));
                adj.push(Vec::new());
                let mid = pos.len() - 1;
                link(&mut adj, x, mid);
                link(&mut adj, mid, y);
            }
        }
        let rot = (0..pos.len())
            .map(|a| {
                // at v every neighbour lies to the left, so measure from -x
                let flip = if a == V { -1.0 } else { 1.0 };
                let key = |b: &usize| {
                    let (dx, dy) = (pos[*b].0 - pos[a].0, pos[*b].1 - pos[a].1);
                    (flip * dy).atan2(flip * dx)
                };
                let mut list = adj[a].clone();
                list.sort_by(|p, q| key(p).total_cmp(&key(q)));
                list
            })
            .collect();
        LocalFence { rot }
    }

    /// Host or planarization id of local slot `k`.
    fn global(f: &Fence, cross: usize, k: usize) -> usize {
        match k {
            U | V | W1 | W2 | W3 => f.slot(k),
            CROSS => cross,
            _ => f.mids[k - 6],
        }
    }

    /// Writes the rotation of every inner vertex of `f`; returns the darts
    /// at `u` and at `v`, each in counterclockwise order.
    fn place(&self, f: &Fence, cross: usize, rot: &mut [Vec<usize>]) -> (Vec<usize>, Vec<usize>) {
        let map = |k: usize| Self::global(f, cross, k);
        for (k, list) in self.rot.iter().enumerate().skip(2) {
            rot[map(k)] = list.iter().map(|&x| map(x)).collect();
        }
        (self.rot[U].iter().map(|&x| map(x)).collect(), self.rot[V].iter().map(|&x| map(x)).collect())
    }
}

fn pair_of(a: Edge, b: Edge) -> (Edge, Edge) {
    let (a, b) = (edge_key(a.0, a.1), edge_key(b.0, b.1));
    (a.min(b), a.max(b))
}

/// Planarization vertex of the crossing between `a` and `b`.
fn cross_vertex(m: &CrossingPairing, cross: &[usize], a: Edge, b: Edge) -> usize {
    let i = m.pairs().binary_search(&pair_of(a, b)).expect("pair in pairing");
    cross[i]
}

/// Drawing of a lone fence with `u` and `v` on the outer face.
pub fn fence_witness_drawing(fg: &FenceGraph) -> Result<CombinatorialDrawing, HardnessError> {
    let f = &fg.fence;
    let (a, b) = f.single_edges();
    let m = CrossingPairing::new(&fg.graph, &[(a, b)])?;
    let p = planarize(&fg.graph, &m)?;
    let mut rot = vec![Vec::new(); p.graph.n()];
    let local = LocalFence::new(f.variant, f.bundle_width);
    let (bu, bv) = local.place(f, p.cross[0], &mut rot);
    rot[f.u] = bu;
    rot[f.v] = bv;
    let emb = PlanarEmbedding::new(rot);
    check_embedding(&emb, &p.graph)?;
    let outer = emb
        .faces()
        .iter()
        .position(|face| face.contains(&f.u) && face.contains(&f.v))
        .ok_or_else(|| HardnessError::Drawing("no face holds both u and v".into()))?;
    Ok(extract_drawing(&fg.graph, &m, &emb, outer)?)
}

fn check_embedding(emb: &PlanarEmbedding, g: &Graph) -> Result<(), HardnessError> {
    if !emb.is_consistent_with(g) {
        return Err(HardnessError::Drawing("rotation does not match the planarization".into()));
    }
    if !emb.is_planar() {
        return Err(HardnessError::Drawing("rotation system is not planar".into()));
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum Pos {
    Origin,
    Infinity,
    Polar(f64, f64),
}

fn wrap(d: f64) -> f64 {
    let d = d.rem_euclid(TAU);
    if d > PI {
        d - TAU
    } else {
        d
    }
}

/// Angle key of the dart from `x` towards `y`; larger is further
/// counterclockwise.
fn dart_key(x: Pos, y: Pos) -> f64 {
    match (x, y) {
        (Pos::Origin, Pos::Polar(t, _)) => t.rem_euclid(TAU),
        (Pos::Infinity, Pos::Polar(t, _)) => (-t).rem_euclid(TAU),
        (Pos::Polar(..), Pos::Origin) => PI,
        (Pos::Polar(..), Pos::Infinity) => 0.0,
        (Pos::Polar(tx, rx), Pos::Polar(ty, ry)) => (rx * wrap(ty - tx)).atan2(ry - rx),
        _ => unreachable!("no edge joins the two centers"),
    }
}

enum Slot {
    Plain(usize),
    /// Fence index and whether this end is the fence's `u`.
    Fence(usize, bool),
}

/// Witness drawing of the reduction graph for a satisfying partition: the
/// elements of triple `i` sit between dividers `i` and `i + 1`, every rim
/// edge is crossed by one splitter edge and every fence by its own single
/// edges only. The outer face lies between the two rims: among the faces at
/// a splitter hub, the first one without B- or W-configurations. A face at
/// either center would sit inside a wedge cut off by a rim crossing.
pub fn build_witness_drawing(h: &HardInstance, partition: &[[usize; 3]]) -> Result<CombinatorialDrawing, HardnessError> {
    let i = &h.instance;
    i.check_partition(partition)?;
    let g = &h.graph;
    let (m, bound) = (i.m, i.bound as usize);
    let (nt, nc) = (3 * m, bound * m);
    let t_ang = |k: f64| TAU * k / nt as f64;
    let c_ang = |k: f64| TAU * k / nc as f64;

    let mut pos: Vec<Option<Pos>> = vec![None; g.n()];
    pos[h.transmitter] = Some(Pos::Origin);
    pos[h.collector] = Some(Pos::Infinity);
    for (k, &t) in h.transmitter_rim.iter().enumerate() {
        pos[t] = Some(Pos::Polar(t_ang((k + 1) as f64), 1.0));
    }
    for (k, &c) in h.collector_rim.iter().enumerate() {
        pos[c] = Some(Pos::Polar(c_ang((k + 1) as f64), 3.0));
    }
    for (d, div) in h.dividers.iter().enumerate() {
        let th = TAU * (d + 1) as f64 / m as f64;
        pos[div[1]] = Some(Pos::Polar(th, 5.0 / 3.0));
        pos[div[2]] = Some(Pos::Polar(th, 7.0 / 3.0));
    }
    // triple d fills the sector between dividers d and d + 1 (divider 0 is
    // divider m); element p of it crosses transmitter rim edge 3d + p, and
    // its leaves cross consecutive collector rim edges
    let mut crossings: Vec<(Edge, Edge, f64, f64)> = Vec::new();
    for (d, triple) in partition.iter().enumerate() {
        let mut off = 0;
        for (p, &a) in triple.iter().enumerate() {
            let sp = &h.splitters[a];
            let k = 3 * d + p;
            let phi = t_ang(k as f64 + 0.5);
            pos[sp.hub] = Some(Pos::Polar(phi, 1.5));
            let rim = (h.transmitter_rim[(k + nt - 1) % nt], h.transmitter_rim[k]);
            crossings.push(((sp.hub, h.transmitter), rim, phi, 1.0));
            for &leaf in &sp.leaves {
                let j = bound * d + off;
                let psi = c_ang(j as f64 + 0.5);
                pos[leaf] = Some(Pos::Polar(psi, 2.6));
                let rim = (h.collector_rim[(j + nc - 1) % nc], h.collector_rim[j]);
                crossings.push(((leaf, h.collector), rim, psi, 3.0));
                off += 1;
            }
        }
    }

    let mut pairs: Vec<(Edge, Edge)> = h.fences.iter().map(|(_, f)| f.single_edges()).collect();
    pairs.extend(crossings.iter().map(|&(a, b, _, _)| (a, b)));
    let mp = CrossingPairing::new(g, &pairs)?;
    let p = planarize(g, &mp)?;
    let mut rot = vec![Vec::new(); p.graph.n()];

    let mut slots: Vec<Vec<(f64, Slot)>> = (0..g.n()).map(|_| Vec::new()).collect();
    let at = |v: usize| pos[v].expect("coarse vertex has a position");
    for &((a, b), (c, d), th, r) in &crossings {
        let x = cross_vertex(&mp, &p.cross, (a, b), (c, d));
        let xp = Pos::Polar(th, r);
        let mut around: Vec<(f64, usize)> = [a, b, c, d].iter().map(|&y| (dart_key(xp, at(y)), y)).collect();
        around.sort_by(|p, q| p.0.total_cmp(&q.0));
        rot[x] = around.into_iter().map(|(_, y)| y).collect();
        for y in [a, b, c, d] {
            slots[y].push((dart_key(at(y), xp), Slot::Plain(x)));
        }
    }
    for (fi, (_, f)) in h.fences.iter().enumerate() {
        slots[f.u].push((dart_key(at(f.u), at(f.v)), Slot::Fence(fi, true)));
        slots[f.v].push((dart_key(at(f.v), at(f.u)), Slot::Fence(fi, false)));
    }

    let locals: Vec<LocalFence> = [FenceVariant::Arrow, FenceVariant::ChairEven, FenceVariant::ChairOdd, FenceVariant::X]
        .into_iter()
        .map(|v| LocalFence::new(v, h.fences.first().map_or(1, |f| f.1.bundle_width)))
        .collect();
    let local_of = |v: FenceVariant| match v {
        FenceVariant::Arrow => &locals[0],
        FenceVariant::ChairEven => &locals[1],
        FenceVariant::ChairOdd => &locals[2],
        FenceVariant::X => &locals[3],
    };
    let mut ends: Vec<(Vec<usize>, Vec<usize>)> = Vec::with_capacity(h.fences.len());
    for (_, f) in &h.fences {
        let (a, b) = f.single_edges();
        let x = cross_vertex(&mp, &p.cross, a, b);
        ends.push(local_of(f.variant).place(f, x, &mut rot));
    }
    for (v, mut list) in slots.into_iter().enumerate() {
        if list.is_empty() {
            continue;
        }
        list.sort_by(|p, q| p.0.total_cmp(&q.0));
        let mut r = Vec::new();
        for (_, s) in list {
            match s {
                Slot::Plain(y) => r.push(y),
                Slot::Fence(fi, true) => r.extend_from_slice(&ends[fi].0),
                Slot::Fence(fi, false) => r.extend_from_slice(&ends[fi].1),
            }
        }
        rot[v] = r;
    }

    let emb = PlanarEmbedding::new(rot);
    check_embedding(&emb, &p.graph)?;
    for (fi, face) in emb.faces().iter().enumerate() {
        if !h.splitters.iter().any(|sp| face.contains(&sp.hub)) {
            continue;
        }
        let d = extract_drawing(g, &mp, &emb, fi)?;
        if detect_b_configs(&d).is_empty() && detect_w_configs(&d).is_empty() {
            return Ok(d);
        }
    }
    Err(HardnessError::Drawing("every face at a splitter hub sees a B- or W-configuration".into()))
}
