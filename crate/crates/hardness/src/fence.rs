//! Fences: a K5 on `u, v, w1, w2, w3` whose edges, except the two single
//! edges `uw2` and `vw1`, are replaced by bundles of parallel 2-paths.

use std::fmt;

use num_rational::Ratio;
use xing_graph::{Graph, GraphError};

/// Bundle width used by the reduction.
pub const DEFAULT_BUNDLE_WIDTH: usize = 12;

/// Which direct edges are re-added so that the single edges cross with the
/// wanted type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FenceVariant {
    /// `uv` and `uw1`.
    Arrow,
    /// `uv` only.
    ChairEven,
    /// `uw1` only.
    ChairOdd,
    X,
}

impl FenceVariant {
    pub fn has_uv(self) -> bool {
        matches!(self, FenceVariant::Arrow | FenceVariant::ChairEven)
    }

    pub fn has_uw1(self) -> bool {
        matches!(self, FenceVariant::Arrow | FenceVariant::ChairOdd)
    }

    pub fn direct_edge_count(self) -> usize {
        self.has_uv() as usize + self.has_uw1() as usize
    }
}

impl fmt::Display for FenceVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FenceVariant::Arrow => "arrow",
            FenceVariant::ChairEven => "chair-even",
            FenceVariant::ChairOdd => "chair-odd",
            FenceVariant::X => "x",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FenceSpec {
    pub u: String,
    pub v: String,
    pub variant: FenceVariant,
    pub bundle_width: usize,
}

impl FenceSpec {
    pub fn new(u: impl Into<String>, v: impl Into<String>, variant: FenceVariant) -> Self {
        FenceSpec { u: u.into(), v: v.into(), variant, bundle_width: DEFAULT_BUNDLE_WIDTH }
    }
}

/// Local vertex slots of the underlying K5.
pub(crate) const U: usize = 0;
pub(crate) const V: usize = 1;
pub(crate) const W1: usize = 2;
pub(crate) const W2: usize = 3;
pub(crate) const W3: usize = 4;

/// The eight bundled K5 edges, in bundle-index order.
pub(crate) const BUNDLES: [(usize, usize); 8] =
    [(U, V), (U, W1), (U, W3), (V, W2), (V, W3), (W1, W2), (W1, W3), (W2, W3)];

/// A fence placed in some host graph, by host vertex index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fence {
    pub u: usize,
    pub v: usize,
    pub variant: FenceVariant,
    pub bundle_width: usize,
    pub w: [usize; 3],
    /// Midpoint of path `j` of bundle `i` at index `i * bundle_width + j`.
    pub mids: Vec<usize>,
}

impl Fence {
    pub fn single_edges(&self) -> ((usize, usize), (usize, usize)) {
        ((self.u, self.w[1]), (self.v, self.w[0]))
    }

    pub(crate) fn slot(&self, k: usize) -> usize {
        match k {
            U => self.u,
            V => self.v,
            _ => self.w[k - W1],
        }
    }

    /// Every host edge of the fence.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let (a, b) = self.single_edges();
        let mut out = vec![a, b];
        for (i, &(x, y)) in BUNDLES.iter().enumerate() {
            for j in 0..self.bundle_width {
                let m = self.mids[i * self.bundle_width + j];
                out.push((self.slot(x), m));
                out.push((m, self.slot(y)));
            }
        }
        if self.variant.has_uv() {
            out.push((self.u, self.v));
        }
        if self.variant.has_uw1() {
            out.push((self.u, self.w[0]));
        }
        out
    }

    /// Vertices other than `u` and `v`.
    pub fn inner_vertices(&self) -> Vec<usize> {
        self.w.iter().chain(&self.mids).copied().collect()
    }
}

/// Adds a fence between existing vertices `u` and `v` of `g`.
pub fn add_fence(g: &mut Graph, u: usize, v: usize, variant: FenceVariant, ell: usize) -> Result<Fence, GraphError> {
    let base = format!("fence:{}:{}", g.name(u), g.name(v));
    let mut w = [0; 3];
    for (k, slot) in w.iter_mut().enumerate() {
        *slot = g.add_vertex(format!("{base}:w{}", k + 1))?;
    }
    let mut mids = Vec::with_capacity(8 * ell);
    for i in 0..BUNDLES.len() {
        for j in 0..ell {
            mids.push(g.add_vertex(format!("{base}:bundle{i}:mid{j}"))?);
        }
    }
    let f = Fence { u, v, variant, bundle_width: ell, w, mids };
    for (a, b) in f.edges() {
        if !g.add_edge(a, b)? {
            return Err(GraphError::DuplicateEdge(g.name(a).into(), g.name(b).into()));
        }
    }
    Ok(f)
}

/// A fence on its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FenceGraph {
    pub graph: Graph,
    pub fence: Fence,
}

pub fn build_fence(spec: &FenceSpec) -> Result<FenceGraph, GraphError> {
    let mut g = Graph::with_vertices([spec.u.clone(), spec.v.clone()])?;
    let fence = add_fence(&mut g, 0, 1, spec.variant, spec.bundle_width)?;
    Ok(FenceGraph { graph: g, fence })
}

pub fn fence_vertex_count(ell: usize) -> usize {
    5 + 8 * ell
}

pub fn fence_edge_count(variant: FenceVariant, ell: usize) -> usize {
    2 + 16 * ell + variant.direct_edge_count()
}

/// Upper bound `(10l + 1) / l^2` on the share of the fence's Kuratowski
/// subdivisions resolved by crossings that do not pair both single edges,
/// and whether it is below one.
pub fn fence_soundness_bound(l: u64) -> (Ratio<u64>, bool) {
    assert!(l >= 1, "bundle width must be positive");
    let r = Ratio::new(10 * l + 1, l * l);
    (r, r < Ratio::from_integer(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use xing_crossings::{classify_crossing, CrossingType};

    #[test]
    fn counts() {
        for (variant, m) in [
            (FenceVariant::Arrow, 196),
            (FenceVariant::ChairEven, 195),
            (FenceVariant::ChairOdd, 195),
            (FenceVariant::X, 194),
        ] {
            let f = build_fence(&FenceSpec::new("u", "v", variant)).unwrap();
            assert_eq!((f.graph.n(), f.graph.m()), (101, m));
            assert_eq!(fence_edge_count(variant, 12), m);
        }
        let f = build_fence(&FenceSpec::new("u", "v", FenceVariant::ChairEven)).unwrap();
        assert!(f.graph.has_edge(0, 1));
        assert!(!f.graph.has_edge(0, f.fence.w[0]));
        assert_eq!(f.graph.name(f.fence.mids[13]), "fence:u:v:bundle1:mid1");
    }

    #[test]
    fn single_edges_cross_with_the_variant_type() {
        for (variant, t) in [
            (FenceVariant::Arrow, CrossingType::Arrow),
            (FenceVariant::ChairEven, CrossingType::Chair),
            (FenceVariant::ChairOdd, CrossingType::Chair),
            (FenceVariant::X, CrossingType::X),
        ] {
            let f = build_fence(&FenceSpec { bundle_width: 2, ..FenceSpec::new("u", "v", variant) }).unwrap();
            let (a, b) = f.fence.single_edges();
            assert_eq!(classify_crossing(&f.graph, a, b).unwrap(), t);
        }
    }

    #[test]
    fn soundness_bound() {
        let (r, ok) = fence_soundness_bound(12);
        assert_eq!((*r.numer(), *r.denom(), ok), (121, 144, true));
        assert!(r <= Ratio::new(11, 12));
        assert_eq!(fence_soundness_bound(1), (Ratio::from_integer(11), false));
        assert_eq!(fence_soundness_bound(11), (Ratio::new(111, 121), true));
        assert!(!fence_soundness_bound(10).1);
    }
}
