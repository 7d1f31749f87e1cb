//! 3-Partition instances and the reduction graph built from them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use xing_crossings::CrossingType;
use xing_graph::{edge_key, Edge, Graph};

use crate::fence::{add_fence, Fence, FenceVariant, DEFAULT_BUNDLE_WIDTH};
use crate::HardnessError;

/// Largest `m` accepted by [`solve_3partition`].
pub const PARTITION_GUARD: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreePartitionInstance {
    pub sizes: Vec<u64>,
    pub bound: u64,
    pub m: usize,
}

impl ThreePartitionInstance {
    /// Checks `|sizes| = 3m`, positive sizes and `sum = mB`.
    pub fn new(sizes: Vec<u64>, bound: u64) -> Result<Self, HardnessError> {
        let bad = |s: String| Err(HardnessError::InvalidInstance(s));
        if sizes.is_empty() || sizes.len() % 3 != 0 {
            return bad(format!("{} elements is not a positive multiple of three", sizes.len()));
        }
        if sizes.contains(&0) {
            return bad("sizes must be positive".into());
        }
        let m = sizes.len() / 3;
        let sum: u64 = sizes.iter().sum();
        if sum != m as u64 * bound {
            return bad(format!("sizes sum to {sum}, expected m*B = {}", m as u64 * bound));
        }
        Ok(ThreePartitionInstance { sizes, bound, m })
    }

    /// A small example instance with m = 3 and B = 8 (odd m).
    pub fn figure() -> Self {
        Self::new(vec![1, 2, 2, 2, 3, 3, 3, 4, 4], 8).expect("valid instance")
    }

    /// `m >= 3` with `m` and `B` even, as the reduction assumes.
    pub fn check_reduction_parameters(&self) -> Result<(), HardnessError> {
        if self.m < 3 {
            return Err(HardnessError::InvalidInstance(format!("m = {} is below 3", self.m)));
        }
        if self.m % 2 == 1 || self.bound % 2 == 1 {
            return Err(HardnessError::InvalidInstance(format!(
                "m = {} and B = {} must both be even",
                self.m, self.bound
            )));
        }
        Ok(())
    }

    /// Whether `partition` (triples of element indices) is satisfying.
    pub fn check_partition(&self, partition: &[[usize; 3]]) -> Result<(), HardnessError> {
        let bad = |s: String| Err(HardnessError::BadPartition(s));
        if partition.len() != self.m {
            return bad(format!("{} triples, expected {}", partition.len(), self.m));
        }
        let mut seen = vec![false; self.sizes.len()];
        for t in partition {
            for &a in t {
                if a >= self.sizes.len() || std::mem::replace(&mut seen[a], true) {
                    return bad(format!("element {a} is out of range or repeated"));
                }
            }
            let s: u64 = t.iter().map(|&a| self.sizes[a]).sum();
            if s != self.bound {
                return bad(format!("triple {t:?} sums to {s}, not {}", self.bound));
            }
        }
        Ok(())
    }
}

/// Exhaustive search for a satisfying partition; the first element left is
/// always placed first, so each partition is visited once.
pub fn solve_3partition(i: &ThreePartitionInstance) -> Result<Option<Vec<[usize; 3]>>, HardnessError> {
    if i.m > PARTITION_GUARD {
        return Err(HardnessError::TooLarge(i.m, PARTITION_GUARD));
    }
    fn rec(i: &ThreePartitionInstance, used: &mut [bool], out: &mut Vec<[usize; 3]>) -> bool {
        let Some(a) = used.iter().position(|u| !u) else {
            return true;
        };
        used[a] = true;
        let n = used.len();
        for b in a + 1..n {
            if used[b] || i.sizes[a] + i.sizes[b] >= i.bound {
                continue;
            }
            used[b] = true;
            for c in b + 1..n {
                if used[c] || i.sizes[a] + i.sizes[b] + i.sizes[c] != i.bound {
                    continue;
                }
                used[c] = true;
                out.push([a, b, c]);
                if rec(i, used, out) {
                    return true;
                }
                out.pop();
                used[c] = false;
            }
            used[b] = false;
        }
        used[a] = false;
        false
    }
    let mut used = vec![false; i.sizes.len()];
    let mut out = Vec::new();
    Ok(rec(i, &mut used, &mut out).then_some(out))
}

/// Crossing type targeted by the reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HardVariant {
    Arrow,
    Chair,
    X,
}

impl HardVariant {
    pub fn crossing_type(self) -> CrossingType {
        match self {
            HardVariant::Arrow => CrossingType::Arrow,
            HardVariant::Chair => CrossingType::Chair,
            HardVariant::X => CrossingType::X,
        }
    }

    /// Fence variant for radian `k` (1-based) of a wheel.
    fn radian(self, k: usize) -> FenceVariant {
        match self {
            HardVariant::Arrow => FenceVariant::Arrow,
            HardVariant::Chair if k % 2 == 0 => FenceVariant::ChairEven,
            HardVariant::Chair => FenceVariant::ChairOdd,
            HardVariant::X => FenceVariant::X,
        }
    }

    /// Fence variant away from the wheels.
    fn plain(self) -> FenceVariant {
        match self {
            HardVariant::Arrow => FenceVariant::Arrow,
            HardVariant::Chair => FenceVariant::ChairEven,
            HardVariant::X => FenceVariant::X,
        }
    }
}

impl fmt::Display for HardVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.crossing_type().name())
    }
}

impl FromStr for HardVariant {
    type Err = HardnessError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "arrow" => Ok(HardVariant::Arrow),
            "chair" => Ok(HardVariant::Chair),
            "x" => Ok(HardVariant::X),
            _ => Err(HardnessError::InvalidInstance(format!("unknown variant {s}, expected arrow, chair or x"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Center,
    Rim,
    Hub,
    RadianFencePart,
    DividerFencePart,
    SplitterFencePart,
    SplitterEdge,
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::Center => "center",
            Role::Rim => "rim",
            Role::Hub => "hub",
            Role::RadianFencePart => "radian-fence-part",
            Role::DividerFencePart => "divider-fence-part",
            Role::SplitterFencePart => "splitter-fence-part",
            Role::SplitterEdge => "splitter-edge",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FenceKind {
    Radian,
    Divider,
    Splitter,
}

impl FenceKind {
    fn role(self) -> Role {
        match self {
            FenceKind::Radian => Role::RadianFencePart,
            FenceKind::Divider => Role::DividerFencePart,
            FenceKind::Splitter => Role::SplitterFencePart,
        }
    }
}

/// Claw of fences for one element, with its edges to the wheel centers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitter {
    pub element: usize,
    pub hub: usize,
    pub leaves: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub bundle_width: usize,
    /// Accept odd `m` or `B`; only meant for small illustrations such as [`ThreePartitionInstance::figure`].
    pub parity_waiver: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { bundle_width: DEFAULT_BUNDLE_WIDTH, parity_waiver: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HardCounts {
    pub fences: usize,
    pub transmitter_rim: usize,
    pub collector_rim: usize,
    pub vertices: usize,
    pub edges: usize,
}

/// The reduction graph with every vertex and edge tagged by its role.
#[derive(Debug, Clone)]
pub struct HardInstance {
    pub graph: Graph,
    pub instance: ThreePartitionInstance,
    pub variant: HardVariant,
    pub fences: Vec<(FenceKind, Fence)>,
    pub transmitter: usize,
    pub collector: usize,
    /// Rim vertex `k` (1-based in names) at index `k - 1`.
    pub transmitter_rim: Vec<usize>,
    pub collector_rim: Vec<usize>,
    /// Divider `i` as its path `[t_{3i}, d1, d2, c_{Bi}]`.
    pub dividers: Vec<[usize; 4]>,
    pub splitters: Vec<Splitter>,
    pub vertex_roles: Vec<Role>,
    pub edge_roles: BTreeMap<Edge, Role>,
}

impl HardInstance {
    pub fn counts(&self) -> HardCounts {
        HardCounts {
            fences: self.fences.len(),
            transmitter_rim: self.transmitter_rim.len(),
            collector_rim: self.collector_rim.len(),
            vertices: self.graph.n(),
            edges: self.graph.m(),
        }
    }

    /// One line per vertex (`v <id> <role>`) and edge (`e <a> <b> <role>`),
    /// tab separated.
    pub fn roles_tsv(&self) -> String {
        let mut out = String::new();
        for (v, r) in self.vertex_roles.iter().enumerate() {
            out.push_str(&format!("v\t{}\t{r}\n", self.graph.name(v)));
        }
        for (&(a, b), r) in &self.edge_roles {
            out.push_str(&format!("e\t{}\t{}\t{r}\n", self.graph.name(a), self.graph.name(b)));
        }
        out
    }
}

struct Builder {
    g: Graph,
    roles: Vec<Role>,
    edge_roles: BTreeMap<Edge, Role>,
    fences: Vec<(FenceKind, Fence)>,
    ell: usize,
}

impl Builder {
    fn vertex(&mut self, name: String, role: Role) -> Result<usize, HardnessError> {
        let v = self.g.add_vertex(name)?;
        self.roles.push(role);
        Ok(v)
    }

    fn edge(&mut self, a: usize, b: usize, role: Role) -> Result<(), HardnessError> {
        self.g.add_edge(a, b)?;
        self.edge_roles.insert(edge_key(a, b), role);
        Ok(())
    }

    fn fence(&mut self, u: usize, v: usize, variant: FenceVariant, kind: FenceKind) -> Result<(), HardnessError> {
        let f = add_fence(&mut self.g, u, v, variant, self.ell)?;
        self.roles.resize(self.g.n(), kind.role());
        for (a, b) in f.edges() {
            self.edge_roles.insert(edge_key(a, b), kind.role());
        }
        self.fences.push((kind, f));
        Ok(())
    }
}

/// Builds the reduction graph: two wheels with fence radians, `m` dividers
/// of three fences each and one splitter per element.
pub fn build_hard_instance(
    i: &ThreePartitionInstance,
    variant: HardVariant,
    opts: BuildOptions,
) -> Result<HardInstance, HardnessError> {
    if !opts.parity_waiver {
        i.check_reduction_parameters()?;
    }
    if opts.bundle_width == 0 {
        return Err(HardnessError::InvalidInstance("bundle width must be positive".into()));
    }
    let m = i.m;
    let bm = i.bound as usize * m;
    let mut b = Builder { g: Graph::new(), roles: Vec::new(), edge_roles: BTreeMap::new(), fences: Vec::new(), ell: opts.bundle_width };
    let transmitter = b.vertex("transmitter".into(), Role::Center)?;
    let collector = b.vertex("collector".into(), Role::Center)?;
    let transmitter_rim: Vec<usize> =
        (1..=3 * m).map(|k| b.vertex(format!("transmitter:{k}"), Role::Rim)).collect::<Result<_, _>>()?;
    let collector_rim: Vec<usize> =
        (1..=bm).map(|k| b.vertex(format!("collector:{k}"), Role::Rim)).collect::<Result<_, _>>()?;
    for (center, rim) in [(transmitter, &transmitter_rim), (collector, &collector_rim)] {
        for k in 0..rim.len() {
            b.edge(rim[k], rim[(k + 1) % rim.len()], Role::Rim)?;
        }
        for (k, &r) in rim.iter().enumerate() {
            b.fence(center, r, variant.radian(k + 1), FenceKind::Radian)?;
        }
    }
    let mut dividers = Vec::with_capacity(m);
    for d in 1..=m {
        let t = transmitter_rim[3 * d - 1];
        let c = collector_rim[i.bound as usize * d - 1];
        let d1 = b.vertex(format!("divider:{d}:1"), Role::Hub)?;
        let d2 = b.vertex(format!("divider:{d}:2"), Role::Hub)?;
        for (x, y) in [(t, d1), (d1, d2), (d2, c)] {
            b.fence(x, y, variant.plain(), FenceKind::Divider)?;
        }
        dividers.push([t, d1, d2, c]);
    }
    let mut splitters = Vec::with_capacity(i.sizes.len());
    for (a, &s) in i.sizes.iter().enumerate() {
        let hub = b.vertex(format!("splitter:{}", a + 1), Role::Hub)?;
        let mut leaves = Vec::with_capacity(s as usize);
        for q in 1..=s {
            let leaf = b.vertex(format!("splitter:{}:leaf{q}", a + 1), Role::Hub)?;
            b.fence(hub, leaf, variant.plain(), FenceKind::Splitter)?;
            b.edge(leaf, collector, Role::SplitterEdge)?;
            leaves.push(leaf);
        }
        b.edge(hub, transmitter, Role::SplitterEdge)?;
        splitters.push(Splitter { element: a, hub, leaves });
    }
    Ok(HardInstance {
        graph: b.g,
        instance: i.clone(),
        variant,
        fences: b.fences,
        transmitter,
        collector,
        transmitter_rim,
        collector_rim,
        dividers,
        splitters,
        vertex_roles: b.roles,
        edge_roles: b.edge_roles,
    })
}
