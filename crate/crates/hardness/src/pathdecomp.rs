//! Path decompositions of the reduction graph.

use std::fmt;

use xing_graph::Graph;

use crate::fence::Fence;
use crate::instance::HardInstance;

/// Bags in path order, by vertex index.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<usize>>,
}

impl PathDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn named_bags(&self, g: &Graph) -> Vec<Vec<String>> {
        self.bags.iter().map(|b| b.iter().map(|&v| g.name(v).to_string()).collect()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathViolation {
    UnknownVertex(usize),
    UncoveredVertex(String),
    UncoveredEdge(String, String),
    BrokenInterval(String),
}

impl fmt::Display for PathViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathViolation::UnknownVertex(v) => write!(f, "bag holds unknown vertex index {v}"),
            PathViolation::UncoveredVertex(v) => write!(f, "vertex {v} is in no bag"),
            PathViolation::UncoveredEdge(a, b) => write!(f, "edge {a} {b} is in no bag"),
            PathViolation::BrokenInterval(v) => write!(f, "bags holding {v} are not consecutive"),
        }
    }
}

/// Width of `p`, or the first violated condition: every vertex covered,
/// every edge inside a bag, and the bags of each vertex consecutive.
pub fn validate_path_decomposition(g: &Graph, p: &PathDecomposition) -> Result<usize, PathViolation> {
    let n = g.n();
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0; n];
    let mut count = vec![0; n];
    for (i, bag) in p.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(PathViolation::UnknownVertex(v));
            }
            first[v] = first[v].min(i);
            last[v] = i;
            count[v] += 1;
        }
    }
    for v in 0..n {
        if count[v] == 0 {
            return Err(PathViolation::UncoveredVertex(g.name(v).into()));
        }
        if last[v] - first[v] + 1 != count[v] {
            return Err(PathViolation::BrokenInterval(g.name(v).into()));
        }
    }
    for (a, b) in g.edges() {
        // both intervals are contiguous, so they meet iff they overlap
        if first[a].max(first[b]) > last[a].min(last[b]) {
            return Err(PathViolation::UncoveredEdge(g.name(a).into(), g.name(b).into()));
        }
    }
    Ok(p.width())
}

/// Sweeps the sectors between consecutive dividers along both rims, with the
/// wheel centers and the last divider kept in every bag. Each fence gets a
/// block of bags right after the first bag holding both of its ends.
pub fn instance_path_decomposition(h: &HardInstance) -> PathDecomposition {
    let m = h.instance.m;
    let bound = h.instance.bound as usize;
    let t = |k: usize| h.transmitter_rim[(k + 3 * m - 1) % (3 * m)];
    let c = |k: usize| h.collector_rim[(k + bound * m - 1) % (bound * m)];
    let last = h.dividers[m - 1];
    let anchor = vec![h.transmitter, h.collector, last[0], last[1], last[2], last[3]];
    let with = |extra: &[usize]| {
        let mut b = anchor.clone();
        for &x in extra {
            if !b.contains(&x) {
                b.push(x);
            }
        }
        b
    };
    let mut coarse = vec![anchor.clone()];
    for i in 1..=m {
        let prev_c = c(bound * (i - 1));
        for j in 3 * (i - 1) + 1..=3 * i {
            coarse.push(with(&[prev_c, t(j - 1), t(j)]));
        }
        for j in bound * (i - 1) + 1..=bound * i {
            coarse.push(with(&[t(3 * i), c(j - 1), c(j)]));
        }
        if i < m {
            let d = h.dividers[i - 1];
            coarse.push(with(&[d[0], d[1], d[2], d[3]]));
        }
    }
    for sp in &h.splitters {
        for &leaf in &sp.leaves {
            coarse.push(with(&[sp.hub, leaf]));
        }
    }

    let mut blocks: Vec<Vec<&Fence>> = vec![Vec::new(); coarse.len()];
    for (_, f) in &h.fences {
        let at = coarse
            .iter()
            .position(|b| b.contains(&f.u) && b.contains(&f.v))
            .expect("every fence has both ends in some coarse bag");
        blocks[at].push(f);
    }
    let mut bags = Vec::new();
    for (bag, fences) in coarse.into_iter().zip(blocks) {
        for f in fences {
            for &mid in &f.mids {
                let mut b = bag.clone();
                b.extend_from_slice(&f.w);
                b.push(mid);
                bags.push(b);
            }
        }
        bags.push(bag);
    }
    PathDecomposition { bags }
}
