//! Hardness instances for the arrow, chair and X crossing types.
//!
//! A 3-Partition instance becomes a graph of constant pathwidth built from
//! fences, two wheels, dividers and splitters. For satisfiable instances the
//! crate also builds a witness drawing, and for every instance an explicit
//! path decomposition.

mod fence;
mod instance;
mod pathdecomp;
mod witness;

pub use fence::{
    add_fence, build_fence, fence_edge_count, fence_soundness_bound, fence_vertex_count, Fence, FenceGraph, FenceSpec,
    FenceVariant, DEFAULT_BUNDLE_WIDTH,
};
pub use instance::{
    build_hard_instance, solve_3partition, BuildOptions, FenceKind, HardCounts, HardInstance, HardVariant, Role,
    Splitter, ThreePartitionInstance, PARTITION_GUARD,
};
pub use pathdecomp::{instance_path_decomposition, validate_path_decomposition, PathDecomposition, PathViolation};
pub use witness::{build_witness_drawing, fence_witness_drawing};

use thiserror::Error;
use xing_crossings::CrossingError;
use xing_graph::GraphError;

/// Width of [`instance_path_decomposition`] for every instance with `m >= 2`.
pub const PATHWIDTH_W0: usize = 13;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HardnessError {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("m = {0} exceeds the brute-force guard of {1}")]
    TooLarge(usize, usize),
    #[error("partition does not satisfy the instance: {0}")]
    BadPartition(String),
    #[error("witness drawing: {0}")]
    Drawing(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Crossing(#[from] CrossingError),
}
