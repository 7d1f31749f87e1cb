//! Exact decision procedures for type-restricted 1-planarity.
//!
//! The topological search branches on Kuratowski subdivisions of the current
//! planarization; the geometric search enumerates pairings, embeddings and
//! outer faces and rejects drawings with B- or W-configurations. Both are
//! wrapped in the block and SPR-tree reductions, and checked against
//! brute-force oracles in the tests.

mod chord;
mod geom;
mod search;
mod topo;

pub use chord::{chord_description_of, min_fill_completion, validate_chord_description, ChordDescription, ChordEntry};
pub use geom::{oracle_geom, outer_at, solve_geom, solve_geom_confined, solve_geom_i3c, solve_geom_with_outer};
pub use topo::{oracle_enumerate, oracle_enumerate_with_guard, solve, solve_i3c, ORACLE_EDGE_GUARD};

use std::fmt;
use std::time::Duration;

use thiserror::Error;
use xing_crossings::{CombinatorialDrawing, CrossingError, CrossingPairing};
use xing_graph::{Graph, GraphError};

/// Largest edge count on which a non-decomposable type set is searched
/// without the connectivity reductions.
pub const WHOLE_GRAPH_EDGE_GUARD: usize = 40;

/// Largest edge count on which [`solve_geom`] searches for a whole-graph
/// witness drawing after deciding YES through the reductions.
pub const GEOM_WITNESS_EDGE_GUARD: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("search budget of {0} nodes exhausted")]
    ResourceExhausted(u64),
    #[error("type set {0} is not covered by the decomposition theorem and the input has {1} edges (guard {2})")]
    UnsupportedTypeset(String, usize, usize),
    #[error("input has {0} edges, more than the oracle guard of {1}")]
    TooLarge(usize, usize),
    #[error("input is not internally 3-connected")]
    NotInternally3Connected,
    #[error("input is not biconnected")]
    NotBiconnected,
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("chord description: {0}")]
    Chord(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Crossing(#[from] CrossingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "YES",
            Decision::No => "NO",
        })
    }
}

impl From<bool> for Decision {
    fn from(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }
}

/// A drawing found for one piece of the input (a skeleton+ graph or a
/// reduced graph of the geometric recursion).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceWitness {
    pub graph: Graph,
    pub drawing: CombinatorialDrawing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Pairing over the input graph; empty when only piece witnesses exist.
    pub pairing: CrossingPairing,
    /// Drawing of the whole input, when one was assembled.
    pub drawing: Option<CombinatorialDrawing>,
    pub pieces: Vec<PieceWitness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Stats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub decision: Decision,
    pub witness: Option<Witness>,
    pub stats: Stats,
}

impl SolveResult {
    pub fn is_yes(&self) -> bool {
        self.decision == Decision::Yes
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Search nodes (pairings tried, or drawings inspected) before giving up.
    pub budget: u64,
    /// Explore the top levels of the search concurrently. Without the
    /// `parallel` feature this is ignored.
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: 5_000_000, parallel: false }
    }
}

impl SolveOptions {
    pub fn with_budget(budget: u64) -> Self {
        SolveOptions { budget, ..Self::default() }
    }
}

/// At most one vertex required on the outer face.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OuterRequirement {
    pub vertex: Option<String>,
}

impl OuterRequirement {
    pub fn none() -> Self {
        OuterRequirement { vertex: None }
    }

    pub fn vertex(id: impl Into<String>) -> Self {
        OuterRequirement { vertex: Some(id.into()) }
    }

    pub(crate) fn resolve(&self, g: &Graph) -> Result<Option<usize>, SolverError> {
        match &self.vertex {
            None => Ok(None),
            Some(v) => g.index_of(v).map(Some).ok_or_else(|| SolverError::UnknownVertex(v.clone())),
        }
    }
}
