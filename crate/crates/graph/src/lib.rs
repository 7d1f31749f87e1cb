//! Simple undirected graphs with the planarity machinery the rest of the
//! workspace is built on: edge-list and graph6 I/O, block decomposition,
//! planarity testing with Kuratowski subdivisions, rotation-system
//! embeddings, embedding enumeration, and small-graph generation.

mod embedding;
mod generate;
mod graph;
pub mod io;
mod kuratowski;
mod planarity;

pub use embedding::{enumerate_embeddings, PlanarEmbedding};
pub use generate::{all_graphs, canonical_key, connected_graphs};
pub use graph::{biconnected_components, components_of, edge_key, is_biconnected, natural_cmp, Edge, Graph};
pub use kuratowski::{kuratowski_edges, kuratowski_witness, KuratowskiKind, KuratowskiWitness};
pub use planarity::{is_planar, is_planar_adj, planar_embedding, planar_rotation};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(String),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(String, String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("invalid vertex id {0:?}")]
    BadVertexId(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("density bound needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("graph is not planar")]
    NotPlanar,
    #[error("resource budget exhausted")]
    Exhausted,
    #[error("{0}")]
    Io(String),
}

/// `false` iff `|E| > 4|V| - 8`, in which case no 1-planar drawing exists.
pub fn density_screen(g: &Graph) -> Result<bool, GraphError> {
    if g.n() < 3 {
        return Err(GraphError::TooSmall(g.n()));
    }
    Ok(g.m() + 8 <= 4 * g.n())
}
