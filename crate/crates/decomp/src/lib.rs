//! Connectivity decompositions: block-cut trees, SPR-trees of biconnected
//! graphs, skeleton+ graphs, internally 3-connected recognition, and the
//! separation-pair splits used by the reduction steps of the solvers.

mod bc;
mod skeleton;
mod spr;

pub use bc::{bc_tree, BcTree};
pub use skeleton::{
    is_internally_3connected, is_internally_3connected_by_definition, is_3connected,
    skeleton_plus, split_at_2separator, spr_side_graph, EdgeTag, SkeletonPlus,
};
pub use spr::{spr_tree, NodeKind, SkelEdge, SprNode, SprTree, TreeEdge};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("invalid separation: {0}")]
    BadSeparation(String),
    #[error("nodes {0} and {1} are not adjacent in the SPR-tree")]
    NotTreeEdge(usize, usize),
}
