use xing_graph::{biconnected_components, Edge, Graph};

use crate::DecompError;

/// Blocks and cutvertices of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BcTree {
    /// Edge sets of the blocks; bridges are single-edge blocks.
    pub blocks: Vec<Vec<Edge>>,
    pub block_vertices: Vec<Vec<usize>>,
    pub cutvertices: Vec<usize>,
    /// `(block, cutvertex position)` pairs of the containment relation.
    pub links: Vec<(usize, usize)>,
}

pub fn bc_tree(g: &Graph) -> Result<BcTree, DecompError> {
    if !g.is_connected() {
        return Err(DecompError::Disconnected);
    }
    let (blocks, cutvertices) = biconnected_components(g.adjacency());
    let block_vertices: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b| {
            let mut vs: Vec<usize> = b.iter().flat_map(|&(u, v)| [u, v]).collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();
    let mut links = Vec::new();
    for (bi, vs) in block_vertices.iter().enumerate() {
        for (ci, c) in cutvertices.iter().enumerate() {
            if vs.binary_search(c).is_ok() {
                links.push((bi, ci));
            }
        }
    }
    Ok(BcTree { blocks, block_vertices, cutvertices, links })
}

impl BcTree {
    /// Blocks that contain exactly one cutvertex (or the only block).
    pub fn leaf_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.links.iter().filter(|l| l.0 == b).count() <= 1)
            .collect()
    }

    pub fn blocks_at(&self, cut: usize) -> Vec<usize> {
        let ci = self.cutvertices.binary_search(&cut).expect("cutvertex");
        self.links.iter().filter(|l| l.1 == ci).map(|l| l.0).collect()
    }
}
