//! Term rank, connectivity, signed graphs, submatrix search and the
//! closed-form extremal counts.

mod extremal;
mod graph;
mod submatrix;
mod term_rank;

pub use extremal::{alpha, beta, max_zero_diag_nonzeros, min_connected_nonzeros};
pub use graph::{
    bipartite_graph, components, is_connected, signed_graph, Block, ComponentDecomposition, GraphMode, SignedEdge,
    SignedEdgeList,
};
pub use submatrix::{contains_principal_submatrix, contains_submatrix, SubmatrixWitness};
pub use term_rank::{min_line_cover, term_rank, term_rank_lower_bound, LineCover, Support};

use crate::model::Asm;

/// Shape of the bipartite graph of a connected ASM with the fewest nonzeros.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinimalShape {
    /// Odd order: a tree on `2n` vertices.
    Tree,
    /// Even order: one even cycle of the given length.
    Unicyclic(usize),
}

/// Recognizes the attainers of [`min_connected_nonzeros`]: connected, with
/// exactly that many nonzeros; returns the graph shape that forces.
pub fn minimal_connected_shape(a: &Asm) -> Option<MinimalShape> {
    let min = min_connected_nonzeros(a.n()).ok()?;
    let g = bipartite_graph(a);
    if a.sigma() != min || !g.is_connected() {
        return None;
    }
    if g.is_tree() {
        Some(MinimalShape::Tree)
    } else {
        g.unicyclic_cycle_length().map(MinimalShape::Unicyclic)
    }
}
