//! Interchange moves, ASM extensions and reduction to the identity.

mod extension;
mod moves;
mod reduce;

pub use extension::{
    elementary_extensions, extension_cycles, is_extension, is_maximal, permutation_extension_witness,
    permutation_is_maximal,
};
pub use moves::{apply, move_matrix, InterchangeMove, MoveSequence};
pub use reduce::{moves_to_identity, reduce_to_identity};
