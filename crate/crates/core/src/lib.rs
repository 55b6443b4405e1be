//! Alternating sign matrices: validation, constructions, term rank and
//! connectivity analysis, interchange moves and exhaustive enumeration.

pub mod analysis;
pub mod enumeration;
pub mod error;
pub mod generators;
pub mod model;
pub mod transforms;

pub use error::{Error, Line, Result};
pub use model::{validate, Asm, Grid, Pattern, Permutation, SumVector};
