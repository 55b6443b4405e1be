//! The ASM data model: grids, validation, patterns, sum vectors,
//! permutations and the exact counting formula.

mod asm;
mod count;
mod grid;
mod permutation;
mod sums;

pub(crate) use asm::check_grid_line;
pub use asm::{validate, Asm, Pattern};
pub use count::asm_count_formula;
pub use grid::Grid;
pub use permutation::Permutation;
pub use sums::{jn, kn, row_sum_feasibility, Condition, FeasibilityReport, SumVector};
