//! Constructions of ASM families.

mod attach;
mod diamond;
mod expansion;
mod row_sums;

pub use attach::{attach_d3, D3Anchor};
pub use diamond::{diamond, hollowed_diamond, hollowed_near_diamond, near_diamond, HollowVariant};
pub use expansion::{basic_unicyclic, elementary_expansion, min_term_rank_asm, CycleSigns, Expansion};
pub use row_sums::from_row_sums;

use crate::model::{Asm, Grid, Permutation};

/// The permutation matrix with a `+1` at `(i, p(i))` in every row.
pub fn permutation_asm(p: &Permutation) -> Asm {
    let n = p.len();
    let mut g = Grid::zeros(n, n);
    for i in 0..n {
        g.set(i, p.apply(i), 1);
    }
    Asm::new_unchecked(g)
}
