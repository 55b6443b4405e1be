//! An ASM with a prescribed pattern row sum vector.
//!
//! The matrix is assembled from two "staircases". A staircase built from
//! `(r_1, ..., r_k)` is a `k x (2k-1)` matrix whose rows alternate like ASM
//! rows with `r_i` nonzeros and whose columns alternate from the top with
//! full sums `(1, 0, 1, ..., 0, 1)`. The top staircase uses the leading
//! entries of `R`, the bottom one the trailing entries read backwards,
//! shifted by one column and flipped upside down.

use crate::error::{Error, Result};
use crate::model::{jn, kn, validate, Asm, Grid, SumVector};

/// Builds the `k x (2k-1)` staircase for `r` (all entries odd, `r[i] <= 2i+1`).
fn staircase(r: &[usize]) -> Vec<Vec<i8>> {
    let mut rows: Vec<Vec<i8>> = vec![vec![1]];
    for (k, &target) in r.iter().enumerate().skip(1) {
        let width = 2 * k + 1;
        // A zero column on the left, then one after position `target`. When
        // `target == width` the second column lands on the far right.
        for row in &mut rows {
            row.insert(0, 0);
            let at = target.min(row.len());
            row.insert(at, 0);
        }
        let next = (0..width)
            .map(|j| match j {
                j if j >= target => 0,
                j if j % 2 == 0 => 1,
                _ => -1,
            })
            .collect();
        rows.push(next);
    }
    rows
}

/// An ASM whose pattern has row sum vector `r`. Requires every entry odd and
/// `j_n <= r <= k_n`, which is also sufficient.
pub fn from_row_sums(r: &SumVector) -> Result<Asm> {
    let n = r.len();
    if n == 0 {
        return Err(Error::InfeasibleRowSums("empty vector".into()));
    }
    if !r.all_odd_positive() {
        return Err(Error::InfeasibleRowSums(format!(
            "{:?}: every entry must be odd and positive",
            r.values()
        )));
    }
    if !(jn(n).le(r) && r.le(&kn(n))) {
        return Err(Error::InfeasibleRowSums(format!(
            "{:?} is not between j_{n} and k_{n} = {:?}",
            r.values(),
            kn(n).values()
        )));
    }
    let v = r.values();
    let m = n / 2;
    let (top_len, pad_top_right) = if n % 2 == 1 { (m + 1, false) } else { (m, true) };

    let mut top = staircase(&v[..top_len]);
    if pad_top_right {
        top.iter_mut().for_each(|row| row.push(0));
    }

    let tail: Vec<usize> = v[top_len..].iter().rev().copied().collect();
    let mut bottom = if tail.is_empty() { Vec::new() } else { staircase(&tail) };
    for row in &mut bottom {
        row.insert(0, 0);
        if !pad_top_right {
            row.push(0);
        }
    }
    bottom.reverse();

    top.extend(bottom);
    let grid = Grid::from_rows(&top).expect("staircase rows are rectangular");
    let asm = validate(grid).expect("row-sum construction yields an ASM");
    debug_assert_eq!(asm.pattern().row_sums(), *r);
    Ok(asm)
}
