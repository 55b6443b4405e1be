//! Closed forms for the extremal nonzero counts.

use crate::error::{Error, Result};

fn bad(n: usize, reason: &str) -> Error {
    Error::BadOrder {
        n,
        reason: reason.into(),
    }
}

/// Largest number of nonzeros in an `n x n` ASM.
pub fn alpha(n: usize) -> Result<usize> {
    match n {
        0 => Err(bad(n, "order must be positive")),
        n if n % 2 == 1 => Ok((n * n).div_ceil(2)),
        n => Ok(n * n / 2),
    }
}

/// Largest number of nonzeros in a symmetric `n x n` ASM with zero diagonal.
/// Such matrices exist only for even `n`: every vertex of the signed graph
/// has odd degree.
pub fn beta(n: usize) -> Result<usize> {
    if n < 4 || n % 2 == 1 {
        return Err(bad(n, "a symmetric ASM with zero diagonal needs even n >= 4"));
    }
    Ok(if n.is_multiple_of(4) {
        (n * n - 2 * n) / 2
    } else {
        (n * n - 2 * n + 4) / 2
    })
}

/// Largest number of nonzeros in an `n x n` ASM with zero diagonal.
pub fn max_zero_diag_nonzeros(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(bad(n, "defined for n >= 3"));
    }
    let pairs = n * (n - 1) / 2;
    Ok(if matches!(n % 4, 0 | 3) { pairs } else { pairs - 1 })
}

/// Smallest number of nonzeros in a connected `n x n` ASM.
pub fn min_connected_nonzeros(n: usize) -> Result<usize> {
    match n {
        0 => Err(bad(n, "order must be positive")),
        2 => Err(bad(n, "no connected 2x2 ASM exists")),
        n if n % 2 == 1 => Ok(2 * n - 1),
        n => Ok(2 * n),
    }
}
