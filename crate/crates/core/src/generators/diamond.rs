//! Diamond ASMs and their zero-diagonal hollowings.
//!
//! Entries are described in rotated coordinates: with 1-based `(i, j)`,
//! `s = i + j` and `d = j - i`. A diamond is a square in `(s, d)` space,
//! a near-diamond a rectangle, and signs alternate with the parity of `s`.

use crate::error::{Error, Result};
use crate::model::{Asm, Grid};

/// Which hollowed diamond to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HollowVariant {
    /// `n = 4k`: hollow `D_n` along its `+1` diagonal.
    Type1,
    /// `n = 4k`: hollow the row reversal of `D_n` along its `-1` diagonal.
    Type2,
    /// `n = 4k + 2`: hollow `D_n` along its `-1` diagonal.
    Standard,
    /// `n = 4k + 2`: the row reversal of `D_n`. Its diagonal carries `2k + 2`
    /// entries joined by `+1` super-diagonal entries, so no hollowing exists
    /// and [`hollowed_diamond`] rejects it.
    Reversed,
}

impl HollowVariant {
    pub fn name(self) -> &'static str {
        match self {
            HollowVariant::Type1 => "type1",
            HollowVariant::Type2 => "type2",
            HollowVariant::Standard => "standard",
            HollowVariant::Reversed => "reversed",
        }
    }

    /// Variants that produce a matrix for order `n`.
    pub fn legal_for(n: usize) -> &'static [HollowVariant] {
        match n % 4 {
            0 if n >= 4 => &[HollowVariant::Type1, HollowVariant::Type2],
            2 if n >= 4 => &[HollowVariant::Standard],
            _ => &[],
        }
    }
}

impl std::str::FromStr for HollowVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "type1" | "1" => Ok(HollowVariant::Type1),
            "type2" | "2" => Ok(HollowVariant::Type2),
            "standard" => Ok(HollowVariant::Standard),
            "reversed" => Ok(HollowVariant::Reversed),
            other => Err(format!("unknown variant '{other}'")),
        }
    }
}

/// Fills the `(s, d)` box `s in s_range`, `|d| <= d_max` with `+1` where
/// `s ≡ plus_parity (mod 2)` and `-1` elsewhere.
fn rotated_box(n: usize, s_range: (usize, usize), d_max: usize, plus_parity: usize) -> Grid {
    let mut g = Grid::zeros(n, n);
    for i in 1..=n {
        for j in 1..=n {
            let s = i + j;
            if s < s_range.0 || s > s_range.1 || i.abs_diff(j) > d_max {
                continue;
            }
            g.set(i - 1, j - 1, if s % 2 == plus_parity % 2 { 1 } else { -1 });
        }
    }
    g
}

/// The diamond ASM `D_n`; for even `n`, `reversed` takes its rows in reverse order.
pub fn diamond(n: usize, reversed: bool) -> Asm {
    assert!(n >= 1, "diamond order must be positive");
    let m = n / 2;
    let s_max = if n % 2 == 1 { 3 * m + 2 } else { 3 * m };
    let g = rotated_box(n, (m + 2, s_max), m, m);
    let g = if reversed && n.is_multiple_of(2) {
        g.reverse_rows()
    } else {
        g
    };
    Asm::new_unchecked(g)
}

/// The near-diamond `E_n` (`n = 4k`): four fewer nonzeros than `D_n`.
pub fn near_diamond(n: usize) -> Result<Asm> {
    if n < 4 || !n.is_multiple_of(4) {
        return Err(Error::BadOrder {
            n,
            reason: "near-diamond needs n ≡ 0 (mod 4), n >= 4".into(),
        });
    }
    let k = n / 4;
    let g = rotated_box(n, (2 * k + 3, 6 * k - 1), 2 * k + 1, 1);
    Ok(Asm::new_unchecked(g))
}

/// Zeroes the principal 2x2 blocks pairing up the consecutive run of
/// nonzero diagonal entries of a symmetric matrix.
fn hollow(a: &Asm) -> Result<Asm> {
    let n = a.n();
    let diag: Vec<usize> = (0..n).filter(|&i| a.get(i, i) != 0).collect();
    let mut g = a.grid().clone();
    if diag.is_empty() {
        return Ok(a.clone());
    }
    let (lo, hi) = (diag[0], *diag.last().unwrap());
    if !diag.len().is_multiple_of(2) || hi - lo + 1 != diag.len() {
        return Err(Error::BadOrder {
            n,
            reason: "diagonal nonzeros do not pair into 2x2 blocks".into(),
        });
    }
    for b in (lo..=hi).step_by(2) {
        let (d, off) = (a.get(b, b), a.get(b, b + 1));
        if a.get(b + 1, b + 1) != d || off != -d {
            return Err(Error::BadOrder {
                n,
                reason: format!("principal block at {} is not of the form [x -x; -x x]", b + 1),
            });
        }
        for (i, j) in [(b, b), (b, b + 1), (b + 1, b), (b + 1, b + 1)] {
            g.set(i, j, 0);
        }
    }
    crate::model::validate(g).map_err(|e| Error::NotAsm(Box::new(e)))
}

/// The hollowed-diamond ASM `D*_n`: symmetric with a zero diagonal.
pub fn hollowed_diamond(n: usize, variant: HollowVariant) -> Result<Asm> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::BadOrder {
            n,
            reason: "hollowed diamond needs even n >= 4".into(),
        });
    }
    if !HollowVariant::legal_for(n).contains(&variant) {
        let reason = match variant {
            HollowVariant::Reversed => format!(
                "the reversed diamond of order {n} has {} diagonal +1s linked by +1s; it cannot be hollowed",
                n / 2 + 1
            ),
            v => format!(
                "variant {} needs n ≡ {} (mod 4)",
                v.name(),
                if n.is_multiple_of(4) { 2 } else { 0 }
            ),
        };
        return Err(Error::BadOrder { n, reason });
    }
    let base = diamond(n, variant == HollowVariant::Type2);
    hollow(&base)
}

/// The hollowed-near-diamond ASM `E*_n` (`n = 4k`).
pub fn hollowed_near_diamond(n: usize) -> Result<Asm> {
    hollow(&near_diamond(n)?)
}
