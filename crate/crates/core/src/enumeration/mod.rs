//! Exhaustive enumeration and the searches built on it.

mod stream;

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::analysis::{contains_principal_submatrix, contains_submatrix, term_rank, SubmatrixWitness};
use crate::error::{Error, Result};
use crate::model::{validate, Asm, Grid};

pub use stream::{enumerate, enumerate_with, AsmIter, ColumnState, Filter, Guards, MAX_CLASS_ORDER_ENV, MAX_ORDER_ENV};

/// Number of order-`n` ASMs passing `filter`, counted in parallel over the
/// first two rows.
pub fn count_with(n: usize, filter: Filter, guards: &Guards) -> Result<u64> {
    enumerate_with(n, filter, guards)?;
    Ok(stream::prefixes(n, &filter, 2)
        .into_par_iter()
        .map(|prefix| AsmIter::from_prefix(n, filter, prefix).count() as u64)
        .sum())
}

pub fn count(n: usize, filter: Filter) -> Result<u64> {
    count_with(n, filter, &Guards::from_env())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistic {
    Sigma,
    TermRank,
}

impl Statistic {
    pub fn of(self, a: &Asm) -> usize {
        match self {
            Statistic::Sigma => a.sigma(),
            Statistic::TermRank => term_rank(a),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Min,
    Max,
}

/// Optimum of a statistic over an enumeration, with every attainer in
/// stream order. `None` when nothing passes the filter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremum {
    pub value: usize,
    pub attainers: Vec<Asm>,
}

pub fn extremal_scan_with(
    n: usize,
    filter: Filter,
    statistic: Statistic,
    direction: Direction,
    guards: &Guards,
) -> Result<Option<Extremum>> {
    let mut best: Option<Extremum> = None;
    for a in enumerate_with(n, filter, guards)? {
        let v = statistic.of(&a);
        match &mut best {
            Some(b) if b.value == v => b.attainers.push(a),
            Some(b) => {
                let better = match direction {
                    Direction::Min => v < b.value,
                    Direction::Max => v > b.value,
                };
                if better {
                    *b = Extremum {
                        value: v,
                        attainers: vec![a],
                    };
                }
            }
            None => {
                best = Some(Extremum {
                    value: v,
                    attainers: vec![a],
                })
            }
        }
    }
    Ok(best)
}

pub fn extremal_scan(n: usize, filter: Filter, statistic: Statistic, direction: Direction) -> Result<Option<Extremum>> {
    extremal_scan_with(n, filter, statistic, direction, &Guards::from_env())
}

/// All ASMs `P A Q` with `P`, `Q` permutation matrices.
pub fn equivalence_class(a: &Asm, guards: &Guards) -> Result<BTreeSet<Asm>> {
    let n = a.n();
    if n > guards.class {
        return Err(Error::OrderTooLarge { n, cap: guards.class });
    }
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let found: Vec<BTreeSet<Asm>> = perms
        .par_iter()
        .map(|rows| {
            let mut local = BTreeSet::new();
            for cols in &perms {
                if let Ok(b) = validate(a.grid().permute(rows, cols)) {
                    local.insert(b);
                }
            }
            local
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassFormula {
    /// `n!² / (l! 6^{2l})` with `n = 3l + 1`.
    DirectSumOfD3,
    /// `2 n!² / ((l-1)! 6^{2l} 16)` with `n = 3l + 1`.
    WithD4,
}

fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Size of the equivalence class of `D_3 ⊕ ... ⊕ D_3 ⊕ I_1` (`l` copies of
/// `D_3`), or of the matrix obtained by merging the last `D_3` and `I_1`
/// into `D_4`.
pub fn class_size_formula(kind: ClassFormula, l: usize) -> Result<BigUint> {
    if l == 0 {
        return Err(Error::BadOrder {
            n: 1,
            reason: "needs at least one copy of D_3".into(),
        });
    }
    let n = 3 * l + 1;
    let nf = factorial(n);
    let six = BigUint::from(6u8).pow(2 * l as u32);
    let (num, den) = match kind {
        ClassFormula::DirectSumOfD3 => (&nf * &nf, factorial(l) * six),
        ClassFormula::WithD4 => (
            BigUint::from(2u8) * &nf * &nf,
            factorial(l - 1) * six * BigUint::from(16u8),
        ),
    };
    debug_assert!((&num % &den) == BigUint::from(0u8));
    Ok(num / den)
}

/// The least order with an ASM containing the pattern, plus that ASM and
/// where the pattern sits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaHit {
    pub order: usize,
    pub asm: Asm,
    pub witness: SubmatrixWitness,
}

fn search(
    b: &Grid,
    n_max: usize,
    filter: Filter,
    guards: &Guards,
    find: fn(&Asm, &Grid) -> Option<SubmatrixWitness>,
) -> Result<Option<ZetaHit>> {
    guards.check(n_max, &filter)?;
    for n in b.rows().max(b.cols())..=n_max {
        for a in enumerate_with(n, filter, guards)? {
            if let Some(witness) = find(&a, b) {
                return Ok(Some(ZetaHit {
                    order: n,
                    asm: a,
                    witness,
                }));
            }
        }
    }
    Ok(None)
}

/// Smallest `n <= n_max` such that `b` is a submatrix of some `n x n` ASM.
pub fn zeta(b: &Grid, n_max: usize, guards: &Guards) -> Result<Option<ZetaHit>> {
    search(b, n_max, Filter::none(), guards, contains_submatrix)
}

/// Smallest `n <= n_max` such that `b` is a principal submatrix of some
/// symmetric `n x n` ASM.
pub fn zeta_p(b: &Grid, n_max: usize, guards: &Guards) -> Result<Option<ZetaHit>> {
    search(
        b,
        n_max,
        Filter::none().symmetric(),
        guards,
        contains_principal_submatrix,
    )
}
