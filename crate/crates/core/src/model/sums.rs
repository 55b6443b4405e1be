use crate::error::{Error, Result};

/// A vector of line counts, such as the row or column sums of a pattern.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SumVector(Vec<usize>);

impl SumVector {
    pub fn new(values: Vec<usize>) -> Self {
        SumVector(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Entrywise `self <= other`; false if lengths differ.
    pub fn le(&self, other: &SumVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn all_odd_positive(&self) -> bool {
        self.0.iter().all(|v| v % 2 == 1)
    }
}

impl From<Vec<usize>> for SumVector {
    fn from(v: Vec<usize>) -> Self {
        SumVector(v)
    }
}

/// The all-ones vector of length `n`.
pub fn jn(n: usize) -> SumVector {
    SumVector(vec![1; n])
}

/// `(1, 3, 5, ..., 5, 3, 1)`: entry `i` (1-based) is `min(2i - 1, 2(n - i) + 1)`.
pub fn kn(n: usize) -> SumVector {
    SumVector((1..=n).map(|i| (2 * i - 1).min(2 * (n - i) + 1)).collect())
}

/// One necessary condition on a pair of pattern row/column sum vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// All entries odd and positive.
    OddPositive,
    /// `r_1 = r_n = s_1 = s_n = 1`.
    EndpointsOne,
    /// `sum(R) = sum(S)`.
    EqualTotals,
    /// `j_n <= R, S <= k_n`.
    WithinBounds,
    /// `(r_i - 1)/2 <= |{j : s_j >= 3}|` for every row.
    RowNegatives,
    /// `(r_i - 1)/2 + (r_{i+1} - 1)/2 <= |{j : s_j >= 3}|` for consecutive rows.
    RowPairNegatives,
    /// The two conditions above with rows and columns exchanged.
    ColNegatives,
    ColPairNegatives,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::OddPositive => "odd_positive",
            Condition::EndpointsOne => "endpoints_one",
            Condition::EqualTotals => "equal_totals",
            Condition::WithinBounds => "within_bounds",
            Condition::RowNegatives => "row_negatives",
            Condition::RowPairNegatives => "row_pair_negatives",
            Condition::ColNegatives => "col_negatives",
            Condition::ColPairNegatives => "col_pair_negatives",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub checks: Vec<(Condition, bool)>,
}

impl FeasibilityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn status(&self, c: Condition) -> Option<bool> {
        self.checks.iter().find(|(k, _)| *k == c).map(|(_, ok)| *ok)
    }

    pub fn violated(&self) -> Vec<Condition> {
        self.checks.iter().filter(|(_, ok)| !ok).map(|(c, _)| *c).collect()
    }
}

fn negatives_fit(lines: &[usize], other: &[usize]) -> (bool, bool) {
    let wide = other.iter().filter(|&&s| s >= 3).count();
    let neg = |r: usize| r.saturating_sub(1) / 2;
    let single = lines.iter().all(|&r| neg(r) <= wide);
    let pair = lines.windows(2).all(|w| neg(w[0]) + neg(w[1]) <= wide);
    (single, pair)
}

/// Evaluates the known necessary conditions for `(R, S)` to be the pattern
/// row and column sum vectors of some ASM.
pub fn row_sum_feasibility(r: &SumVector, s: &SumVector) -> Result<FeasibilityReport> {
    if r.len() != s.len() {
        return Err(Error::LengthMismatch {
            left: r.len(),
            right: s.len(),
        });
    }
    let n = r.len();
    let (rv, sv) = (r.values(), s.values());
    let ends = |v: &[usize]| v.first() == Some(&1) && v.last() == Some(&1);
    let (k, j) = (kn(n), jn(n));
    let (row_single, row_pair) = negatives_fit(rv, sv);
    let (col_single, col_pair) = negatives_fit(sv, rv);
    Ok(FeasibilityReport {
        checks: vec![
            (Condition::OddPositive, r.all_odd_positive() && s.all_odd_positive()),
            (Condition::EndpointsOne, ends(rv) && ends(sv)),
            (Condition::EqualTotals, r.total() == s.total()),
            (Condition::WithinBounds, j.le(r) && r.le(&k) && j.le(s) && s.le(&k)),
            (Condition::RowNegatives, row_single),
            (Condition::RowPairNegatives, row_pair),
            (Condition::ColNegatives, col_single),
            (Condition::ColPairNegatives, col_pair),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kn_values() {
        assert_eq!(kn(6).values(), &[1, 3, 5, 5, 3, 1]);
        assert_eq!(kn(7).values(), &[1, 3, 5, 7, 5, 3, 1]);
        assert_eq!(kn(1).values(), &[1]);
        assert_eq!(jn(3).values(), &[1, 1, 1]);
    }

    #[test]
    fn five_in_the_middle_is_infeasible() {
        let r = SumVector::new(vec![1, 1, 5, 1, 1]);
        let rep = row_sum_feasibility(&r, &r).unwrap();
        assert_eq!(rep.status(Condition::WithinBounds), Some(true));
        assert_eq!(rep.status(Condition::RowPairNegatives), Some(false));
        assert_eq!(rep.status(Condition::ColPairNegatives), Some(false));
        assert!(!rep.all_pass());
    }

    #[test]
    fn diamond_and_identity_vectors_pass() {
        assert!(row_sum_feasibility(&kn(5), &kn(5)).unwrap().all_pass());
        for n in 1..8 {
            assert!(row_sum_feasibility(&jn(n), &jn(n)).unwrap().all_pass());
        }
    }

    #[test]
    fn length_mismatch() {
        assert_eq!(
            row_sum_feasibility(&jn(2), &jn(3)),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
    }
}
