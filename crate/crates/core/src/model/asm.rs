use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Line, Result};
use crate::model::grid::Grid;
use crate::model::sums::SumVector;

/// An alternating sign matrix.
///
/// The wrapped grid is square and every row and column, read in order,
/// has partial sums in {0, 1} and total sum 1. The only way to obtain an
/// `Asm` from arbitrary data is [`validate`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Asm {
    grid: Grid,
}

/// Outcome of scanning one line of entries.
pub(crate) enum LineFault {
    Partial(usize),
    Total(i32),
}

pub(crate) fn check_line(entries: impl Iterator<Item = i8>) -> std::result::Result<(), LineFault> {
    let mut sum = 0i32;
    for (pos, v) in entries.enumerate() {
        sum += v as i32;
        if !(0..=1).contains(&sum) {
            return Err(LineFault::Partial(pos));
        }
    }
    if sum != 1 {
        return Err(LineFault::Total(sum));
    }
    Ok(())
}

pub(crate) fn check_grid_line(g: &Grid, line: Line) -> Result<()> {
    let res = match line {
        Line::Row(i) => check_line(g.row(i).iter().copied()),
        Line::Col(j) => check_line(g.col(j)),
    };
    res.map_err(|fault| match fault {
        LineFault::Partial(position) => Error::PartialSumOutOfRange { line, position },
        LineFault::Total(sum) => Error::TotalSumNotOne { line, sum },
    })
}

/// Validates `grid` as an ASM, reporting the first failing line (rows before columns).
pub fn validate(grid: Grid) -> Result<Asm> {
    if !grid.is_square() {
        return Err(Error::NotSquare {
            rows: grid.rows(),
            cols: grid.cols(),
        });
    }
    let n = grid.rows();
    for i in 0..n {
        check_grid_line(&grid, Line::Row(i))?;
    }
    for j in 0..n {
        check_grid_line(&grid, Line::Col(j))?;
    }
    Ok(Asm { grid })
}

impl TryFrom<Grid> for Asm {
    type Error = Error;

    fn try_from(grid: Grid) -> Result<Self> {
        validate(grid)
    }
}

impl Asm {
    /// Wraps a grid already known to be an ASM. Checked in debug builds.
    pub(crate) fn new_unchecked(grid: Grid) -> Asm {
        debug_assert!(validate(grid.clone()).is_ok(), "not an ASM:\n{grid}");
        Asm { grid }
    }

    pub fn from_rows<R: AsRef<[i8]>>(rows: &[R]) -> Result<Asm> {
        validate(Grid::from_rows(rows)?)
    }

    pub fn identity(n: usize) -> Asm {
        Asm {
            grid: Grid::identity(n),
        }
    }

    /// The permutation matrix of `(n, n-1, ..., 1)`.
    pub fn back_identity(n: usize) -> Asm {
        Asm {
            grid: Grid::identity(n).reverse_rows(),
        }
    }

    pub fn n(&self) -> usize {
        self.grid.rows()
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn into_grid(self) -> Grid {
        self.grid
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.grid.get(i, j)
    }

    pub fn pattern(&self) -> Pattern {
        Pattern {
            n: self.n(),
            data: self.grid.entries().iter().map(|v| (*v != 0) as u8).collect(),
        }
    }

    /// Splits into `(A1, A2)` with `A = A1 - A2`, `A1` holding the +1s and
    /// `A2` the -1s (as +1 entries).
    pub fn decompose(&self) -> (Grid, Grid) {
        let n = self.n();
        let mut pos = Grid::zeros(n, n);
        let mut neg = Grid::zeros(n, n);
        for (i, j, v) in self.grid.nonzeros() {
            if v > 0 {
                pos.set(i, j, 1);
            } else {
                neg.set(i, j, 1);
            }
        }
        (pos, neg)
    }

    /// Number of nonzero entries.
    pub fn sigma(&self) -> usize {
        self.grid.count_nonzero()
    }

    /// Number of nonzero entries strictly above the main diagonal.
    pub fn sigma_star(&self) -> usize {
        let n = self.n();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.get(i, j) != 0).count())
            .sum()
    }

    pub fn negative_count(&self) -> usize {
        self.grid.entries().iter().filter(|v| **v < 0).count()
    }

    pub fn is_permutation(&self) -> bool {
        self.negative_count() == 0
    }

    pub fn is_symmetric(&self) -> bool {
        self.grid.is_symmetric()
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.n()).all(|i| self.get(i, i) == 0)
    }

    pub fn transpose(&self) -> Asm {
        Asm {
            grid: self.grid.transpose(),
        }
    }

    pub fn reverse_rows(&self) -> Asm {
        Asm {
            grid: self.grid.reverse_rows(),
        }
    }

    pub fn reverse_cols(&self) -> Asm {
        Asm {
            grid: self.grid.reverse_cols(),
        }
    }

    pub fn direct_sum(&self, other: &Asm) -> Asm {
        Asm {
            grid: self.grid.direct_sum(&other.grid),
        }
    }

    /// The images of `self` under the dihedral group of order 8, deduplicated.
    pub fn dihedral_orbit(&self) -> BTreeSet<Asm> {
        let mut orbit = BTreeSet::new();
        for base in [self.clone(), self.transpose()] {
            let r = base.reverse_rows();
            let c = base.reverse_cols();
            let rc = r.reverse_cols();
            orbit.extend([base, r, c, rc]);
        }
        orbit
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.grid, f)
    }
}

impl fmt::Debug for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Asm n={}", self.n())?;
        fmt::Display::fmt(&self.grid, f)
    }
}

/// The zero-nonzero pattern of an ASM.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Pattern {
    n: usize,
    data: Vec<u8>,
}

impl Pattern {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.n + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.data.chunks(self.n).map(<[u8]>::to_vec).collect()
    }

    pub fn row_sums(&self) -> SumVector {
        SumVector::new(
            self.data
                .chunks(self.n)
                .map(|r| r.iter().map(|&v| v as usize).sum())
                .collect(),
        )
    }

    pub fn col_sums(&self) -> SumVector {
        SumVector::new(
            (0..self.n)
                .map(|j| (0..self.n).map(|i| self.get(i, j) as usize).sum())
                .collect(),
        )
    }

    /// The pattern as a 0/1 grid.
    pub fn to_grid(&self) -> Grid {
        Grid::new(self.n, self.n, self.data.iter().map(|&v| v as i8).collect()).expect("pattern entries are 0/1")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq1() -> Asm {
        Asm::from_rows(&[[0, 1, 0, 0], [1, -1, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]]).unwrap()
    }

    #[test]
    fn validates_d3_and_identity() {
        assert!(Asm::from_rows(&[[0, 1, 0], [1, -1, 1], [0, 1, 0]]).is_ok());
        for n in 1..6 {
            assert!(validate(Grid::identity(n)).is_ok());
        }
    }

    #[test]
    fn reports_first_failing_column() {
        // Column 2 reads -,+,+ so its first partial sum is -1.
        let g = Grid::from_rows(&[[1, -1, 1], [0, 1, 0], [0, 1, 0]]).unwrap();
        assert_eq!(
            validate(g),
            Err(Error::PartialSumOutOfRange {
                line: Line::Col(1),
                position: 0
            })
        );
    }

    #[test]
    fn reports_non_square_and_bad_totals() {
        let g = Grid::from_rows(&[[1, 0]]).unwrap();
        assert_eq!(validate(g), Err(Error::NotSquare { rows: 1, cols: 2 }));
        let g = Grid::from_rows(&[[0, 0], [1, 1]]).unwrap();
        assert_eq!(
            validate(g),
            Err(Error::TotalSumNotOne {
                line: Line::Row(0),
                sum: 0
            })
        );
    }

    #[test]
    fn pattern_of_eq1_example() {
        assert_eq!(
            eq1().pattern().to_rows(),
            vec![vec![0, 1, 0, 0], vec![1, 1, 1, 0], vec![0, 0, 0, 1], vec![0, 1, 0, 0]]
        );
        assert_eq!(eq1().pattern().row_sums().values(), &[1, 3, 1, 1]);
    }

    #[test]
    fn decompose_eq1_example() {
        let (pos, neg) = eq1().decompose();
        assert_eq!(
            pos.to_rows(),
            vec![vec![0, 1, 0, 0], vec![1, 0, 1, 0], vec![0, 0, 0, 1], vec![0, 1, 0, 0]]
        );
        assert_eq!(neg.nonzeros().collect::<Vec<_>>(), vec![(1, 1, 1)]);
        assert_eq!(pos.checked_sub(&neg).unwrap(), *eq1().grid());
    }

    #[test]
    fn decompose_permutation_has_empty_negative_part() {
        let p = Asm::back_identity(4);
        let (pos, neg) = p.decompose();
        assert_eq!(&pos, p.grid());
        assert!(neg.is_zero());
    }

    #[test]
    fn sigma_counts() {
        let d3 = Asm::from_rows(&[[0, 1, 0], [1, -1, 1], [0, 1, 0]]).unwrap();
        assert_eq!(d3.sigma(), 5);
        assert_eq!(d3.sigma_star(), 2);
        assert_eq!(Asm::identity(7).sigma(), 7);
        assert_eq!(Asm::identity(7).sigma_star(), 0);
    }

    #[test]
    fn dihedral_orbits() {
        let i3 = Asm::identity(3);
        let orbit = i3.dihedral_orbit();
        assert_eq!(orbit.len(), 2);
        assert!(orbit.contains(&Asm::back_identity(3)));
        assert_eq!(eq1().dihedral_orbit().len(), 8);
    }
}
