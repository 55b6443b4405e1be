use std::fmt;

use crate::error::{Error, Result};

/// A rectangular matrix over {-1, 0, +1}, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grid {
    rows: usize,
    cols: usize,
    data: Vec<i8>,
}

impl Grid {
    pub fn new(rows: usize, cols: usize, data: Vec<i8>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyGrid);
        }
        if data.len() != rows * cols {
            return Err(Error::Ragged {
                row: data.len() / cols,
                expected: cols,
                found: data.len() % cols,
            });
        }
        if let Some(pos) = data.iter().position(|v| !(-1..=1).contains(v)) {
            return Err(Error::EntryOutOfRange {
                row: pos / cols,
                col: pos % cols,
                value: data[pos] as i32,
            });
        }
        Ok(Grid { rows, cols, data })
    }

    pub fn from_rows<R: AsRef<[i8]>>(rows: &[R]) -> Result<Self> {
        let first = rows.first().ok_or(Error::EmptyGrid)?.as_ref().len();
        let mut data = Vec::with_capacity(rows.len() * first);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != first {
                return Err(Error::Ragged {
                    row: i,
                    expected: first,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Grid::new(rows.len(), first, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "grid dimensions must be positive");
        Grid {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut g = Grid::zeros(n, n);
        for i in 0..n {
            g.data[i * n + i] = 1;
        }
        g
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.data[i * self.cols + j]
    }

    /// Sets an entry. Panics if `value` is outside {-1, 0, +1}.
    pub fn set(&mut self, i: usize, j: usize, value: i8) {
        assert!((-1..=1).contains(&value), "entry {value} out of range");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> impl Iterator<Item = i8> + '_ {
        (0..self.rows).map(move |i| self.get(i, j))
    }

    pub fn entries(&self) -> &[i8] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<i8>> {
        self.data.chunks(self.cols).map(<[i8]>::to_vec).collect()
    }

    /// Positions `(i, j)` of all nonzero entries in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, i8)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(move |(p, v)| (p / self.cols, p % self.cols, *v))
    }

    pub fn count_nonzero(&self) -> usize {
        self.data.iter().filter(|v| **v != 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| *v == 0)
    }

    pub fn transpose(&self) -> Grid {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            data.extend(self.col(j));
        }
        Grid {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn reverse_rows(&self) -> Grid {
        let mut data = Vec::with_capacity(self.data.len());
        for i in (0..self.rows).rev() {
            data.extend_from_slice(self.row(i));
        }
        Grid { data, ..*self }
    }

    pub fn reverse_cols(&self) -> Grid {
        let mut data = Vec::with_capacity(self.data.len());
        for i in 0..self.rows {
            data.extend(self.row(i).iter().rev());
        }
        Grid { data, ..*self }
    }

    pub fn negate(&self) -> Grid {
        Grid {
            data: self.data.iter().map(|v| -v).collect(),
            ..*self
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// The submatrix on the given (ordered) row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Grid {
        assert!(!rows.is_empty() && !cols.is_empty());
        let data = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j)))
            .collect();
        Grid {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Entrywise sum; fails if any entry leaves {-1, 0, +1}.
    pub fn checked_add(&self, other: &Grid) -> Result<Grid> {
        self.combine(other, |a, b| a + b)
    }

    /// Entrywise difference; fails if any entry leaves {-1, 0, +1}.
    pub fn checked_sub(&self, other: &Grid) -> Result<Grid> {
        self.combine(other, |a, b| a - b)
    }

    fn combine(&self, other: &Grid, op: impl Fn(i32, i32) -> i32) -> Result<Grid> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::LengthMismatch {
                left: self.data.len(),
                right: other.data.len(),
            });
        }
        let mut data = Vec::with_capacity(self.data.len());
        for (p, (a, b)) in self.data.iter().zip(&other.data).enumerate() {
            let v = op(*a as i32, *b as i32);
            if !(-1..=1).contains(&v) {
                return Err(Error::EntryOutOfRange {
                    row: p / self.cols,
                    col: p % self.cols,
                    value: v,
                });
            }
            data.push(v as i8);
        }
        Ok(Grid { data, ..*self })
    }

    /// Block-diagonal direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Grid) -> Grid {
        let mut g = Grid::zeros(self.rows + other.rows, self.cols + other.cols);
        for (i, j, v) in self.nonzeros() {
            g.set(i, j, v);
        }
        for (i, j, v) in other.nonzeros() {
            g.set(self.rows + i, self.cols + j, v);
        }
        g
    }

    /// Reorders lines: row `t` of the result is row `row_order[t]` of `self`.
    pub fn permute(&self, row_order: &[usize], col_order: &[usize]) -> Grid {
        self.submatrix(row_order, col_order)
    }
}

impl fmt::Display for Grid {
    /// One line per row over `+`, `-`, `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for &v in self.row(i) {
                f.write_str(match v {
                    1 => "+",
                    -1 => "-",
                    _ => ".",
                })?;
            }
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Grid {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}
