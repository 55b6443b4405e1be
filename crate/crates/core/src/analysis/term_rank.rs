//! Term rank via bipartite matching, with a König line cover as witness.

use crate::model::{Asm, Grid, Pattern};

/// Anything with a rectangular zero/nonzero structure.
pub trait Support {
    fn shape(&self) -> (usize, usize);
    fn is_nonzero(&self, i: usize, j: usize) -> bool;
}

impl Support for Grid {
    fn shape(&self) -> (usize, usize) {
        (self.rows(), self.cols())
    }

    fn is_nonzero(&self, i: usize, j: usize) -> bool {
        self.get(i, j) != 0
    }
}

impl Support for Pattern {
    fn shape(&self) -> (usize, usize) {
        (self.n(), self.n())
    }

    fn is_nonzero(&self, i: usize, j: usize) -> bool {
        self.get(i, j) != 0
    }
}

impl Support for Asm {
    fn shape(&self) -> (usize, usize) {
        (self.n(), self.n())
    }

    fn is_nonzero(&self, i: usize, j: usize) -> bool {
        self.get(i, j) != 0
    }
}

/// A set of rows and columns (0-based) that together contain every nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineCover {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl LineCover {
    pub fn len(&self) -> usize {
        self.rows.len() + self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

struct Matching {
    adj: Vec<Vec<usize>>,
    row_mate: Vec<Option<usize>>,
    col_mate: Vec<Option<usize>>,
}

impl Matching {
    fn maximum<S: Support + ?Sized>(s: &S) -> Matching {
        let (r, c) = s.shape();
        let adj: Vec<Vec<usize>> = (0..r)
            .map(|i| (0..c).filter(|&j| s.is_nonzero(i, j)).collect())
            .collect();
        let mut m = Matching {
            adj,
            row_mate: vec![None; r],
            col_mate: vec![None; c],
        };
        for i in 0..r {
            let mut seen = vec![false; c];
            m.augment(i, &mut seen);
        }
        m
    }

    fn augment(&mut self, i: usize, seen: &mut [bool]) -> bool {
        for idx in 0..self.adj[i].len() {
            let j = self.adj[i][idx];
            if seen[j] {
                continue;
            }
            seen[j] = true;
            let free = match self.col_mate[j] {
                None => true,
                Some(k) => self.augment(k, seen),
            };
            if free {
                self.row_mate[i] = Some(j);
                self.col_mate[j] = Some(i);
                return true;
            }
        }
        false
    }

    fn size(&self) -> usize {
        self.row_mate.iter().flatten().count()
    }

    /// Rows not reached and columns reached by alternating paths from the
    /// unmatched rows.
    fn cover(&self) -> LineCover {
        let (r, c) = (self.row_mate.len(), self.col_mate.len());
        let mut row_seen = vec![false; r];
        let mut col_seen = vec![false; c];
        let mut stack: Vec<usize> = (0..r).filter(|&i| self.row_mate[i].is_none()).collect();
        for &i in &stack {
            row_seen[i] = true;
        }
        while let Some(i) = stack.pop() {
            for &j in &self.adj[i] {
                if col_seen[j] {
                    continue;
                }
                col_seen[j] = true;
                if let Some(k) = self.col_mate[j] {
                    if !row_seen[k] {
                        row_seen[k] = true;
                        stack.push(k);
                    }
                }
            }
        }
        LineCover {
            rows: (0..r).filter(|&i| !row_seen[i]).collect(),
            cols: (0..c).filter(|&j| col_seen[j]).collect(),
        }
    }
}

/// Largest number of nonzeros with no two in the same row or column.
pub fn term_rank<S: Support + ?Sized>(s: &S) -> usize {
    Matching::maximum(s).size()
}

/// A minimum line cover; its size equals [`term_rank`].
pub fn min_line_cover<S: Support + ?Sized>(s: &S) -> LineCover {
    Matching::maximum(s).cover()
}

/// `⌈2√(n+1) − 2⌉`: the smallest `t` with `(t + 2)² ≥ 4n + 4`.
pub fn term_rank_lower_bound(n: usize) -> usize {
    let target = 4 * n + 4;
    let root = target.isqrt();
    let s = if root * root == target { root } else { root + 1 };
    s.saturating_sub(2)
}
