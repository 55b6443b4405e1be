//! Exhaustive submatrix lookup.

use itertools::Itertools;

use crate::model::{Asm, Grid};

/// Row and column indices (0-based, increasing) of an occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmatrixWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

fn matches(a: &Grid, b: &Grid, rows: &[usize], cols: &[usize]) -> bool {
    rows.iter()
        .enumerate()
        .all(|(r, &i)| cols.iter().enumerate().all(|(c, &j)| a.get(i, j) == b.get(r, c)))
}

/// The lexicographically first `(rows, cols)` with `a[rows, cols] = b`.
pub fn contains_submatrix(a: &Asm, b: &Grid) -> Option<SubmatrixWitness> {
    let n = a.n();
    if b.rows() > n || b.cols() > n {
        return None;
    }
    let g = a.grid();
    for rows in (0..n).combinations(b.rows()) {
        // Cheap row filter: each chosen row must carry the nonzero count of
        // the matching row of `b` or more.
        if rows
            .iter()
            .enumerate()
            .any(|(r, &i)| g.row(i).iter().filter(|v| **v != 0).count() < b.row(r).iter().filter(|v| **v != 0).count())
        {
            continue;
        }
        for cols in (0..n).combinations(b.cols()) {
            if matches(g, b, &rows, &cols) {
                return Some(SubmatrixWitness { rows, cols });
            }
        }
    }
    None
}

/// The lexicographically first index set `s` with `a[s, s] = b`.
pub fn contains_principal_submatrix(a: &Asm, b: &Grid) -> Option<SubmatrixWitness> {
    if !b.is_square() || b.rows() > a.n() {
        return None;
    }
    (0..a.n())
        .combinations(b.rows())
        .find(|s| matches(a.grid(), b, s, s))
        .map(|s| SubmatrixWitness {
            rows: s.clone(),
            cols: s,
        })
}
