use std::fmt;

use crate::error::{Error, Line, Result};
use crate::model::{check_grid_line, Asm, Grid};

/// `sign * T_{p,q;k,l}`: `+sign` at `(p, k)` and `(q, l)`, `-sign` at
/// `(p, l)` and `(q, k)`. Indices are 0-based with `p < q` and `k < l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InterchangeMove {
    pub p: usize,
    pub q: usize,
    pub k: usize,
    pub l: usize,
    pub sign: i8,
}

impl InterchangeMove {
    pub fn new(p: usize, q: usize, k: usize, l: usize, sign: i8) -> Result<Self> {
        if p >= q || k >= l {
            return Err(Error::InvalidMove(format!(
                "move needs p < q and k < l, got p={} q={} k={} l={}",
                p + 1,
                q + 1,
                k + 1,
                l + 1
            )));
        }
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidMove(format!("move sign must be +1 or -1, got {sign}")));
        }
        Ok(InterchangeMove { p, q, k, l, sign })
    }

    /// Builds a move from 1-based indices.
    pub fn from_one_based(p: usize, q: usize, k: usize, l: usize, sign: i8) -> Result<Self> {
        if p == 0 || q == 0 || k == 0 || l == 0 {
            return Err(Error::InvalidMove("indices are 1-based".into()));
        }
        InterchangeMove::new(p - 1, q - 1, k - 1, l - 1, sign)
    }

    pub fn negated(self) -> Self {
        InterchangeMove {
            sign: -self.sign,
            ..self
        }
    }

    /// The four affected cells with the value added to each.
    pub fn cells(&self) -> [(usize, usize, i8); 4] {
        let s = self.sign;
        [
            (self.p, self.k, s),
            (self.p, self.l, -s),
            (self.q, self.k, -s),
            (self.q, self.l, s),
        ]
    }

    fn check_order(&self, n: usize) -> Result<()> {
        let top = self.q.max(self.l);
        if top >= n {
            return Err(Error::IndexOutOfRange { index: top, n });
        }
        Ok(())
    }
}

impl fmt::Display for InterchangeMove {
    /// `(p,q,k,l,±)` with 1-based indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign > 0 { '+' } else { '-' };
        write!(f, "({},{},{},{},{s})", self.p + 1, self.q + 1, self.k + 1, self.l + 1)
    }
}

/// The `n x n` matrix of a move.
pub fn move_matrix(m: &InterchangeMove, n: usize) -> Result<Grid> {
    m.check_order(n)?;
    let mut g = Grid::zeros(n, n);
    for (i, j, v) in m.cells() {
        g.set(i, j, v);
    }
    Ok(g)
}

/// `a + m`, provided the sum is an ASM. Only the two rows and two columns
/// touched by the move are re-checked.
pub fn apply(a: &Asm, m: &InterchangeMove) -> Result<Asm> {
    m.check_order(a.n())?;
    let mut g = a.grid().clone();
    for (i, j, v) in m.cells() {
        let value = (g.get(i, j) + v) as i32;
        if !(-1..=1).contains(&value) {
            return Err(Error::EntryOutOfRange { row: i, col: j, value });
        }
        g.set(i, j, value as i8);
    }
    for line in [Line::Row(m.p), Line::Row(m.q), Line::Col(m.k), Line::Col(m.l)] {
        check_grid_line(&g, line).map_err(|e| Error::NotAsm(Box::new(e)))?;
    }
    Ok(Asm::new_unchecked(g))
}

/// An ordered list of moves, each applied to the result of the previous.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MoveSequence(pub Vec<InterchangeMove>);

impl MoveSequence {
    pub fn moves(&self) -> &[InterchangeMove] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The sequence that undoes this one.
    pub fn inverse(&self) -> MoveSequence {
        MoveSequence(self.0.iter().rev().map(|m| m.negated()).collect())
    }

    /// Every matrix visited, starting with `start` itself.
    pub fn trace(&self, start: &Asm) -> Result<Vec<Asm>> {
        let mut out = vec![start.clone()];
        for m in &self.0 {
            let next = apply(out.last().unwrap(), m)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn replay(&self, start: &Asm) -> Result<Asm> {
        self.0.iter().try_fold(start.clone(), |a, m| apply(&a, m))
    }
}
