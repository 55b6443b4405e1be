//! Row-by-row generation of ASMs.
//!
//! After `i` rows every column has partial sum 0 or 1, so the state is a
//! bit set with `i` bits on. The next row may put `+1` only on a 0-column
//! and `-1` only on a 1-column, alternating `+ - + ... +`.

use crate::analysis::is_connected;
use crate::error::{Error, Result};
use crate::model::{Asm, Grid};

/// Partial column sums after `depth` rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ColumnState {
    n: usize,
    mask: u64,
    depth: usize,
}

impl ColumnState {
    pub fn initial(n: usize) -> ColumnState {
        assert!(n <= 64, "column state holds at most 64 columns");
        ColumnState { n, mask: 0, depth: 0 }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn bit(&self, j: usize) -> bool {
        self.mask >> j & 1 == 1
    }

    pub fn bits(&self) -> Vec<u8> {
        (0..self.n).map(|j| self.bit(j) as u8).collect()
    }

    pub fn is_final(&self) -> bool {
        self.depth == self.n
    }

    /// The state after appending `row`, which must be a legal next row.
    pub fn advance(&self, row: &[i8]) -> ColumnState {
        let mut mask = self.mask;
        for (j, &v) in row.iter().enumerate() {
            match v {
                1 => mask |= 1 << j,
                -1 => mask &= !(1 << j),
                _ => {}
            }
        }
        ColumnState {
            n: self.n,
            mask,
            depth: self.depth + 1,
        }
    }
}

/// Restrictions on enumerated matrices. `symmetric`, `zero_diagonal` and
/// `permutation` prune the search; `connected` is checked on full matrices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Filter {
    pub connected: bool,
    pub symmetric: bool,
    pub zero_diagonal: bool,
    pub permutation: bool,
}

impl Filter {
    pub fn none() -> Filter {
        Filter::default()
    }

    pub fn connected(mut self) -> Filter {
        self.connected = true;
        self
    }

    pub fn symmetric(mut self) -> Filter {
        self.symmetric = true;
        self
    }

    pub fn zero_diagonal(mut self) -> Filter {
        self.zero_diagonal = true;
        self
    }

    pub fn permutation(mut self) -> Filter {
        self.permutation = true;
        self
    }

    pub fn accepts(&self, a: &Asm) -> bool {
        (!self.connected || is_connected(a))
            && (!self.symmetric || a.is_symmetric())
            && (!self.zero_diagonal || a.has_zero_diagonal())
            && (!self.permutation || a.is_permutation())
    }
}

/// Order caps for exhaustive runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    pub unfiltered: usize,
    pub symmetric: usize,
    pub class: usize,
}

/// Overrides both enumeration caps.
pub const MAX_ORDER_ENV: &str = "ASM_MAX_ORDER";
/// Overrides the equivalence-class cap.
pub const MAX_CLASS_ORDER_ENV: &str = "ASM_MAX_CLASS_ORDER";

impl Default for Guards {
    fn default() -> Self {
        Guards {
            unfiltered: 7,
            symmetric: 8,
            class: 5,
        }
    }
}

impl Guards {
    /// Defaults, overridden by the environment variables when set.
    pub fn from_env() -> Guards {
        let read = |key: &str| std::env::var(key).ok().and_then(|v| v.trim().parse::<usize>().ok());
        let mut g = Guards::default();
        if let Some(cap) = read(MAX_ORDER_ENV) {
            g.unfiltered = cap;
            g.symmetric = cap;
        }
        if let Some(cap) = read(MAX_CLASS_ORDER_ENV) {
            g.class = cap;
        }
        g
    }

    pub fn cap_for(&self, filter: &Filter) -> usize {
        if filter.symmetric {
            self.symmetric
        } else {
            self.unfiltered
        }
    }

    pub fn check(&self, n: usize, filter: &Filter) -> Result<()> {
        let cap = self.cap_for(filter);
        if n > cap {
            return Err(Error::OrderTooLarge { n, cap });
        }
        Ok(())
    }
}

/// Legal next rows, in order `+1 < 0 < -1` per cell from the left.
fn next_rows(n: usize, state: &ColumnState, prefix: &[Vec<i8>], filter: &Filter) -> Vec<Vec<i8>> {
    let i = prefix.len();
    let mut out = Vec::new();
    let mut row = Vec::with_capacity(n);

    fn go(
        j: usize,
        sum: i8,
        ctx: (usize, usize, &ColumnState, &[Vec<i8>], &Filter),
        row: &mut Vec<i8>,
        out: &mut Vec<Vec<i8>>,
    ) {
        let (n, i, state, prefix, filter) = ctx;
        if j == n {
            if sum == 1 {
                out.push(row.clone());
            }
            return;
        }
        let forced = if filter.symmetric && j < i {
            Some(prefix[j][i])
        } else if filter.zero_diagonal && j == i {
            Some(0)
        } else {
            None
        };
        for v in [1i8, 0, -1] {
            if forced.is_some_and(|f| f != v) {
                continue;
            }
            let ok = match v {
                1 => sum == 0 && !state.bit(j),
                -1 => sum == 1 && state.bit(j) && !filter.permutation,
                _ => true,
            };
            if ok {
                row.push(v);
                go(j + 1, sum + v, ctx, row, out);
                row.pop();
            }
        }
    }

    go(0, 0, (n, i, state, prefix, filter), &mut row, &mut out);
    out
}

struct Frame {
    state: ColumnState,
    candidates: Vec<Vec<i8>>,
    next: usize,
}

/// Lazily yields every order-`n` ASM passing a filter, in row-lexicographic
/// order with `+1 < 0 < -1`.
pub struct AsmIter {
    n: usize,
    filter: Filter,
    rows: Vec<Vec<i8>>,
    base: usize,
    frames: Vec<Frame>,
}

impl AsmIter {
    /// Enumerates completions of fixed leading rows, which must be legal.
    pub(crate) fn from_prefix(n: usize, filter: Filter, prefix: Vec<Vec<i8>>) -> AsmIter {
        let state = prefix.iter().fold(ColumnState::initial(n), |s, r| s.advance(r));
        let candidates = if prefix.len() == n {
            Vec::new()
        } else {
            next_rows(n, &state, &prefix, &filter)
        };
        let base = prefix.len();
        AsmIter {
            n,
            filter,
            rows: prefix,
            base,
            frames: vec![Frame {
                state,
                candidates,
                next: 0,
            }],
        }
    }

    fn finish(&self) -> Option<Asm> {
        let g = Grid::from_rows(&self.rows).expect("rows are rectangular");
        let a = Asm::new_unchecked(g);
        self.filter.accepts(&a).then_some(a)
    }
}

impl Iterator for AsmIter {
    type Item = Asm;

    fn next(&mut self) -> Option<Asm> {
        if self.base == self.n {
            // A complete prefix is its own only completion.
            self.frames.pop()?;
            return self.finish();
        }
        loop {
            let frame = self.frames.last_mut()?;
            if frame.next == frame.candidates.len() {
                self.frames.pop();
                if self.rows.len() > self.base {
                    self.rows.pop();
                }
                continue;
            }
            let row = frame.candidates[frame.next].clone();
            frame.next += 1;
            let state = frame.state.advance(&row);
            self.rows.push(row);
            if state.is_final() {
                let out = self.finish();
                self.rows.pop();
                if out.is_some() {
                    return out;
                }
                continue;
            }
            let candidates = next_rows(self.n, &state, &self.rows, &self.filter);
            self.frames.push(Frame {
                state,
                candidates,
                next: 0,
            });
        }
    }
}

/// All order-`n` ASMs passing `filter`, subject to the caps in `guards`.
pub fn enumerate_with(n: usize, filter: Filter, guards: &Guards) -> Result<AsmIter> {
    if n == 0 {
        return Err(Error::BadOrder {
            n,
            reason: "order must be positive".into(),
        });
    }
    guards.check(n, &filter)?;
    Ok(AsmIter::from_prefix(n, filter, Vec::new()))
}

/// [`enumerate_with`] using [`Guards::from_env`].
pub fn enumerate(n: usize, filter: Filter) -> Result<AsmIter> {
    enumerate_with(n, filter, &Guards::from_env())
}

/// Legal prefixes of `depth` rows (fewer when `n` is smaller), in stream
/// order. Their subtrees partition the search space.
pub(crate) fn prefixes(n: usize, filter: &Filter, depth: usize) -> Vec<Vec<Vec<i8>>> {
    let mut out = vec![Vec::new()];
    for _ in 0..depth.min(n) {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Vec<i8>>| {
                let state = prefix.iter().fold(ColumnState::initial(n), |s, r| s.advance(r));
                next_rows(n, &state, &prefix, filter).into_iter().map(move |row| {
                    let mut p = prefix.clone();
                    p.push(row);
                    p
                })
            })
            .collect();
    }
    out
}
