//! ASM extensions and maximality.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::model::{Asm, Grid, Permutation};
use crate::transforms::moves::{apply, InterchangeMove};

/// Whether `b` differs from `a` but agrees with it on every nonzero of `a`.
pub fn is_extension(b: &Asm, a: &Asm) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::OrderMismatch {
            left: b.n(),
            right: a.n(),
        });
    }
    Ok(a != b && a.grid().nonzeros().all(|(i, j, v)| b.get(i, j) == v))
}

/// Moves on four zeros of `a` whose addition gives an ASM, in order of
/// `(p, q, k, l)` with `+` tried before `-`.
pub fn elementary_extensions(a: &Asm) -> Vec<InterchangeMove> {
    let mut out = Vec::new();
    scan(a, |m| {
        out.push(m);
        true
    });
    out
}

/// Visits every elementary extension until `f` returns false.
fn scan(a: &Asm, mut f: impl FnMut(InterchangeMove) -> bool) {
    let n = a.n();
    for p in 0..n {
        for q in p + 1..n {
            for k in 0..n {
                if a.get(p, k) != 0 || a.get(q, k) != 0 {
                    continue;
                }
                for l in k + 1..n {
                    if a.get(p, l) != 0 || a.get(q, l) != 0 {
                        continue;
                    }
                    for sign in [1, -1] {
                        let m = InterchangeMove { p, q, k, l, sign };
                        if apply(a, &m).is_ok() && !f(m) {
                            return;
                        }
                    }
                }
            }
        }
    }
}

/// True iff `a` has no ASM extension; it suffices to look for an
/// elementary one.
pub fn is_maximal(a: &Asm) -> bool {
    let mut found = false;
    scan(a, |_| {
        found = true;
        false
    });
    !found
}

/// Some `(p, q, k, l)` (0-based) showing that the permutation matrix of
/// `pi` has an elementary extension, read directly off `pi`.
pub fn permutation_extension_witness(pi: &Permutation) -> Option<(usize, usize, usize, usize)> {
    let n = pi.len();
    let inv = pi.inverse();
    for p in 0..n {
        for q in p + 1..n {
            let (pp, pq) = (pi.apply(p), pi.apply(q));
            for k in 0..n {
                for l in k + 1..n {
                    let (ik, il) = (inv.apply(k), inv.apply(l));
                    let first = pp > l && pq < k && ik > q && il < p;
                    let second = pp < k && pq > l && ik < p && il > q;
                    if first || second {
                        return Some((p, q, k, l));
                    }
                }
            }
        }
    }
    None
}

pub fn permutation_is_maximal(pi: &Permutation) -> bool {
    permutation_extension_witness(pi).is_none()
}

/// Splits `b - a` into alternating cycles.
///
/// Inside every row, the nonzeros of `b - a` lying between two consecutive
/// nonzeros of `a` (or before the first, or after the last) come in an even
/// run with alternating signs; pairing them off left to right gives the
/// horizontal edges. Columns give the vertical edges the same way. Every
/// cell then has one edge of each kind, so the edges form disjoint cycles.
/// The cycles are returned ordered by their first cell in row-major order.
pub fn extension_cycles(a: &Asm, b: &Asm) -> Result<Vec<Grid>> {
    if !is_extension(b, a)? {
        return Err(Error::NotAnExtension);
    }
    let n = a.n();
    let e = b.grid().checked_sub(a.grid())?;
    let cells: Vec<(usize, usize)> = e.nonzeros().map(|(i, j, _)| (i, j)).collect();
    let index: BTreeMap<(usize, usize), usize> = cells.iter().enumerate().map(|(t, &c)| (c, t)).collect();
    let mut parent: Vec<usize> = (0..cells.len()).collect();

    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }

    for transpose in [false, true] {
        for line in 0..n {
            let at = |t: usize| if transpose { (t, line) } else { (line, t) };
            let mut run: Vec<usize> = Vec::new();
            for t in 0..=n {
                let boundary = t == n || {
                    let (i, j) = at(t);
                    a.get(i, j) != 0
                };
                if boundary {
                    if run.len() % 2 == 1 {
                        return Err(Error::NotAnExtension);
                    }
                    for pair in run.chunks(2) {
                        let (x, y) = (find(&mut parent, pair[0]), find(&mut parent, pair[1]));
                        parent[x] = y;
                    }
                    run.clear();
                } else if let Some(&id) = index.get(&at(t)) {
                    run.push(id);
                }
            }
        }
    }

    let mut groups: BTreeMap<usize, Grid> = BTreeMap::new();
    let mut order: Vec<usize> = Vec::new();
    for (t, &(i, j)) in cells.iter().enumerate() {
        let root = find(&mut parent, t);
        let g = groups.entry(root).or_insert_with(|| {
            order.push(root);
            Grid::zeros(n, n)
        });
        g.set(i, j, e.get(i, j));
    }
    Ok(order.into_iter().map(|r| groups.remove(&r).unwrap()).collect())
}
