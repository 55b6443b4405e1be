//! Attaching `D_3` to an ASM at one of its `+1` entries.

use crate::error::{Error, Result};
use crate::model::{validate, Asm, Grid};

const D3: [(usize, usize, i8); 5] = [(0, 1, 1), (1, 0, 1), (1, 1, -1), (1, 2, 1), (2, 1, 1)];

/// The outer `+1` of `D_3` that is glued onto the chosen `+1` of the host.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum D3Anchor {
    /// Row 1, column 2.
    Top,
    /// Row 2, column 1.
    #[default]
    Left,
    /// Row 2, column 3.
    Right,
    /// Row 3, column 2.
    Bottom,
}

impl D3Anchor {
    fn position(self) -> (usize, usize) {
        match self {
            D3Anchor::Top => (0, 1),
            D3Anchor::Left => (1, 0),
            D3Anchor::Right => (1, 2),
            D3Anchor::Bottom => (2, 1),
        }
    }
}

impl std::str::FromStr for D3Anchor {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "top" => Ok(D3Anchor::Top),
            "left" => Ok(D3Anchor::Left),
            "right" => Ok(D3Anchor::Right),
            "bottom" => Ok(D3Anchor::Bottom),
            other => Err(format!("unknown anchor '{other}'")),
        }
    }
}

/// Final positions of the host's lines once two new lines occupy `slots`.
fn host_positions(n: usize, slots: (usize, usize), what: &str) -> Result<Vec<usize>> {
    let (a, b) = slots;
    if a >= b || b >= n + 2 {
        return Err(Error::BadSlots(format!(
            "new {what} slots {} and {} must be increasing and at most {}",
            a + 1,
            b + 1,
            n + 2
        )));
    }
    Ok((0..n + 2).filter(|&x| x != a && x != b).collect())
}

/// Sorted triple of final positions, checking the host line sits at `want`.
fn triple(host: usize, slots: (usize, usize), want: usize, what: &str) -> Result<[usize; 3]> {
    let mut t = [host, slots.0, slots.1];
    t.sort_unstable();
    if t[want] != host {
        return Err(Error::BadSlots(format!(
            "the new {what} must keep the order of D_3 around the shared entry"
        )));
    }
    Ok(t)
}

/// `A * D_3`: inserts two rows at the final (0-based) positions `new_rows`
/// and two columns at `new_cols`, and fills them with `D_3` so that its
/// `anchor` entry coincides with the `+1` of `a` at `at`.
pub fn attach_d3(
    a: &Asm,
    at: (usize, usize),
    new_rows: (usize, usize),
    new_cols: (usize, usize),
    anchor: D3Anchor,
) -> Result<Asm> {
    let n = a.n();
    if at.0 >= n || at.1 >= n {
        return Err(Error::IndexOutOfRange {
            index: at.0.max(at.1) + 1,
            n,
        });
    }
    if a.get(at.0, at.1) != 1 {
        return Err(Error::NotAPlusOne {
            row: at.0 + 1,
            col: at.1 + 1,
        });
    }
    let rows = host_positions(n, new_rows, "row")?;
    let cols = host_positions(n, new_cols, "column")?;
    let (ar, ac) = anchor.position();
    let tr = triple(rows[at.0], new_rows, ar, "rows")?;
    let tc = triple(cols[at.1], new_cols, ac, "columns")?;

    let mut g = Grid::zeros(n + 2, n + 2);
    for (i, j, v) in a.grid().nonzeros() {
        g.set(rows[i], cols[j], v);
    }
    for (i, j, v) in D3 {
        g.set(tr[i], tc[j], v);
    }
    validate(g).map_err(|e| Error::BadSlots(format!("the new lines break the alternation of the host: {e}")))
}
