//! Elementary ASM expansion and the families built on top of it.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::analysis::term_rank_lower_bound;
use crate::error::{Error, Result};
use crate::model::{validate, Asm, Grid};

/// An ASM together with the positions (0-based, ascending) of the rows and
/// columns of the expanded matrix inside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub asm: Asm,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

const ROW: usize = 0;
const COL: usize = 1;

enum Place {
    Front,
    Before(usize),
    After(usize),
}

/// Line orders by id; ids `0..k` (rows) and `0..l` (columns) are the originals.
struct Layout {
    order: [Vec<usize>; 2],
    next: [usize; 2],
    entries: HashMap<(usize, usize), i8>,
}

impl Layout {
    fn insert(&mut self, axis: usize, place: Place) -> usize {
        let id = self.next[axis];
        self.next[axis] += 1;
        let order = &mut self.order[axis];
        let at = match place {
            Place::Front => 0,
            Place::Before(x) => order.iter().position(|&v| v == x).unwrap(),
            Place::After(x) => order.iter().position(|&v| v == x).unwrap() + 1,
        };
        order.insert(at, id);
        id
    }

    fn put(&mut self, axis: usize, line: usize, perp: usize, v: i8) {
        let key = if axis == ROW { (line, perp) } else { (perp, line) };
        self.entries.insert(key, v);
    }

    /// Makes one original line alternate, starting and ending with +1, by
    /// inserting perpendicular lines (and, for two adjacent +1s, a pair of
    /// parallel lines) around its nonzeros `seq = [(perp id, value)]`.
    fn fix_line(&mut self, axis: usize, line: usize, seq: &[(usize, i8)]) {
        let perp = 1 - axis;
        let Some((&(first, first_v), &(last, last_v))) = seq.first().zip(seq.last()) else {
            let c = self.insert(perp, Place::Front);
            self.put(axis, line, c, 1);
            return;
        };
        if first_v < 0 {
            let c = self.insert(perp, Place::Before(first));
            self.put(axis, line, c, 1);
        }
        for w in seq.windows(2) {
            match (w[0].1, w[1].1) {
                (-1, -1) => {
                    let c = self.insert(perp, Place::After(w[0].0));
                    self.put(axis, line, c, 1);
                }
                (1, 1) => {
                    let c = self.insert(perp, Place::After(w[0].0));
                    self.put(axis, line, c, -1);
                    let above = self.insert(axis, Place::Before(line));
                    let below = self.insert(axis, Place::After(line));
                    self.put(axis, above, c, 1);
                    self.put(axis, below, c, 1);
                }
                _ => {}
            }
        }
        if last_v < 0 {
            let c = self.insert(perp, Place::After(last));
            self.put(axis, line, c, 1);
        }
    }
}

/// Embeds `b` as a submatrix of an ASM by inserting new lines: rows of `b`
/// are repaired top to bottom, then columns left to right. New lines go
/// immediately next to the entries they repair (left/above first; a fully
/// zero line gets its partner at the very front).
pub fn elementary_expansion(b: &Grid) -> Expansion {
    let (k, l) = (b.rows(), b.cols());
    let mut layout = Layout {
        order: [(0..k).collect(), (0..l).collect()],
        next: [k, l],
        entries: b.nonzeros().map(|(i, j, v)| ((i, j), v)).collect(),
    };
    for i in 0..k {
        let seq: Vec<(usize, i8)> = b.nonzeros().filter(|e| e.0 == i).map(|e| (e.1, e.2)).collect();
        layout.fix_line(ROW, i, &seq);
    }
    for j in 0..l {
        let seq: Vec<(usize, i8)> = (0..k).map(|i| (i, b.get(i, j))).filter(|e| e.1 != 0).collect();
        layout.fix_line(COL, j, &seq);
    }

    let (n_rows, n_cols) = (layout.order[ROW].len(), layout.order[COL].len());
    let mut pos = [vec![0; layout.next[ROW]], vec![0; layout.next[COL]]];
    for axis in [ROW, COL] {
        for (p, &id) in layout.order[axis].iter().enumerate() {
            pos[axis][id] = p;
        }
    }
    let mut g = Grid::zeros(n_rows, n_cols);
    for (&(r, c), &v) in &layout.entries {
        g.set(pos[ROW][r], pos[COL][c], v);
    }
    let asm = validate(g).expect("elementary expansion yields an ASM");
    Expansion {
        asm,
        rows: pos[ROW][..k].to_vec(),
        cols: pos[COL][..l].to_vec(),
    }
}

/// Signs read around an even cycle `R0 - C0 - R1 - C1 - ... - R0` of a
/// bipartite graph, alternating row and column vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSigns(Vec<i8>);

impl CycleSigns {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.len() < 4 || signs.len() % 2 == 1 {
            return Err(Error::BadCycle(signs.len()));
        }
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::BadCycleSign);
        }
        Ok(CycleSigns(signs))
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    /// The `m x m` signed biadjacency matrix of the bare cycle.
    pub fn core(&self) -> Grid {
        let m = self.0.len() / 2;
        let mut g = Grid::zeros(m, m);
        for i in 0..m {
            g.set(i, i, self.0[2 * i]);
            g.set((i + 1) % m, i, self.0[2 * i + 1]);
        }
        g
    }
}

/// A basic unicyclic ASM grown from a signed even cycle.
///
/// At each cycle vertex, two positive cycle edges get a negative edge to a
/// new vertex carrying two positive pendant edges; mixed signs get one
/// positive pendant; two negative edges get three positive pendants. This
/// is realized by elementary expansion of the cycle's biadjacency matrix.
/// `seed` shuffles the rows and columns of that matrix, which yields a
/// different realization of the same graph.
pub fn basic_unicyclic(cycle: &CycleSigns, seed: Option<u64>) -> Asm {
    let core = cycle.core();
    let core = match seed {
        None => core,
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut rows: Vec<usize> = (0..core.rows()).collect();
            let mut cols = rows.clone();
            rows.shuffle(&mut rng);
            cols.shuffle(&mut rng);
            core.permute(&rows, &cols)
        }
    };
    elementary_expansion(&core).asm
}

/// An `n x n` ASM whose term rank equals the lower bound `⌈2√(n+1) − 2⌉`.
///
/// With `t` the bound, the core is `k x k` (`t = 2k`) or `k x (k+1)`
/// (`t = 2k+1`), filled row-major with `n - t` entries `-1`; expanding it
/// adds exactly `n - t` lines in each direction and every nonzero stays in
/// the core's rows and columns.
pub fn min_term_rank_asm(n: usize) -> Asm {
    assert!(n >= 1, "order must be positive");
    if n == 1 {
        return Asm::identity(1);
    }
    let t = term_rank_lower_bound(n);
    let k = t / 2;
    let width = if t.is_multiple_of(2) { k } else { k + 1 };
    let q = n - t;
    debug_assert!(q <= k * width);
    let mut core = Grid::zeros(k, width);
    for cell in 0..q {
        core.set(cell / width, cell % width, -1);
    }
    let asm = elementary_expansion(&core).asm;
    debug_assert_eq!(asm.n(), n);
    asm
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_negative_expands_to_d3() {
        let b = Grid::from_rows(&[[-1]]).unwrap();
        let e = elementary_expansion(&b);
        assert_eq!(e.asm, Asm::from_rows(&[[0, 1, 0], [1, -1, 1], [0, 1, 0]]).unwrap());
        assert_eq!((e.rows, e.cols), (vec![1], vec![1]));
    }

    #[test]
    fn asm_input_is_unchanged() {
        let b = Grid::identity(1);
        let e = elementary_expansion(&b);
        assert_eq!(e.asm, Asm::identity(1));
        let d3 = Grid::from_rows(&[[0, 1, 0], [1, -1, 1], [0, 1, 0]]).unwrap();
        assert_eq!(elementary_expansion(&d3).asm.grid(), &d3);
    }

    #[test]
    fn adjacent_pluses_add_three_lines() {
        let b = Grid::from_rows(&[[1, 1]]).unwrap();
        let e = elementary_expansion(&b);
        assert_eq!(e.asm.n(), 3);
        assert_eq!(e.asm.grid().submatrix(&e.rows, &e.cols), b);
    }

    #[test]
    fn fourteen_from_three_by_three_core() {
        let b = Grid::from_rows(&[[-1, -1, -1], [-1, -1, -1], [-1, -1, 0]]).unwrap();
        let e = elementary_expansion(&b);
        assert_eq!(e.asm.n(), 14);
        assert_eq!(e.asm.grid().submatrix(&e.rows, &e.cols), b);
    }

    #[test]
    fn cycle_validation() {
        assert_eq!(CycleSigns::new(vec![1, -1]), Err(Error::BadCycle(2)));
        assert_eq!(CycleSigns::new(vec![1, -1, 1]), Err(Error::BadCycle(3)));
        assert_eq!(CycleSigns::new(vec![1, 0, 1, 1]), Err(Error::BadCycleSign));
    }

    #[test]
    fn unicyclic_orders() {
        let alt = CycleSigns::new(vec![1, -1, 1, -1, 1, -1]).unwrap();
        let a = basic_unicyclic(&alt, None);
        assert_eq!((a.n(), a.sigma()), (6, 12));
        let mixed = CycleSigns::new(vec![1, 1, -1, 1, -1, -1]).unwrap();
        let b = basic_unicyclic(&mixed, None);
        assert_eq!((b.n(), b.sigma()), (8, 16));
        let four = CycleSigns::new(vec![1, -1, 1, -1]).unwrap();
        assert_eq!(basic_unicyclic(&four, None).sigma(), 8);
        for seed in 0..10 {
            let c = basic_unicyclic(&mixed, Some(seed));
            assert_eq!((c.n(), c.sigma()), (8, 16));
        }
    }

    #[test]
    fn min_term_rank_small_orders() {
        assert_eq!(min_term_rank_asm(1), Asm::identity(1));
        assert_eq!(min_term_rank_asm(2), Asm::back_identity(2));
        assert_eq!(
            min_term_rank_asm(3),
            Asm::from_rows(&[[0, 1, 0], [1, -1, 1], [0, 1, 0]]).unwrap()
        );
        assert_eq!(min_term_rank_asm(14).n(), 14);
    }
}
