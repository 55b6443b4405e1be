use crate::model::Asm;
use crate::transforms::moves::{apply, InterchangeMove, MoveSequence};

/// The move that cancels the first `-1` (top row first, then leftmost).
///
/// With `(q, l)` that entry, rows above `q` hold no `-1`, so column `l`
/// has a single `+1` above it at some row `p`; the nearest nonzero to its
/// left in row `q` is a `+1` at some column `k`. Adding `T_{p,q;k,l}`
/// clears `(p, l)`, `(q, k)` and `(q, l)` and sets `(p, k)`.
fn cancel_first_negative(a: &Asm) -> Option<InterchangeMove> {
    let (q, l, _) = a.grid().nonzeros().find(|&(_, _, v)| v < 0)?;
    let p = (0..q).find(|&i| a.get(i, l) != 0).expect("a +1 above the -1");
    let k = (0..l).rev().find(|&j| a.get(q, j) != 0).expect("a +1 left of the -1");
    Some(InterchangeMove { p, q, k, l, sign: 1 })
}

/// Moves that take `a` to the identity: first each `-1` is cancelled,
/// then the remaining permutation matrix is selection-sorted row by row.
pub fn moves_to_identity(a: &Asm) -> MoveSequence {
    let mut cur = a.clone();
    let mut moves = Vec::new();
    while let Some(m) = cancel_first_negative(&cur) {
        cur = apply(&cur, &m).expect("cancelling move yields an ASM");
        moves.push(m);
    }
    let n = cur.n();
    for i in 0..n {
        let c = (0..n).find(|&j| cur.get(i, j) == 1).unwrap();
        if c == i {
            continue;
        }
        let j = (i + 1..n).find(|&r| cur.get(r, i) == 1).unwrap();
        let m = InterchangeMove {
            p: i,
            q: j,
            k: i,
            l: c,
            sign: 1,
        };
        cur = apply(&cur, &m).expect("transposition yields a permutation matrix");
        moves.push(m);
    }
    debug_assert_eq!(cur, Asm::identity(n));
    MoveSequence(moves)
}

/// A sequence of ASM interchanges leading from the identity to `a`.
pub fn reduce_to_identity(a: &Asm) -> MoveSequence {
    moves_to_identity(a).inverse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::diamond;

    fn mv(p: usize, q: usize, k: usize, l: usize, s: i8) -> InterchangeMove {
        InterchangeMove::from_one_based(p, q, k, l, s).unwrap()
    }

    #[test]
    fn d3_takes_two_moves() {
        let d3 = diamond(3, false);
        let forward = moves_to_identity(&d3);
        assert_eq!(forward.moves(), &[mv(1, 2, 1, 2, 1), mv(2, 3, 2, 3, 1)]);
        let s = reduce_to_identity(&d3);
        assert_eq!(s.replay(&Asm::identity(3)).unwrap(), d3);
    }

    #[test]
    fn identity_needs_nothing() {
        assert!(reduce_to_identity(&Asm::identity(5)).is_empty());
    }

    #[test]
    fn larger_diamonds_round_trip() {
        for n in 1..=9 {
            let d = diamond(n, false);
            let s = reduce_to_identity(&d);
            assert_eq!(s.replay(&Asm::identity(n)).unwrap(), d);
            assert!(s.len() <= d.negative_count() + n * (n - 1) / 2);
        }
    }
}
