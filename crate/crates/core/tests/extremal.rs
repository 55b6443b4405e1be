//! Exhaustive checks of the extremal statements at small orders.

use asm_core::analysis::{
    alpha, beta, components, is_connected, min_connected_nonzeros, signed_graph, term_rank, term_rank_lower_bound,
};
use asm_core::enumeration::{count, enumerate, extremal_scan, Direction, Filter, Statistic};
use asm_core::generators::{basic_unicyclic, diamond, hollowed_diamond, min_term_rank_asm, CycleSigns, HollowVariant};
use asm_core::model::{asm_count_formula, kn};
use asm_core::Asm;

fn asms(n: usize) -> Vec<Asm> {
    enumerate(n, Filter::none()).unwrap().collect()
}

#[test]
fn formula_matches_parallel_count() {
    for n in 1..=6 {
        let c = count(n, Filter::none()).unwrap();
        assert_eq!(asm_count_formula(n), c.into());
    }
}

#[test]
fn term_rank_never_below_bound() {
    for n in 1..=6 {
        assert!(asms(n).iter().all(|a| term_rank(a) >= term_rank_lower_bound(n)));
    }
}

#[test]
fn connected_lower_bounds() {
    for n in 1..=6 {
        let Ok(min) = min_connected_nonzeros(n) else { continue };
        for a in asms(n).into_iter().filter(is_connected) {
            assert!(a.sigma() >= min);
        }
    }
    assert!(asms(2).into_iter().all(|a| !is_connected(&a)));
}

#[test]
fn permutation_matrices_fall_apart_completely() {
    for n in 1..=5 {
        for a in asms(n).into_iter().filter(Asm::is_permutation) {
            assert_eq!(components(&a).len(), n);
        }
    }
}

#[test]
fn diamond_is_the_densest() {
    for n in 1..=6 {
        let e = extremal_scan(n, Filter::none(), Statistic::Sigma, Direction::Max)
            .unwrap()
            .unwrap();
        assert_eq!(e.value, alpha(n).unwrap());
        let mut want = vec![diamond(n, false), diamond(n, true)];
        want.sort();
        want.dedup();
        let mut got = e.attainers.clone();
        got.sort();
        assert_eq!(got, want);
    }
    for n in 1..=12 {
        let d = diamond(n, false);
        assert_eq!(d.pattern().row_sums(), kn(n));
        assert_eq!(d.pattern().col_sums(), kn(n));
        assert!(d.is_symmetric());
        assert_eq!(d.sigma(), alpha(n).unwrap());
    }
    assert_eq!(diamond(7, false).dihedral_orbit().len(), 1);
    assert_eq!(Asm::identity(3).dihedral_orbit().len(), 2);
}

#[test]
fn symmetric_zero_diagonal_bounds() {
    for n in [4, 6] {
        for a in enumerate(n, Filter::none().symmetric().zero_diagonal()).unwrap() {
            assert!(a.sigma() <= beta(n).unwrap());
            // The 2x2 window on rows i-1, i and columns i, i+1 holds a
            // zero besides the diagonal entry.
            for i in 1..n - 1 {
                let others = [a.get(i - 1, i), a.get(i - 1, i + 1), a.get(i, i + 1)];
                assert!(others.contains(&0), "{a}");
            }
        }
    }
    for n in [3, 5, 7] {
        assert_eq!(
            enumerate(n, Filter::none().symmetric().zero_diagonal())
                .unwrap()
                .count(),
            0
        );
    }
}

#[test]
fn eight_by_eight_symmetric_scan() {
    let e = extremal_scan(
        8,
        Filter::none().symmetric().zero_diagonal(),
        Statistic::Sigma,
        Direction::Max,
    )
    .unwrap()
    .unwrap();
    assert_eq!(e.value, beta(8).unwrap());
    assert!(e
        .attainers
        .contains(&hollowed_diamond(8, HollowVariant::Type1).unwrap()));
}

#[test]
fn loopy_graph_of_hollowed_diamond() {
    let g = signed_graph(&hollowed_diamond(4, HollowVariant::Type1).unwrap()).unwrap();
    assert_eq!(g.loops().count(), 0);
    assert_eq!(g.edge_count(), 2);
    let d = signed_graph(&diamond(5, false)).unwrap();
    assert_eq!(d.loops().count(), 3);
}

#[test]
fn unicyclic_constructions_are_minimal() {
    let patterns: [&[i8]; 4] = [
        &[1, -1, 1, -1],
        &[1, 1, 1, 1],
        &[-1, -1, -1, -1, -1, -1],
        &[1, 1, -1, 1, -1, -1],
    ];
    for signs in patterns {
        let a = basic_unicyclic(&CycleSigns::new(signs.to_vec()).unwrap(), Some(7));
        assert!(is_connected(&a));
        assert_eq!(a.sigma(), min_connected_nonzeros(a.n()).unwrap());
    }
}

#[test]
fn min_term_rank_witnesses_have_all_orders() {
    for n in 1..=60 {
        let a = min_term_rank_asm(n);
        assert_eq!((a.n(), term_rank(&a)), (n, term_rank_lower_bound(n)));
    }
}
