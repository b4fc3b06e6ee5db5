mod common;

use common::*;
use proptest::prelude::*;
use stanley_core::bounds::{
    bound_report, lb_generators, ub_combined, variable_extension_interval, BoundValue, PairOrder,
};
use stanley_core::poset::sdepth_exact;
use stanley_core::{Monomial, MonomialIdeal, QuotientModule, Sdepth};

fn sd(i: &MonomialIdeal) -> usize {
    sdepth_exact(&QuotientModule::ideal(i.clone())).finite().unwrap()
}

/// Irreducible ideal generated by `x_j^{e_j}` for the given `(j, e_j)`.
fn irreducible(n: usize, powers: &[(usize, u32)]) -> MonomialIdeal {
    MonomialIdeal::minimalize(
        n,
        powers.iter().map(|&(j, e)| {
            let mut v = vec![0; n];
            v[j] = e;
            Monomial::new(v).unwrap()
        }),
    )
    .unwrap()
}

fn block(n: usize, range: std::ops::Range<usize>) -> MonomialIdeal {
    irreducible(n, &range.map(|j| (j, 1)).collect::<Vec<_>>())
}

fn with_free_var(i: &MonomialIdeal) -> MonomialIdeal {
    let n = i.n() + 1;
    let x = MonomialIdeal::minimalize(n, [Monomial::var(n - 1, n).unwrap()]).unwrap();
    i.extend(1).unwrap().sum(&x).unwrap()
}

/// Primary ideal on a nonempty support: pure powers of every support
/// variable plus a few mixed generators inside the support.
fn primary(n: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    (
        1u64..(1 << n),
        proptest::collection::vec(1..=max_exp, n),
        proptest::collection::vec(proptest::collection::vec(0..=max_exp, n), 0..=2),
    )
        .prop_map(move |(mask, powers, extra)| {
            let inside = |j: usize| mask >> j & 1 == 1;
            let pure = (0..n).filter(|&j| inside(j)).map(|j| {
                let mut v = vec![0; n];
                v[j] = powers[j];
                Monomial::new(v).unwrap()
            });
            let mixed = extra.into_iter().map(|mut v| {
                for (j, e) in v.iter_mut().enumerate() {
                    if !inside(j) {
                        *e = 0;
                    }
                }
                Monomial::new(v).unwrap()
            });
            let gens: Vec<Monomial> = pure.chain(mixed).filter(|m| !m.is_one()).collect();
            MonomialIdeal::minimalize(n, gens).unwrap()
        })
}

fn squarefree_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (2usize..=6).prop_flat_map(|n| (primary(n, 1), primary(n, 1)))
}

fn primary_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (2usize..=5).prop_flat_map(|n| (primary(n, 3), primary(n, 3)))
}

fn assert_sandwich(q: &MonomialIdeal, q2: &MonomialIdeal) -> Result<(), TestCaseError> {
    let report = bound_report(q, q2, true).unwrap();
    let exact = report.exact.unwrap();
    prop_assert!(report.violations().is_empty(), "{:?}", report.violations());
    let e = exact.finite().unwrap();
    if let Some(lo) = report.best_lower() {
        prop_assert!(lo <= e);
    }
    if let Some(hi) = report.best_upper() {
        prop_assert!(e <= hi);
    }
    prop_assert!(lb_generators(&report.intersection).unwrap() <= e);
    Ok(())
}

#[test]
fn odd_disjoint_irreducible_is_half_n() {
    for n in [3usize, 5, 7] {
        for t in 1..n {
            let q = block(n, 0..t);
            let q2 = block(n, t..n);
            assert_eq!(sd(&q.intersect(&q2).unwrap()), n.div_ceil(2), "n={n} t={t}");
        }
    }
    // non-squarefree irreducible inputs
    let q = irreducible(5, &[(0, 2), (1, 1)]);
    let q2 = irreducible(5, &[(2, 1), (3, 3), (4, 1)]);
    assert_eq!(sd(&q.intersect(&q2).unwrap()), 3);
}

#[test]
fn even_disjoint_irreducible() {
    for n in [2usize, 4, 6] {
        for t in 1..n {
            let q = block(n, 0..t);
            let q2 = block(n, t..n);
            let s = sd(&q.intersect(&q2).unwrap());
            if t % 2 == 1 {
                assert_eq!(s, n / 2 + 1, "n={n} t={t}");
            } else {
                assert!(s == n / 2 || s == n / 2 + 1, "n={n} t={t}: {s}");
            }
            let report = bound_report(&q, &q2, false).unwrap();
            if let Some(e) = report.entry("even_disjoint_range", PairOrder::Given) {
                let Some(BoundValue::Range(lo, hi)) = e.value else { panic!("{e:?}") };
                assert!(lo <= s && s <= hi);
            }
        }
    }
}

#[test]
fn combined_bound_is_attained_for_disjoint_odd() {
    for n in [5usize, 7] {
        for t in 2..n {
            for p in t + 1..=n {
                let q = block(n, 0..t);
                let q2 = block(n, t..p);
                let report = bound_report(&q, &q2, false).unwrap();
                let shape = report.shape;
                let bound = ub_combined(shape).unwrap();
                assert_eq!(sd(&report.intersection), bound, "n={n} t={t} p={p}");
                let exact = report.entry("combined_exact", PairOrder::Given).unwrap();
                assert_eq!(exact.value, Some(BoundValue::Int(bound)));
            }
        }
    }
}

#[test]
fn complete_intersection_free_variable() {
    // m generators with disjoint supports: adding x_{n+1} keeps sdepth for m
    // odd and raises it for m even
    for (gens, n) in [
        (vec![vec![1, 0, 0], vec![0, 1, 0]], 3),
        (vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], 3),
        (vec![vec![1, 0, 0, 1], vec![0, 2, 0, 0]], 4),
        (vec![vec![1, 0, 0, 1], vec![0, 1, 0, 0], vec![0, 0, 1, 0]], 4),
    ] {
        let refs: Vec<&[u32]> = gens.iter().map(|g| g.as_slice()).collect();
        let i = ideal(n, &refs);
        let s = sd(&i);
        let wide = sd(&with_free_var(&i));
        let m = gens.len();
        assert_eq!(wide, if m % 2 == 1 { s } else { s + 1 }, "{i:?}");
    }
    // maximal ideals grow through the iterated interval
    for n in 1..=4usize {
        let mut i = block(n, 0..n);
        let mut s = sd(&i);
        for r in 1..=2 {
            i = with_free_var(&i);
            let next = sd(&i);
            let (lo, hi) = variable_extension_interval(s);
            assert!(lo <= next && next <= hi);
            assert_eq!(next, (n + r).div_ceil(2));
            s = next;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sandwich_squarefree((q, q2) in squarefree_pair()) {
        assert_sandwich(&q, &q2)?;
    }

    #[test]
    fn sandwich_primary((q, q2) in primary_pair()) {
        assert_sandwich(&q, &q2)?;
    }

    #[test]
    fn free_variable_extension(i in (1usize..=4).prop_flat_map(|n| ideal_in(n, 4, 3))) {
        prop_assume!(!i.is_zero() && !i.is_unit());
        let s = sd(&i);
        let wide = sd(&with_free_var(&i));
        let (lo, hi) = variable_extension_interval(s);
        prop_assert!(lo <= wide && wide <= hi, "{} -> {}", s, wide);
    }

    #[test]
    fn generator_count_lower_bound(i in (1usize..=4).prop_flat_map(|n| ideal_in(n, 4, 3))) {
        prop_assume!(!i.is_zero());
        let exact = sdepth_exact(&QuotientModule::ideal(i.clone()));
        prop_assert!(Sdepth::Finite(lb_generators(&i).unwrap()) <= exact);
    }
}
