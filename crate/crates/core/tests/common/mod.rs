#![allow(dead_code)]

use proptest::prelude::*;
use stanley_core::{Monomial, MonomialIdeal, QuotientModule};

pub fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(n, gens).unwrap()
}

pub fn monomial_in(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_exp, n).prop_map(|e| Monomial::new(e).unwrap())
}

/// Ideals in `n` variables with up to `max_gens` generators.
pub fn ideal_in(n: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    proptest::collection::vec(monomial_in(n, max_exp), 0..=max_gens)
        .prop_map(move |g| MonomialIdeal::minimalize(n, g).unwrap())
}

pub fn ideal_pair(max_n: usize, max_exp: u32) -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1..=max_n).prop_flat_map(move |n| (ideal_in(n, 4, max_exp), ideal_in(n, 4, max_exp)))
}

/// Pairs `I ⊆ J`: generators of `I` are lcms of random monomials with
/// generators of `J`.
pub fn nested_pair(max_n: usize, max_exp: u32) -> impl Strategy<Value = QuotientModule> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            (
                proptest::collection::vec(monomial_in(n, max_exp), 1..=3),
                proptest::collection::vec((monomial_in(n, max_exp), any::<prop::sample::Index>()), 0..=3),
                Just(n),
            )
        })
        .prop_map(|(jg, ig, n)| {
            let j = MonomialIdeal::minimalize(n, jg).unwrap();
            let i = MonomialIdeal::minimalize(
                n,
                ig.into_iter().map(|(m, idx)| m.lcm(idx.get(j.gens()))),
            )
            .unwrap();
            QuotientModule::new(j, i).unwrap()
        })
}

/// All exponent vectors of the box `[0, ceil]^n`.
pub fn box_points(n: usize, ceil: u32) -> Vec<Monomial> {
    let mut out = vec![];
    let mut e = vec![0u32; n];
    loop {
        out.push(Monomial::new(e.clone()).unwrap());
        let Some(j) = (0..n).rev().find(|&j| e[j] < ceil) else {
            return out;
        };
        e[j] += 1;
        e[j + 1..].iter_mut().for_each(|x| *x = 0);
    }
}
