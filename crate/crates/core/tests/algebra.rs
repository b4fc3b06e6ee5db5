mod common;

use common::*;
use proptest::prelude::*;
use stanley_core::{Monomial, MonomialIdeal, QuotientModule};

/// Minimal vertex covers by enumeration of every variable subset.
fn brute_force_primes(i: &MonomialIdeal) -> Vec<u64> {
    let n = i.n();
    let edges: Vec<u64> = i.gens().iter().map(Monomial::support).collect();
    let covers: Vec<u64> = (0u64..1 << n)
        .filter(|&c| edges.iter().all(|&e| e & c != 0))
        .collect();
    let mut minimal: Vec<u64> = covers
        .iter()
        .copied()
        .filter(|&c| !covers.iter().any(|&d| d != c && d & c == d))
        .collect();
    minimal.sort_by_key(|&c| (c.count_ones(), c));
    minimal
}

#[test]
fn squarefree_generators_are_already_minimal() {
    // all-pairs divisibility scan
    let gens: [&[u32]; 4] = [&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]];
    let i = ideal(4, &gens);
    for a in &gens {
        for b in &gens {
            let (a, b) = (Monomial::from_slice(a).unwrap(), Monomial::from_slice(b).unwrap());
            assert!(a == b || !a.divides(&b));
        }
    }
    assert_eq!(i.len(), 4);
}

#[test]
fn intersection_of_disjoint_primes_matches_membership_oracle() {
    let p = MonomialIdeal::prime(4, 0b0011).unwrap();
    let q = MonomialIdeal::prime(4, 0b1100).unwrap();
    let pq = p.intersect(&q).unwrap();
    let expected: Vec<Monomial> = box_points(4, 1)
        .into_iter()
        .filter(|w| p.contains(w).unwrap() && q.contains(w).unwrap())
        .filter(|w| w.degree() == 2)
        .collect();
    let mut gens = pq.gens().to_vec();
    gens.sort();
    let mut expected = expected;
    expected.sort();
    assert_eq!(gens, expected);
}

#[test]
fn mixed_generator_primary_ideal() {
    // x1 and x2 both have pure powers, x1*x2 is mixed
    let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
    let pure: Vec<bool> = i.gens().iter().map(|g| g.pure_power_var().is_some()).collect();
    assert_eq!(pure.iter().filter(|&&b| b).count(), 2);
    assert!(i.is_primary().unwrap());
    assert!(!i.is_irreducible().unwrap());
}

#[test]
fn power_contraction_matches_membership_oracle() {
    // {c ∈ [0,2]^2 : x^{2c} ∈ (x1^2, x1 x2)} generates (x1)
    let i = ideal(2, &[&[2, 0], &[1, 1]]);
    let members: Vec<Monomial> = box_points(2, 2)
        .into_iter()
        .filter(|c| {
            let doubled = Monomial::new(c.exps().iter().map(|e| 2 * e).collect()).unwrap();
            i.contains(&doubled).unwrap()
        })
        .collect();
    let contracted = MonomialIdeal::minimalize(2, members).unwrap();
    assert_eq!(contracted, ideal(2, &[&[1, 0]]));
    assert_eq!(i.contract_power_map(2).unwrap(), contracted);
}

#[test]
fn minimal_primes_of_disjoint_intersection() {
    let i = ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
    assert_eq!(i.minimal_primes().unwrap(), brute_force_primes(&i));
    assert_eq!(i.minimal_primes().unwrap(), [0b0011, 0b1100]);
}

proptest! {
    #[test]
    fn minimalize_is_idempotent((i, _) in ideal_pair(5, 3)) {
        let again = MonomialIdeal::minimalize(i.n(), i.gens().to_vec()).unwrap();
        prop_assert_eq!(&again, &i);
        prop_assert_eq!(i.radical().radical(), i.radical());
    }

    #[test]
    fn membership_coherence((i, j) in ideal_pair(5, 3), v in any::<prop::sample::Index>()) {
        let n = i.n();
        let inter = i.intersect(&j).unwrap();
        let sum = i.sum(&j).unwrap();
        let pts = box_points(n, 4);
        let v = &pts[v.index(pts.len())];
        let colon = i.colon_monomial(v).unwrap();
        for w in &pts {
            let (a, b) = (i.contains(w).unwrap(), j.contains(w).unwrap());
            prop_assert_eq!(inter.contains(w).unwrap(), a && b);
            prop_assert_eq!(sum.contains(w).unwrap(), a || b);
            prop_assert_eq!(colon.contains(w).unwrap(), i.contains(&w.mul(v)).unwrap());
        }
    }

    #[test]
    fn colon_by_ideal_is_intersection_of_colons((i, j) in ideal_pair(4, 3)) {
        let c = i.colon_ideal(&j).unwrap();
        prop_assert_eq!(c.vacuous, j.is_zero());
        for w in box_points(i.n(), 4) {
            let expected = j.gens().iter().all(|v| i.contains(&w.mul(v)).unwrap());
            prop_assert_eq!(c.ideal.contains(&w).unwrap(), expected);
        }
    }

    #[test]
    fn contraction_is_radical((i, _) in ideal_pair(5, 3), extra in 0u32..3) {
        let a = i.max_exp().max(1) + extra;
        prop_assert_eq!(i.contract_power_map(a).unwrap(), i.radical());
    }

    #[test]
    fn radical_membership((i, _) in ideal_pair(4, 3)) {
        // w ∈ sqrt(I) iff w^3 ∈ I, since exponents are at most 3
        let r = i.radical();
        prop_assert!(r.is_squarefree());
        for w in box_points(i.n(), 2) {
            let cubed = Monomial::new(w.exps().iter().map(|e| 3 * e).collect()).unwrap();
            prop_assert_eq!(r.contains(&w).unwrap(), i.contains(&cubed).unwrap());
        }
    }

    #[test]
    fn irreducible_implies_primary((i, _) in ideal_pair(5, 3)) {
        if !i.is_zero() && !i.is_unit() && i.is_irreducible().unwrap() {
            prop_assert!(i.is_primary().unwrap());
        }
    }

    #[test]
    fn minimal_primes_match_enumeration((i, _) in ideal_pair(5, 3)) {
        prop_assume!(!i.is_unit());
        prop_assert_eq!(i.minimal_primes().unwrap(), brute_force_primes(&i.radical()));
    }

    #[test]
    fn height_plus_dimension((i, _) in ideal_pair(5, 3)) {
        prop_assume!(!i.is_zero() && !i.is_unit());
        let dim = QuotientModule::ring_quotient(i.clone()).dim().unwrap();
        prop_assert_eq!(i.height().unwrap() + dim, i.n());
    }

    #[test]
    fn support_shape_is_permutation_equivariant(
        n in 2usize..7,
        a in 1u64..64,
        b in 1u64..64,
        seed in any::<u64>(),
    ) {
        let mask = (1u64 << n) - 1;
        prop_assume!(a & mask != 0 && b & mask != 0);
        let q = MonomialIdeal::prime(n, a & mask).unwrap();
        let q2 = MonomialIdeal::prime(n, b & mask).unwrap();
        let base = MonomialIdeal::support_shape(&q, &q2).unwrap();

        // a seeded shuffle of the variables
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed | 1;
        for i in (1..n).rev() {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            perm.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let moved = MonomialIdeal::support_shape(
            &q.permute(&perm).unwrap(),
            &q2.permute(&perm).unwrap(),
        ).unwrap();
        prop_assert_eq!(moved.shape, base.shape);

        // the returned renumbering realises the normal form
        let s = base.shape;
        let nq = q.permute(&base.permutation).unwrap();
        let nq2 = q2.permute(&base.permutation).unwrap();
        prop_assert_eq!(nq.support(), (1u64 << s.t) - 1);
        prop_assert_eq!(nq2.support(), ((1u64 << s.p) - 1) & !((1u64 << s.r) - 1));
    }
}
