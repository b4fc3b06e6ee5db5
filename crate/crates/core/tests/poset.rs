mod common;

use common::*;
use proptest::prelude::*;
use stanley_core::poset::{
    best_partition, characteristic_poset, enumerate_partitions_naive, find_partition, sdepth_exact,
    sdepth_in_box, CellBox, CharacteristicPoset, Compression, NAIVE_CELL_LIMIT,
};
use stanley_core::{MonomialIdeal, QuotientModule, Sdepth};

fn poset_of(m: &QuotientModule) -> CharacteristicPoset {
    characteristic_poset(m, &CellBox::tight(m).unwrap()).unwrap()
}

#[test]
fn membership_scan_of_non_squarefree_poset() {
    let m = QuotientModule::ideal(ideal(2, &[&[2, 0], &[1, 1]]));
    let b = CellBox::new(vec![2, 1]).unwrap();
    let poset = characteristic_poset(&m, &b).unwrap();
    let scanned: Vec<Vec<u32>> = box_points(2, 2)
        .into_iter()
        .filter(|w| w.exp(1) <= 1 && m.contains(w).unwrap())
        .map(|w| w.exps().to_vec())
        .collect();
    let mut cells: Vec<Vec<u32>> = poset.cells().collect();
    cells.sort();
    assert_eq!(cells, scanned);
    assert_eq!(cells, [vec![1, 1], vec![2, 0], vec![2, 1]]);
}

#[test]
fn naive_oracle_on_reference_posets() {
    let b = CellBox::new(vec![1, 1]).unwrap();
    let single = CharacteristicPoset::from_cells(&b, [vec![1, 1]]).unwrap();
    assert_eq!(enumerate_partitions_naive(&single, 2).unwrap().unwrap().intervals.len(), 1);
    assert_eq!(find_partition(&single, 2).unwrap().intervals.len(), 1);
}

#[test]
fn maximal_ideals_small() {
    for n in 1..=5 {
        let m = QuotientModule::ideal(MonomialIdeal::prime(n, (1 << n) - 1).unwrap());
        assert_eq!(sdepth_exact(&m), Sdepth::Finite(n.div_ceil(2)), "n = {n}");
    }
}

#[test]
fn primes_and_complete_intersections_match_formulas() {
    use stanley_core::bounds::{formula_complete_intersection, formula_prime};
    for n in 1..=6 {
        for t in 1..=n {
            let m = QuotientModule::ideal(MonomialIdeal::prime(n, (1 << t) - 1).unwrap());
            assert_eq!(sdepth_exact(&m), Sdepth::Finite(formula_prime(t, n).unwrap()), "prime t={t} n={n}");
        }
    }
    // complete intersections x1^2*x2, x3, x4^3 ... with disjoint supports
    for n in 2..=5 {
        for m in 1..=n {
            let mut gens: Vec<Vec<u32>> = (0..m).map(|j| {
                let mut v = vec![0; n];
                v[j] = 1 + (j as u32 % 2);
                v
            }).collect();
            // merge the last spare variables into the first generator
            for (j, e) in gens[0].iter_mut().enumerate().skip(m) {
                if j % 2 == 0 {
                    *e = 1;
                }
            }
            let gens: Vec<&[u32]> = gens.iter().map(|g| g.as_slice()).collect();
            let i = ideal(n, &gens);
            assert_eq!(
                sdepth_exact(&QuotientModule::ideal(i.clone())),
                Sdepth::Finite(formula_complete_intersection(m, n).unwrap()),
                "{i:?}"
            );
        }
    }
}

fn small_module() -> impl Strategy<Value = QuotientModule> {
    prop_oneof![
        (1usize..=3).prop_flat_map(|n| ideal_in(n, 3, 2)).prop_filter("nonzero", |i| !i.is_zero())
            .prop_map(QuotientModule::ideal),
        nested_pair(3, 2),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn returned_partitions_are_valid_and_monotone(m in nested_pair(4, 3)) {
        let poset = poset_of(&m);
        let mut last_feasible = true;
        for k in 0..=m.n() {
            match find_partition(&poset, k) {
                Some(p) => {
                    prop_assert!(last_feasible, "feasible at {} after an infeasible k", k);
                    prop_assert_eq!(p.validate(&poset), Ok(()));
                    if !poset.is_empty() {
                        prop_assert!(p.sdepth() >= Sdepth::Finite(k));
                    }
                }
                None => last_feasible = false,
            }
        }
    }

    #[test]
    fn search_agrees_with_naive_oracle(m in small_module()) {
        let poset = poset_of(&m);
        prop_assume!(poset.len() <= NAIVE_CELL_LIMIT);
        for k in 0..=m.n() + 1 {
            let fast = find_partition(&poset, k);
            let slow = enumerate_partitions_naive(&poset, k).unwrap();
            prop_assert_eq!(fast.is_some(), slow.is_some(), "k = {}", k);
            if let Some(p) = slow {
                prop_assert_eq!(p.validate(&poset), Ok(()));
            }
        }
    }

    #[test]
    fn box_independence(m in nested_pair(3, 2)) {
        // raw posets on purpose: the compressed search sees the same box either way
        let tight = CellBox::tight(&m).unwrap();
        let big = tight.enlarged(1).unwrap();
        let a = best_partition(&characteristic_poset(&m, &tight).unwrap(), find_partition).sdepth;
        let b = best_partition(&characteristic_poset(&m, &big).unwrap(), find_partition).sdepth;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn compression_is_exact(m in nested_pair(4, 3), grow in 0u32..2) {
        let cbox = CellBox::tight(&m).unwrap().enlarged(grow).unwrap();
        let raw = characteristic_poset(&m, &cbox).unwrap();
        let expected = best_partition(&raw, find_partition).sdepth;
        let c = Compression::new(&m, &cbox).unwrap();
        prop_assert!(c.compressed_box().volume() <= cbox.volume());
        let w = sdepth_in_box(&m, &cbox).unwrap();
        prop_assert_eq!(w.sdepth, expected);
        prop_assert_eq!(&w.partition.cbox, &cbox);
        prop_assert_eq!(w.partition.validate(&raw), Ok(()));
        prop_assert_eq!(w.partition.sdepth(), w.sdepth);
    }

    #[test]
    fn free_variable_adds_one(m in nested_pair(4, 3)) {
        let base = sdepth_exact(&m);
        let wider = sdepth_exact(&m.extend(1).unwrap());
        match base {
            Sdepth::Finite(s) => prop_assert_eq!(wider, Sdepth::Finite(s + 1)),
            Sdepth::Infinite => prop_assert_eq!(wider, Sdepth::Infinite),
        }
    }

    #[test]
    fn invariant_under_variable_order(m in nested_pair(4, 3), rot in 0usize..4) {
        // rotating variables changes the cell order the search sees
        let n = m.n();
        let perm: Vec<usize> = (0..n).map(|j| (j + rot) % n).collect();
        let moved = QuotientModule::new(
            m.upper().permute(&perm).unwrap(),
            m.lower().permute(&perm).unwrap(),
        ).unwrap();
        prop_assert_eq!(sdepth_exact(&moved), sdepth_exact(&m));
    }

    #[test]
    fn deterministic(m in nested_pair(4, 3)) {
        let poset = poset_of(&m);
        for k in 0..=m.n() {
            prop_assert_eq!(find_partition(&poset, k), find_partition(&poset, k));
        }
    }
}
