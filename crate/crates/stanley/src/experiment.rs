//! Seeded randomized property suites.
//!
//! Case `i` of a run with seed `s` draws its input from a ChaCha8 stream
//! keyed by `(s, i)`, so a report depends only on the suite, the seed and the
//! number of cases, never on the thread count.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use stanley_core::bounds::bound_report;
use stanley_core::poset::{
    characteristic_poset, enumerate_partitions_naive, find_partition, sdepth_exact,
    sdepth_with_witness, CellBox, NAIVE_CELL_LIMIT,
};
use stanley_core::stanley::{decomposition_from_partition, radical_transfer};
use stanley_core::{Monomial, MonomialIdeal, QuotientModule, Sdepth};

use crate::parse::{print_ideal, print_module};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Pull-back of decompositions to the radical: pairs I ⊆ J, n ≤ 4, exponents ≤ 3.
    Transfer,
    /// One extra variable: sdepth((I, x_{n+1})) - sdepth(I) ∈ {0, 1}, n ≤ 4.
    Extension,
    /// Exact-cover search against brute force on posets of at most 20 cells.
    Oracle,
    /// Bounds around the exact value for squarefree primary pairs, n ≤ 6.
    Sandwich,
    /// Bounds around the exact value for primary pairs, n ≤ 5, exponents ≤ 3.
    SandwichPrimary,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Transfer => "transfer",
            Suite::Extension => "extension",
            Suite::Oracle => "oracle",
            Suite::Sandwich => "sandwich",
            Suite::SandwichPrimary => "sandwich-primary",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub case: usize,
    pub input: String,
    /// Short summary of the computed values.
    pub outcome: String,
    /// Set when an invariant fails.
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub passed: usize,
    pub failures: Vec<CaseResult>,
    /// FNV-1a over every case's input and outcome, in hex.
    pub digest: String,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn case_rng(seed: u64, case: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case as u64);
    rng
}

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> Monomial {
    Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect()).expect("n >= 1")
}

/// Ideal with between 1 and `max_gens` random generators.
pub fn random_ideal(rng: &mut ChaCha8Rng, n: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<Monomial> = (0..count).map(|_| random_monomial(rng, n, max_exp)).collect();
    MonomialIdeal::minimalize(n, gens).expect("n >= 1")
}

/// A nonzero proper ideal.
pub fn random_proper_ideal(rng: &mut ChaCha8Rng, n: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    loop {
        let i = random_ideal(rng, n, max_gens, max_exp);
        if !i.is_unit() {
            return i;
        }
    }
}

/// `J/I` with `I ⊆ J`: every generator of `I` is a multiple of one of `J`.
pub fn random_nested(rng: &mut ChaCha8Rng, max_n: usize, max_exp: u32) -> QuotientModule {
    let n = rng.gen_range(1..=max_n);
    let j = random_ideal(rng, n, 3, max_exp);
    let count = rng.gen_range(0..=3);
    let lower: Vec<Monomial> = (0..count)
        .map(|_| {
            let g = &j.gens()[rng.gen_range(0..j.len())];
            random_monomial(rng, n, max_exp).lcm(g)
        })
        .collect();
    let i = MonomialIdeal::minimalize(n, lower).expect("n >= 1");
    QuotientModule::new(j, i).expect("I is inside J by construction")
}

/// Primary ideal on a random nonempty support: a pure power of every
/// support variable and up to two mixed generators inside the support.
pub fn random_primary(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> MonomialIdeal {
    let support: u64 = rng.gen_range(1..(1u64 << n));
    let inside = |j: usize| support >> j & 1 == 1;
    let mut gens = Vec::new();
    for j in (0..n).filter(|&j| inside(j)) {
        let mut v = vec![0; n];
        v[j] = rng.gen_range(1..=max_exp);
        gens.push(Monomial::new(v).expect("n >= 1"));
    }
    for _ in 0..rng.gen_range(0..=2) {
        let v = (0..n)
            .map(|j| if inside(j) { rng.gen_range(0..=max_exp) } else { 0 })
            .collect();
        let m = Monomial::new(v).expect("n >= 1");
        if !m.is_one() {
            gens.push(m);
        }
    }
    MonomialIdeal::minimalize(n, gens).expect("n >= 1")
}

fn fail(case: usize, input: String, outcome: String, failure: String) -> CaseResult {
    CaseResult {
        case,
        input,
        outcome,
        failure: Some(failure),
    }
}

fn transfer_case(case: usize, rng: &mut ChaCha8Rng) -> CaseResult {
    let m = random_nested(rng, 4, 3);
    let input = print_module(&m);
    let witness = sdepth_with_witness(&m).expect("small box");
    let d = decomposition_from_partition(&witness.partition, &m).expect("valid partition");
    if let Err(e) = d.verify() {
        return fail(case, input, String::new(), format!("witness decomposition fails at {}", e.degree));
    }
    let radical = m.radical();
    let exact_radical = sdepth_exact(&radical);
    let outcome = format!("{} -> {}", witness.sdepth, exact_radical);
    let t = match radical_transfer(&d, m.max_exp().max(1)) {
        Ok(t) => t,
        Err(e) => return fail(case, input, outcome, format!("transfer refused: {e}")),
    };
    let failure = if t.decomposition.module != radical {
        Some("transfer targets the wrong module".to_string())
    } else if let Err(e) = t.decomposition.verify() {
        Some(format!("transferred decomposition fails at {}", e.degree))
    } else if t.decomposition.sdepth() < d.sdepth() {
        Some(format!(
            "transfer lowered sdepth from {} to {}",
            d.sdepth(),
            t.decomposition.sdepth()
        ))
    } else if exact_radical < witness.sdepth {
        Some(format!(
            "sdepth(J/I) = {} exceeds sdepth of the radical module {exact_radical}",
            witness.sdepth
        ))
    } else {
        None
    };
    CaseResult {
        case,
        input,
        outcome,
        failure,
    }
}

fn extension_case(case: usize, rng: &mut ChaCha8Rng) -> CaseResult {
    let n = rng.gen_range(1..=4);
    let i = random_proper_ideal(rng, n, 4, 3);
    let input = print_ideal(&i);
    let wide = {
        let x = MonomialIdeal::minimalize(n + 1, [Monomial::var(n, n + 1).expect("in range")])
            .expect("n >= 1");
        i.extend(1).expect("within limits").sum(&x).expect("same ring")
    };
    let s = sdepth_exact(&QuotientModule::ideal(i));
    let s2 = sdepth_exact(&QuotientModule::ideal(wide));
    let outcome = format!("{s} -> {s2}");
    let failure = match (s, s2) {
        (Sdepth::Finite(a), Sdepth::Finite(b)) if b == a || b == a + 1 => None,
        _ => Some(format!("difference outside {{0, 1}}: {s} -> {s2}")),
    };
    CaseResult {
        case,
        input,
        outcome,
        failure,
    }
}

fn oracle_case(case: usize, rng: &mut ChaCha8Rng) -> CaseResult {
    let (m, poset) = loop {
        let m = if rng.gen_bool(0.5) {
            let n = rng.gen_range(1..=4);
            QuotientModule::ideal(random_proper_ideal(rng, n, 3, 2))
        } else {
            random_nested(rng, 4, 2)
        };
        let cbox = CellBox::tight(&m).expect("small box");
        let poset = characteristic_poset(&m, &cbox).expect("small box");
        if !poset.is_empty() && poset.len() <= NAIVE_CELL_LIMIT {
            break (m, poset);
        }
    };
    let input = print_module(&m);
    let mut feasible = Vec::new();
    for k in 0..=m.n() + 1 {
        let fast = find_partition(&poset, k);
        let slow = enumerate_partitions_naive(&poset, k).expect("within the cell limit");
        if let Some(p) = &fast {
            if let Err(e) = p.validate(&poset) {
                return fail(case, input, String::new(), format!("k = {k}: invalid partition ({e:?})"));
            }
        }
        if fast.is_some() != slow.is_some() {
            return fail(
                case,
                input,
                String::new(),
                format!(
                    "k = {k}: search says {}, brute force says {}",
                    fast.is_some(),
                    slow.is_some()
                ),
            );
        }
        feasible.push(if fast.is_some() { '1' } else { '0' });
    }
    CaseResult {
        case,
        input,
        outcome: format!("{} cells, feasible {}", poset.len(), feasible.into_iter().collect::<String>()),
        failure: None,
    }
}

fn sandwich_case(case: usize, rng: &mut ChaCha8Rng, max_n: usize, max_exp: u32) -> CaseResult {
    let n = rng.gen_range(2..=max_n);
    let q = random_primary(rng, n, max_exp);
    let q2 = random_primary(rng, n, max_exp);
    let input = format!("{} | {}", print_ideal(&q), print_ideal(&q2));
    let report = bound_report(&q, &q2, true).expect("primary inputs");
    let exact = report.exact.expect("computed");
    let show = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
    let outcome = format!(
        "{} <= {exact} <= {}",
        show(report.best_lower()),
        show(report.best_upper())
    );
    let violations = report.violations();
    let failure = (!violations.is_empty()).then(|| {
        violations
            .iter()
            .map(|v| format!("{} ({:?}) {} {} vs exact {}", v.name, v.order, v.kind, v.value, v.exact))
            .collect::<Vec<_>>()
            .join("; ")
    });
    CaseResult {
        case,
        input,
        outcome,
        failure,
    }
}

pub fn run_case(suite: Suite, seed: u64, case: usize) -> CaseResult {
    let mut rng = case_rng(seed, case);
    match suite {
        Suite::Transfer => transfer_case(case, &mut rng),
        Suite::Extension => extension_case(case, &mut rng),
        Suite::Oracle => oracle_case(case, &mut rng),
        Suite::Sandwich => sandwich_case(case, &mut rng, 6, 1),
        Suite::SandwichPrimary => sandwich_case(case, &mut rng, 5, 3),
    }
}

fn fnv1a(bytes: &[u8], mut h: u64) -> u64 {
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// Runs `cases` cases of `suite` on `threads` workers.
pub fn run_suite(suite: Suite, seed: u64, cases: usize, threads: usize) -> SuiteReport {
    let slots: Mutex<Vec<Option<CaseResult>>> = Mutex::new(vec![None; cases]);
    let next = AtomicUsize::new(0);
    thread::scope(|s| {
        for _ in 0..threads.clamp(1, cases.max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= cases {
                    return;
                }
                let r = run_case(suite, seed, i);
                slots.lock().expect("no worker panics")[i] = Some(r);
            });
        }
    });
    let results: Vec<CaseResult> = slots
        .into_inner()
        .expect("no worker panics")
        .into_iter()
        .map(|r| r.expect("every case ran"))
        .collect();
    let digest = results.iter().fold(0xcbf2_9ce4_8422_2325, |h, r| {
        let line = format!("{}|{}|{}|{}\n", r.case, r.input, r.outcome, r.failure.is_some());
        fnv1a(line.as_bytes(), h)
    });
    let failures: Vec<CaseResult> = results.into_iter().filter(|r| r.failure.is_some()).collect();
    SuiteReport {
        suite: suite.name().to_string(),
        seed,
        cases,
        passed: cases - failures.len(),
        failures,
        digest: format!("{digest:016x}"),
    }
}
