//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Values are compared exactly; every criterion has a pinned time
//! limit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use stanley::experiment::{run_suite, Suite};
use stanley::parallel::resolve_threads;
use stanley::parse::{parse_ideal, parse_module};
use stanley_core::bounds::{bound_report, BoundValue, PairOrder, Ratio};
use stanley_core::poset::sdepth_exact;
use stanley_core::{QuotientModule, Sdepth};

/// Seed shared by the randomized criteria.
const SEED: u64 = 20_240_601;

const SECOND: Duration = Duration::from_secs(1);
const MINUTE: Duration = Duration::from_secs(60);

fn sdepth(text: &str) -> Sdepth {
    sdepth_exact(&parse_module(text).expect("valid input"))
}

fn expect(text: &str, want: usize) -> Result<String, String> {
    let got = sdepth(text);
    if got == Sdepth::Finite(want) {
        Ok(format!("sdepth {text} = {got}"))
    } else {
        Err(format!("sdepth {text} = {got}, expected {want}"))
    }
}

fn all(checks: Vec<Result<String, String>>) -> Result<String, String> {
    let (ok, bad): (Vec<_>, Vec<_>) = checks.into_iter().partition(Result::is_ok);
    if bad.is_empty() {
        Ok(ok.into_iter().map(Result::unwrap).collect::<Vec<_>>().join("; "))
    } else {
        Err(bad.into_iter().map(Result::unwrap_err).collect::<Vec<_>>().join("; "))
    }
}

fn suite(s: Suite, cases: usize) -> Result<String, String> {
    let r = run_suite(s, SEED, cases, resolve_threads(None));
    let summary = format!("{}/{} cases pass (seed {}, digest {})", r.passed, r.cases, r.seed, r.digest);
    if r.ok() && r.cases == cases {
        Ok(summary)
    } else {
        let first: Vec<String> = r
            .failures
            .iter()
            .take(3)
            .map(|f| format!("case {} [{}]: {}", f.case, f.input, f.failure.as_deref().unwrap_or("")))
            .collect();
        Err(format!("{summary}; {}", first.join("; ")))
    }
}

fn example_17() -> Result<String, String> {
    let q = parse_ideal("n=8; (x1,...,x6)").unwrap();
    let q2 = parse_ideal("n=8; (x3,...,x8)").unwrap();
    let r = bound_report(&q, &q2, true).map_err(|e| e.to_string())?;
    let value = |name| r.entry(name, PairOrder::Given).and_then(|e| e.value);
    let prime = value("overlap_prime");
    let shift = value("overlap_shift");
    let exact = r.exact.ok_or("exact value missing")?;
    let text = format!(
        "overlap_prime = {}, overlap_shift = {}, exact = {exact}",
        prime.map_or("-".into(), |v| v.to_string()),
        shift.map_or("-".into(), |v| v.to_string()),
    );
    let ok = prime == Some(BoundValue::Int(5))
        && shift == Some(BoundValue::Ratio(Ratio::new(14, 2)))
        && exact <= Sdepth::Finite(5)
        && r.violations().is_empty();
    if ok {
        Ok(text)
    } else {
        Err(text)
    }
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Result<String, String>,
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            title: "two disjoint primes in 4 variables",
            limit: SECOND,
            run: || expect("(x1,x2) ∩ (x3,x4)", 3),
        },
        Criterion {
            id: 2,
            title: "(x1^2, x1*x2) and (x1) in 2 variables",
            limit: SECOND,
            run: || all(vec![expect("(x1^2, x1*x2)", 1), expect("n=2; (x1)", 2)]),
        },
        Criterion {
            id: 3,
            title: "maximal ideals, n = 1..6",
            limit: MINUTE,
            run: || {
                all((1..=6)
                    .map(|n| {
                        let m = QuotientModule::ideal(
                            stanley_core::MonomialIdeal::prime(n, (1 << n) - 1).unwrap(),
                        );
                        let got = sdepth_exact(&m);
                        let want = Sdepth::Finite(n.div_ceil(2));
                        if got == want {
                            Ok(format!("n={n}: {got}"))
                        } else {
                            Err(format!("n={n}: {got}, expected {want}"))
                        }
                    })
                    .collect())
            },
        },
        Criterion {
            id: 4,
            title: "odd n, irreducible, disjoint supports",
            limit: 5 * MINUTE,
            run: || expect("(x1^2,x2) ∩ (x3,x4^3,x5)", 3),
        },
        Criterion {
            id: 5,
            title: "even n, odd t",
            limit: 5 * MINUTE,
            run: || expect("(x1,x2,x3) ∩ (x4,x5,x6)", 4),
        },
        Criterion {
            id: 6,
            title: "bound report for (x1,...,x6) ∩ (x3,...,x8)",
            limit: MINUTE,
            run: example_17,
        },
        Criterion {
            id: 7,
            title: "radical of the single-variable case",
            limit: 10 * SECOND,
            run: || expect("(x1x4, x2, x3)", 3),
        },
        Criterion {
            id: 8,
            title: "closing example, k = 2",
            limit: 5 * MINUTE,
            run: || expect("(x1^2,x2^2) ∩ (x2^2,x3,x4^3)", 3),
        },
        Criterion {
            id: 9,
            title: "transfer to the radical, 200 pairs",
            limit: 10 * MINUTE,
            run: || suite(Suite::Transfer, 200),
        },
        Criterion {
            id: 10,
            title: "one extra variable, 100 ideals",
            limit: 10 * MINUTE,
            run: || suite(Suite::Extension, 100),
        },
        Criterion {
            id: 11,
            title: "search against brute force, 100 posets",
            limit: 10 * MINUTE,
            run: || suite(Suite::Oracle, 100),
        },
        Criterion {
            id: 12,
            title: "bounds around the exact value, 100 pairs",
            limit: 10 * MINUTE,
            run: || suite(Suite::Sandwich, 100),
        },
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in criteria() {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(d) if elapsed <= c.limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {elapsed:.2?}, limit {:?}", c.limit)),
            Err(d) => ("FAIL", d),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {:>2} {status}: {} [{elapsed:.2?}] {detail}", c.id, c.title);
    }
    println!("acceptance: {} of 12 criteria pass", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
