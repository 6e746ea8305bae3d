//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use pbern_core::combinatorics::{r_stirling2, stirling2};
use pbern_core::exact::{binomial, Rational, UniPoly};
use pbern_core::identities::{GridBounds, Outcome, SuiteReport, Value, Verifier};
use pbern_core::sequences::{AltSumRoute, PBernoulliKey, Route, Sequences};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Check {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn r(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

/// First few p-Bernoulli polynomials, p = 0..10, coefficient-wise.
fn first_polynomials() -> Check {
    let start = Instant::now();
    let s = Sequences::new();
    for p in 0..=10i64 {
        let key = |n| PBernoulliKey::new(n, p as usize);
        let b0 = s
            .p_bernoulli_number(key(0), Route::Recurrence)
            .map_err(|e| e.to_string())?;
        ensure(b0 == 1, || format!("B_0,{p} = {b0}"))?;
        let b1 = UniPoly::new(vec![r(-1, p + 2), r(1, 1)]);
        ensure(s.p_bernoulli_poly(key(1)) == b1, || {
            format!("B_1,{p}(x) mismatch")
        })?;
        let b2 = UniPoly::new(vec![r(-(p - 1), (p + 2) * (p + 3)), r(-2, p + 2), r(1, 1)]);
        ensure(s.p_bernoulli_poly(key(2)) == b2, || {
            format!("B_2,{p}(x) mismatch")
        })?;
    }
    within(Duration::from_secs(1), start)
}

/// All four routes agree on B_{n,p}, n <= 20, p <= 10.
fn route_equivalence() -> Check {
    let start = Instant::now();
    let s = Sequences::new();
    for n in 0..=20 {
        for p in 0..=10 {
            let key = PBernoulliKey::new(n, p);
            let reference = s
                .p_bernoulli_number(key, Route::Recurrence)
                .map_err(|e| e.to_string())?;
            for route in Route::ALL {
                if n < route.min_n() {
                    continue;
                }
                let v = s
                    .p_bernoulli_number(key, route)
                    .map_err(|e| e.to_string())?;
                ensure(v == reference, || {
                    format!("n={n} p={p}: {route} gives {v}, recurrence gives {reference}")
                })?;
            }
        }
    }
    within(Duration::from_secs(10), start)
}

fn full_suite(jobs: usize) -> SuiteReport {
    let expected: BTreeSet<String> = ["eq8-as-printed".to_string()].into();
    Verifier::new(jobs)
        .expect("verifier")
        .verify_all(&GridBounds::new(12, 8, 6), &expected)
}

/// Whole registry at n <= 12, p <= 8, m <= 6, single-threaded.
fn identity_suite(suite: &SuiteReport, took: Duration) -> Check {
    for report in &suite.reports {
        let want = if report.id == "eq8-as-printed" {
            Outcome::Fail
        } else {
            Outcome::Pass
        };
        ensure(report.outcome == want, || {
            let witness = report
                .counterexamples
                .first()
                .map(|c| format!(" at {}: {} vs {}", c.params, c.lhs, c.rhs))
                .unwrap_or_default();
            format!(
                "{} expected {want:?}, got {:?}{witness}",
                report.id, report.outcome
            )
        })?;
        ensure(!report.vacuous, || format!("{} is vacuous", report.id))?;
    }
    ensure(suite.success, || "suite not successful".into())?;
    let printed = suite
        .report("eq8-as-printed")
        .ok_or("eq8-as-printed missing")?;
    let first = printed.counterexamples.first().ok_or("no witness")?;
    ensure(
        first.params.get("n") == Some(1)
            && first.params.get("p") == Some(0)
            && first.lhs == Value::Rational(r(-1, 2))
            && first.rhs == Value::Rational(r(1, 2)),
        || {
            format!(
                "unexpected witness {} : {} vs {}",
                first.params, first.lhs, first.rhs
            )
        },
    )?;
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))
}

/// p = 0 of the alternating reciprocal sum is Gould's closed form.
fn gould_specialization() -> Check {
    let s = Sequences::new();
    for n in 1..=20usize {
        let gould = Rational::from(n + 1) / Rational::from(n + 2)
            * (Rational::sign_power(n) + Rational::one());
        let direct: Rational = (0..=n)
            .map(|k| Rational::sign_power(k) / binomial(n, k as i64))
            .sum();
        ensure(direct == gould, || {
            format!("n={n}: direct {direct} vs {gould}")
        })?;
        for route in [AltSumRoute::Direct, AltSumRoute::ClosedForm] {
            let v = s
                .alt_binom_reciprocal_sum(n, 0, route)
                .map_err(|e| e.to_string())?;
            ensure(v == gould, || format!("n={n} {route:?}: {v} vs {gould}"))?;
        }
    }
    Ok(())
}

/// The Faulhaber-type sum at (n, p) = (2, 1).
fn alternating_sum_spot() -> Check {
    let s = Sequences::new();
    let b13 = s.p_bernoulli_poly(PBernoulliKey::new(1, 3));
    ensure(b13 == UniPoly::new(vec![r(-1, 5), r(1, 1)]), || {
        format!("B_1,3(x) = {b13:?}")
    })?;
    ensure(b13.eval(&Rational::from(-2)) == r(-11, 5), || {
        "B_1,3(-2) != -11/5".into()
    })?;
    for route in [AltSumRoute::Direct, AltSumRoute::ClosedForm] {
        let v = s
            .alt_binom_reciprocal_sum(2, 1, route)
            .map_err(|e| e.to_string())?;
        ensure(v == r(3, 2), || format!("{route:?} gives {v}"))?;
    }
    Ok(())
}

/// Stirling tables against set-partition enumeration; Faulhaber against
/// direct summation.
fn oracle_checks() -> Check {
    for n in 0..=8usize {
        for k in 0..=n {
            let brute = BigInt::from(common::count_partitions(n, k, 0));
            ensure(stirling2(n, k as i64) == brute, || format!("S({n},{k})"))?;
            for rr in 0..=3usize.min(n) {
                let brute = BigInt::from(common::count_partitions(n, k, rr));
                let got = r_stirling2(n, k as i64, rr).map_err(|e| e.to_string())?;
                ensure(got == brute, || {
                    format!("S_{rr}({n},{k}) = {got}, brute {brute}")
                })?;
            }
        }
    }
    let s = Sequences::new();
    for n in 0..=10u32 {
        for m in 0..=12u64 {
            let got = s.faulhaber_sum(n as usize, m as usize);
            let want = Rational::from_integer(BigInt::from(common::power_sum(n, m)));
            ensure(got == want, || {
                format!("faulhaber n={n} m={m}: {got} vs {want}")
            })?;
        }
    }
    Ok(())
}

/// One worker thread and eight give the same reports.
fn determinism(single: &SuiteReport) -> Check {
    let parallel = full_suite(8);
    ensure(single.same_content(&parallel), || {
        "reports differ between 1 and 8 jobs".into()
    })?;
    let strip = |s: &SuiteReport| {
        let mut v = serde_json::to_value(s).unwrap();
        for r in v["reports"].as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v.to_string()
    };
    ensure(strip(single) == strip(&parallel), || {
        "serialized reports differ".into()
    })
}

/// Classical Bernoulli recurrence and vanishing odd values.
fn classical_sanity() -> Check {
    let s = Sequences::new();
    for n in 1..=30usize {
        let sum: Rational = (0..=n)
            .map(|k| binomial(n + 1, k as i64) * s.bernoulli_number(k))
            .sum();
        ensure(sum.is_zero(), || {
            format!("recurrence sum at n={n} is {sum}")
        })?;
    }
    for n in (3..=29usize).step_by(2) {
        let explicit = s.bernoulli_number(n);
        let recurrence = s
            .p_bernoulli_number(PBernoulliKey::new(n, 0), Route::Recurrence)
            .map_err(|e| e.to_string())?;
        ensure(explicit.is_zero() && recurrence.is_zero(), || {
            format!("B_{n} != 0")
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let mut failures = 0;
    let mut report = |label: &str, result: Check, took: Duration| match &result {
        Ok(()) => println!("acceptance {label:<44} PASS ({:.2?})", took),
        Err(e) => {
            failures += 1;
            println!("acceptance {label:<44} FAIL: {e}");
        }
    };

    macro_rules! run {
        ($label:expr, $f:expr) => {{
            let start = Instant::now();
            let result = $f;
            report($label, result, start.elapsed());
        }};
    }

    run!("1 first p-Bernoulli polynomials", first_polynomials());
    run!("2 route equivalence n<=20 p<=10", route_equivalence());

    let start = Instant::now();
    let single = full_suite(1);
    let took = start.elapsed();
    report(
        "3 identity suite n<=12 p<=8 m<=6 (1 job)",
        identity_suite(&single, took),
        took,
    );

    run!("4 Gould specialization n<=20", gould_specialization());
    run!("5 alternating sum at (n,p)=(2,1)", alternating_sum_spot());
    run!("6 brute-force oracles", oracle_checks());
    run!("7 jobs=1 vs jobs=8 determinism", determinism(&single));
    run!("8 classical Bernoulli sanity n<=30", classical_sanity());

    if failures == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criteria failed");
        ExitCode::FAILURE
    }
}
