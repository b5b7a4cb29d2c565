//! The acceptance gate: nine go/no-go checks covering the worked fixtures,
//! the randomized soundness suites, and the round-trip contracts. Each
//! criterion prints exactly one PASS or FAIL line; the target fails if any
//! criterion does. Every suite is seeded, so a failure here reproduces.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use clap::Parser;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use polycert::batch::{certify_minimal_all, verify_all};
use polycert::{
    certify_at, certify_minimal, lagrange_bound, minimal_integer_shift, optimal_threshold, parse,
    predicate_p, render, verify, BigInt, Certificate, LagrangeBound, Poly, PositivityVerdict,
    Rat, ShiftMode, Style, VerifyOutcome,
};
use polycert_cli::json::CertificateDoc;
use polycert_cli::{run, Cli, Outcome};

const QUINTIC: &str = "2842*n^5 - 7821*n^4 - 16884*n^3 + 10428*n^2 + 5082*n - 2607";
const QUARTIC: &str = "x^4 - 10*x^3 + 35*x^2 - 50*x + 24";

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random rational in [lo, hi] with denominator at most `denom_max`.
fn random_rat(rng: &mut ChaCha8Rng, lo: i64, hi: i64, denom_max: i64) -> Rat {
    let d = rng.gen_range(1..=denom_max);
    let n = rng.gen_range(lo * d..=hi * d);
    Rat::new(n, d)
}

/// Random polynomial with positive leading coefficient; when asked,
/// guarantees a negative coefficient somewhere below the leading one.
fn random_poly(rng: &mut ChaCha8Rng, min_deg: usize, max_deg: usize, force_negative: bool) -> Poly {
    let deg = rng.gen_range(min_deg..=max_deg);
    let mut coeffs: Vec<Rat> = (0..deg)
        .map(|_| random_rat(rng, -30, 30, 3))
        .collect();
    coeffs.push(random_rat(rng, 1, 20, 3));
    if force_negative {
        let idx = rng.gen_range(0..deg.max(1));
        let magnitude = random_rat(rng, 1, 30, 3);
        coeffs[idx] = -&magnitude;
    }
    Poly::from_ascending(coeffs)
}

/// a_0 · ∏ (x − r_i) with a_0 in 1..=10, rational roots in [−10, 10], the
/// first root positive, and degree at most 8.
fn factored_instance(rng: &mut ChaCha8Rng) -> Poly {
    let count = rng.gen_range(1..=8);
    let a0 = Rat::from_integer(rng.gen_range(1..=10));
    let mut f = Poly::constant(a0);
    for i in 0..count {
        let root = if i == 0 {
            let d = rng.gen_range(1..=3);
            Rat::new(rng.gen_range(1..=10 * d), d)
        } else {
            random_rat(rng, -10, 10, 3)
        };
        let linear = Poly::from_ascending(vec![-&root, Rat::one()]);
        f = &f * &linear;
    }
    f
}

fn cli(args: &[&str]) -> Cli {
    let argv = std::iter::once("polycert").chain(args.iter().copied());
    Cli::try_parse_from(argv).expect("test arguments parse")
}

struct Report {
    number: usize,
    label: &'static str,
    result: Result<Duration, String>,
}

fn run_criterion(
    number: usize,
    label: &'static str,
    budget: Option<Duration>,
    body: impl FnOnce(),
) -> Report {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    let result = match outcome {
        Ok(()) => match budget {
            Some(limit) if elapsed > limit => {
                Err(format!("took {elapsed:?}, budget {limit:?}"))
            }
            _ => Ok(elapsed),
        },
        Err(payload) => {
            let message = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".to_string());
            Err(message.replace('\n', " | "))
        }
    };
    Report {
        number,
        label,
        result,
    }
}

/// Criterion 1: the quintic fixture certificate, produced through the CLI in
/// integer mode, with the exact quotient and remainder, in under a
/// millisecond.
fn criterion_1() {
    let f = parse(QUINTIC).expect("quintic parses").poly;
    let cert = certify_minimal(&f, &ShiftMode::Integer).expect("certificate exists");
    assert_eq!(cert.shift(), &rat(5, 1), "shift");
    let quotient: Vec<Rat> = [2842, 6389, 15061, 85733, 433747]
        .iter()
        .map(|&n| rat(n, 1))
        .collect();
    assert_eq!(cert.quotient_coefficients(), &quotient[..], "quotient");
    assert_eq!(cert.remainder(), &rat(2166128, 1), "remainder");
    assert_eq!(cert.verdict(), &PositivityVerdict::AllNonnegative);
    assert_eq!(verify(&cert), VerifyOutcome::Valid);

    let expected = "\
input: f(n) = 2842*n^5 - 7821*n^4 - 16884*n^3 + 10428*n^2 + 5082*n - 2607
shift: b = 5
identity: f(n) = (2842*n^4 + 6389*n^3 + 15061*n^2 + 85733*n + 433747)*(n - 5) + 2166128
verdict: all shifted values nonnegative; f(n) > 0 for all n > 5";
    let args = ["certify", "--mode", "integer", QUINTIC];
    for _ in 0..3 {
        run(cli(&args)); // warm up allocator and lazy statics
    }
    let mut best = Duration::MAX;
    for _ in 0..5 {
        let parsed = cli(&args);
        let started = Instant::now();
        let outcome = run(parsed);
        best = best.min(started.elapsed());
        match outcome {
            Outcome::Success(text) => assert_eq!(text, expected, "CLI text"),
            other => panic!("CLI returned {other:?}"),
        }
    }
    assert!(best < Duration::from_millis(1), "best run took {best:?}");
}

/// Criterion 2: the quintic evaluates to exactly 12025 at 4.
fn criterion_2() {
    let f = parse(QUINTIC).expect("quintic parses").poly;
    assert_eq!(f.eval(&rat(4, 1)), rat(12025, 1));
}

/// Criterion 3: the quartic fixture: a negative entry at index 1 when
/// dividing at b = 5, minimal integer shift 10, threshold exactly 10.
fn criterion_3() {
    let f = parse(QUARTIC).expect("quartic parses").poly;
    let cert = certify_at(&f, &rat(5, 1)).expect("division runs");
    assert_eq!(cert.verdict(), &PositivityVerdict::HasNegative(1));
    assert_eq!(
        minimal_integer_shift(&f).expect("search runs"),
        BigInt::from(10)
    );
    let bracket = optimal_threshold(&f, &Rat::pow2_inverse(20)).expect("bisection runs");
    assert_eq!(bracket.exact(), Some(&rat(10, 1)), "exact threshold");
}

/// Criterion 4: 500 products of linear factors with a positive root all
/// receive certificates that verify Valid.
fn criterion_4() {
    let mut rng = rng_for(0x0404);
    let polys: Vec<Poly> = (0..500).map(|_| factored_instance(&mut rng)).collect();
    let certs: Vec<Certificate> = certify_minimal_all(&polys, &ShiftMode::Integer)
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.unwrap_or_else(|e| panic!("instance {i}: {e}")))
        .collect();
    for (i, (cert, outcome)) in certs.iter().zip(verify_all(&certs)).enumerate() {
        assert_eq!(outcome, VerifyOutcome::Valid, "instance {i}");
        assert_eq!(
            cert.verdict(),
            &PositivityVerdict::AllNonnegative,
            "instance {i}"
        );
    }
}

/// Criterion 5: 500 random (f, b, b′) with P(b) holding and b′ > b: the
/// predicate still holds at b′.
fn criterion_5() {
    let mut rng = rng_for(0x0505);
    for case in 0..500 {
        let f = random_poly(&mut rng, 1, 7, false);
        let m = minimal_integer_shift(&f).expect("search runs");
        let b = &Rat::from(m) + &random_rat(&mut rng, 0, 8, 5).abs();
        assert!(
            predicate_p(&f, &b).expect("predicate runs").holds(),
            "case {case}: P(b) must hold at b = {b}"
        );
        let step = random_rat(&mut rng, 1, 12, 5).abs();
        let b_prime = &b + &step;
        assert!(
            predicate_p(&f, &b_prime).expect("predicate runs").holds(),
            "case {case}: P held at {b} but failed at {b_prime}"
        );
    }
}

/// Refines a sign change of f inside [lo, hi] down to width 2⁻²⁰ and
/// returns the enclosure.
fn refine_root(f: &Poly, mut lo: Rat, mut hi: Rat) -> (Rat, Rat) {
    let width = Rat::pow2_inverse(20);
    let lo_sign = f.eval(&lo).is_negative();
    while (&hi - &lo) > width {
        let mid = &(&lo + &hi) / &rat(2, 1);
        let value = f.eval(&mid);
        if value.is_zero() {
            return (mid.clone(), mid);
        }
        if value.is_negative() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Criterion 6: 500 Lagrange bounds checked two ways: evaluation stays
/// positive at 20 points beyond the bound, and a sign-change scan over
/// [0, bound] locates no root at or past the bound.
fn criterion_6() {
    let mut rng = rng_for(0x0606);
    for case in 0..500 {
        let f = random_poly(&mut rng, 1, 8, true);
        let report = match lagrange_bound(&f, &Rat::pow2_inverse(32)).expect("bound runs") {
            LagrangeBound::Bound(report) => report,
            LagrangeBound::NoNegativeCoefficients => {
                panic!("case {case}: instance was built with a negative coefficient")
            }
        };
        let bound = &report.bound_overestimate;
        for _ in 0..20 {
            let x = bound + &random_rat(&mut rng, 1, 100, 7).abs();
            assert!(
                f.eval(&x).is_positive(),
                "case {case}: f({x}) not positive past bound {bound}"
            );
        }
        let cells: i64 = 128;
        let mut previous = f.eval(&Rat::zero());
        for i in 1..=cells {
            let left = &(bound * &rat(i - 1, 1)) / &rat(cells, 1);
            let right = &(bound * &rat(i, 1)) / &rat(cells, 1);
            let value = f.eval(&right);
            let crossing = previous.is_zero()
                || value.is_zero()
                || (previous.is_negative() != value.is_negative());
            if crossing {
                let (_, enclosure_hi) = if previous.is_zero() {
                    (left.clone(), left)
                } else if value.is_zero() {
                    (right.clone(), right)
                } else {
                    refine_root(&f, left, right)
                };
                assert!(
                    &enclosure_hi < bound,
                    "case {case}: root enclosure reaches the bound {bound}"
                );
            }
            previous = value;
        }
    }
}

/// Fresh synthetic-division table, written independently of the library's
/// search code, for use as an oracle.
fn oracle_values(f: &Poly, b: &Rat) -> Vec<Rat> {
    let mut values = Vec::new();
    let mut acc = Rat::zero();
    for (i, c) in f.coeffs_descending().iter().enumerate() {
        acc = if i == 0 { c.clone() } else { &(&acc * b) + c };
        values.push(acc.clone());
    }
    values
}

fn oracle_predicate(f: &Poly, b: &Rat) -> bool {
    oracle_values(f, b)[1..].iter().all(|v| !v.is_negative())
}

/// Criterion 7: 200 minimal integer shifts match a linear scan from 0.
fn criterion_7() {
    let mut rng = rng_for(0x0707);
    for case in 0..200 {
        let f = random_poly(&mut rng, 0, 7, false);
        let m = minimal_integer_shift(&f).expect("search runs");
        let mut b = 0i64;
        while !oracle_predicate(&f, &rat(b, 1)) {
            b += 1;
            assert!(b < 100_000, "case {case}: oracle scan runaway");
        }
        assert_eq!(m, BigInt::from(b), "case {case}: f = {}", render(&f, Style::Plain));
    }
}

/// Criterion 8: 200 threshold brackets at epsilon 2⁻²⁰: P holds at hi,
/// fails at lo, the width honors epsilon (or the exact hit pins hi), and
/// the ceiling of the bracket is the minimal integer shift.
fn criterion_8() {
    let mut rng = rng_for(0x0808);
    let epsilon = Rat::pow2_inverse(20);
    for case in 0..200 {
        let f = random_poly(&mut rng, 1, 8, true);
        let bracket = optimal_threshold(&f, &epsilon).expect("bisection runs");
        assert!(
            predicate_p(&f, bracket.hi()).expect("predicate runs").holds(),
            "case {case}: P must hold at hi"
        );
        assert!(
            !predicate_p(&f, bracket.lo()).expect("predicate runs").holds(),
            "case {case}: P must fail at lo"
        );
        match bracket.exact() {
            Some(exact) => assert_eq!(exact, bracket.hi(), "case {case}: exact pins hi"),
            None => assert!(
                &(bracket.hi() - bracket.lo()) <= &epsilon,
                "case {case}: bracket wider than epsilon"
            ),
        }
        let m = minimal_integer_shift(&f).expect("search runs");
        assert_eq!(bracket.hi().ceil(), m, "case {case}: ceiling consistency");
    }
}

/// Criterion 9: 1000 parse∘render round-trips are identities, and
/// certificates survive the JSON emit → read → verify cycle.
fn criterion_9() {
    let mut rng = rng_for(0x0909);
    for case in 0..1000 {
        let f = if case % 97 == 0 {
            Poly::zero()
        } else {
            let deg = rng.gen_range(0..=12);
            let mut coeffs: Vec<Rat> = (0..=deg)
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        Rat::zero()
                    } else {
                        random_rat(&mut rng, -99, 99, 12)
                    }
                })
                .collect();
            if coeffs[deg].is_zero() {
                coeffs[deg] = Rat::one();
            }
            Poly::from_ascending(coeffs)
        };
        let text = render(&f, Style::Plain);
        let back = parse(&text).unwrap_or_else(|e| panic!("case {case}: {text}: {e}"));
        assert_eq!(back.poly, f, "case {case}: {text}");
    }

    for case in 0..100 {
        let f = factored_instance(&mut rng);
        let cert = certify_minimal(&f, &ShiftMode::Integer).expect("certificate exists");
        let json = serde_json::to_string(&CertificateDoc::from_certificate(&cert))
            .expect("certificate serializes");
        let doc: CertificateDoc = serde_json::from_str(&json).expect("certificate deserializes");
        let read_back = doc.into_certificate().unwrap_or_else(|e| panic!("case {case}: {e}"));
        assert_eq!(verify(&read_back), VerifyOutcome::Valid, "case {case}");
        assert_eq!(read_back.shift(), cert.shift(), "case {case}");
    }

    // The same cycle once more through the CLI surface.
    let emitted = match run(cli(&["certify", QUINTIC, "--format", "json"])) {
        Outcome::Success(json) => json,
        other => panic!("CLI returned {other:?}"),
    };
    match run(cli(&["verify", &emitted])) {
        Outcome::Success(text) => assert!(text.contains("verify: valid"), "{text}"),
        other => panic!("CLI verify returned {other:?}"),
    }
}

#[test]
fn acceptance() {
    let seconds = Duration::from_secs;
    let reports = vec![
        run_criterion(
            1,
            "quintic fixture: integer-mode certificate, exact table, < 1 ms",
            None,
            criterion_1,
        ),
        run_criterion(2, "quintic fixture: f(4) = 12025 exactly", None, criterion_2),
        run_criterion(
            3,
            "quartic fixture: negative index 1 at b = 5; minimal shift and threshold both 10",
            None,
            criterion_3,
        ),
        run_criterion(
            4,
            "500 factored instances certify and verify Valid",
            Some(seconds(30)),
            criterion_4,
        ),
        run_criterion(
            5,
            "500 predicate extensions stay nonnegative upward",
            Some(seconds(10)),
            criterion_5,
        ),
        run_criterion(
            6,
            "500 Lagrange bounds sound against evaluation and root scan",
            Some(seconds(30)),
            criterion_6,
        ),
        run_criterion(
            7,
            "200 minimal shifts equal the linear-scan oracle",
            Some(seconds(20)),
            criterion_7,
        ),
        run_criterion(
            8,
            "200 threshold brackets valid and consistent with the oracle",
            Some(seconds(60)),
            criterion_8,
        ),
        run_criterion(
            9,
            "1000 parse round-trips and certificate JSON round-trips exact",
            None,
            criterion_9,
        ),
    ];

    let mut failed = false;
    for report in &reports {
        match &report.result {
            Ok(elapsed) => {
                println!(
                    "PASS criterion {}: {} ({elapsed:.1?})",
                    report.number, report.label
                );
            }
            Err(message) => {
                failed = true;
                println!(
                    "FAIL criterion {}: {} [{message}]",
                    report.number, report.label
                );
            }
        }
    }
    assert!(!failed, "one or more acceptance criteria failed; see the lines above");
}
