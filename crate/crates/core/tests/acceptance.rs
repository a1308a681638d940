//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use weylcount::identities::{
    bsm_closed_form, bsm_counts, check_bsm3_recurrence, generalized_gessel_gf, gessel_counts,
    gessel_gf, total_walk_counts, verify_identity, Bounds, IdentityKey, VerificationReport,
};
use weylcount::objects::{count_matchings, MatchingFilter};
use weylcount::series::{bessel_i, determinant_berkowitz, determinant_leibniz};
use weylcount::walks::{
    ballot_walk_count, ballot_walk_count_det, total_oscillating_walk_count, WeylPoint,
};
use weylcount::{Rational, Series};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn run_key(key: IdentityKey, max_d: usize, max_n: usize) -> Result<VerificationReport, String> {
    let r = verify_identity(key, Bounds { max_d, max_n }).map_err(|e| e.to_string())?;
    if let Some(p) = r.mismatches().next() {
        return Err(format!(
            "{key}: d={:?} n={} {}: {} vs {}",
            p.d, p.n, p.detail, p.formula, p.oracle
        ));
    }
    ensure(!r.points.is_empty(), format!("{key}: no points checked"))?;
    Ok(r)
}

fn nums(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

fn c1() -> Outcome {
    let start = Instant::now();
    let r = run_key(IdentityKey::WalksVsDp, 3, 10)?;
    let elapsed = start.elapsed();
    ensure(
        elapsed < Duration::from_secs(60),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "{} (start, end, n) points agree in {:.1?}",
        r.points.len(),
        elapsed
    ))
}

fn c2() -> Outcome {
    for d in 1..=4 {
        let series = total_walk_counts(d, 12).map_err(|e| e.to_string())?;
        let start = WeylPoint::staircase(d);
        for (n, s) in series.iter().enumerate() {
            let dp = total_oscillating_walk_count(&start, n);
            ensure(*s == dp, format!("d={d} n={n}: {s} vs {dp}"))?;
        }
    }
    ensure(
        total_walk_counts(1, 6).unwrap() == nums(&[1, 1, 2, 3, 6, 10, 20]),
        "d=1 prefix",
    )?;
    ensure(
        total_walk_counts(2, 4).unwrap() == nums(&[1, 1, 3, 6, 20]),
        "d=2 prefix",
    )?;
    Ok("d<=4, n<=12 series = DP; d=1 and d=2 prefixes as expected".into())
}

fn c3() -> Outcome {
    let r = run_key(IdentityKey::PermutationsVsLis, 4, 8)?;
    ensure(
        gessel_counts(2, 5).unwrap() == nums(&[1, 1, 2, 5, 14, 42]),
        "Catalan prefix",
    )?;
    Ok(format!(
        "{} points, d<=4, n<=8 against all permutations",
        r.points.len()
    ))
}

fn c4() -> Outcome {
    let r = run_key(IdentityKey::PairsVsBallot, 3, 8)?;
    let distinct = r.points.iter().filter(|p| {
        let (l, n) = p.detail.split_once(" ; ").unwrap_or(("", ""));
        l != n
    });
    ensure(distinct.count() > 0, "no pair with lambda != nu checked")?;
    for d in 1..=3 {
        let st = WeylPoint::staircase(d);
        let a = generalized_gessel_gf(&st, &st, 16).map_err(|e| e.to_string())?;
        let b = gessel_gf(d, 16).map_err(|e| e.to_string())?;
        ensure(a == b, format!("staircase series differs at d={d}"))?;
    }
    Ok(format!("{} points over all (lambda, nu) with coordinates <= d+2; staircase case identical to the permutation series", r.points.len()))
}

fn c5() -> Outcome {
    let r = run_key(IdentityKey::SymmetricMatchingsVsBrute, 0, 7)?;
    ensure(
        r.points
            .iter()
            .any(|p| p.n == 7 && p.detail == "bilateral matchings"),
        "n=7 not covered",
    )?;
    ensure(
        bsm_counts(4).unwrap() == nums(&[1, 1, 3, 7, 25]),
        "prefix 1,1,3,7,25",
    )?;
    Ok("n<=7 against brute force; prefix 1,1,3,7,25".into())
}

fn c6() -> Outcome {
    let r = run_key(IdentityKey::SymmetricFourWay, 3, 5)?;
    Ok(format!("{} comparisons over d<=3, n<=5", r.points.len()))
}

fn c7() -> Outcome {
    let r = run_key(IdentityKey::ClosedFormsVsBrute, 3, 20)?;
    for d in 1..=3 {
        for m in 0..=7 {
            ensure(
                r.points
                    .iter()
                    .any(|p| p.d == Some(d) && p.n == m && p.detail == "bilateral matchings"),
                format!("brute force missing at d={d} m={m}"),
            )?;
        }
        ensure(
            r.points
                .iter()
                .any(|p| p.d == Some(d) && p.n == 20 && p.detail == "determinant series"),
            format!("series missing at d={d}"),
        )?;
    }
    let closed = bsm_closed_form(3, 4).map_err(|e| e.to_string())?;
    // v_2 from the recurrence at n = 0: 60 v_2 = 4*43*3*3 - 36*3
    let from_recurrence = BigUint::from((4u32 * 43 * 3 * 3 - 36 * 3) / 60);
    let brute = count_matchings(
        4,
        &MatchingFilter {
            max_crossing: Some(3),
            bilateral: true,
            use_nesting: false,
        },
    )
    .map_err(|e| e.to_string())?;
    let want = BigUint::from(24u32);
    ensure(
        closed == want && from_recurrence == want && brute == want,
        "bsm_4(3) != 24",
    )?;
    Ok("d<=3: brute force for m<=7, series for m<=20; bsm_4(3) = 24 three ways".into())
}

fn c8() -> Outcome {
    let r = run_key(IdentityKey::Bsm3Recurrence, 3, 10)?;
    let v: Vec<BigUint> = (0..=10)
        .map(|k| bsm_closed_form(3, 2 * k).unwrap())
        .collect();
    ensure(
        v[0] == BigUint::from(1u32) && v[1] == BigUint::from(3u32),
        "initial conditions",
    )?;
    let mut bad = v.clone();
    bad[5] += 1u32;
    ensure(
        !check_bsm3_recurrence(&bad).unwrap().pass,
        "perturbed sequence accepted by the library",
    )?;
    let list: Vec<String> = bad.iter().map(ToString::to_string).collect();
    let out = Command::new(env!("CARGO_BIN_EXE_weylcount"))
        .args(["verify", "bsm3-recurrence", "--values", &list.join(",")])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(
        out.status.code() == Some(1),
        format!("perturbed run exited with {:?}", out.status.code()),
    )?;
    Ok(format!(
        "{} checks pass for n<=10; perturbed sequence exits 1",
        r.points.len()
    ))
}

fn c9() -> Outcome {
    let r = run_key(IdentityKey::HookLengthVsEnum, 3, 8)?;
    for d in 1..=3usize {
        let st = WeylPoint::staircase(d);
        for layer in weylcount::walks::ballot_walk_layers(&st, 8, None) {
            for mu in layer.keys() {
                let a = ballot_walk_count(&st, mu).map_err(|e| e.to_string())?;
                let b = ballot_walk_count_det(&st, mu).map_err(|e| e.to_string())?;
                ensure(a == b, format!("{st} -> {mu}: {a} vs {b}"))?;
            }
        }
    }
    Ok(format!(
        "{} points: every shape of size <= 8, ballot DP = determinant",
        r.points.len()
    ))
}

fn c10() -> Outcome {
    let a = run_key(IdentityKey::SumOfSquares, 0, 6)?;
    let b = run_key(IdentityKey::SumOfCounts, 0, 6)?;
    let c = run_key(IdentityKey::BoundedSumOfSquares, 3, 5)?;
    let d = run_key(IdentityKey::BoundedSum, 3, 5)?;
    let fifteen = a
        .points
        .iter()
        .find(|p| p.n == 3 && p.detail.starts_with("oscillating"))
        .map(|p| p.oracle == BigInt::from(15))
        .unwrap_or(false);
    ensure(fifteen, "n=3 sum of squares is not 15")?;
    let total = a.points.len() + b.points.len() + c.points.len() + d.points.len();
    Ok(format!("{total} points; n=3 sum of squares = 15"))
}

fn c11() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 64,
        failure_persistence: None,
        ..Config::default()
    });
    let small = || (-12i64..=12, 1i64..=5).prop_map(|(a, b)| Rational::new(a.into(), b.into()));
    let poly = move |order: usize| {
        prop::collection::vec(small(), order + 1).prop_map(|c| Series::from_coeffs(c).unwrap())
    };

    runner
        .run(&(-10i64..=10, 0usize..=20), |(s, order)| {
            let b = bessel_i::<Rational>(s, order);
            prop_assert_eq!(&b, &bessel_i::<Rational>(-s, order));
            let a = s.unsigned_abs() as usize;
            for (k, c) in b.coeffs().iter().enumerate() {
                if k < a || (k - a) % 2 == 1 {
                    prop_assert!(num_traits::Zero::is_zero(c));
                }
            }
            Ok(())
        })
        .map_err(|e| format!("Bessel: {e}"))?;

    runner
        .run(&poly(8), |p| {
            let mut c = p.into_coeffs();
            c[0] = Rational::from_integer(0.into());
            let p = Series::from_coeffs(c).unwrap();
            prop_assert_eq!(&p.exp().unwrap() * &(-&p).exp().unwrap(), Series::one(8));
            Ok(())
        })
        .map_err(|e| format!("exp: {e}"))?;

    let matrix = (2usize..=4)
        .prop_flat_map(move |d| prop::collection::vec(prop::collection::vec(poly(3), d), d));
    runner
        .run(&matrix, |m| {
            let lz = determinant_leibniz(&m).unwrap();
            prop_assert_eq!(&lz, &determinant_berkowitz(&m).unwrap());
            let mut swapped = m.clone();
            swapped.swap(0, 1);
            prop_assert_eq!(lz, -&determinant_leibniz(&swapped).unwrap());
            Ok(())
        })
        .map_err(|e| format!("determinant: {e}"))?;

    let ints = (1usize..=6).prop_flat_map(|d| {
        prop::collection::vec(
            prop::collection::vec((-9i64..=9).prop_map(BigInt::from), d),
            d,
        )
    });
    runner
        .run(&ints, |m| {
            prop_assert_eq!(
                determinant_leibniz(&m).unwrap(),
                determinant_berkowitz(&m).unwrap()
            );
            Ok(())
        })
        .map_err(|e| format!("integer determinant: {e}"))?;
    Ok(
        "Bessel symmetry and parity, exp inverse, row swap, Leibniz = Berkowitz (64 cases each)"
            .into(),
    )
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("walk series vs DP", c1),
        ("free endpoint series vs DP", c2),
        ("permutation series vs brute force", c3),
        ("pair series vs ballot DP", c4),
        ("symmetric matchings vs brute force", c5),
        ("four-way equality", c6),
        ("closed forms", c7),
        ("recurrence", c8),
        ("hook length", c9),
        ("sum and sum-of-squares", c10),
        ("series kernel properties", c11),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(msg) => println!("[PASS] criterion {}: {name}: {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {msg}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
