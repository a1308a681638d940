//! Closed forms for bilaterally symmetric matchings with crossing number
//! at most `d`, `d = 1, 2, 3`, and the second order recurrence satisfied
//! by the even-indexed `d = 3` sequence.

use num_bigint::{BigInt, BigUint};

use super::verify::VerificationReport;
use crate::error::{Error, Result};
use crate::factorial::FactorialTable;
use crate::walks::rational_to_count;
use crate::Rational;

/// `bsm_m(d)`: bilaterally symmetric matchings on `[2m]` with no
/// `(d+1)`-crossing. Even `m = 2n` and odd `m = 2n + 1` use separate
/// formulas.
pub fn bsm_closed_form(d: usize, m: usize) -> Result<BigUint> {
    let mut f = FactorialTable::new();
    let n = m / 2;
    let even = m.is_multiple_of(2);
    let mut fr = |k: usize| Rational::from_integer(BigInt::from(f.get(k).clone()));
    let value = match (d, even) {
        (1, true) => fr(2 * n) / (fr(n) * fr(n)),
        (1, false) => fr(2 * n + 2) / (fr(n + 1) * fr(n + 1) * Rational::from_integer(2.into())),
        (2, true) => {
            let den = fr(n) * fr(n + 1);
            fr(2 * n + 1) * fr(2 * n) / (den.clone() * den)
        }
        (2, false) => fr(2 * n + 1) * fr(2 * n + 2) / (fr(n) * fr(n + 1) * fr(n + 1) * fr(n + 2)),
        (3, true) => {
            let mut sum = Rational::from_integer(0.into());
            for s in 0..=n {
                let left = Rational::from_integer(2.into()) * fr(2 * s + 1)
                    / (fr(s) * fr(s) * fr(s + 1) * fr(s + 2));
                let right = fr(2 * n) / (fr(n - s) * fr(n - s + 1));
                sum += left * right;
            }
            sum
        }
        (3, false) => {
            let mut sum = Rational::from_integer(0.into());
            for s in 0..=n {
                let left = Rational::from_integer(2.into()) * fr(2 * s + 2)
                    / (fr(s) * fr(s + 1) * fr(s + 2) * fr(s + 2));
                let right = fr(2 * n + 1) / (fr(n - s) * fr(n - s + 1));
                sum += left * right;
            }
            sum
        }
        _ => return Err(Error::UnsupportedHeight(d)),
    };
    Ok(rational_to_count(&value))
}

/// Checks
/// `(n+5)(n+4)(n+3) v_{n+2} = 4(5n^2+30n+43)(2n+3) v_{n+1} - 36(2n+3)(2n+1)(n+1) v_n`
/// on every window of `values` (indexed from `n = 0`), plus the initial
/// conditions `v_0 = 1`, `v_1 = 3`.
pub fn check_bsm3_recurrence(values: &[BigUint]) -> Result<VerificationReport> {
    if values.len() < 3 {
        return Err(Error::TooFewValues {
            needed: 3,
            got: values.len(),
        });
    }
    let mut report = VerificationReport::new(
        "bsm3-recurrence",
        format!("d=3, n=0..={}", values.len() - 1),
    );
    report.push(
        Some(3),
        0,
        "initial v_0",
        BigInt::from(values[0].clone()),
        BigInt::from(1),
    );
    report.push(
        Some(3),
        1,
        "initial v_1",
        BigInt::from(values[1].clone()),
        BigInt::from(3),
    );
    for (n, w) in values.windows(3).enumerate() {
        let k = BigInt::from(n);
        let v: Vec<BigInt> = w.iter().map(|x| BigInt::from(x.clone())).collect();
        let lhs = (&k + 5) * (&k + 4) * (&k + 3) * &v[2];
        let rhs = 4 * (5 * &k * &k + 30 * &k + 43) * (2 * &k + 3) * &v[1]
            - 36 * (2 * &k + 3) * (2 * &k + 1) * (&k + 1) * &v[0];
        report.push(Some(3), n, "recurrence", lhs, rhs);
    }
    Ok(report.finish())
}
