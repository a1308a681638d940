//! Determinant and exponential generating functions.
//!
//! Every function taking an `order` returns a series exact through
//! `t^order`. The `*_counts` helpers pick the order themselves from the
//! largest count requested and read the integers back out.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::factorial::FactorialTable;
use crate::series::{bessel_i, bessel_j, determinant};
use crate::walks::{rational_to_count, WeylPoint};
use crate::{Rational, Series};

fn check_dims(a: &WeylPoint, b: &WeylPoint) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(())
}

fn check_height(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::Precondition("dimension d must be at least 1".into()));
    }
    Ok(())
}

fn det_of(d: usize, entry: impl Fn(usize, usize) -> Series) -> Result<Series> {
    let m: Vec<Vec<Series>> = (0..d)
        .map(|i| (0..d).map(|j| entry(i, j)).collect())
        .collect();
    determinant(&m)
}

/// `sum_n b_n(lambda; mu) t^n / n! = det(I_{mu_i - lambda_j} - I_{mu_i + lambda_j})`,
/// on chamber coordinates.
pub fn gm_walk_gf(lambda: &WeylPoint, mu: &WeylPoint, order: usize) -> Result<Series> {
    check_dims(lambda, mu)?;
    let l = lambda.coords();
    let m = mu.coords();
    det_of(lambda.dim(), |i, j| {
        let (mi, lj) = (m[i] as i64, l[j] as i64);
        &bessel_i::<Rational>(mi - lj, order) - &bessel_i(mi + lj, order)
    })
}

/// `G(t) = det(J_{i-j})`: oscillating walks from the staircase with a
/// free endpoint.
pub fn total_walk_gf(d: usize, order: usize) -> Result<Series> {
    check_height(d)?;
    det_of(d, |i, j| bessel_j(i as i64 - j as i64, order))
}

/// `det(I_{i-j} + I_{i-j-1})`, built from `I` directly. Same series as
/// [`total_walk_gf`]; kept separate so the two constructions can be
/// compared.
pub fn bounded_tableaux_gf(d: usize, order: usize) -> Result<Series> {
    check_height(d)?;
    det_of(d, |i, j| {
        let s = i as i64 - j as i64;
        &bessel_i::<Rational>(s, order) + &bessel_i(s - 1, order)
    })
}

/// `det(I_{i-j})`, whose `t^(2n)` coefficient is `u_d(n) / n!^2`.
pub fn gessel_gf(d: usize, order: usize) -> Result<Series> {
    check_height(d)?;
    det_of(d, |i, j| bessel_i(i as i64 - j as i64, order))
}

/// `det(I_{lambda_i - nu_j})`, whose `t^(2n+k)` coefficient, `k = |lambda| - |nu|`,
/// is `u_d(lambda; nu; n) / (n! (n+k)!)`.
pub fn generalized_gessel_gf(lambda: &WeylPoint, nu: &WeylPoint, order: usize) -> Result<Series> {
    check_dims(lambda, nu)?;
    if lambda.size() < nu.size() {
        return Err(Error::Precondition(format!(
            "|lambda| = {} must be at least |nu| = {}",
            lambda.size(),
            nu.size()
        )));
    }
    let l = lambda.coords();
    let v = nu.coords();
    det_of(lambda.dim(), |i, j| {
        bessel_i(l[i] as i64 - v[j] as i64, order)
    })
}

/// `exp(t + t^2)`: bilaterally symmetric matchings.
pub fn bsm_egf(order: usize) -> Series {
    let p = Series::from_coeffs_padded(vec![Rational::from_integer(0.into()), one(), one()], order);
    p.exp().expect("zero constant term")
}

/// `exp(t + t^2/2)`: involutions.
pub fn involution_egf(order: usize) -> Series {
    let half = Rational::new(1.into(), 2.into());
    let p = Series::from_coeffs_padded(vec![Rational::from_integer(0.into()), one(), half], order);
    p.exp().expect("zero constant term")
}

fn one() -> Rational {
    Rational::from_integer(1.into())
}

/// `n! [t^n]` for `n = 0..=upto`, as nonnegative integers.
///
/// Panics if a coefficient is not a nonnegative integer, which for the
/// counting series in this module would be a bug.
pub fn egf_counts(s: &Series, upto: usize) -> Result<Vec<BigUint>> {
    (0..=upto)
        .map(|n| s.egf_coefficient(n).map(|c| rational_to_count(&c)))
        .collect()
}

pub fn walk_counts(lambda: &WeylPoint, mu: &WeylPoint, max_n: usize) -> Result<Vec<BigUint>> {
    egf_counts(&gm_walk_gf(lambda, mu, max_n)?, max_n)
}

pub fn total_walk_counts(d: usize, max_n: usize) -> Result<Vec<BigUint>> {
    egf_counts(&total_walk_gf(d, max_n)?, max_n)
}

pub fn bsm_counts(max_n: usize) -> Result<Vec<BigUint>> {
    egf_counts(&bsm_egf(max_n), max_n)
}

pub fn involution_counts(max_n: usize) -> Result<Vec<BigUint>> {
    egf_counts(&involution_egf(max_n), max_n)
}

/// `u_d(n) = n!^2 [t^(2n)] det(I_{i-j})` for `n = 0..=max_n`.
pub fn gessel_counts(d: usize, max_n: usize) -> Result<Vec<BigUint>> {
    let s = gessel_gf(d, 2 * max_n)?;
    let mut fact = FactorialTable::new();
    (0..=max_n)
        .map(|n| {
            let f = Rational::from_integer(fact.get(n).clone().into());
            Ok(rational_to_count(&(s.coeff(2 * n)? * &f * &f)))
        })
        .collect()
}

/// `u_d(lambda; nu; n) = n! (n+k)! [t^(2n+k)] det(I_{lambda_i - nu_j})`.
pub fn generalized_gessel_counts(
    lambda: &WeylPoint,
    nu: &WeylPoint,
    max_n: usize,
) -> Result<Vec<BigUint>> {
    check_dims(lambda, nu)?;
    let k = lambda.size().saturating_sub(nu.size()) as usize;
    let s = generalized_gessel_gf(lambda, nu, 2 * max_n + k)?;
    let mut fact = FactorialTable::new();
    (0..=max_n)
        .map(|n| {
            let scale = Rational::from_integer((fact.get(n).clone() * fact.get(n + k)).into());
            Ok(rational_to_count(&(s.coeff(2 * n + k)? * scale)))
        })
        .collect()
}
