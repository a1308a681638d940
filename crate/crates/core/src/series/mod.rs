//! Truncated formal power series in one variable `t`.
//!
//! A series of order `N` stores the coefficients of `t^0 .. t^N`; every
//! operation is exact through that degree. Binary operations require both
//! operands to have the same order and report [`Error::OrderMismatch`]
//! otherwise. Truncating to a lower order is always explicit.

mod bessel;
mod determinant;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{CommutativeRing, Scalar};

pub use bessel::{bessel_i, bessel_j};
pub use determinant::{determinant, determinant_berkowitz, determinant_leibniz, LEIBNIZ_MAX_DIM};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Scalar> TruncatedSeries<C> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `t`.
    pub fn variable(order: usize) -> Self {
        Self::monomial(1, C::one(), order)
    }

    /// `c * t^k`; vanishes when `k > order`.
    pub fn monomial(k: usize, c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from its coefficients `[t^0, ..., t^order]`.
    /// Fails on an empty vector, since there is no order `-1`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Precondition(
                "a truncated series needs at least one coefficient".into(),
            ));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Pads or cuts `coeffs` to exactly `order + 1` entries.
    pub fn from_coeffs_padded(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> Result<&C> {
        self.coeffs.get(k).ok_or(Error::OutOfRange {
            index: k,
            order: self.order(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Drops every coefficient above `order`. Raising the order is
    /// refused, since the missing coefficients are unknown.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: order,
            });
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.sub_unchecked(other))
    }

    /// Cauchy product truncated at the common order.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let order = self.order();
        let mut out = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// `exp(self)`, from `f' = self' * f` with `f(0) = 1`:
    /// `k f_k = sum_{j=1..k} j p_j f_{k-j}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        let mut f: Vec<C> = Vec::with_capacity(order + 1);
        f.push(C::one());
        for k in 1..=order {
            let mut acc = C::zero();
            for j in 1..=k {
                let p = &self.coeffs[j];
                if p.is_zero() {
                    continue;
                }
                acc = acc + C::from_index(j) * p.clone() * f[k - j].clone();
            }
            f.push(acc / C::from_index(k));
        }
        Ok(TruncatedSeries { coeffs: f })
    }

    /// `n! * [t^n]`, the count an exponential generating function encodes.
    pub fn egf_coefficient(&self, n: usize) -> Result<C> {
        let c = self.coeff(n)?.clone();
        Ok((1..=n).fold(c, |acc, k| acc * C::from_index(k)))
    }
}

impl<C: Scalar> CommutativeRing for TruncatedSeries<C> {
    fn zero_like(&self) -> Self {
        Self::zero(self.order())
    }
    fn one_like(&self) -> Self {
        Self::one(self.order())
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self.add_unchecked(rhs)
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self.sub_unchecked(rhs)
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self.mul_unchecked(rhs)
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn compatible(&self, other: &Self) -> bool {
        self.order() == other.order()
    }
    fn shape_hint(&self) -> usize {
        self.order()
    }
}

// Operator sugar. These panic on an order mismatch; use the `try_*`
// methods when the orders are not known to agree.

impl<C: Scalar> Add for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn add(self, rhs: Self) -> TruncatedSeries<C> {
        self.try_add(rhs).expect("series order mismatch in +")
    }
}

impl<C: Scalar> Sub for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn sub(self, rhs: Self) -> TruncatedSeries<C> {
        self.try_sub(rhs).expect("series order mismatch in -")
    }
}

impl<C: Scalar> Mul for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn mul(self, rhs: Self) -> TruncatedSeries<C> {
        self.try_mul(rhs).expect("series order mismatch in *")
    }
}

impl<C: Scalar> Neg for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn neg(self) -> TruncatedSeries<C> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

impl<C: fmt::Debug> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}
