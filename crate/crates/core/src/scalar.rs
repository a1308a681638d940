//! Coefficient traits.
//!
//! [`Scalar`] is what a [`TruncatedSeries`](crate::TruncatedSeries) needs
//! from its coefficients: field operations and an embedding of the small
//! integers. [`CommutativeRing`] is the weaker interface used by the
//! division-free determinants; it is implemented for every numeric scalar
//! and for truncated series themselves.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Coefficient type of a truncated series.
///
/// Exponentials and Bessel series divide by small integers, so those
/// operations are only meaningful over a field of characteristic zero
/// (rationals, floats). Ring operations work for any `Scalar`.
pub trait Scalar: Num + Clone + Debug + Neg<Output = Self> + FromPrimitive {
    fn from_index(k: usize) -> Self {
        Self::from_usize(k).expect("small integer must embed in scalar type")
    }
}

impl<T> Scalar for T where T: Num + Clone + Debug + Neg<Output = T> + FromPrimitive {}

/// Commutative ring with unit, with the neutral elements obtained from an
/// existing element (series need to know their truncation order).
pub trait CommutativeRing: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;

    /// Whether `self` and `other` may be combined. Always true for plain
    /// numbers; series additionally require equal truncation orders.
    fn compatible(&self, _other: &Self) -> bool {
        true
    }

    /// Description of the compatibility class, used in error messages.
    fn shape_hint(&self) -> usize {
        0
    }
}

impl<T> CommutativeRing for T
where
    T: Num + Clone + Debug + Neg<Output = T>,
{
    fn zero_like(&self) -> Self {
        T::zero()
    }
    fn one_like(&self) -> Self {
        T::one()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }
    fn ring_neg(&self) -> Self {
        -self.clone()
    }
}
