//! Exact enumeration of oscillating lattice walks in Weyl chambers and the
//! objects they encode: oscillating tableaux, matchings with bounded
//! crossing number, and permutations with bounded increasing subsequences.
//!
//! Every count is available twice. The [`identities`] module evaluates
//! determinant generating functions built from hyperbolic Bessel series
//! in exact rational arithmetic, and the [`walks`] and [`objects`] modules
//! compute the same numbers by dynamic programming or by brute-force
//! enumeration. [`identities::verify_identity`] pits the two against each
//! other.
//!
//! The series kernel is generic over its coefficient type; the crate root
//! fixes the exact instantiation used everywhere else.

pub mod cli;
pub mod error;
pub mod factorial;
pub mod identities;
pub mod objects;
pub mod scalar;
pub mod series;
pub mod walks;

pub use error::{Error, Result};
pub use scalar::{CommutativeRing, Scalar};
pub use series::TruncatedSeries;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;

/// Arbitrary-precision count.
pub type Count = num_bigint::BigUint;

/// Truncated power series over exact rationals. All generating functions
/// in this crate live here.
pub type Series = TruncatedSeries<Rational>;

/// Double precision series, handy for quick numerical sanity checks.
pub type SeriesF64 = TruncatedSeries<f64>;
