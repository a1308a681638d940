//! Lattice walks in the Weyl chamber `W^d = { x_1 > x_2 > ... > x_d > 0 }`.
//!
//! Two walk models are counted here, each by a layer-by-layer dynamic
//! program:
//!
//! * ballot walks, with steps `+e_i` only (these count standard skew Young
//!   tableaux), cross-checked by a determinant of inverse factorials;
//! * oscillating walks, with steps `±e_i` (these count oscillating
//!   tableaux of bounded height).
//!
//! Points of the chamber and partitions are separate types. A partition
//! `p` of height at most `d` corresponds to the chamber point
//! `p + (d, d-1, ..., 1)`; the conversion is always explicit.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::factorial::FactorialTable;
use crate::series::determinant;
use crate::Rational;

/// A point with strictly decreasing positive integer coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylPoint(Vec<u32>);

impl WeylPoint {
    pub fn new(coords: Vec<u32>) -> Result<Self> {
        if !Self::is_valid(&coords) {
            return Err(Error::InvalidWeylPoint(coords));
        }
        Ok(WeylPoint(coords))
    }

    fn is_valid(coords: &[u32]) -> bool {
        !coords.is_empty()
            && coords.last().is_some_and(|&x| x > 0)
            && coords.windows(2).all(|w| w[0] > w[1])
    }

    /// The staircase `(d, d-1, ..., 1)`, image of the empty partition.
    pub fn staircase(d: usize) -> Self {
        assert!(d > 0, "the chamber needs at least one dimension");
        WeylPoint((1..=d as u32).rev().collect())
    }

    /// `p + (d, ..., 1)`; fails when `p` has more than `d` parts.
    pub fn from_partition(p: &Partition, d: usize) -> Result<Self> {
        if p.height() > d || d == 0 {
            return Err(Error::DimensionMismatch {
                left: p.height(),
                right: d,
            });
        }
        let coords = (0..d).map(|i| p.part(i) + (d - i) as u32).collect();
        Ok(WeylPoint(coords))
    }

    /// `self - (d, ..., 1)`.
    pub fn to_partition(&self) -> Partition {
        let d = self.dim();
        let parts = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (d - i) as u32)
            .collect();
        Partition::from_parts_unchecked(parts)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    /// Sum of the coordinates, `|x|`.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }
}

impl fmt::Debug for WeylPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for WeylPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

/// Integer partition, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Accepts weakly decreasing parts; trailing zeros are dropped.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), zero beyond the height.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Shapes reachable by adding one square, keeping at most `max_height`
    /// rows when given.
    pub fn add_one(&self, max_height: Option<usize>) -> Vec<Partition> {
        let h = self.height();
        let mut out = Vec::new();
        for r in 0..=h {
            if r == h && max_height.is_some_and(|m| h + 1 > m) {
                continue;
            }
            if r == 0 || self.part(r - 1) > self.part(r) {
                let mut parts = self.0.clone();
                if r == h {
                    parts.push(1);
                } else {
                    parts[r] += 1;
                }
                out.push(Partition(parts));
            }
        }
        out
    }

    /// Shapes reachable by removing one square.
    pub fn remove_one(&self) -> Vec<Partition> {
        let h = self.height();
        let mut out = Vec::new();
        for r in 0..h {
            if self.part(r) > self.part(r + 1) {
                let mut parts = self.0.clone();
                parts[r] -= 1;
                out.push(Partition::from_parts_unchecked(parts));
            }
        }
        out
    }

    /// Whether the diagrams differ in exactly one square.
    pub fn adjacent(&self, other: &Partition) -> bool {
        let h = self.height().max(other.height());
        let mut diff = 0u32;
        for i in 0..h {
            diff += self.part(i).abs_diff(other.part(i));
            if diff > 1 {
                return false;
            }
        }
        diff == 1
    }

    /// Number of squares in the symmetric difference of the diagrams.
    pub fn distance(&self, other: &Partition) -> usize {
        let h = self.height().max(other.height());
        (0..h)
            .map(|i| self.part(i).abs_diff(other.part(i)) as usize)
            .sum()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        write_joined(f, &self.0)
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, xs: &[u32]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn same_dim(a: &WeylPoint, b: &WeylPoint) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(())
}

/// Endpoint distribution of a walk model after a number of steps.
pub type Layer = BTreeMap<WeylPoint, BigUint>;

fn push_count(layer: &mut Layer, p: Vec<u32>, c: &BigUint) {
    *layer.entry(WeylPoint(p)).or_default() += c;
}

/// Ballot walks (`+e_i` steps) from `lambda`: entry `k` of the result is
/// the distribution after `k` steps. With `bound`, only points below it
/// coordinatewise are kept, which is exact for counting walks to `bound`.
pub fn ballot_walk_layers(
    lambda: &WeylPoint,
    steps: usize,
    bound: Option<&WeylPoint>,
) -> Vec<Layer> {
    let mut layers = Vec::with_capacity(steps + 1);
    let mut current = Layer::new();
    current.insert(lambda.clone(), BigUint::one());
    layers.push(current.clone());
    for _ in 0..steps {
        let mut next = Layer::new();
        for (p, c) in &current {
            let x = p.coords();
            for i in 0..x.len() {
                let y = x[i] + 1;
                if i > 0 && y >= x[i - 1] {
                    continue;
                }
                if bound.is_some_and(|b| y > b.coords()[i]) {
                    continue;
                }
                let mut q = x.to_vec();
                q[i] = y;
                push_count(&mut next, q, c);
            }
        }
        layers.push(next.clone());
        current = next;
    }
    layers
}

/// Number `f(lambda; mu)` of ballot walks from `lambda` to `mu` inside the
/// chamber. Zero when `mu` is not above `lambda`.
pub fn ballot_walk_count(lambda: &WeylPoint, mu: &WeylPoint) -> Result<BigUint> {
    same_dim(lambda, mu)?;
    if mu.coords().iter().zip(lambda.coords()).any(|(m, l)| m < l) {
        return Ok(BigUint::zero());
    }
    let steps = (mu.size() - lambda.size()) as usize;
    let layers = ballot_walk_layers(lambda, steps, Some(mu));
    Ok(layers[steps].get(mu).cloned().unwrap_or_default())
}

/// `f(lambda; mu) = n! det(1/(mu_i - lambda_j)!)` with `n = |mu| - |lambda|`.
pub fn ballot_walk_count_det(lambda: &WeylPoint, mu: &WeylPoint) -> Result<BigUint> {
    same_dim(lambda, mu)?;
    if mu.size() < lambda.size() {
        return Ok(BigUint::zero());
    }
    let n = (mu.size() - lambda.size()) as usize;
    let mut fact = FactorialTable::new();
    let m: Vec<Vec<Rational>> = mu
        .coords()
        .iter()
        .map(|&mi| {
            lambda
                .coords()
                .iter()
                .map(|&lj| fact.inverse(mi as i64 - lj as i64))
                .collect()
        })
        .collect();
    let det = determinant(&m)? * Rational::from_integer(BigInt::from(fact.get(n).clone()));
    Ok(rational_to_count(&det))
}

/// Number of standard Young tableaux of `shape`, from
/// `f = N! det(1/(p_i - i + j)!)`.
pub fn hook_length_count(shape: &Partition) -> BigUint {
    let d = shape.height();
    if d == 0 {
        return BigUint::one();
    }
    let mut fact = FactorialTable::new();
    let m: Vec<Vec<Rational>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| fact.inverse(shape.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    let det = determinant(&m).expect("square matrix")
        * Rational::from_integer(BigInt::from(fact.get(shape.size()).clone()));
    rational_to_count(&det)
}

pub(crate) fn rational_to_count(q: &Rational) -> BigUint {
    assert!(q.is_integer(), "count is not an integer: {q}");
    assert!(!q.is_negative(), "count is negative: {q}");
    q.to_integer().to_biguint().expect("nonnegative")
}

/// Oscillating walks (`±e_i` steps, staying strictly inside the chamber)
/// from `lambda`: entry `k` is the endpoint distribution after `k` steps.
/// Coordinates never exceed `lambda_1 + steps`.
pub fn oscillating_walk_layers(lambda: &WeylPoint, steps: usize) -> Vec<Layer> {
    let mut layers = Vec::with_capacity(steps + 1);
    let mut current = Layer::new();
    current.insert(lambda.clone(), BigUint::one());
    layers.push(current.clone());
    for _ in 0..steps {
        let mut next = Layer::new();
        for (p, c) in &current {
            let x = p.coords();
            let d = x.len();
            for i in 0..d {
                let up = x[i] + 1;
                if i == 0 || up < x[i - 1] {
                    let mut q = x.to_vec();
                    q[i] = up;
                    push_count(&mut next, q, c);
                }
                let down = x[i] - 1;
                let floor = if i + 1 < d { x[i + 1] } else { 0 };
                if down > floor {
                    let mut q = x.to_vec();
                    q[i] = down;
                    push_count(&mut next, q, c);
                }
            }
        }
        layers.push(next.clone());
        current = next;
    }
    layers
}

/// `b_n(lambda; mu)`: oscillating walks of length `n` from `lambda` to `mu`.
pub fn oscillating_walk_count(lambda: &WeylPoint, mu: &WeylPoint, n: usize) -> Result<BigUint> {
    same_dim(lambda, mu)?;
    let parity = (lambda.size() + mu.size()) % 2;
    if parity != (n as u64) % 2 {
        return Ok(BigUint::zero());
    }
    let layers = oscillating_walk_layers(lambda, n);
    Ok(layers[n].get(mu).cloned().unwrap_or_default())
}

/// Oscillating walks of length `n` from `lambda` with a free endpoint.
pub fn total_oscillating_walk_count(lambda: &WeylPoint, n: usize) -> BigUint {
    oscillating_walk_layers(lambda, n)[n].values().sum()
}
