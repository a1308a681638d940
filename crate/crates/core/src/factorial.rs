//! Memoized arbitrary-precision factorials.

use num_bigint::BigUint;
use num_traits::One;

use crate::Rational;

/// Factorial table grown on demand. Meant to live for one computation;
/// it is not shared between threads.
#[derive(Debug, Clone)]
pub struct FactorialTable {
    table: Vec<BigUint>,
}

impl Default for FactorialTable {
    fn default() -> Self {
        Self::new()
    }
}

impl FactorialTable {
    pub fn new() -> Self {
        FactorialTable {
            table: vec![BigUint::one()],
        }
    }

    pub fn get(&mut self, n: usize) -> &BigUint {
        while self.table.len() <= n {
            let k = self.table.len();
            let next = &self.table[k - 1] * BigUint::from(k);
            self.table.push(next);
        }
        &self.table[n]
    }

    /// `1/k!` as a rational, with the convention `1/k! = 0` for `k < 0`.
    pub fn inverse(&mut self, k: i64) -> Rational {
        if k < 0 {
            return Rational::from_integer(0.into());
        }
        let f = self.get(k as usize).clone();
        Rational::new(1.into(), f.into())
    }

    pub fn binomial(&mut self, n: usize, k: usize) -> BigUint {
        if k > n {
            return BigUint::from(0u32);
        }
        let num = self.get(n).clone();
        let den = self.get(k).clone() * self.get(n - k);
        num / den
    }
}

/// `(2n-1)!! = 1 * 3 * ... * (2n-1)`, with `(-1)!! = 1`.
pub fn double_factorial_odd(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(2 * k - 1))
}
