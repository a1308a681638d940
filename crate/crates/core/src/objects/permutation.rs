use num_bigint::BigUint;

use super::caps::{check_cap, EnumerationCaps};
use super::matching::longest_monotone;
use crate::error::{Error, Result};

/// Permutation of `{1, ..., n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x as usize > n || seen[x as usize] {
                return Err(Error::Precondition(format!(
                    "{images:?} is not a permutation of [1..{n}]"
                )));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_involution(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &x)| self.0[x as usize - 1] as usize == i + 1)
    }
}

/// `is(w)`, the length of a longest increasing subsequence.
pub fn longest_increasing(w: &Permutation) -> usize {
    longest_monotone(w.0.iter().copied(), true)
}

/// All permutations of `[n]` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Permutations {
    current: Option<Vec<u32>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        if next_lexicographic(&mut next) {
            self.current = Some(next);
        }
        Some(Permutation(cur))
    }
}

fn next_lexicographic(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn enumerate_permutations(n: usize) -> Result<Permutations> {
    check_cap("permutation", n, EnumerationCaps::current().permutations)?;
    Ok(Permutations {
        current: Some((1..=n as u32).collect()),
    })
}

/// Entry `k` counts permutations of `[n]` with `is(w) = k`.
pub fn lis_distribution(n: usize) -> Result<Vec<BigUint>> {
    let mut hist = vec![0u64; n + 1];
    for w in enumerate_permutations(n)? {
        hist[longest_increasing(&w)] += 1;
    }
    Ok(hist.into_iter().map(BigUint::from).collect())
}

/// `u_d(n)`: permutations of `[n]` whose increasing subsequences have
/// length at most `d`.
pub fn count_lis_bounded(n: usize, d: usize) -> Result<BigUint> {
    Ok(lis_distribution(n)?.into_iter().take(d + 1).sum())
}

pub fn count_involutions(n: usize) -> Result<BigUint> {
    let c = enumerate_permutations(n)?
        .filter(Permutation::is_involution)
        .count();
    Ok(BigUint::from(c))
}
