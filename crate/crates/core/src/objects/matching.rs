use std::fmt;

use num_bigint::BigUint;

use super::caps::{check_cap, EnumerationCaps};
use crate::error::{Error, Result};

/// Perfect matching of `{1, ..., 2n}`, stored as arcs `(i, j)` with
/// `i < j`, sorted by opener.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    arcs: Vec<(u32, u32)>,
}

impl Matching {
    /// Accepts pairs in any order and orientation.
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        let n = pairs.len();
        let mut seen = vec![false; 2 * n + 1];
        let mut arcs = Vec::with_capacity(n);
        for &(a, b) in &pairs {
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            for x in [i, j] {
                let ok = x >= 1 && (x as usize) <= 2 * n && !seen[x as usize];
                if !ok || i == j {
                    return Err(Error::Precondition(format!(
                        "{pairs:?} is not a perfect matching of [1..{}]",
                        2 * n
                    )));
                }
                seen[x as usize] = true;
            }
            arcs.push((i, j));
        }
        arcs.sort_unstable();
        Ok(Matching { arcs })
    }

    /// Number of arcs; the matching lives on `[2n]`.
    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (i, j)) in self.arcs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{{{i},{j}}}")?;
        }
        f.write_str("}")
    }
}

/// Stream of all `(2n-1)!!` matchings of `[2n]`.
///
/// Matching number `k` is decoded from a mixed-radix counter: digit `r`
/// picks which of the remaining unmatched points is joined to the
/// smallest unmatched point. The stream is lexicographic in the digits.
#[derive(Debug, Clone)]
pub struct Matchings {
    n: usize,
    digits: Vec<usize>,
    done: bool,
}

impl Matchings {
    fn decode(&self) -> Matching {
        let mut free: Vec<u32> = (1..=2 * self.n as u32).collect();
        let mut arcs = Vec::with_capacity(self.n);
        for &d in &self.digits {
            let i = free.remove(0);
            let j = free.remove(d);
            arcs.push((i, j));
        }
        arcs.sort_unstable();
        Matching { arcs }
    }

    fn advance(&mut self) {
        for r in (0..self.n).rev() {
            let radix = 2 * (self.n - r) - 1;
            if self.digits[r] + 1 < radix {
                self.digits[r] += 1;
                return;
            }
            self.digits[r] = 0;
        }
        self.done = true;
    }
}

impl Iterator for Matchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.done {
            return None;
        }
        let m = self.decode();
        self.advance();
        Some(m)
    }
}

pub fn enumerate_matchings(n: usize) -> Result<Matchings> {
    check_cap("matching", n, EnumerationCaps::current().matchings)?;
    Ok(Matchings {
        n,
        digits: vec![0; n],
        done: false,
    })
}

/// Length of the longest strictly monotone subsequence (patience sorting).
pub(crate) fn longest_monotone(xs: impl IntoIterator<Item = u32>, increasing: bool) -> usize {
    let mut tails: Vec<u32> = Vec::new();
    for x in xs {
        let key = if increasing { x } else { u32::MAX - x };
        let pos = tails.partition_point(|&t| t < key);
        if pos == tails.len() {
            tails.push(key);
        } else {
            tails[pos] = key;
        }
    }
    tails.len()
}

/// Largest `k` such that `k` arcs pairwise cross, i.e.
/// `i_1 < ... < i_k < j_1 < ... < j_k`.
///
/// Fixing the arc with the smallest opener, the remaining arcs of a
/// crossing family are exactly an increasing chain of closers among arcs
/// that open under it and close after it.
pub fn crossing_number(m: &Matching) -> usize {
    let arcs = &m.arcs;
    let mut best = 0;
    for (r, &(i0, j0)) in arcs.iter().enumerate() {
        let chain = longest_monotone(
            arcs[r + 1..]
                .iter()
                .filter(|&&(i, j)| i < j0 && j > j0 && i > i0)
                .map(|&(_, j)| j),
            true,
        );
        best = best.max(1 + chain);
    }
    best
}

/// Largest `k` such that `k` arcs are pairwise nested,
/// `i_1 < ... < i_k < j_k < ... < j_1`: the longest decreasing run of
/// closers read in opener order.
pub fn nesting_number(m: &Matching) -> usize {
    longest_monotone(m.arcs.iter().map(|&(_, j)| j), false)
}

/// Mirror image in the vertical line `x = n + 1/2`:
/// `(i, j) -> (2n+1-j, 2n+1-i)`.
pub fn reflect_matching(m: &Matching) -> Matching {
    let top = 2 * m.n() as u32 + 1;
    let mut arcs: Vec<(u32, u32)> = m.arcs.iter().map(|&(i, j)| (top - j, top - i)).collect();
    arcs.sort_unstable();
    Matching { arcs }
}

pub fn is_bilaterally_symmetric(m: &Matching) -> bool {
    reflect_matching(m) == *m
}

/// Selection applied by [`count_matchings`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MatchingFilter {
    /// Keep matchings whose statistic is at most this value.
    pub max_crossing: Option<usize>,
    /// Keep only bilaterally symmetric matchings.
    pub bilateral: bool,
    /// Use the nesting number instead of the crossing number.
    pub use_nesting: bool,
}

pub fn count_matchings(n: usize, filter: &MatchingFilter) -> Result<BigUint> {
    let mut count = 0u64;
    for m in enumerate_matchings(n)? {
        if filter.bilateral && !is_bilaterally_symmetric(&m) {
            continue;
        }
        if let Some(c) = filter.max_crossing {
            let stat = if filter.use_nesting {
                nesting_number(&m)
            } else {
                crossing_number(&m)
            };
            if stat > c {
                continue;
            }
        }
        count += 1;
    }
    Ok(BigUint::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorial::double_factorial_odd;

    fn mk(pairs: &[(u32, u32)]) -> Matching {
        Matching::new(pairs.to_vec()).unwrap()
    }

    fn three_crossing_example() -> Matching {
        mk(&[(1, 4), (2, 8), (3, 10), (5, 7), (6, 9)])
    }

    /// Subset-scan oracle: the largest family of arcs that pairwise
    /// satisfy `related`.
    fn brute_statistic(m: &Matching, related: fn((u32, u32), (u32, u32)) -> bool) -> usize {
        let arcs = m.arcs();
        let mut best = 0;
        for mask in 0u32..(1 << arcs.len()) {
            let chosen: Vec<_> = (0..arcs.len())
                .filter(|&k| mask >> k & 1 == 1)
                .map(|k| arcs[k])
                .collect();
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(a, &x)| chosen[a + 1..].iter().all(|&y| related(x, y)));
            if ok {
                best = best.max(chosen.len());
            }
        }
        best
    }

    fn crosses(a: (u32, u32), b: (u32, u32)) -> bool {
        let (x, y) = if a.0 < b.0 { (a, b) } else { (b, a) };
        x.0 < y.0 && y.0 < x.1 && x.1 < y.1
    }

    fn nests(a: (u32, u32), b: (u32, u32)) -> bool {
        let (x, y) = if a.0 < b.0 { (a, b) } else { (b, a) };
        x.0 < y.0 && y.1 < x.1
    }

    #[test]
    fn validation() {
        assert!(Matching::new(vec![(1, 2), (2, 3)]).is_err());
        assert!(Matching::new(vec![(1, 5)]).is_err());
        assert!(Matching::new(vec![(1, 1)]).is_err());
        assert_eq!(mk(&[(4, 1), (3, 2)]), mk(&[(1, 4), (2, 3)]));
        assert_eq!(Matching::new(vec![]).unwrap().n(), 0);
    }

    #[test]
    fn enumeration_sizes() {
        for n in 0..=6 {
            let all: Vec<Matching> = enumerate_matchings(n).unwrap().collect();
            assert_eq!(BigUint::from(all.len()), double_factorial_odd(n));
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), all.len(), "duplicates for n = {n}");
        }
        assert_eq!(enumerate_matchings(2).unwrap().count(), 3);
        assert_eq!(enumerate_matchings(3).unwrap().count(), 15);
        assert_eq!(enumerate_matchings(5).unwrap().count(), 945);
    }

    #[test]
    fn cap_is_a_refusal() {
        let cap = EnumerationCaps::current().matchings;
        assert!(matches!(
            enumerate_matchings(cap + 1),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn crossing_examples() {
        assert_eq!(crossing_number(&three_crossing_example()), 3);
        assert_eq!(brute_statistic(&three_crossing_example(), crosses), 3);
        assert_eq!(crossing_number(&mk(&[(1, 2), (3, 4)])), 1);
        assert_eq!(crossing_number(&mk(&[(1, 3), (2, 4)])), 2);
        assert_eq!(crossing_number(&Matching::new(vec![]).unwrap()), 0);
    }

    #[test]
    fn nesting_examples() {
        assert_eq!(nesting_number(&mk(&[(1, 4), (2, 3)])), 2);
        assert_eq!(nesting_number(&mk(&[(1, 2), (3, 4)])), 1);
        let nonnesting = enumerate_matchings(3)
            .unwrap()
            .filter(|m| nesting_number(m) <= 1)
            .count();
        assert_eq!(nonnesting, 5);
    }

    #[test]
    fn statistics_match_subset_scan() {
        for n in 0..=5 {
            for m in enumerate_matchings(n).unwrap() {
                assert_eq!(crossing_number(&m), brute_statistic(&m, crosses), "{m:?}");
                assert_eq!(nesting_number(&m), brute_statistic(&m, nests), "{m:?}");
            }
        }
    }

    #[test]
    fn reflection_examples() {
        assert_eq!(
            reflect_matching(&three_crossing_example()),
            mk(&[(7, 10), (3, 9), (1, 8), (4, 6), (2, 5)])
        );
        assert!(!is_bilaterally_symmetric(&three_crossing_example()));
        assert_eq!(reflect_matching(&mk(&[(1, 2)])), mk(&[(1, 2)]));
        for n in 0..=5 {
            for m in enumerate_matchings(n).unwrap() {
                assert_eq!(reflect_matching(&reflect_matching(&m)), m);
            }
        }
    }

    #[test]
    fn reflection_preserves_statistics() {
        for n in 0..=5 {
            for m in enumerate_matchings(n).unwrap() {
                let r = reflect_matching(&m);
                assert_eq!(crossing_number(&r), crossing_number(&m));
                assert_eq!(nesting_number(&r), nesting_number(&m));
            }
        }
    }

    #[test]
    fn bilateral_counts() {
        assert!(enumerate_matchings(2)
            .unwrap()
            .all(|m| is_bilaterally_symmetric(&m)));
        let bilateral = MatchingFilter {
            bilateral: true,
            ..Default::default()
        };
        assert_eq!(count_matchings(3, &bilateral).unwrap(), BigUint::from(7u32));
    }

    #[test]
    fn filtered_counts() {
        let f = |max, bilateral| MatchingFilter {
            max_crossing: Some(max),
            bilateral,
            use_nesting: false,
        };
        assert_eq!(
            count_matchings(3, &f(1, false)).unwrap(),
            BigUint::from(5u32)
        );
        assert_eq!(
            count_matchings(2, &f(2, true)).unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(
            count_matchings(2, &f(3, true)).unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(
            count_matchings(4, &f(3, true)).unwrap(),
            BigUint::from(24u32)
        );
    }

    #[test]
    fn crossing_and_nesting_equidistributed() {
        for n in 0..=6 {
            for c in 0..=n {
                let cr = MatchingFilter {
                    max_crossing: Some(c),
                    ..Default::default()
                };
                let ne = MatchingFilter {
                    use_nesting: true,
                    ..cr
                };
                assert_eq!(
                    count_matchings(n, &cr).unwrap(),
                    count_matchings(n, &ne).unwrap()
                );
            }
        }
    }

    #[test]
    fn monotone_runs() {
        assert_eq!(longest_monotone([3, 1, 2], true), 2);
        assert_eq!(longest_monotone([3, 1, 2], false), 2);
        assert_eq!(longest_monotone([], true), 0);
        assert_eq!(longest_monotone([5, 4, 3, 2], false), 4);
    }
}
