use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use super::caps::{check_cap, EnumerationCaps};
use crate::error::{Error, Result};
use crate::factorial::{double_factorial_odd, FactorialTable};
use crate::walks::{hook_length_count, Partition};

/// Sequence of shapes `(mu^0, ..., mu^n)` in which consecutive shapes
/// differ by one square.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OscillatingTableau {
    shapes: Vec<Partition>,
}

impl OscillatingTableau {
    pub fn new(shapes: Vec<Partition>) -> Result<Self> {
        if shapes.is_empty() {
            return Err(Error::Precondition(
                "an oscillating tableau has at least one shape".into(),
            ));
        }
        if let Some(k) = shapes.windows(2).position(|w| !w[0].adjacent(&w[1])) {
            return Err(Error::Precondition(format!(
                "shapes {} and {} differ by more or less than one square",
                k,
                k + 1
            )));
        }
        Ok(OscillatingTableau { shapes })
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn len(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Final shape `mu^n`.
    pub fn shape(&self) -> &Partition {
        self.shapes.last().expect("nonempty")
    }

    pub fn start(&self) -> &Partition {
        &self.shapes[0]
    }

    /// Largest height among all shapes.
    pub fn height(&self) -> usize {
        self.shapes.iter().map(Partition::height).max().unwrap_or(0)
    }
}

pub fn tableau_reverse(o: &OscillatingTableau) -> OscillatingTableau {
    let mut shapes = o.shapes.clone();
    shapes.reverse();
    OscillatingTableau { shapes }
}

/// Palindromicity is only defined for tableaux from `∅` to `∅`.
pub fn is_palindromic(o: &OscillatingTableau) -> Result<bool> {
    if !o.start().is_empty() || !o.shape().is_empty() {
        return Err(Error::Precondition(
            "palindromicity needs a tableau starting and ending at the empty shape".into(),
        ));
    }
    Ok(o.shapes.iter().eq(o.shapes.iter().rev()))
}

/// Splits an `∅`-to-`∅` tableau of length `2n` into its first half and
/// its reversed second half, two tableaux from `∅` of the same shape.
pub fn gamma_split(o: &OscillatingTableau) -> Result<(OscillatingTableau, OscillatingTableau)> {
    if !o.len().is_multiple_of(2) || !o.start().is_empty() || !o.shape().is_empty() {
        return Err(Error::Precondition(
            "split needs an even-length tableau from and to the empty shape".into(),
        ));
    }
    let n = o.len() / 2;
    let first = o.shapes[..=n].to_vec();
    let mut second = o.shapes[n..].to_vec();
    second.reverse();
    Ok((
        OscillatingTableau { shapes: first },
        OscillatingTableau { shapes: second },
    ))
}

/// Inverse of [`gamma_split`].
pub fn gamma_combine(p: &OscillatingTableau, q: &OscillatingTableau) -> Result<OscillatingTableau> {
    if p.len() != q.len()
        || p.shape() != q.shape()
        || !p.start().is_empty()
        || !q.start().is_empty()
    {
        return Err(Error::Precondition(
            "combine needs two tableaux from the empty shape with equal length and final shape"
                .into(),
        ));
    }
    let mut shapes = p.shapes.clone();
    shapes.extend(q.shapes.iter().rev().skip(1).cloned());
    Ok(OscillatingTableau { shapes })
}

/// Depth-first stream of oscillating tableaux from `∅`.
#[derive(Debug, Clone)]
pub struct OscillatingTableaux {
    length: usize,
    height_bound: Option<usize>,
    target: Option<Partition>,
    path: Vec<Partition>,
    frames: Vec<std::vec::IntoIter<Partition>>,
    started: bool,
}

impl OscillatingTableaux {
    fn successors(&self, p: &Partition) -> Vec<Partition> {
        let mut next = p.add_one(self.height_bound);
        next.extend(p.remove_one());
        next
    }

    fn viable(&self, p: &Partition, steps_left: usize) -> bool {
        match &self.target {
            Some(t) => {
                let dist = p.distance(t);
                dist <= steps_left && (steps_left - dist).is_multiple_of(2)
            }
            None => true,
        }
    }
}

impl Iterator for OscillatingTableaux {
    type Item = OscillatingTableau;

    fn next(&mut self) -> Option<OscillatingTableau> {
        if !self.started {
            self.started = true;
            let root = Partition::empty();
            if !self.viable(&root, self.length) {
                return None;
            }
            if self.length == 0 {
                return Some(OscillatingTableau { shapes: vec![root] });
            }
            self.frames.push(self.successors(&root).into_iter());
            self.path.push(root);
        }
        loop {
            let frame = self.frames.last_mut()?;
            let Some(p) = frame.next() else {
                self.frames.pop();
                self.path.pop();
                continue;
            };
            let depth = self.path.len();
            if !self.viable(&p, self.length - depth) {
                continue;
            }
            if depth == self.length {
                let mut shapes = self.path.clone();
                shapes.push(p);
                return Some(OscillatingTableau { shapes });
            }
            self.frames.push(self.successors(&p).into_iter());
            self.path.push(p);
        }
    }
}

/// All oscillating tableaux of length `n` starting at `∅`, optionally with
/// every shape of height at most `height_bound`, optionally ending at
/// `final_shape`.
pub fn enumerate_oscillating_tableaux(
    n: usize,
    height_bound: Option<usize>,
    final_shape: Option<&Partition>,
) -> Result<OscillatingTableaux> {
    check_cap(
        "oscillating tableau",
        n,
        EnumerationCaps::current().tableau_length,
    )?;
    Ok(OscillatingTableaux {
        length: n,
        height_bound,
        target: final_shape.cloned(),
        path: Vec::new(),
        frames: Vec::new(),
        started: false,
    })
}

pub fn count_oscillating_tableaux(
    n: usize,
    height_bound: Option<usize>,
    final_shape: Option<&Partition>,
) -> Result<BigUint> {
    let c = enumerate_oscillating_tableaux(n, height_bound, final_shape)?.count();
    Ok(BigUint::from(c))
}

/// Number of enumerated tableaux of length `n` per final shape.
pub fn shape_counts(n: usize, height_bound: Option<usize>) -> Result<BTreeMap<Partition, BigUint>> {
    let mut out: BTreeMap<Partition, BigUint> = BTreeMap::new();
    for o in enumerate_oscillating_tableaux(n, height_bound, None)? {
        *out.entry(o.shape().clone()).or_default() += 1u32;
    }
    Ok(out)
}

/// `binom(n, 2r) (2r-1)!! f^shape` when `|shape| = n - 2r`, else 0: the
/// number of unbounded oscillating tableaux of that shape and length.
pub fn tilde_f(shape: &Partition, n: usize) -> BigUint {
    let size = shape.size();
    if size > n || !(n - size).is_multiple_of(2) {
        return BigUint::zero();
    }
    let r = (n - size) / 2;
    let mut fact = FactorialTable::new();
    fact.binomial(n, 2 * r) * double_factorial_odd(r) * hook_length_count(shape)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[u32]) -> Partition {
        Partition::new(c.to_vec()).unwrap()
    }

    fn tab(shapes: &[&[u32]]) -> OscillatingTableau {
        OscillatingTableau::new(shapes.iter().map(|s| p(s)).collect()).unwrap()
    }

    fn all_empty_tableaux(len: usize) -> Vec<OscillatingTableau> {
        enumerate_oscillating_tableaux(len, None, Some(&Partition::empty()))
            .unwrap()
            .collect()
    }

    #[test]
    fn validation() {
        assert!(OscillatingTableau::new(vec![]).is_err());
        assert!(OscillatingTableau::new(vec![p(&[]), p(&[2])]).is_err());
        assert!(OscillatingTableau::new(vec![p(&[]), p(&[])]).is_err());
        let t = tab(&[&[], &[1], &[1, 1]]);
        assert_eq!(t.len(), 2);
        assert_eq!(t.height(), 2);
    }

    #[test]
    fn enumeration_examples() {
        let shape1: Vec<_> = enumerate_oscillating_tableaux(3, None, Some(&p(&[1])))
            .unwrap()
            .collect();
        assert_eq!(shape1.len(), 3);
        assert!(shape1.contains(&tab(&[&[], &[1], &[2], &[1]])));
        assert!(shape1.contains(&tab(&[&[], &[1], &[1, 1], &[1]])));
        assert!(shape1.contains(&tab(&[&[], &[1], &[], &[1]])));
        assert_eq!(all_empty_tableaux(4).len(), 3);
        assert_eq!(all_empty_tableaux(1).len(), 0);
        assert_eq!(all_empty_tableaux(0).len(), 1);
    }

    #[test]
    fn height_bound_is_respected() {
        for o in enumerate_oscillating_tableaux(8, Some(2), None).unwrap() {
            assert!(o.height() <= 2);
        }
        // only (1,1,1) needs height 3 at length 3
        assert_eq!(
            count_oscillating_tableaux(3, Some(2), None).unwrap(),
            BigUint::from(6u32)
        );
        assert_eq!(
            count_oscillating_tableaux(3, None, None).unwrap(),
            BigUint::from(7u32)
        );
    }

    #[test]
    fn reversal_and_palindromes() {
        let o = tab(&[&[], &[1], &[]]);
        assert_eq!(tableau_reverse(&o), o);
        assert!(is_palindromic(&o).unwrap());
        assert_eq!(
            tableau_reverse(&tab(&[&[], &[1], &[2], &[1]])),
            tab(&[&[1], &[2], &[1], &[]])
        );
        assert!(is_palindromic(&tab(&[&[], &[1], &[2], &[1]])).is_err());
        let palindromes = all_empty_tableaux(4)
            .iter()
            .filter(|o| is_palindromic(o).unwrap())
            .count();
        assert_eq!(palindromes, 3);
    }

    #[test]
    fn gamma_round_trip() {
        let (a, b) = gamma_split(&tab(&[&[], &[1], &[]])).unwrap();
        assert_eq!(a, tab(&[&[], &[1]]));
        assert_eq!(b, tab(&[&[], &[1]]));
        for n in 0..=4 {
            for o in all_empty_tableaux(2 * n) {
                let (a, b) = gamma_split(&o).unwrap();
                assert_eq!(gamma_combine(&a, &b).unwrap(), o);
            }
        }
        assert!(gamma_split(&tab(&[&[], &[1]])).is_err());
        assert!(gamma_combine(&tab(&[&[], &[1]]), &tab(&[&[], &[1], &[2]])).is_err());
    }

    #[test]
    fn split_halves_square_up() {
        for n in 0..=4 {
            let squares: BigUint = shape_counts(n, None).unwrap().values().map(|c| c * c).sum();
            assert_eq!(squares, BigUint::from(all_empty_tableaux(2 * n).len()));
        }
    }

    #[test]
    fn tilde_f_examples() {
        assert_eq!(tilde_f(&p(&[1]), 3), BigUint::from(3u32));
        assert_eq!(tilde_f(&Partition::empty(), 4), BigUint::from(3u32));
        assert_eq!(tilde_f(&p(&[2, 1]), 3), BigUint::from(2u32));
        assert_eq!(tilde_f(&p(&[2, 1]), 4), BigUint::zero());
        assert_eq!(tilde_f(&p(&[2, 1]), 2), BigUint::zero());
    }

    #[test]
    fn tilde_f_matches_enumeration() {
        for n in 0..=7 {
            for (shape, count) in shape_counts(n, None).unwrap() {
                assert_eq!(tilde_f(&shape, n), count, "{shape} at {n}");
            }
        }
    }

    #[test]
    fn cap() {
        let cap = EnumerationCaps::current().tableau_length;
        assert!(enumerate_oscillating_tableaux(cap + 1, None, None).is_err());
    }
}
