//! Division-free determinants over a commutative ring.
//!
//! Truncated series have zero divisors, so elimination is off the table.
//! Small matrices use the Leibniz expansion; larger ones go through
//! Berkowitz's characteristic polynomial algorithm, O(d^4) ring operations.

use crate::error::{Error, Result};
use crate::scalar::CommutativeRing;

/// Largest dimension handled by the Leibniz expansion in [`determinant`].
pub const LEIBNIZ_MAX_DIM: usize = 5;

fn validate<R: CommutativeRing>(m: &[Vec<R>]) -> Result<()> {
    let d = m.len();
    if d == 0 {
        return Err(Error::NotSquare("empty matrix".into()));
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != d {
            return Err(Error::NotSquare(format!(
                "row {i} has {} entries, expected {d}",
                row.len()
            )));
        }
    }
    let first = &m[0][0];
    for row in m {
        for x in row {
            if !first.compatible(x) {
                return Err(Error::OrderMismatch {
                    left: first.shape_hint(),
                    right: x.shape_hint(),
                });
            }
        }
    }
    Ok(())
}

pub fn determinant<R: CommutativeRing>(m: &[Vec<R>]) -> Result<R> {
    validate(m)?;
    if m.len() <= LEIBNIZ_MAX_DIM {
        Ok(leibniz(m))
    } else {
        Ok(berkowitz(m))
    }
}

pub fn determinant_leibniz<R: CommutativeRing>(m: &[Vec<R>]) -> Result<R> {
    validate(m)?;
    Ok(leibniz(m))
}

pub fn determinant_berkowitz<R: CommutativeRing>(m: &[Vec<R>]) -> Result<R> {
    validate(m)?;
    Ok(berkowitz(m))
}

fn leibniz<R: CommutativeRing>(m: &[Vec<R>]) -> R {
    let d = m.len();
    let mut acc = m[0][0].zero_like();
    let mut perm: Vec<usize> = (0..d).collect();
    let mut counters = vec![0usize; d];
    let mut odd = false;

    let add_term = |perm: &[usize], odd: bool, acc: &mut R| {
        let mut term = m[0][perm[0]].clone();
        for (i, &j) in perm.iter().enumerate().skip(1) {
            term = term.ring_mul(&m[i][j]);
        }
        *acc = if odd {
            acc.ring_sub(&term)
        } else {
            acc.ring_add(&term)
        };
    };

    // Heap's algorithm: each step is one transposition, flipping the sign.
    add_term(&perm, odd, &mut acc);
    let mut i = 1;
    while i < d {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            odd = !odd;
            add_term(&perm, odd, &mut acc);
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    acc
}

fn berkowitz<R: CommutativeRing>(m: &[Vec<R>]) -> R {
    let n = m.len();
    let zero = m[0][0].zero_like();
    let one = m[0][0].one_like();

    // Characteristic polynomial coefficients of the trailing k x k block,
    // highest degree first: det(xI - A) = c[0] x^k + ... + c[k].
    let mut poly = vec![one.clone(), m[n - 1][n - 1].ring_neg()];
    for k in 2..=n {
        let top = n - k;
        let a = &m[top][top];
        let row: Vec<&R> = m[top][top + 1..].iter().collect();
        let col: Vec<R> = m[top + 1..].iter().map(|r| r[top].clone()).collect();

        // Toeplitz column: 1, -a, -R C, -R A C, ..., -R A^(k-2) C.
        let mut toeplitz = Vec::with_capacity(k + 1);
        toeplitz.push(one.clone());
        toeplitz.push(a.ring_neg());
        let mut v = col;
        for step in 0..k - 1 {
            let dot = row
                .iter()
                .zip(&v)
                .fold(zero.clone(), |s, (r, x)| s.ring_add(&r.ring_mul(x)));
            toeplitz.push(dot.ring_neg());
            if step + 1 < k - 1 {
                v = mat_vec(m, top + 1, &v, &zero);
            }
        }

        let mut next = Vec::with_capacity(k + 1);
        for i in 0..=k {
            let mut s = zero.clone();
            for (j, p) in poly.iter().enumerate().take(i + 1) {
                s = s.ring_add(&toeplitz[i - j].ring_mul(p));
            }
            next.push(s);
        }
        poly = next;
    }

    let last = poly.pop().expect("nonempty characteristic polynomial");
    if n.is_multiple_of(2) {
        last
    } else {
        last.ring_neg()
    }
}

/// Product of the trailing block `m[from.., from..]` with `v`.
fn mat_vec<R: CommutativeRing>(m: &[Vec<R>], from: usize, v: &[R], zero: &R) -> Vec<R> {
    m[from..]
        .iter()
        .map(|row| {
            row[from..]
                .iter()
                .zip(v)
                .fold(zero.clone(), |s, (a, x)| s.ring_add(&a.ring_mul(x)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::bessel_i;
    use crate::{Integer, Rational, Series};

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<Integer>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Integer::from(x)).collect())
            .collect()
    }

    #[test]
    fn integer_determinants() {
        let m = int_matrix(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // 2(3*-2 - 20) + 1(1*-2 - 0) = -52 - 2 = -54
        assert_eq!(determinant_leibniz(&m).unwrap(), Integer::from(-54));
        assert_eq!(determinant_berkowitz(&m).unwrap(), Integer::from(-54));
        let one = int_matrix(&[&[7]]);
        assert_eq!(determinant_berkowitz(&one).unwrap(), Integer::from(7));
        assert_eq!(determinant_leibniz(&one).unwrap(), Integer::from(7));
    }

    #[test]
    fn vandermonde_six_by_six() {
        let xs = [1i64, 2, 3, 5, 7, 11];
        let m: Vec<Vec<Integer>> = xs
            .iter()
            .map(|&x| (0..6).map(|k| Integer::from(x.pow(k))).collect())
            .collect();
        let mut expected = Integer::from(1);
        for i in 0..6 {
            for j in i + 1..6 {
                expected *= Integer::from(xs[j] - xs[i]);
            }
        }
        assert_eq!(determinant(&m).unwrap(), expected);
        assert_eq!(determinant_leibniz(&m).unwrap(), expected);
    }

    #[test]
    fn identity_series_matrix() {
        let o = Series::one(3);
        let z = Series::zero(3);
        let m = vec![vec![o.clone(), z.clone()], vec![z, o.clone()]];
        assert_eq!(determinant(&m).unwrap(), o);
    }

    #[test]
    fn one_by_one_catalan_kernel() {
        let order = 12;
        let entry = bessel_i::<Rational>(0, order)
            .try_sub(&bessel_i(2, order))
            .unwrap();
        let det = determinant(&[vec![entry]]).unwrap();
        let mut f = crate::factorial::FactorialTable::new();
        for k in 0..=order {
            let expected = if k % 2 == 0 {
                let n = k / 2;
                let a = f.get(n).clone();
                Rational::new(1.into(), (a * f.get(n + 1)).into())
            } else {
                Rational::from_integer(0.into())
            };
            assert_eq!(*det.coeff(k).unwrap(), expected, "t^{k}");
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        let empty: Vec<Vec<Integer>> = vec![];
        assert!(matches!(determinant(&empty), Err(Error::NotSquare(_))));
        let ragged = int_matrix(&[&[1, 2], &[3]]);
        assert!(matches!(determinant(&ragged), Err(Error::NotSquare(_))));
        let mixed = vec![
            vec![Series::one(2), Series::zero(3)],
            vec![Series::zero(2), Series::one(2)],
        ];
        assert!(matches!(
            determinant(&mixed),
            Err(Error::OrderMismatch { .. })
        ));
    }
}
