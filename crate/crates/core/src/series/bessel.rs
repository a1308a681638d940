use crate::scalar::Scalar;

use super::TruncatedSeries;

/// Hyperbolic Bessel series `I_s(2t) = sum_n t^(2n+|s|) / (n! (n+|s|)!)`,
/// truncated at `order`. Negative orders use `I_s = I_{-s}`.
pub fn bessel_i<C: Scalar>(s: i64, order: usize) -> TruncatedSeries<C> {
    let s = s.unsigned_abs() as usize;
    let mut out = TruncatedSeries::zero(order);
    if s > order {
        return out;
    }
    // Leading coefficient 1/s!, then c_n = c_{n-1} / (n (n+s)).
    let mut c = (1..=s).fold(C::one(), |acc, k| acc / C::from_index(k));
    let mut n = 0;
    loop {
        let exponent = 2 * n + s;
        if exponent > order {
            break;
        }
        out.coeffs[exponent] = c.clone();
        n += 1;
        c = c / C::from_index(n * (n + s));
    }
    out
}

/// `J_s(2t) = I_s(2t) + I_{s-1}(2t)`.
pub fn bessel_j<C: Scalar>(s: i64, order: usize) -> TruncatedSeries<C> {
    bessel_i::<C>(s, order).add_unchecked(&bessel_i(s - 1, order))
}
