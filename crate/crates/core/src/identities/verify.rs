//! Named identities checked point by point against independent oracles.
//!
//! Each identity pairs a "formula" side (a generating function, closed
//! form or determinant) with one or more "oracle" sides (dynamic
//! programming or brute-force enumeration). Both values are recorded at
//! every grid point, pass or fail.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};

use super::closed_form::{bsm_closed_form, check_bsm3_recurrence};
use super::gf::{
    bounded_tableaux_gf, bsm_counts, egf_counts, generalized_gessel_counts, gessel_counts,
    gm_walk_gf, involution_counts, total_walk_counts,
};
use crate::error::{Error, Result};
use crate::factorial::{double_factorial_odd, FactorialTable};
use crate::objects::{
    count_involutions, count_matchings, count_oscillating_tableaux, count_syt,
    enumerate_oscillating_tableaux, is_palindromic, lis_distribution, partitions_of, shape_counts,
    EnumerationCaps, MatchingFilter,
};
use crate::walks::{
    ballot_walk_count_det, ballot_walk_layers, hook_length_count, oscillating_walk_layers,
    Partition, WeylPoint,
};

/// One grid point: formula value, oracle value, and whether they agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointRecord {
    pub d: Option<usize>,
    pub n: usize,
    /// Which oracle or sub-identity this point compares.
    pub detail: String,
    pub formula: BigInt,
    pub oracle: BigInt,
    pub matched: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity_name: String,
    pub checked_range: String,
    pub points: Vec<PointRecord>,
    /// True iff every point matched.
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>, range: impl Into<String>) -> Self {
        VerificationReport {
            identity_name: name.into(),
            checked_range: range.into(),
            points: Vec::new(),
            pass: true,
        }
    }

    pub fn push(
        &mut self,
        d: Option<usize>,
        n: usize,
        detail: impl Into<String>,
        formula: impl Into<BigInt>,
        oracle: impl Into<BigInt>,
    ) {
        let (formula, oracle) = (formula.into(), oracle.into());
        let matched = formula == oracle;
        self.pass &= matched;
        self.points.push(PointRecord {
            d,
            n,
            detail: detail.into(),
            formula,
            oracle,
            matched,
        });
    }

    /// Sorts points by grid coordinate and recomputes the pass flag.
    pub fn finish(mut self) -> Self {
        self.points.sort_by_key(|a| (a.d, a.n));
        self.pass = self.points.iter().all(|p| p.matched);
        self
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &PointRecord> {
        self.points.iter().filter(|p| !p.matched)
    }
}

/// Closed set of identities known to [`verify_identity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityKey {
    SymmetricFourWay,
    SumOfSquares,
    SumOfCounts,
    BoundedSumOfSquares,
    BoundedSum,
    WalksVsDp,
    FreeWalksVsDp,
    PermutationsVsLis,
    PairsVsBallot,
    SymmetricMatchingsVsBrute,
    HookLengthVsEnum,
    ClosedFormsVsBrute,
    Bsm3Recurrence,
}

impl IdentityKey {
    pub const ALL: [IdentityKey; 13] = [
        IdentityKey::SymmetricFourWay,
        IdentityKey::SumOfSquares,
        IdentityKey::SumOfCounts,
        IdentityKey::BoundedSumOfSquares,
        IdentityKey::BoundedSum,
        IdentityKey::WalksVsDp,
        IdentityKey::FreeWalksVsDp,
        IdentityKey::PermutationsVsLis,
        IdentityKey::PairsVsBallot,
        IdentityKey::SymmetricMatchingsVsBrute,
        IdentityKey::HookLengthVsEnum,
        IdentityKey::ClosedFormsVsBrute,
        IdentityKey::Bsm3Recurrence,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityKey::SymmetricFourWay => "symmetric-four-way",
            IdentityKey::SumOfSquares => "sum-of-squares",
            IdentityKey::SumOfCounts => "sum-of-counts",
            IdentityKey::BoundedSumOfSquares => "bounded-sum-of-squares",
            IdentityKey::BoundedSum => "bounded-sum",
            IdentityKey::WalksVsDp => "walks-vs-dp",
            IdentityKey::FreeWalksVsDp => "free-walks-vs-dp",
            IdentityKey::PermutationsVsLis => "permutations-vs-lis",
            IdentityKey::PairsVsBallot => "pairs-vs-ballot",
            IdentityKey::SymmetricMatchingsVsBrute => "symmetric-matchings-vs-brute",
            IdentityKey::HookLengthVsEnum => "hook-length-vs-enum",
            IdentityKey::ClosedFormsVsBrute => "closed-forms-vs-brute",
            IdentityKey::Bsm3Recurrence => "bsm3-recurrence",
        }
    }

    /// Short key accepted as a synonym of [`IdentityKey::as_str`].
    pub fn alias(self) -> Option<&'static str> {
        match self {
            IdentityKey::SymmetricFourWay => Some("cor22-four-way"),
            IdentityKey::SumOfSquares => Some("eq5-sum-squares"),
            IdentityKey::SumOfCounts => Some("eq6-sum"),
            IdentityKey::BoundedSumOfSquares => Some("eq7-bounded-sum-squares"),
            IdentityKey::BoundedSum => Some("eq8-bounded-sum"),
            IdentityKey::WalksVsDp => Some("thm11-vs-dp"),
            IdentityKey::FreeWalksVsDp => Some("thm12-vs-dp"),
            IdentityKey::PermutationsVsLis => Some("thm14-vs-lis"),
            IdentityKey::PairsVsBallot => Some("thm41-vs-pairs"),
            IdentityKey::SymmetricMatchingsVsBrute => Some("prop21-vs-brute"),
            IdentityKey::HookLengthVsEnum => Some("hlf-vs-enum"),
            _ => None,
        }
    }

    /// Grid used when the caller does not choose one: series-vs-DP checks
    /// go to `n = 10`, brute-force backed ones to `n = 6`.
    pub fn default_bounds(self) -> Bounds {
        match self {
            IdentityKey::WalksVsDp | IdentityKey::FreeWalksVsDp | IdentityKey::Bsm3Recurrence => {
                Bounds {
                    max_d: 3,
                    max_n: 10,
                }
            }
            IdentityKey::BoundedSumOfSquares
            | IdentityKey::BoundedSum
            | IdentityKey::SymmetricFourWay => Bounds { max_d: 3, max_n: 5 },
            _ => Bounds { max_d: 3, max_n: 6 },
        }
    }
}

impl fmt::Display for IdentityKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityKey::ALL
            .into_iter()
            .find(|k| k.as_str() == s || k.alias() == Some(s))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Grid `1 <= d <= max_d`, `0 <= n <= max_n`. Keys without a height
/// parameter ignore `max_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_d: usize,
    pub max_n: usize,
}

pub fn verify_identity(key: IdentityKey, bounds: Bounds) -> Result<VerificationReport> {
    let Bounds { max_d, max_n } = bounds;
    let grid = format!("d=1..={max_d}, n=0..={max_n}");
    let n_only = format!("n=0..={max_n}");
    let report = match key {
        IdentityKey::SymmetricFourWay => four_way(max_d, max_n, grid)?,
        IdentityKey::SumOfSquares => sum_of_squares(max_n, n_only)?,
        IdentityKey::SumOfCounts => sum_of_counts(max_n, n_only)?,
        IdentityKey::BoundedSumOfSquares => bounded_sum_of_squares(max_d, max_n, grid)?,
        IdentityKey::BoundedSum => bounded_sum(max_d, max_n, grid)?,
        IdentityKey::WalksVsDp => walks_vs_dp(max_d, max_n)?,
        IdentityKey::FreeWalksVsDp => free_walks_vs_dp(max_d, max_n, grid)?,
        IdentityKey::PermutationsVsLis => permutations_vs_lis(max_d, max_n, grid)?,
        IdentityKey::PairsVsBallot => pairs_vs_ballot(max_d, max_n)?,
        IdentityKey::SymmetricMatchingsVsBrute => symmetric_matchings(max_n, n_only)?,
        IdentityKey::HookLengthVsEnum => hook_length(max_d, max_n)?,
        IdentityKey::ClosedFormsVsBrute => closed_forms(max_d, max_n)?,
        IdentityKey::Bsm3Recurrence => {
            let values = (0..=max_n)
                .map(|k| bsm_closed_form(3, 2 * k))
                .collect::<Result<Vec<_>>>()?;
            let mut r = check_bsm3_recurrence(&values)?;
            r.identity_name = key.as_str().into();
            r
        }
    };
    let mut report = report.finish();
    report.identity_name = key.as_str().into();
    Ok(report)
}

fn big(x: BigUint) -> BigInt {
    BigInt::from(x)
}

fn heights(max_d: usize) -> std::ops::RangeInclusive<usize> {
    1..=max_d.max(1)
}

/// Points of `W^d` with every coordinate at most `max_coord`, sorted.
pub fn chamber_points(d: usize, max_coord: u32) -> Vec<WeylPoint> {
    fn rec(d: usize, below: u32, cur: &mut Vec<u32>, out: &mut Vec<WeylPoint>) {
        if cur.len() == d {
            out.push(WeylPoint::new(cur.clone()).expect("strictly decreasing by construction"));
            return;
        }
        let remaining = (d - cur.len()) as u32;
        for x in remaining..below {
            cur.push(x);
            rec(d, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, max_coord + 1, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn four_way(max_d: usize, max_n: usize, grid: String) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("symmetric-four-way", grid);
    let empty = Partition::empty();
    for d in heights(max_d) {
        let formula = total_walk_counts(d, max_n)?;
        let walks = oscillating_walk_layers(&WeylPoint::staircase(d), max_n);
        for n in 0..=max_n {
            let f = big(formula[n].clone());
            // a palindromic walk of length 2n is a free walk of length n
            // followed by its own reverse
            let free: BigUint = walks[n].values().sum();
            r.push(Some(d), n, "palindromic walks (dp)", f.clone(), big(free));
            let palindromic = enumerate_oscillating_tableaux(2 * n, Some(d), Some(&empty))?
                .filter(|o| is_palindromic(o).unwrap_or(false))
                .count();
            r.push(
                Some(d),
                n,
                "palindromic tableaux",
                f.clone(),
                BigInt::from(palindromic),
            );
            let bsm = count_matchings(
                n,
                &MatchingFilter {
                    max_crossing: Some(d),
                    bilateral: true,
                    use_nesting: false,
                },
            )?;
            r.push(Some(d), n, "bilateral matchings", f.clone(), big(bsm));
            let any_shape = count_oscillating_tableaux(n, Some(d), None)?;
            r.push(Some(d), n, "tableaux of any shape", f, big(any_shape));
        }
    }
    Ok(r)
}

fn sum_of_squares(max_n: usize, range: String) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("sum-of-squares", range);
    let mut fact = FactorialTable::new();
    for n in 0..=max_n {
        let squares: BigUint = shape_counts(n, None)?.values().map(|c| c * c).sum();
        r.push(
            None,
            n,
            "oscillating: sum of squares = (2n-1)!!",
            big(double_factorial_odd(n)),
            big(squares),
        );
        let mut syt_squares = BigUint::from(0u32);
        for shape in partitions_of(n, None) {
            let c = count_syt(&shape)?;
            syt_squares += &c * &c;
        }
        r.push(
            None,
            n,
            "standard: sum of squares = n!",
            big(fact.get(n).clone()),
            big(syt_squares),
        );
    }
    Ok(r)
}

fn sum_of_counts(max_n: usize, range: String) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("sum-of-counts", range);
    let bsm = bsm_counts(max_n)?;
    let inv = involution_counts(max_n)?;
    for n in 0..=max_n {
        let total = count_oscillating_tableaux(n, None, None)?;
        r.push(
            None,
            n,
            "oscillating: sum = exp(t+t^2)",
            big(bsm[n].clone()),
            big(total),
        );
        let mut syt_total = BigUint::from(0u32);
        for shape in partitions_of(n, None) {
            syt_total += count_syt(&shape)?;
        }
        r.push(
            None,
            n,
            "standard: sum = exp(t+t^2/2)",
            big(inv[n].clone()),
            big(syt_total),
        );
    }
    Ok(r)
}

fn bounded_sum_of_squares(max_d: usize, max_n: usize, grid: String) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("bounded-sum-of-squares", grid);
    for d in heights(max_d) {
        let st = WeylPoint::staircase(d);
        let series = egf_counts(&gm_walk_gf(&st, &st, 2 * max_n)?, 2 * max_n)?;
        let walks = oscillating_walk_layers(&st, 2 * max_n);
        for n in 0..=max_n {
            let f = big(series[2 * n].clone());
            let squares: BigUint = shape_counts(n, Some(d))?.values().map(|c| c * c).sum();
            r.push(
                Some(d),
                n,
                "bounded tableaux: sum of squares",
                f.clone(),
                big(squares),
            );
            let closed = walks[2 * n].get(&st).cloned().unwrap_or_default();
            r.push(Some(d), n, "closed walks (dp)", f.clone(), big(closed));
            for (label, use_nesting) in [
                ("noncrossing matchings", false),
                ("nonnesting matchings", true),
            ] {
                let c = count_matchings(
                    n,
                    &MatchingFilter {
                        max_crossing: Some(d),
                        bilateral: false,
                        use_nesting,
                    },
                )?;
                r.push(Some(d), n, label, f.clone(), big(c));
            }
        }
    }
    Ok(r)
}

fn bounded_sum(max_d: usize, max_n: usize, grid: String) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("bounded-sum", grid);
    for d in heights(max_d) {
        let series = egf_counts(&bounded_tableaux_gf(d, max_n)?, max_n)?;
        let main = total_walk_counts(d, max_n)?;
        for n in 0..=max_n {
            let f = big(series[n].clone());
            let total = count_oscillating_tableaux(n, Some(d), None)?;
            r.push(Some(d), n, "bounded tableaux: sum", f.clone(), big(total));
            r.push(Some(d), n, "det(J) construction", f, big(main[n].clone()));
        }
    }
    Ok(r)
}

fn walks_vs_dp(max_d: usize, max_n: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(
        "walks-vs-dp",
        format!("d=1..={max_d}, coordinates <= d+3, n=0..={max_n}"),
    );
    for d in heights(max_d) {
        let points = chamber_points(d, d as u32 + 3);
        for lambda in &points {
            let layers = oscillating_walk_layers(lambda, max_n);
            for mu in &points {
                let series = egf_counts(&gm_walk_gf(lambda, mu, max_n)?, max_n)?;
                for (n, layer) in layers.iter().enumerate() {
                    let dp = layer.get(mu).cloned().unwrap_or_default();
                    r.push(
                        Some(d),
                        n,
                        format!("{lambda} -> {mu}"),
                        big(series[n].clone()),
                        big(dp),
                    );
                }
            }
        }
    }
    Ok(r)
}

fn free_walks_vs_dp(max_d: usize, max_n: usize, grid: String) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("free-walks-vs-dp", grid);
    for d in heights(max_d) {
        let series = total_walk_counts(d, max_n)?;
        let layers = oscillating_walk_layers(&WeylPoint::staircase(d), max_n);
        for n in 0..=max_n {
            let dp: BigUint = layers[n].values().sum();
            r.push(
                Some(d),
                n,
                "free endpoint walks",
                big(series[n].clone()),
                big(dp),
            );
        }
    }
    Ok(r)
}

fn permutations_vs_lis(max_d: usize, max_n: usize, grid: String) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("permutations-vs-lis", grid);
    let dists = (0..=max_n)
        .map(lis_distribution)
        .collect::<Result<Vec<_>>>()?;
    for d in heights(max_d) {
        let series = gessel_counts(d, max_n)?;
        for n in 0..=max_n {
            let brute: BigUint = dists[n].iter().take(d + 1).sum();
            r.push(Some(d), n, "is(w) <= d", big(series[n].clone()), big(brute));
        }
    }
    Ok(r)
}

fn pairs_vs_ballot(max_d: usize, max_n: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(
        "thm41-vs-pairs",
        format!(
            "d=1..={max_d}, lambda, nu with coordinates <= d+2 and |lambda| >= |nu|, n=0..={max_n}"
        ),
    );
    for d in heights(max_d) {
        let points = chamber_points(d, d as u32 + 2);
        let max_k = points.iter().map(WeylPoint::size).max().unwrap_or(0)
            - points.iter().map(WeylPoint::size).min().unwrap_or(0);
        let layers: Vec<_> = points
            .iter()
            .map(|p| ballot_walk_layers(p, max_n + max_k as usize, None))
            .collect();
        for (a, lambda) in points.iter().enumerate() {
            for (b, nu) in points.iter().enumerate() {
                if lambda.size() < nu.size() {
                    continue;
                }
                let k = (lambda.size() - nu.size()) as usize;
                let series = generalized_gessel_counts(lambda, nu, max_n)?;
                for n in 0..=max_n {
                    let pairs: BigUint = layers[a][n]
                        .iter()
                        .filter_map(|(mu, c)| layers[b][n + k].get(mu).map(|e| c * e))
                        .sum();
                    r.push(
                        Some(d),
                        n,
                        format!("{lambda} ; {nu}"),
                        big(series[n].clone()),
                        big(pairs),
                    );
                }
            }
        }
    }
    Ok(r)
}

fn symmetric_matchings(max_n: usize, range: String) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("symmetric-matchings-vs-brute", range);
    let bsm = bsm_counts(max_n)?;
    let inv = involution_counts(max_n)?;
    let caps = EnumerationCaps::current();
    for n in 0..=max_n {
        let brute = count_matchings(
            n,
            &MatchingFilter {
                bilateral: true,
                ..Default::default()
            },
        )?;
        r.push(
            None,
            n,
            "bilateral matchings",
            big(bsm[n].clone()),
            big(brute),
        );
        if n <= caps.permutations {
            r.push(
                None,
                n,
                "involutions",
                big(inv[n].clone()),
                big(count_involutions(n)?),
            );
        }
    }
    Ok(r)
}

fn hook_length(max_d: usize, max_n: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(
        "hlf-vs-enum",
        format!("partitions of size <= {max_n}; ballot pairs with d=1..={max_d}, start coordinates <= d+2, up to {max_n} steps"),
    );
    for n in 0..=max_n {
        for shape in partitions_of(n, None) {
            r.push(
                None,
                n,
                format!("f^({shape})"),
                big(hook_length_count(&shape)),
                big(count_syt(&shape)?),
            );
        }
    }
    for d in heights(max_d) {
        for lambda in chamber_points(d, d as u32 + 2) {
            let layers = ballot_walk_layers(&lambda, max_n, None);
            for (n, layer) in layers.iter().enumerate() {
                for (mu, dp) in layer {
                    let det = ballot_walk_count_det(&lambda, mu)?;
                    r.push(
                        Some(d),
                        n,
                        format!("f({lambda} ; {mu})"),
                        big(det),
                        big(dp.clone()),
                    );
                }
            }
        }
    }
    Ok(r)
}

fn closed_forms(max_d: usize, max_n: usize) -> Result<VerificationReport> {
    let caps = EnumerationCaps::current();
    let brute_n = max_n.min(caps.matchings);
    let mut r = VerificationReport::new(
        "closed-forms-vs-brute",
        format!(
            "d=1..={}, n=0..={max_n} against the series, n=0..={brute_n} against brute force",
            max_d.min(3)
        ),
    );
    for d in 1..=max_d.clamp(1, 3) {
        let series = total_walk_counts(d, max_n)?;
        for (m, from_series) in series.into_iter().enumerate() {
            let closed = big(bsm_closed_form(d, m)?);
            r.push(
                Some(d),
                m,
                "determinant series",
                closed.clone(),
                big(from_series),
            );
            if m <= brute_n {
                let brute = count_matchings(
                    m,
                    &MatchingFilter {
                        max_crossing: Some(d),
                        bilateral: true,
                        use_nesting: false,
                    },
                )?;
                r.push(Some(d), m, "bilateral matchings", closed, big(brute));
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_round_trip() {
        for k in IdentityKey::ALL {
            assert_eq!(k.as_str().parse::<IdentityKey>().unwrap(), k);
            if let Some(a) = k.alias() {
                assert_eq!(a.parse::<IdentityKey>().unwrap(), k);
            }
        }
        assert_eq!(
            "eq9".parse::<IdentityKey>(),
            Err(Error::UnknownIdentity("eq9".into()))
        );
    }

    #[test]
    fn chamber_point_listing() {
        assert_eq!(chamber_points(1, 4).len(), 4);
        assert_eq!(chamber_points(2, 5).len(), 10);
        assert_eq!(chamber_points(3, 6).len(), 20);
        assert_eq!(chamber_points(2, 2), vec![WeylPoint::staircase(2)]);
    }

    #[test]
    fn report_pass_flag() {
        let mut r = VerificationReport::new("x", "y");
        r.push(None, 0, "a", BigInt::from(1), BigInt::from(1));
        assert!(r.clone().finish().pass);
        r.push(None, 1, "b", BigInt::from(1), BigInt::from(2));
        let r = r.finish();
        assert!(!r.pass);
        assert_eq!(r.mismatches().count(), 1);
    }

    #[test]
    fn sum_of_squares_at_three() {
        let r = verify_identity(IdentityKey::SumOfSquares, Bounds { max_d: 1, max_n: 3 }).unwrap();
        assert!(r.pass);
        let p = r
            .points
            .iter()
            .find(|p| p.n == 3 && p.detail.starts_with("oscillating"))
            .unwrap();
        assert_eq!(p.formula, BigInt::from(15));
        assert_eq!(p.oracle, BigInt::from(15));
    }

    #[test]
    fn four_way_at_d2_n3() {
        let r =
            verify_identity(IdentityKey::SymmetricFourWay, Bounds { max_d: 2, max_n: 3 }).unwrap();
        assert!(r.pass);
        let at: Vec<_> = r
            .points
            .iter()
            .filter(|p| p.d == Some(2) && p.n == 3)
            .collect();
        assert_eq!(at.len(), 4);
        assert!(at.iter().all(|p| p.oracle == BigInt::from(6)));
    }

    #[test]
    fn brute_force_keys_respect_caps() {
        let too_far = Bounds {
            max_d: 1,
            max_n: EnumerationCaps::current().matchings + 1,
        };
        assert!(matches!(
            verify_identity(IdentityKey::SymmetricMatchingsVsBrute, too_far),
            Err(Error::CapExceeded { .. })
        ));
    }
}
