//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification or `--expect`
//! comparison fails, 2 on usage, validation or cap errors.

mod output;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

pub use output::{parse_csv, render, Format, OutputRecord, ResultRow};

use crate::identities::{
    bsm_counts, check_bsm3_recurrence, generalized_gessel_counts, gessel_counts, involution_counts,
    total_walk_counts, verify_identity, walk_counts, Bounds, IdentityKey, VerificationReport,
};
use crate::objects::{
    count_lis_bounded, count_matchings, count_syt, enumerate_oscillating_tableaux, is_palindromic,
    lis_distribution, MatchingFilter,
};
use crate::walks::{
    ballot_walk_count, ballot_walk_layers, oscillating_walk_layers, Partition, WeylPoint,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "weylcount",
    version,
    about = "Exact walk, tableau and matching counts, cross-checked"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// File of expected decimal values, one per result row; exit 1 on mismatch.
    #[arg(long, global = true, value_name = "FILE")]
    pub expect: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients of a generating function.
    Gf(GfArgs),
    /// Count objects by enumeration or dynamic programming.
    Count(CountArgs),
    /// Check a named identity against its oracles.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GfKind {
    /// Walks from --from to --to.
    Walks,
    /// Walks from the staircase with free endpoint.
    Total,
    /// Permutations with no increasing subsequence longer than d.
    Gessel,
    /// Pairs of ballot walks from --from and --nu to a common endpoint.
    Gengessel,
    /// Bilaterally symmetric matchings.
    Bsm,
    Involution,
}

#[derive(Debug, Args)]
pub struct GfArgs {
    pub kind: GfKind,
    #[arg(long)]
    pub d: Option<usize>,
    /// Start point, strictly decreasing positive integers, e.g. 3,1.
    #[arg(long, value_parser = parse_weyl)]
    pub from: Option<WeylPoint>,
    #[arg(long, value_parser = parse_weyl)]
    pub to: Option<WeylPoint>,
    #[arg(long, value_parser = parse_weyl)]
    pub nu: Option<WeylPoint>,
    /// Highest power of t kept.
    #[arg(long)]
    pub order: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountKind {
    Matchings,
    Tableaux,
    Walks,
    Syt,
    Lis,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    pub kind: CountKind,
    /// Number of arcs, tableau length, walk length or permutation size.
    #[arg(long)]
    pub n: Option<usize>,
    /// Keep matchings with crossing (or nesting) number at most this.
    #[arg(long)]
    pub max_crossing: Option<usize>,
    /// Only matchings fixed by the reflection i -> 2n+1-i.
    #[arg(long)]
    pub bilateral: bool,
    /// Bound the nesting number instead of the crossing number.
    #[arg(long)]
    pub nesting: bool,
    /// Every shape has at most this many rows.
    #[arg(long)]
    pub height: Option<usize>,
    /// Partition, weakly decreasing, e.g. 3,2 (empty string for the empty shape).
    #[arg(long, value_parser = parse_partition)]
    pub shape: Option<Partition>,
    /// Only tableaux from and to the empty shape that read the same reversed.
    #[arg(long)]
    pub palindromic: bool,
    /// Walk start, strictly decreasing positive integers.
    #[arg(long, value_parser = parse_weyl)]
    pub from: Option<WeylPoint>,
    /// Walk end; without it, walks with any endpoint are counted.
    #[arg(long, value_parser = parse_weyl)]
    pub to: Option<WeylPoint>,
    /// Only +e_i steps.
    #[arg(long)]
    pub ballot: bool,
    /// Dimension check for --from, or the subsequence bound for lis.
    #[arg(long)]
    pub d: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub key: String,
    #[arg(long)]
    pub max_d: Option<usize>,
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Sequence to test instead of the computed one (bsm3-recurrence only).
    #[arg(long, value_delimiter = ',')]
    pub values: Option<Vec<BigUint>>,
}

fn parse_list(s: &str) -> Result<Vec<u32>, String> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|e| format!("{x:?}: {e}")))
        .collect()
}

pub fn parse_weyl(s: &str) -> Result<WeylPoint, String> {
    WeylPoint::new(parse_list(s)?).map_err(|e| e.to_string())
}

pub fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::new(parse_list(s)?).map_err(|e| e.to_string())
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] crate::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read expectation file {path}: {source}")]
    Expect {
        path: PathBuf,
        source: std::io::Error,
    },
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

struct Params(BTreeMap<String, String>);

impl Params {
    fn new() -> Self {
        Params(BTreeMap::new())
    }

    fn set(&mut self, k: &str, v: impl ToString) {
        self.0.insert(k.into(), v.to_string());
    }

    fn opt<T: std::fmt::Display>(&mut self, k: &str, v: &Option<T>) {
        if let Some(v) = v {
            self.set(k, v);
        }
    }

    fn flag(&mut self, k: &str, on: bool) {
        if on {
            self.set(k, "true");
        }
    }
}

fn need<T: Clone>(v: &Option<T>, flag: &str, kind: &str) -> Result<T, CliError> {
    v.clone()
        .ok_or_else(|| usage(format!("{kind} needs --{flag}")))
}

fn table(values: Vec<BigUint>) -> Vec<ResultRow> {
    values
        .into_iter()
        .enumerate()
        .map(|(n, v)| ResultRow::value(n, v))
        .collect()
}

fn cmd_gf(a: &GfArgs, p: &mut Params) -> Result<Vec<ResultRow>, CliError> {
    p.set("order", a.order);
    p.opt("d", &a.d);
    p.opt("from", &a.from);
    p.opt("to", &a.to);
    p.opt("nu", &a.nu);
    let check_d = |pt: &WeylPoint| match a.d {
        Some(d) if d != pt.dim() => Err(usage(format!(
            "--d {d} does not match the dimension of {pt}"
        ))),
        _ => Ok(()),
    };
    Ok(match a.kind {
        GfKind::Walks => {
            let (from, to) = (need(&a.from, "from", "walks")?, need(&a.to, "to", "walks")?);
            check_d(&from)?;
            table(walk_counts(&from, &to, a.order)?)
        }
        GfKind::Total => table(total_walk_counts(need(&a.d, "d", "total")?, a.order)?),
        GfKind::Gessel => table(gessel_counts(need(&a.d, "d", "gessel")?, a.order / 2)?),
        GfKind::Gengessel => {
            let (lambda, nu) = (
                need(&a.from, "from", "gengessel")?,
                need(&a.nu, "nu", "gengessel")?,
            );
            check_d(&lambda)?;
            if lambda.size() < nu.size() {
                return Err(usage(format!("|{lambda}| must be at least |{nu}|")));
            }
            let k = (lambda.size() - nu.size()) as usize;
            if a.order < k {
                return Err(usage(format!(
                    "--order must be at least |lambda| - |nu| = {k}"
                )));
            }
            table(generalized_gessel_counts(&lambda, &nu, (a.order - k) / 2)?)
        }
        GfKind::Bsm => table(bsm_counts(a.order)?),
        GfKind::Involution => table(involution_counts(a.order)?),
    })
}

fn cmd_count(a: &CountArgs, p: &mut Params) -> Result<Vec<ResultRow>, CliError> {
    p.opt("n", &a.n);
    p.opt("max-crossing", &a.max_crossing);
    p.flag("bilateral", a.bilateral);
    p.flag("nesting", a.nesting);
    p.opt("height", &a.height);
    p.opt("shape", &a.shape);
    p.flag("palindromic", a.palindromic);
    p.opt("from", &a.from);
    p.opt("to", &a.to);
    p.flag("ballot", a.ballot);
    p.opt("d", &a.d);
    match a.kind {
        CountKind::Matchings => {
            let n = need(&a.n, "n", "matchings")?;
            let filter = MatchingFilter {
                max_crossing: a.max_crossing,
                bilateral: a.bilateral,
                use_nesting: a.nesting,
            };
            Ok(vec![ResultRow::value(n, count_matchings(n, &filter)?)])
        }
        CountKind::Tableaux => {
            let n = need(&a.n, "n", "tableaux")?;
            if a.palindromic && a.shape.as_ref().is_some_and(|s| !s.is_empty()) {
                return Err(usage("palindromic tableaux end at the empty shape"));
            }
            let target = if a.palindromic {
                Some(Partition::empty())
            } else {
                a.shape.clone()
            };
            let mut count = 0usize;
            for o in enumerate_oscillating_tableaux(n, a.height, target.as_ref())? {
                if !a.palindromic || is_palindromic(&o)? {
                    count += 1;
                }
            }
            Ok(vec![ResultRow::value(n, count)])
        }
        CountKind::Walks => {
            let from = need(&a.from, "from", "walks")?;
            if let Some(d) = a.d.filter(|&d| d != from.dim()) {
                return Err(usage(format!(
                    "--d {d} does not match the dimension of {from}"
                )));
            }
            if a.ballot {
                if let Some(to) = &a.to {
                    let n = to
                        .size()
                        .checked_sub(from.size())
                        .ok_or_else(|| usage("ballot walks only grow"))?;
                    return Ok(vec![ResultRow::value(
                        n as usize,
                        ballot_walk_count(&from, to)?,
                    )]);
                }
                let n = need(&a.n, "n", "walks")?;
                let layers = ballot_walk_layers(&from, n, None);
                return Ok(layers_to_rows(&layers, None));
            }
            let n = need(&a.n, "n", "walks")?;
            let layers = oscillating_walk_layers(&from, n);
            Ok(layers_to_rows(&layers, a.to.as_ref()))
        }
        CountKind::Syt => {
            let shape = need(&a.shape, "shape", "syt")?;
            Ok(vec![ResultRow::value(shape.size(), count_syt(&shape)?)])
        }
        CountKind::Lis => {
            let n = need(&a.n, "n", "lis")?;
            match a.d {
                Some(d) => Ok(vec![ResultRow::value(n, count_lis_bounded(n, d)?)]),
                None => Ok(lis_distribution(n)?
                    .into_iter()
                    .enumerate()
                    .map(|(k, c)| ResultRow {
                        d: Some(k),
                        detail: Some(format!("longest increasing = {k}")),
                        ..ResultRow::value(n, c)
                    })
                    .collect()),
            }
        }
    }
}

fn layers_to_rows(layers: &[crate::walks::Layer], to: Option<&WeylPoint>) -> Vec<ResultRow> {
    layers
        .iter()
        .enumerate()
        .map(|(n, layer)| {
            let c: BigUint = match to {
                Some(t) => layer.get(t).cloned().unwrap_or_default(),
                None => layer.values().sum(),
            };
            ResultRow::value(n, c)
        })
        .collect()
}

fn report_rows(r: &VerificationReport) -> Vec<ResultRow> {
    r.points
        .iter()
        .map(|pt| ResultRow {
            n: pt.n,
            value: pt.formula.to_string(),
            oracle: Some(pt.oracle.to_string()),
            d: pt.d,
            detail: Some(pt.detail.clone()),
            matched: Some(pt.matched),
        })
        .collect()
}

fn cmd_verify(a: &VerifyArgs, p: &mut Params) -> Result<(Vec<ResultRow>, bool), CliError> {
    let key: IdentityKey = a.key.parse()?;
    let defaults = key.default_bounds();
    let bounds = Bounds {
        max_d: a.max_d.unwrap_or(defaults.max_d),
        max_n: a.max_n.unwrap_or(defaults.max_n),
    };
    let report = match &a.values {
        Some(values) => {
            if key != IdentityKey::Bsm3Recurrence {
                return Err(usage("--values is only accepted by bsm3-recurrence"));
            }
            let joined: Vec<String> = values.iter().map(BigUint::to_string).collect();
            p.set("values", joined.join(","));
            check_bsm3_recurrence(values)?
        }
        None => {
            p.set("max-d", bounds.max_d);
            p.set("max-n", bounds.max_n);
            verify_identity(key, bounds)?
        }
    };
    p.set("range", &report.checked_range);
    Ok((report_rows(&report), report.pass))
}

fn read_expectation(path: &PathBuf) -> Result<Vec<String>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Expect {
        path: path.clone(),
        source,
    })?;
    Ok(text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect())
}

/// Runs one parsed invocation. Returns the record and the exit code it
/// earns (0 or 1); errors map to exit code 2.
pub fn execute(cli: &Cli) -> Result<(OutputRecord, i32), CliError> {
    let start = Instant::now();
    let mut params = Params::new();
    let (command, results, mut pass) = match &cli.command {
        Command::Gf(a) => {
            let name = format!(
                "gf {}",
                a.kind
                    .to_possible_value()
                    .expect("no skipped variants")
                    .get_name()
            );
            (name, cmd_gf(a, &mut params)?, None)
        }
        Command::Count(a) => {
            let name = format!(
                "count {}",
                a.kind
                    .to_possible_value()
                    .expect("no skipped variants")
                    .get_name()
            );
            (name, cmd_count(a, &mut params)?, None)
        }
        Command::Verify(a) => {
            let (rows, pass) = cmd_verify(a, &mut params)?;
            (
                format!("verify {}", a.key.parse::<IdentityKey>()?),
                rows,
                Some(pass),
            )
        }
    };
    if let Some(path) = &cli.expect {
        let expected = read_expectation(path)?;
        params.set("expect", path.display());
        let got: Vec<&str> = results.iter().map(|r| r.value.as_str()).collect();
        let ok = got == expected;
        pass = Some(pass.unwrap_or(true) && ok);
    }
    let code = if pass == Some(false) {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    let record = OutputRecord {
        command,
        params: params.0,
        results,
        pass,
        timing_ms: start.elapsed().as_millis() as u64,
    };
    Ok((record, code))
}

/// Entry point for the binary: parses `args`, prints, and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok((record, code)) => {
            print!("{}", render(&record, cli.format));
            if code == EXIT_MISMATCH {
                eprintln!("weylcount: mismatch");
            }
            code
        }
        Err(e) => {
            eprintln!("weylcount: {e}");
            EXIT_USAGE
        }
    }
}
