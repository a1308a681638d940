use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// One line of output. Counts are decimal strings so that no consumer
/// ever sees them as floats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRow {
    pub n: usize,
    pub value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(rename = "match", default, skip_serializing_if = "Option::is_none")]
    pub matched: Option<bool>,
}

impl ResultRow {
    pub fn value(n: usize, value: impl ToString) -> Self {
        ResultRow {
            n,
            value: value.to_string(),
            oracle: None,
            d: None,
            detail: None,
            matched: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub results: Vec<ResultRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
    pub timing_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

pub fn render(record: &OutputRecord, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(record).expect("record serializes");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(record),
        Format::Table => render_table(record),
    }
}

const CSV_HEADER: [&str; 6] = ["n", "value", "oracle", "d", "detail", "match"];

fn csv_fields(row: &ResultRow) -> [String; 6] {
    [
        row.n.to_string(),
        row.value.clone(),
        row.oracle.clone().unwrap_or_default(),
        row.d.map(|d| d.to_string()).unwrap_or_default(),
        row.detail.clone().unwrap_or_default(),
        row.matched.map(|m| m.to_string()).unwrap_or_default(),
    ]
}

fn render_csv(record: &OutputRecord) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for row in &record.results {
        w.write_record(csv_fields(row)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

/// Reads rows back from [`render_csv`] output.
pub fn parse_csv(text: &str) -> Result<Vec<ResultRow>, csv::Error> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.records()
        .map(|rec| {
            let rec = rec?;
            let opt = |i: usize| Some(rec[i].to_string()).filter(|s| !s.is_empty());
            Ok(ResultRow {
                n: rec[0].parse().unwrap_or_default(),
                value: rec[1].to_string(),
                oracle: opt(2),
                d: opt(3).and_then(|s| s.parse().ok()),
                detail: opt(4),
                matched: opt(5).and_then(|s| s.parse().ok()),
            })
        })
        .collect()
}

type Column = (&'static str, fn(&ResultRow) -> String);

fn render_table(record: &OutputRecord) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "command: {}", record.command);
    for (k, v) in &record.params {
        let _ = writeln!(out, "  {k} = {v}");
    }
    let has = |f: fn(&ResultRow) -> bool| record.results.iter().any(f);
    let cols: Vec<Column> = [
        (
            "d",
            has(|r| r.d.is_some()),
            (|r: &ResultRow| r.d.map(|d| d.to_string()).unwrap_or_default())
                as fn(&ResultRow) -> String,
        ),
        ("n", true, |r| r.n.to_string()),
        ("value", true, |r| r.value.clone()),
        ("oracle", has(|r| r.oracle.is_some()), |r| {
            r.oracle.clone().unwrap_or_default()
        }),
        ("match", has(|r| r.matched.is_some()), |r| {
            r.matched.map(|m| m.to_string()).unwrap_or_default()
        }),
        ("detail", has(|r| r.detail.is_some()), |r| {
            r.detail.clone().unwrap_or_default()
        }),
    ]
    .into_iter()
    .filter(|(_, shown, _)| *shown)
    .map(|(name, _, f)| (name, f))
    .collect();

    let cells: Vec<Vec<String>> = record
        .results
        .iter()
        .map(|r| cols.iter().map(|(_, f)| f(r)).collect())
        .collect();
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(i, (name, _))| {
            cells
                .iter()
                .map(|c| c[i].len())
                .chain([name.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |fields: Vec<&str>| {
        let padded: Vec<String> = fields
            .iter()
            .zip(&widths)
            .map(|(f, w)| format!("{f:>w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let _ = writeln!(out, "{}", line(cols.iter().map(|(n, _)| *n).collect()));
    for c in &cells {
        let _ = writeln!(out, "{}", line(c.iter().map(String::as_str).collect()));
    }
    if let Some(pass) = record.pass {
        let _ = writeln!(out, "pass: {pass}");
    }
    let _ = writeln!(out, "timing: {} ms", record.timing_ms);
    out
}
