//! Text tables and CSV output.
//!
//! CSV schema, one row per (dataset, classifier, t, run):
//!
//! ```text
//! dataset,classifier,encoding,run,t,E,TPR,TNR,FPR,FNR,P,K
//! ```
//!
//! `run` is 0-based. Indices are the class-size-weighted aggregates of that
//! run, written with Rust's shortest round-trip float formatting; an
//! undefined index is an empty cell. [`parse_csv`] reads the same format
//! back.

use std::fmt::{self, Write as _};
use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::str::FromStr;

use crate::encoding::EncodingKind;
use crate::error::{Error, Result};
use crate::experiment::{ClassifierKind, ExperimentResult};
use crate::metrics::{ClassIndices, Index};

pub const CSV_HEADER: [&str; 12] = [
    "dataset",
    "classifier",
    "encoding",
    "run",
    "t",
    "E",
    "TPR",
    "TNR",
    "FPR",
    "FNR",
    "P",
    "K",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Table => "table",
            OutputFormat::Csv => "csv",
        })
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::Config(format!(
                "unknown output format '{s}' (expected table or csv)"
            ))),
        }
    }
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub dataset: String,
    pub classifier: ClassifierKind,
    pub encoding: EncodingKind,
    pub run: usize,
    pub t: f64,
    pub indices: ClassIndices,
}

pub fn records(results: &[ExperimentResult]) -> Vec<Record> {
    let mut out = Vec::new();
    for r in results {
        for c in &r.results {
            for (run, report) in c.report.runs.iter().enumerate() {
                out.push(Record {
                    dataset: r.dataset.clone(),
                    classifier: c.classifier,
                    encoding: r.encoding,
                    run,
                    t: r.t,
                    indices: report.aggregate,
                });
            }
        }
    }
    out
}

fn cell(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn write_csv(w: impl Write, records: &[Record]) -> Result<()> {
    let mut wtr = ::csv::Writer::from_writer(w);
    wtr.write_record(CSV_HEADER)?;
    for rec in records {
        let mut row = vec![
            rec.dataset.clone(),
            rec.classifier.to_string(),
            rec.encoding.to_string(),
            rec.run.to_string(),
            rec.t.to_string(),
        ];
        row.extend(Index::ALL.iter().map(|&i| cell(rec.indices.get(i))));
        wtr.write_record(&row)?;
    }
    wtr.flush().map_err(|e| Error::io("<csv output>", e))?;
    Ok(())
}

pub fn parse_csv(r: impl Read) -> Result<Vec<Record>> {
    let mut rdr = ::csv::ReaderBuilder::new().has_headers(true).from_reader(r);
    let bad = |row: usize, column: usize, message: String| Error::Parse {
        path: "<csv input>".into(),
        row,
        column,
        message,
    };
    let header = rdr.headers()?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(bad(
            1,
            1,
            format!(
                "unexpected header '{}'",
                header.iter().collect::<Vec<_>>().join(",")
            ),
        ));
    }
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let row = rec.position().map(|p| p.line() as usize).unwrap_or(0);
        if rec.len() != CSV_HEADER.len() {
            return Err(bad(
                row,
                rec.len(),
                format!("expected {} fields", CSV_HEADER.len()),
            ));
        }
        let num = |col: usize| -> Result<f64> {
            rec[col]
                .parse()
                .map_err(|_| bad(row, col + 1, format!("not a number: '{}'", &rec[col])))
        };
        let mut indices = ClassIndices::default();
        for (k, &index) in Index::ALL.iter().enumerate() {
            let col = 5 + k;
            indices.set(
                index,
                if rec[col].is_empty() {
                    None
                } else {
                    Some(num(col)?)
                },
            );
        }
        out.push(Record {
            dataset: rec[0].to_string(),
            classifier: rec[1]
                .parse()
                .map_err(|e: Error| bad(row, 2, e.to_string()))?,
            encoding: rec[2]
                .parse()
                .map_err(|e: Error| bad(row, 3, e.to_string()))?,
            run: rec[3]
                .parse()
                .map_err(|_| bad(row, 4, format!("not a run index: '{}'", &rec[3])))?,
            t: num(4)?,
            indices,
        });
    }
    Ok(out)
}

/// Up to 6 decimals without trailing zeros; grid points like
/// `0.30000000000000004` print as `0.3`.
fn short_float(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

const TABLE_INDICES: [Index; 5] = [Index::E, Index::Tpr, Index::Tnr, Index::P, Index::K];

fn mean_pm_std(mean: Option<f64>, std: Option<f64>) -> String {
    match (mean, std) {
        (Some(m), Some(s)) => format!("{m:.3} ± {s:.3}"),
        _ => "n/a".to_string(),
    }
}

/// Aligned text table: one row per (dataset, classifier[, t]) with the mean
/// ± sample std of E, TPR, TNR, P and K over runs.
pub fn write_table(mut w: impl Write, results: &[ExperimentResult], show_t: bool) -> Result<()> {
    let mut header: Vec<String> = vec!["dataset".into(), "classifier".into()];
    if show_t {
        header.push("t".into());
    }
    header.extend(TABLE_INDICES.iter().map(|i| i.name().to_string()));

    let mut rows: Vec<Vec<String>> = Vec::new();
    for r in results {
        for c in &r.results {
            let mut row = vec![r.dataset.clone(), c.classifier.to_string()];
            if show_t {
                row.push(short_float(r.t));
            }
            for &i in &TABLE_INDICES {
                row.push(mean_pm_std(c.report.mean.get(i), c.report.std.get(i)));
            }
            rows.push(row);
        }
    }

    let widths: Vec<usize> = (0..header.len())
        .map(|k| {
            rows.iter()
                .map(|row| row[k].chars().count())
                .chain([header[k].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut text = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let mut line = String::new();
        for (k, v) in row.iter().enumerate() {
            let pad = widths[k] - v.chars().count();
            if k < 2 {
                let _ = write!(line, "{v}{}  ", " ".repeat(pad));
            } else {
                let _ = write!(line, "{}{v}  ", " ".repeat(pad));
            }
        }
        text.push_str(line.trim_end());
        text.push('\n');
    }
    w.write_all(text.as_bytes())
        .map_err(|e| Error::io("<table output>", e))
}

/// Renders the report fully in memory, then writes it to `path` (or stdout),
/// so a failure never leaves a partial file behind.
pub fn emit_report(
    results: &[ExperimentResult],
    format: OutputFormat,
    show_t: bool,
    path: Option<&Path>,
) -> Result<()> {
    let mut buf = Vec::new();
    match format {
        OutputFormat::Table => write_table(&mut buf, results, show_t)?,
        OutputFormat::Csv => write_csv(&mut buf, &records(results))?,
    }
    match path {
        Some(p) => fs::write(p, &buf).map_err(|e| Error::io(p, e)),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(&buf)
                .and_then(|_| out.flush())
                .map_err(|e| Error::io("<stdout>", e))
        }
    }
}
