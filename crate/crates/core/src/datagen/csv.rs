use std::fs::File;
use std::io::Read;
use std::path::Path;

use ::csv::{ReaderBuilder, Trim};

use super::Dataset;
use crate::error::{Error, Result};
use crate::pattern::{ClassLabel, Pattern};

/// Layout of a dataset CSV file: comma separated, optional single header
/// line, numeric features plus one label column.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CsvSchema {
    /// 0-based label column; `None` means the last column.
    pub label_column: Option<usize>,
    pub has_header: bool,
    /// Label values in class order (`1..=L`). Without it labels are numbered
    /// by first appearance.
    pub label_alphabet: Option<Vec<String>>,
}

pub fn load_csv(path: &Path, schema: &CsvSchema) -> Result<Dataset> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    read_csv(file, &name, path, schema)
}

/// Parses CSV text from `reader`; `path` is only used in error messages.
pub fn read_csv(reader: impl Read, name: &str, path: &Path, schema: &CsvSchema) -> Result<Dataset> {
    let mut rdr = ReaderBuilder::new()
        .has_headers(schema.has_header)
        .flexible(true)
        .trim(Trim::All)
        .from_reader(reader);

    let parse_err = |row: usize, column: usize, message: String| Error::Parse {
        path: path.to_path_buf(),
        row,
        column,
        message,
    };

    let mut label_names: Vec<String> = schema.label_alphabet.clone().unwrap_or_default();
    let fixed_alphabet = schema.label_alphabet.is_some();
    let mut width: Option<usize> = None;
    let mut patterns = Vec::new();

    for record in rdr.records() {
        let record = record?;
        // 1-based line number in the file
        let row = record.position().map(|p| p.line() as usize).unwrap_or(0);
        if record.iter().all(str::is_empty) {
            continue;
        }
        let w = *width.get_or_insert(record.len());
        if record.len() != w {
            return Err(parse_err(
                row,
                record.len(),
                format!("expected {w} fields, found {}", record.len()),
            ));
        }
        if w < 2 {
            return Err(parse_err(
                row,
                1,
                "need at least one feature and a label".into(),
            ));
        }
        let label_col = schema.label_column.unwrap_or(w - 1);
        if label_col >= w {
            return Err(parse_err(
                row,
                label_col + 1,
                format!("label column missing ({w} fields)"),
            ));
        }

        let mut features = Vec::with_capacity(w - 1);
        for (col, cell) in record.iter().enumerate() {
            if col == label_col {
                continue;
            }
            let v: f64 = cell
                .parse()
                .map_err(|_| parse_err(row, col + 1, format!("non-numeric feature '{cell}'")))?;
            if !v.is_finite() {
                return Err(parse_err(
                    row,
                    col + 1,
                    format!("non-finite feature '{cell}'"),
                ));
            }
            features.push(v);
        }

        let raw = &record[label_col];
        let label = match label_names.iter().position(|l| l == raw) {
            Some(i) => i,
            None if fixed_alphabet => {
                return Err(parse_err(
                    row,
                    label_col + 1,
                    format!("unknown label '{raw}'"),
                ));
            }
            None => {
                label_names.push(raw.to_string());
                label_names.len() - 1
            }
        };
        patterns.push(Pattern::new(features, ClassLabel(label as u32 + 1)));
    }

    if patterns.is_empty() {
        return Err(Error::Dataset(format!("{}: no data rows", path.display())));
    }
    Dataset::with_label_names(name, patterns, label_names)
}
