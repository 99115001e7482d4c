use std::path::PathBuf;

use crate::ClassLabel;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(
        "matrix is not Hermitian: entry ({row},{col}) and ({col},{row}) differ by {deviation:e}"
    )]
    NotHermitian {
        row: usize,
        col: usize,
        deviation: f64,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix data has {len} entries, expected {dim}x{dim}")]
    NotSquare { dim: usize, len: usize },

    #[error("not a density matrix: {0}")]
    InvalidDensity(String),

    #[error(
        "Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off:e})"
    )]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("encoding error: {0}")]
    Encoding(String),

    #[error("pattern {index}: {source}")]
    AtPattern {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("training error: {0}")]
    Training(String),

    #[error("class {0} has no training patterns")]
    EmptyClass(ClassLabel),

    #[error("label {0} is not in the class set")]
    UnknownLabel(ClassLabel),

    #[error("length mismatch: {left} true labels vs {right} predictions")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid dataset: {0}")]
    Dataset(String),

    #[error("{path}: row {row}, column {column}: {message}")]
    Parse {
        path: PathBuf,
        row: usize,
        column: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("manifest {path}: {message}")]
    Manifest { path: PathBuf, message: String },

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn at_pattern(index: usize, source: Error) -> Self {
        Error::AtPattern {
            index,
            source: Box::new(source),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
