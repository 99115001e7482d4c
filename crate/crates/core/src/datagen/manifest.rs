//! Dataset manifests for batch runs.
//!
//! ```toml
//! [[dataset]]
//! name = "ionosphere"
//! path = "ionosphere.csv"   # relative to the manifest
//! header = true
//! label_column = 34         # optional, default last
//!
//! [[dataset]]
//! name = "moon"
//! generator = "moon"
//! seed = 0
//! ```

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;

use super::csv::{load_csv, CsvSchema};
use super::synthetic::{
    gen_banana, gen_gaussian, gen_moon, GaussianFamily, BANANA_DEFAULT_TOTAL, MOON_DEFAULT_NOISE,
    MOON_DEFAULT_PER_CLASS,
};
use super::Dataset;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Gaussian(GaussianFamily),
    Moon,
    Banana,
}

impl Generator {
    pub const ALL: [Generator; 5] = [
        Generator::Gaussian(GaussianFamily::I),
        Generator::Gaussian(GaussianFamily::II),
        Generator::Gaussian(GaussianFamily::III),
        Generator::Moon,
        Generator::Banana,
    ];

    /// Generates the dataset at its default size.
    pub fn generate(&self, seed: u64) -> Result<Dataset> {
        match *self {
            Generator::Gaussian(f) => Ok(gen_gaussian(f, seed)),
            Generator::Moon => gen_moon(MOON_DEFAULT_PER_CLASS, MOON_DEFAULT_NOISE, seed),
            Generator::Banana => gen_banana(BANANA_DEFAULT_TOTAL, seed),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Gaussian(GaussianFamily::I) => f.write_str("gaussian-1"),
            Generator::Gaussian(GaussianFamily::II) => f.write_str("gaussian-2"),
            Generator::Gaussian(GaussianFamily::III) => f.write_str("gaussian-3"),
            Generator::Moon => f.write_str("moon"),
            Generator::Banana => f.write_str("banana"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "moon" => Ok(Generator::Moon),
            "banana" => Ok(Generator::Banana),
            _ => match lower.strip_prefix("gaussian-") {
                Some(family) => Ok(Generator::Gaussian(family.parse()?)),
                None => Err(Error::Config(format!(
                    "unknown generator '{s}' (expected gaussian-1, gaussian-2, gaussian-3, moon or banana)"
                ))),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DatasetSource {
    Csv { path: PathBuf, schema: CsvSchema },
    Generator { generator: Generator, seed: u64 },
}

impl DatasetSource {
    pub fn load(&self) -> Result<Dataset> {
        match self {
            DatasetSource::Csv { path, schema } => load_csv(path, schema),
            DatasetSource::Generator { generator, seed } => generator.generate(*seed),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ManifestEntry {
    pub name: String,
    pub source: DatasetSource,
}

impl ManifestEntry {
    /// Loads the dataset and gives it the entry's name.
    pub fn load(&self) -> Result<Dataset> {
        let mut d = self.source.load()?;
        d.name = self.name.clone();
        Ok(d)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Manifest {
    pub entries: Vec<ManifestEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawManifest {
    #[serde(default)]
    dataset: Vec<RawEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    name: String,
    path: Option<PathBuf>,
    #[serde(default = "default_header")]
    header: bool,
    label_column: Option<usize>,
    labels: Option<Vec<String>>,
    generator: Option<String>,
    #[serde(default)]
    seed: u64,
}

fn default_header() -> bool {
    true
}

impl Manifest {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let base = path.parent().unwrap_or(Path::new(""));
        Self::parse(&text, base).map_err(|e| match e {
            Error::Manifest { message, .. } => Error::Manifest {
                path: path.to_path_buf(),
                message,
            },
            other => other,
        })
    }

    /// Parses manifest text; relative CSV paths are resolved against `base`.
    pub fn parse(text: &str, base: &Path) -> Result<Self> {
        let bad = |message: String| Error::Manifest {
            path: PathBuf::new(),
            message,
        };
        let raw: RawManifest = toml::from_str(text).map_err(|e| bad(e.to_string()))?;
        let mut entries = Vec::with_capacity(raw.dataset.len());
        for e in raw.dataset {
            let source = match (e.path, e.generator) {
                (Some(p), None) => DatasetSource::Csv {
                    path: base.join(p),
                    schema: CsvSchema {
                        label_column: e.label_column,
                        has_header: e.header,
                        label_alphabet: e.labels,
                    },
                },
                (None, Some(g)) => DatasetSource::Generator {
                    generator: g
                        .parse()
                        .map_err(|err: Error| bad(format!("{}: {err}", e.name)))?,
                    seed: e.seed,
                },
                _ => {
                    return Err(bad(format!(
                        "dataset '{}' needs exactly one of `path` or `generator`",
                        e.name
                    )))
                }
            };
            entries.push(ManifestEntry {
                name: e.name,
                source,
            });
        }
        Ok(Self { entries })
    }
}
