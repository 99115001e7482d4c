//! Datasets: CSV ingestion, synthetic generators, seeded train/test splits
//! and uniform feature rescaling.

mod csv;
mod manifest;
mod synthetic;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::pattern::{ClassLabel, Pattern};
use crate::rng;

pub use self::csv::{load_csv, read_csv, CsvSchema};
pub use self::manifest::{DatasetSource, Generator, Manifest, ManifestEntry};
pub use self::synthetic::{
    gen_banana, gen_gaussian, gen_moon, GaussianFamily, BANANA_DEFAULT_TOTAL, MOON_DEFAULT_NOISE,
    MOON_DEFAULT_PER_CLASS,
};

/// A labeled dataset with a uniform feature count.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub name: String,
    patterns: Vec<Pattern>,
    dim: usize,
    class_counts: BTreeMap<ClassLabel, usize>,
    /// Original label text for label `l` at index `l - 1`, when known.
    label_names: Vec<String>,
}

impl Dataset {
    pub fn new(name: impl Into<String>, patterns: Vec<Pattern>) -> Result<Self> {
        Self::with_label_names(name, patterns, Vec::new())
    }

    pub fn with_label_names(
        name: impl Into<String>,
        patterns: Vec<Pattern>,
        label_names: Vec<String>,
    ) -> Result<Self> {
        let name = name.into();
        let first = patterns
            .first()
            .ok_or_else(|| Error::Dataset(format!("{name}: no patterns")))?;
        let dim = first.dim();
        if dim == 0 {
            return Err(Error::Dataset(format!("{name}: patterns have no features")));
        }
        let mut class_counts = BTreeMap::new();
        for (i, p) in patterns.iter().enumerate() {
            if p.dim() != dim {
                return Err(Error::Dataset(format!(
                    "{name}: pattern {i} has {} features, expected {dim}",
                    p.dim()
                )));
            }
            *class_counts.entry(p.label).or_insert(0) += 1;
        }
        Ok(Self {
            name,
            patterns,
            dim,
            class_counts,
            label_names,
        })
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn class_counts(&self) -> &BTreeMap<ClassLabel, usize> {
        &self.class_counts
    }

    pub fn classes(&self) -> Vec<ClassLabel> {
        self.class_counts.keys().copied().collect()
    }

    pub fn labels(&self) -> Vec<ClassLabel> {
        self.patterns.iter().map(|p| p.label).collect()
    }

    pub fn label_name(&self, label: ClassLabel) -> Option<&str> {
        self.label_names
            .get((label.0 as usize).checked_sub(1)?)
            .map(String::as_str)
    }

    pub fn label_names(&self) -> &[String] {
        &self.label_names
    }

    /// Patterns at `indices`, in that order.
    pub fn subset(&self, name: impl Into<String>, indices: &[usize]) -> Result<Dataset> {
        let patterns = indices.iter().map(|&i| self.patterns[i].clone()).collect();
        Dataset::with_label_names(name, patterns, self.label_names.clone())
    }
}

/// Repeated random hold-out settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitSpec {
    pub train_fraction: f64,
    pub runs: usize,
    pub seed: u64,
}

impl Default for SplitSpec {
    fn default() -> Self {
        Self {
            train_fraction: 0.8,
            runs: 10,
            seed: 0,
        }
    }
}

impl SplitSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.train_fraction > 0.0 && self.train_fraction < 1.0) {
            return Err(Error::Config(format!(
                "train fraction must be in (0, 1), got {}",
                self.train_fraction
            )));
        }
        if self.runs == 0 {
            return Err(Error::Config("runs must be at least 1".into()));
        }
        Ok(())
    }

    /// `floor(train_fraction * n)`.
    pub fn train_size(&self, n: usize) -> usize {
        // The epsilon keeps products like 0.57 * 100 = 56.99999999999999 at 57.
        (self.train_fraction * n as f64 + 1e-9).floor() as usize
    }
}

/// Train and test pattern indices for run `run_index`: a uniform permutation
/// from PCG stream `(seed, run_index)`, its first `floor(f * n)` entries
/// for training and the rest for testing.
pub fn split_indices(
    n: usize,
    spec: &SplitSpec,
    run_index: usize,
) -> Result<(Vec<usize>, Vec<usize>)> {
    spec.validate()?;
    if run_index >= spec.runs {
        return Err(Error::Config(format!(
            "run index {run_index} out of range for {} runs",
            spec.runs
        )));
    }
    let n_train = spec.train_size(n);
    if n_train == 0 || n_train >= n {
        return Err(Error::Dataset(format!(
            "a {} split of {n} patterns leaves an empty training or test set",
            spec.train_fraction
        )));
    }
    let mut perm = rng::permutation(&mut rng::stream(spec.seed, run_index as u64), n);
    let test = perm.split_off(n_train);
    Ok((perm, test))
}

pub fn split(dataset: &Dataset, spec: &SplitSpec, run_index: usize) -> Result<(Dataset, Dataset)> {
    let (train, test) = split_indices(dataset.len(), spec, run_index)?;
    Ok((
        dataset.subset(format!("{}/train{run_index}", dataset.name), &train)?,
        dataset.subset(format!("{}/test{run_index}", dataset.name), &test)?,
    ))
}

/// Every feature multiplied by `t`.
pub fn rescale(dataset: &Dataset, t: f64) -> Dataset {
    let patterns = dataset
        .patterns
        .iter()
        .map(|p| Pattern {
            features: p.features.iter().map(|x| x * t).collect(),
            label: p.label,
        })
        .collect();
    Dataset {
        name: dataset.name.clone(),
        patterns,
        dim: dataset.dim,
        class_counts: dataset.class_counts.clone(),
        label_names: dataset.label_names.clone(),
    }
}

/// Inclusive grid `t_min + k * step`, `k = 0..=K`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RescaleGrid {
    pub t_min: f64,
    pub t_max: f64,
    pub step: f64,
}

impl RescaleGrid {
    pub fn new(t_min: f64, t_max: f64, step: f64) -> Result<Self> {
        let grid = Self { t_min, t_max, step };
        grid.validate()?;
        Ok(grid)
    }

    /// Single-point grid.
    pub fn single(t: f64) -> Self {
        Self {
            t_min: t,
            t_max: t,
            step: 1.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.t_min.is_finite() && self.t_max.is_finite() && self.step.is_finite()) {
            return Err(Error::Config("rescale grid bounds must be finite".into()));
        }
        if self.step <= 0.0 {
            return Err(Error::Config(format!(
                "rescale step must be > 0, got {}",
                self.step
            )));
        }
        if self.t_max < self.t_min {
            return Err(Error::Config(format!(
                "rescale max {} is below min {}",
                self.t_max, self.t_min
            )));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        ((self.t_max - self.t_min) / self.step * (1.0 + 1e-9) + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.len())
            .map(|k| self.t_min + k as f64 * self.step)
            .collect()
    }
}
