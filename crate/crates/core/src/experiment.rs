//! Repeated hold-out protocol and the rescaling sweep.
//!
//! Each run draws its split from PCG stream `(seed, run)`, trains both
//! classifiers on the same training fold and scores them on the same test
//! fold. Runs (and sweep points) are evaluated in parallel; results are
//! assembled in index order, so output does not depend on thread count.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::classifier::{train_nmc_with_classes, train_qnmc_with_classes};
use crate::datagen::{rescale, split_indices, Dataset, RescaleGrid, SplitSpec};
use crate::encoding::{encode_dataset, DensityPattern, EncodingKind};
use crate::error::{Error, Result};
use crate::metrics::{evaluate, summarize_runs, EvaluationReport, RunReport};
use crate::pattern::{ClassLabel, Pattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassifierKind {
    Nmc,
    Qnmc,
}

impl ClassifierKind {
    pub const ALL: [ClassifierKind; 2] = [ClassifierKind::Nmc, ClassifierKind::Qnmc];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassifierKind::Nmc => "NMC",
            ClassifierKind::Qnmc => "QNMC",
        }
    }
}

impl fmt::Display for ClassifierKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassifierKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "nmc" => Ok(ClassifierKind::Nmc),
            "qnmc" => Ok(ClassifierKind::Qnmc),
            _ => Err(Error::Config(format!(
                "unknown classifier '{s}' (expected nmc or qnmc)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub encoding: EncodingKind,
    pub split: SplitSpec,
    /// Duplicates are ignored; results always come out NMC first.
    pub classifiers: Vec<ClassifierKind>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            encoding: EncodingKind::default(),
            split: SplitSpec::default(),
            classifiers: ClassifierKind::ALL.to_vec(),
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        self.split.validate()?;
        if self.classifiers.is_empty() {
            return Err(Error::Config("select at least one classifier".into()));
        }
        Ok(())
    }

    fn classifier_list(&self) -> Vec<ClassifierKind> {
        let mut c = self.classifiers.clone();
        c.sort();
        c.dedup();
        c
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassifierResult {
    pub classifier: ClassifierKind,
    /// Predicted labels per run, in test-index order.
    pub predictions: Vec<Vec<ClassLabel>>,
    pub report: EvaluationReport,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult {
    pub dataset: String,
    pub encoding: EncodingKind,
    /// Rescaling factor applied before splitting (1 outside sweeps).
    pub t: f64,
    pub test_indices: Vec<Vec<usize>>,
    pub results: Vec<ClassifierResult>,
}

impl ExperimentResult {
    pub fn get(&self, classifier: ClassifierKind) -> Option<&ClassifierResult> {
        self.results.iter().find(|r| r.classifier == classifier)
    }

    /// Mean aggregate error of `classifier`, if it was run.
    pub fn mean_error(&self, classifier: ClassifierKind) -> Option<f64> {
        self.get(classifier)?.report.mean.e
    }
}

struct RunOutcome {
    test: Vec<usize>,
    /// Same order as the configured classifier list.
    scored: Vec<(Vec<ClassLabel>, RunReport)>,
}

fn pick<T: Clone>(items: &[T], indices: &[usize]) -> Vec<T> {
    indices.iter().map(|&i| items[i].clone()).collect()
}

fn run_once(
    dataset: &Dataset,
    states: Option<&[DensityPattern]>,
    classifiers: &[ClassifierKind],
    spec: &SplitSpec,
    run: usize,
) -> Result<RunOutcome> {
    let classes = dataset.classes();
    let patterns = dataset.patterns();
    let (train, test) = split_indices(dataset.len(), spec, run)?;
    let truth: Vec<ClassLabel> = test.iter().map(|&i| patterns[i].label).collect();

    let mut scored = Vec::with_capacity(classifiers.len());
    for &kind in classifiers {
        let predicted = match kind {
            ClassifierKind::Nmc => {
                let train_set: Vec<Pattern> = pick(patterns, &train);
                let model = train_nmc_with_classes(&train_set, Some(&classes))?;
                test.iter()
                    .map(|&i| model.classify(&patterns[i].features))
                    .collect::<Result<Vec<_>>>()?
            }
            ClassifierKind::Qnmc => {
                let states = states.expect("states encoded when QNMC is selected");
                let train_set: Vec<DensityPattern> = pick(states, &train);
                let model = train_qnmc_with_classes(&train_set, Some(&classes))?;
                test.iter()
                    .map(|&i| model.classify(&states[i].state))
                    .collect::<Result<Vec<_>>>()?
            }
        };
        let report = evaluate(&truth, &predicted, &classes)?;
        scored.push((predicted, report));
    }
    Ok(RunOutcome { test, scored })
}

/// Runs the repeated-split protocol on `dataset` as given (no rescaling).
pub fn run_experiment(dataset: &Dataset, config: &ExperimentConfig) -> Result<ExperimentResult> {
    run_scaled(dataset, config, 1.0)
}

fn run_scaled(dataset: &Dataset, config: &ExperimentConfig, t: f64) -> Result<ExperimentResult> {
    config.validate()?;
    let classifiers = config.classifier_list();
    // Encoded once for the whole dataset, so a failure names the dataset row.
    let states = if classifiers.contains(&ClassifierKind::Qnmc) {
        Some(encode_dataset(dataset.patterns(), config.encoding)?)
    } else {
        None
    };

    let outcomes = (0..config.split.runs)
        .into_par_iter()
        .map(|run| run_once(dataset, states.as_deref(), &classifiers, &config.split, run))
        .collect::<Result<Vec<_>>>()?;

    let mut test_indices = Vec::with_capacity(outcomes.len());
    let mut per_classifier: Vec<(Vec<Vec<ClassLabel>>, Vec<RunReport>)> =
        vec![(Vec::new(), Vec::new()); classifiers.len()];
    for outcome in outcomes {
        test_indices.push(outcome.test);
        for (slot, (pred, report)) in per_classifier.iter_mut().zip(outcome.scored) {
            slot.0.push(pred);
            slot.1.push(report);
        }
    }
    let results = classifiers
        .iter()
        .zip(per_classifier)
        .map(|(&classifier, (predictions, runs))| {
            Ok(ClassifierResult {
                classifier,
                predictions,
                report: summarize_runs(runs)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(ExperimentResult {
        dataset: dataset.name.clone(),
        encoding: config.encoding,
        t,
        test_indices,
        results,
    })
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SweepResult {
    /// One entry per grid value, in grid order.
    pub points: Vec<ExperimentResult>,
}

impl SweepResult {
    /// True when every point predicts the same NMC labels as the first one.
    /// Vacuously true without NMC results.
    pub fn nmc_labels_invariant(&self) -> bool {
        let mut preds = self
            .points
            .iter()
            .filter_map(|p| p.get(ClassifierKind::Nmc).map(|r| &r.predictions));
        match preds.next() {
            Some(first) => preds.all(|p| p == first),
            None => true,
        }
    }

    /// `(t, mean error)` for `classifier` along the grid.
    pub fn error_curve(&self, classifier: ClassifierKind) -> Vec<(f64, Option<f64>)> {
        self.points
            .iter()
            .map(|p| (p.t, p.mean_error(classifier)))
            .collect()
    }
}

/// Rescales the whole dataset by each grid value and reruns the protocol.
/// Splits depend only on `(seed, run)`, so run `r` uses the same partition
/// at every `t`.
pub fn run_sweep(
    dataset: &Dataset,
    config: &ExperimentConfig,
    grid: &RescaleGrid,
) -> Result<SweepResult> {
    config.validate()?;
    grid.validate()?;
    let points = grid
        .values()
        .into_par_iter()
        .map(|t| run_scaled(&rescale(dataset, t), config, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult { points })
}
