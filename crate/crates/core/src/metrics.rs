//! One-vs-rest confusion counts, the per-class rate indices, their
//! class-size-weighted aggregates and mean/std summaries over repeated runs.
//!
//! An index whose denominator is zero is `None` and is left out of the
//! weighted aggregate (the remaining weights are renormalized).

use std::fmt;

use crate::error::{Error, Result};
use crate::pattern::ClassLabel;

/// One-vs-rest outcome counts for a single class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OutcomeCounts {
    pub tp: usize,
    pub tn: usize,
    pub fp: usize,
    pub fn_: usize,
}

impl OutcomeCounts {
    pub fn total(&self) -> usize {
        self.tp + self.tn + self.fp + self.fn_
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConfusionCounts {
    /// Sorted, one entry per class.
    pub classes: Vec<ClassLabel>,
    pub per_class: Vec<OutcomeCounts>,
    pub test_size: usize,
    pub correct: usize,
}

impl ConfusionCounts {
    pub fn counts(&self, label: ClassLabel) -> Option<&OutcomeCounts> {
        self.classes
            .iter()
            .position(|&l| l == label)
            .map(|i| &self.per_class[i])
    }

    /// Test patterns whose true label is each class (`TP + FN`).
    pub fn class_sizes(&self) -> Vec<usize> {
        self.per_class.iter().map(|c| c.tp + c.fn_).collect()
    }

    pub fn misclassification_rate(&self) -> f64 {
        (self.test_size - self.correct) as f64 / self.test_size as f64
    }
}

pub fn confusion(
    truth: &[ClassLabel],
    predicted: &[ClassLabel],
    classes: &[ClassLabel],
) -> Result<ConfusionCounts> {
    if truth.len() != predicted.len() {
        return Err(Error::LengthMismatch {
            left: truth.len(),
            right: predicted.len(),
        });
    }
    if truth.is_empty() {
        return Err(Error::Dataset("no test patterns to score".into()));
    }
    let mut classes = classes.to_vec();
    classes.sort();
    classes.dedup();
    let index = |l: ClassLabel| {
        classes
            .binary_search(&l)
            .map_err(|_| Error::UnknownLabel(l))
    };

    let n = truth.len();
    let mut per_class = vec![OutcomeCounts::default(); classes.len()];
    let mut correct = 0;
    for (&t, &p) in truth.iter().zip(predicted) {
        let ti = index(t)?;
        let pi = index(p)?;
        if ti == pi {
            per_class[ti].tp += 1;
            correct += 1;
        } else {
            per_class[ti].fn_ += 1;
            per_class[pi].fp += 1;
        }
    }
    for c in &mut per_class {
        c.tn = n - c.tp - c.fn_ - c.fp;
    }
    Ok(ConfusionCounts {
        classes,
        per_class,
        test_size: n,
        correct,
    })
}

/// Names of the reported indices, in output order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Index {
    E,
    Tpr,
    Tnr,
    Fpr,
    Fnr,
    P,
    K,
}

impl Index {
    pub const ALL: [Index; 7] = [
        Index::E,
        Index::Tpr,
        Index::Tnr,
        Index::Fpr,
        Index::Fnr,
        Index::P,
        Index::K,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Index::E => "E",
            Index::Tpr => "TPR",
            Index::Tnr => "TNR",
            Index::Fpr => "FPR",
            Index::Fnr => "FNR",
            Index::P => "P",
            Index::K => "K",
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Rate indices; `None` marks an undefined value (zero denominator).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ClassIndices {
    pub e: Option<f64>,
    pub tpr: Option<f64>,
    pub tnr: Option<f64>,
    pub fpr: Option<f64>,
    pub fnr: Option<f64>,
    pub p: Option<f64>,
    pub k: Option<f64>,
}

impl ClassIndices {
    pub fn get(&self, index: Index) -> Option<f64> {
        match index {
            Index::E => self.e,
            Index::Tpr => self.tpr,
            Index::Tnr => self.tnr,
            Index::Fpr => self.fpr,
            Index::Fnr => self.fnr,
            Index::P => self.p,
            Index::K => self.k,
        }
    }

    pub fn set(&mut self, index: Index, value: Option<f64>) {
        let slot = match index {
            Index::E => &mut self.e,
            Index::Tpr => &mut self.tpr,
            Index::Tnr => &mut self.tnr,
            Index::Fpr => &mut self.fpr,
            Index::Fnr => &mut self.fnr,
            Index::P => &mut self.p,
            Index::K => &mut self.k,
        };
        *slot = value;
    }
}

fn ratio(num: usize, den: usize) -> Option<f64> {
    (den > 0).then(|| num as f64 / den as f64)
}

/// Indices of class `label`, treating it as the positive class.
///
/// `E` here is `1 - TP / test_size`; the aggregated `E` from [`aggregate`]
/// is the overall misclassification rate instead.
pub fn class_indices(c: &ConfusionCounts, label: ClassLabel) -> Result<ClassIndices> {
    let o = *c.counts(label).ok_or(Error::UnknownLabel(label))?;
    let n = c.test_size;
    let tpr = ratio(o.tp, o.tp + o.fn_);
    let tnr = ratio(o.tn, o.tn + o.fp);
    let k = if n > 0 {
        let n2 = (n * n) as f64;
        let pr_a = (o.tp + o.tn) as f64 / n as f64;
        let pr_e = ((o.tp + o.fp) * (o.tp + o.fn_) + (o.fp + o.tn) * (o.tn + o.fn_)) as f64 / n2;
        (pr_e != 1.0).then(|| (pr_a - pr_e) / (1.0 - pr_e))
    } else {
        None
    };
    Ok(ClassIndices {
        e: ratio(o.tp, n).map(|r| 1.0 - r),
        tpr,
        tnr,
        fpr: tnr.map(|v| 1.0 - v),
        fnr: tpr.map(|v| 1.0 - v),
        p: ratio(o.tp, o.tp + o.fp),
        k,
    })
}

/// Class-size-weighted mean of each index over the classes where it is
/// defined. `E` is `1 - TPR` of the aggregate, i.e. the misclassification
/// rate; `FPR`/`FNR` are the complements of the aggregated `TNR`/`TPR`.
pub fn aggregate(per_class: &[ClassIndices], test_class_sizes: &[usize]) -> Result<ClassIndices> {
    if per_class.len() != test_class_sizes.len() {
        return Err(Error::LengthMismatch {
            left: per_class.len(),
            right: test_class_sizes.len(),
        });
    }
    let total: usize = test_class_sizes.iter().sum();
    if total == 0 {
        return Err(Error::Dataset("all class sizes are zero".into()));
    }
    let weighted = |index: Index| {
        let mut num = 0.0;
        let mut den = 0.0;
        for (ci, &size) in per_class.iter().zip(test_class_sizes) {
            if let Some(v) = ci.get(index) {
                let w = size as f64 / total as f64;
                num += w * v;
                den += w;
            }
        }
        (den > 0.0).then(|| num / den)
    };
    let tpr = weighted(Index::Tpr);
    let tnr = weighted(Index::Tnr);
    Ok(ClassIndices {
        e: tpr.map(|v| 1.0 - v),
        tpr,
        tnr,
        fpr: tnr.map(|v| 1.0 - v),
        fnr: tpr.map(|v| 1.0 - v),
        p: weighted(Index::P),
        k: weighted(Index::K),
    })
}

/// Scores of one train/test run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub confusion: ConfusionCounts,
    pub per_class: Vec<(ClassLabel, ClassIndices)>,
    pub aggregate: ClassIndices,
}

pub fn evaluate(
    truth: &[ClassLabel],
    predicted: &[ClassLabel],
    classes: &[ClassLabel],
) -> Result<RunReport> {
    let confusion = confusion(truth, predicted, classes)?;
    let per_class = confusion
        .classes
        .iter()
        .map(|&l| Ok((l, class_indices(&confusion, l)?)))
        .collect::<Result<Vec<_>>>()?;
    let indices: Vec<ClassIndices> = per_class.iter().map(|(_, ci)| *ci).collect();
    let aggregate = aggregate(&indices, &confusion.class_sizes())?;
    Ok(RunReport {
        confusion,
        per_class,
        aggregate,
    })
}

/// Per-run aggregates with their mean and sample (n - 1) standard deviation.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationReport {
    pub runs: Vec<RunReport>,
    pub mean: ClassIndices,
    pub std: ClassIndices,
    /// Only one run: `std` is reported as 0 by convention.
    pub single_run: bool,
}

pub fn summarize_runs(runs: Vec<RunReport>) -> Result<EvaluationReport> {
    if runs.is_empty() {
        return Err(Error::Config("no runs to summarize".into()));
    }
    let mut mean = ClassIndices::default();
    let mut std = ClassIndices::default();
    for index in Index::ALL {
        let values: Vec<f64> = runs.iter().filter_map(|r| r.aggregate.get(index)).collect();
        let (m, s) = mean_std(&values);
        mean.set(index, m);
        std.set(index, s);
    }
    Ok(EvaluationReport {
        single_run: runs.len() == 1,
        runs,
        mean,
        std,
    })
}

/// Sample mean and (n - 1) standard deviation; std is 0 for one value.
pub fn mean_std(values: &[f64]) -> (Option<f64>, Option<f64>) {
    match values.len() {
        0 => (None, None),
        1 => (Some(values[0]), Some(0.0)),
        n => {
            let mean = values.iter().sum::<f64>() / n as f64;
            let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1) as f64;
            (Some(mean), Some(var.sqrt()))
        }
    }
}
