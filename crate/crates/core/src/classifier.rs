//! Nearest-mean classifiers: the Euclidean NMC and its density-matrix
//! counterpart, which averages encoded training states per class and assigns
//! the class whose centroid is closest in trace distance.
//!
//! Both argmins break exact ties towards the smallest class label; distances
//! are compared with plain `<`.

use std::collections::BTreeMap;

use crate::encoding::{encode, encode_dataset, DensityPattern, EncodingKind};
use crate::error::{Error, Result};
use crate::hermitian::{trace_distance, DensityMatrix};
use crate::pattern::{ClassLabel, Pattern};

#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalModel {
    /// Sorted by label.
    pub centroids: Vec<(ClassLabel, Vec<f64>)>,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuantumModel {
    /// Sorted by label.
    pub centroids: Vec<(ClassLabel, DensityMatrix)>,
    /// Dimension of the states (d + 1 for the d-feature encodings).
    pub dim: usize,
    pub encoding: EncodingKind,
}

fn check_alphabet<T>(
    groups: &BTreeMap<ClassLabel, T>,
    alphabet: Option<&[ClassLabel]>,
) -> Result<()> {
    if let Some(alphabet) = alphabet {
        if let Some(&missing) = alphabet.iter().find(|l| !groups.contains_key(l)) {
            return Err(Error::EmptyClass(missing));
        }
        if let Some(extra) = groups.keys().find(|l| !alphabet.contains(l)) {
            return Err(Error::UnknownLabel(*extra));
        }
    }
    if groups.len() < 2 {
        return Err(Error::Training(format!(
            "need at least 2 classes, training data has {}",
            groups.len()
        )));
    }
    Ok(())
}

/// Per-class sample means of the training patterns.
pub fn train_nmc(training: &[Pattern]) -> Result<ClassicalModel> {
    train_nmc_with_classes(training, None)
}

/// As [`train_nmc`], but every label of `alphabet` must occur in `training`.
pub fn train_nmc_with_classes(
    training: &[Pattern],
    alphabet: Option<&[ClassLabel]>,
) -> Result<ClassicalModel> {
    let first = training
        .first()
        .ok_or_else(|| Error::Training("empty training set".into()))?;
    let dim = first.dim();
    let mut sums: BTreeMap<ClassLabel, (Vec<f64>, usize)> = BTreeMap::new();
    for (i, p) in training.iter().enumerate() {
        if p.dim() != dim {
            return Err(Error::at_pattern(
                i,
                Error::DimensionMismatch {
                    left: p.dim(),
                    right: dim,
                },
            ));
        }
        let (sum, n) = sums.entry(p.label).or_insert_with(|| (vec![0.0; dim], 0));
        for (s, x) in sum.iter_mut().zip(&p.features) {
            *s += x;
        }
        *n += 1;
    }
    check_alphabet(&sums, alphabet)?;
    let centroids = sums
        .into_iter()
        .map(|(label, (sum, n))| (label, sum.into_iter().map(|s| s / n as f64).collect()))
        .collect();
    Ok(ClassicalModel { centroids, dim })
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// First minimum wins, so with label-sorted candidates ties go to the
/// smallest label.
fn argmin(distances: impl Iterator<Item = (ClassLabel, f64)>) -> Option<ClassLabel> {
    let mut best: Option<(ClassLabel, f64)> = None;
    for (label, d) in distances {
        let better = match best {
            None => true,
            Some((_, bd)) => d < bd,
        };
        if better {
            best = Some((label, d));
        }
    }
    best.map(|(l, _)| l)
}

impl ClassicalModel {
    pub fn distances(&self, x: &[f64]) -> Result<Vec<(ClassLabel, f64)>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: x.len(),
                right: self.dim,
            });
        }
        Ok(self
            .centroids
            .iter()
            .map(|(l, mu)| (*l, euclidean(x, mu)))
            .collect())
    }

    pub fn classify(&self, x: &[f64]) -> Result<ClassLabel> {
        Ok(argmin(self.distances(x)?.into_iter()).expect("model has centroids"))
    }

    pub fn centroid(&self, label: ClassLabel) -> Option<&[f64]> {
        self.centroids
            .iter()
            .find(|(l, _)| *l == label)
            .map(|(_, c)| c.as_slice())
    }
}

pub fn classify_nmc(model: &ClassicalModel, x: &[f64]) -> Result<ClassLabel> {
    model.classify(x)
}

/// Quantum centroids: per-class averages of the training density patterns.
pub fn train_qnmc(training: &[DensityPattern]) -> Result<QuantumModel> {
    train_qnmc_with_classes(training, None)
}

pub fn train_qnmc_with_classes(
    training: &[DensityPattern],
    alphabet: Option<&[ClassLabel]>,
) -> Result<QuantumModel> {
    let first = training
        .first()
        .ok_or_else(|| Error::Training("empty training set".into()))?;
    let dim = first.state.dim();
    let encoding = first.encoding;
    let mut groups: BTreeMap<ClassLabel, Vec<&DensityMatrix>> = BTreeMap::new();
    for (i, p) in training.iter().enumerate() {
        if p.state.dim() != dim {
            return Err(Error::at_pattern(
                i,
                Error::DimensionMismatch {
                    left: p.state.dim(),
                    right: dim,
                },
            ));
        }
        if p.encoding != encoding {
            return Err(Error::Training(format!(
                "pattern {i} uses encoding {} but pattern 0 uses {encoding}",
                p.encoding
            )));
        }
        groups.entry(p.label).or_default().push(&p.state);
    }
    check_alphabet(&groups, alphabet)?;
    let centroids = groups
        .into_iter()
        .map(|(label, states)| Ok((label, DensityMatrix::average(states)?)))
        .collect::<Result<_>>()?;
    Ok(QuantumModel {
        centroids,
        dim,
        encoding,
    })
}

impl QuantumModel {
    pub fn distances(&self, state: &DensityMatrix) -> Result<Vec<(ClassLabel, f64)>> {
        if state.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: state.dim(),
                right: self.dim,
            });
        }
        self.centroids
            .iter()
            .map(|(l, rho)| Ok((*l, trace_distance(state, rho)?)))
            .collect()
    }

    pub fn classify(&self, state: &DensityMatrix) -> Result<ClassLabel> {
        Ok(argmin(self.distances(state)?.into_iter()).expect("model has centroids"))
    }

    /// Encodes `x` with the model's encoding, then classifies.
    pub fn classify_features(&self, x: &[f64]) -> Result<ClassLabel> {
        self.classify(&encode(self.encoding, x)?)
    }

    pub fn centroid(&self, label: ClassLabel) -> Option<&DensityMatrix> {
        self.centroids
            .iter()
            .find(|(l, _)| *l == label)
            .map(|(_, c)| c)
    }
}

pub fn classify_qnmc(model: &QuantumModel, state: &DensityMatrix) -> Result<ClassLabel> {
    model.classify(state)
}

/// Largest entrywise gap between each quantum centroid and the encoding of
/// the matching classical centroid.
pub fn centroid_gaps(training: &[Pattern], kind: EncodingKind) -> Result<Vec<(ClassLabel, f64)>> {
    let classical = train_nmc(training)?;
    let quantum = train_qnmc(&encode_dataset(training, kind)?)?;
    classical
        .centroids
        .iter()
        .zip(&quantum.centroids)
        .map(|((label, mu), (_, rho))| {
            let encoded_mean = encode(kind, mu)?;
            Ok((*label, rho.matrix().max_abs_diff(encoded_mean.matrix())?))
        })
        .collect()
}

/// True iff some class has a quantum centroid that differs (by more than
/// 1e-6 in some entry) from the encoding of its classical centroid.
pub fn verify_centroid_inequality(training: &[Pattern], kind: EncodingKind) -> Result<bool> {
    Ok(centroid_gaps(training, kind)?
        .iter()
        .any(|&(_, gap)| gap > 1e-6))
}
