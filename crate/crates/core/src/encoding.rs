//! Encodings of real feature vectors as pure density matrices.
//!
//! Three maps are provided:
//!
//! * [`EncodingKind::Stereo2D`]: a 2-feature vector is sent to the Bloch
//!   sphere by inverse stereographic projection, giving the qubit state
//!   `1/(|x|^2+1) [[|x|^2, x1 - i x2], [x1 + i x2, 1]]`.
//! * [`EncodingKind::StereoProjector`]: the d-dimensional generalization.
//!   [`projector_vector`] lifts `x` to the unit vector
//!   `[2x, |x|^2 - 1] / (|x|^2 + 1)` in `R^{d+1}` and the state is its
//!   projector.
//! * [`EncodingKind::NormAugmented`]: `x` is normalized, its norm appended as
//!   an extra coordinate, and the result normalized again
//!   ([`augmented_vector`]). The last diagonal entry of the state is
//!   `|x|^2 / (|x|^2 + 1)`, so the norm survives the encoding.
//!
//! The two (d+1)-vectors are both written `x'` in the usual presentation of
//! these maps; here they are `projector_vector` and `augmented_vector`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hermitian::DensityMatrix;
use crate::pattern::{norm, ClassLabel, Pattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum EncodingKind {
    Stereo2D,
    StereoProjector,
    #[default]
    NormAugmented,
}

impl EncodingKind {
    pub const ALL: [EncodingKind; 3] = [
        EncodingKind::Stereo2D,
        EncodingKind::StereoProjector,
        EncodingKind::NormAugmented,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EncodingKind::Stereo2D => "stereo2d",
            EncodingKind::StereoProjector => "stereo-nd",
            EncodingKind::NormAugmented => "norm-augmented",
        }
    }

    /// Dimension of the encoded state for `d` input features.
    pub fn state_dim(self, d: usize) -> usize {
        match self {
            EncodingKind::Stereo2D => 2,
            _ => d + 1,
        }
    }

    pub fn check_dim(self, d: usize) -> Result<()> {
        if d == 0 {
            return Err(Error::Encoding("feature vector is empty".into()));
        }
        if self == EncodingKind::Stereo2D && d != 2 {
            return Err(Error::Encoding(format!(
                "stereo2d needs exactly 2 features, got {d}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for EncodingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EncodingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stereo2d" => Ok(EncodingKind::Stereo2D),
            "stereo-nd" => Ok(EncodingKind::StereoProjector),
            "norm-augmented" => Ok(EncodingKind::NormAugmented),
            other => Err(Error::Config(format!(
                "unknown encoding '{other}' (expected stereo2d, stereo-nd or norm-augmented)"
            ))),
        }
    }
}

/// Encoded pattern: a pure state plus the label and norm of its source.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityPattern {
    pub state: DensityMatrix,
    pub label: ClassLabel,
    pub source_norm: f64,
    pub encoding: EncodingKind,
}

fn check_finite(x: &[f64]) -> Result<()> {
    if let Some(i) = x.iter().position(|v| !v.is_finite()) {
        return Err(Error::Encoding(format!(
            "feature {i} is not finite ({})",
            x[i]
        )));
    }
    Ok(())
}

/// Bloch components `(r1, r2, r3)` of the inverse stereographic projection.
pub fn bloch_vector(x: &[f64]) -> Result<[f64; 3]> {
    EncodingKind::Stereo2D.check_dim(x.len())?;
    check_finite(x)?;
    let n2 = x[0] * x[0] + x[1] * x[1];
    let s = n2 + 1.0;
    Ok([2.0 * x[0] / s, 2.0 * x[1] / s, (n2 - 1.0) / s])
}

pub fn encode_stereo_2d(x: &[f64]) -> Result<DensityMatrix> {
    EncodingKind::Stereo2D.check_dim(x.len())?;
    check_finite(x)?;
    let n2 = x[0] * x[0] + x[1] * x[1];
    let scale = (n2 + 1.0).sqrt().recip();
    // rho = |psi><psi| with psi = (x1 - i x2, 1) / sqrt(|x|^2 + 1)
    let psi = [
        Complex64::new(x[0], -x[1]) * scale,
        Complex64::new(scale, 0.0),
    ];
    DensityMatrix::pure(&psi)
}

/// `[2x, |x|^2 - 1] / (|x|^2 + 1)`, a unit vector in `R^{d+1}`.
pub fn projector_vector(x: &[f64]) -> Result<Vec<f64>> {
    EncodingKind::StereoProjector.check_dim(x.len())?;
    check_finite(x)?;
    let n2: f64 = x.iter().map(|v| v * v).sum();
    let s = n2 + 1.0;
    let mut v: Vec<f64> = x.iter().map(|&xi| 2.0 * xi / s).collect();
    v.push((n2 - 1.0) / s);
    Ok(v)
}

pub fn encode_stereo_projector(x: &[f64]) -> Result<DensityMatrix> {
    DensityMatrix::pure_real(&projector_vector(x)?)
}

/// `[x / |x|, |x|] / sqrt(|x|^2 + 1)`. Undefined for the zero vector.
pub fn augmented_vector(x: &[f64]) -> Result<Vec<f64>> {
    EncodingKind::NormAugmented.check_dim(x.len())?;
    check_finite(x)?;
    let n = norm(x);
    if n == 0.0 {
        return Err(Error::Encoding(
            "norm-augmented encoding is undefined for the zero vector".into(),
        ));
    }
    let lift = (n * n + 1.0).sqrt();
    let mut v: Vec<f64> = x.iter().map(|&xi| xi / (n * lift)).collect();
    v.push(n / lift);
    Ok(v)
}

pub fn encode_norm_augmented(x: &[f64]) -> Result<DensityMatrix> {
    DensityMatrix::pure_real(&augmented_vector(x)?)
}

/// Recovers `|x|` from the last diagonal entry `|x|^2 / (|x|^2 + 1)` of a
/// norm-augmented state.
pub fn recover_norm(state: &DensityMatrix) -> f64 {
    let d = state.dim() - 1;
    let m = state.matrix();
    let w = m[(d, d)].re;
    // 1 - w, summed from the other diagonal entries so large norms keep
    // their relative precision.
    let rest: f64 = (0..d).map(|i| m[(i, i)].re).sum();
    (w / rest).sqrt()
}

pub fn encode(kind: EncodingKind, x: &[f64]) -> Result<DensityMatrix> {
    match kind {
        EncodingKind::Stereo2D => encode_stereo_2d(x),
        EncodingKind::StereoProjector => encode_stereo_projector(x),
        EncodingKind::NormAugmented => encode_norm_augmented(x),
    }
}

pub fn encode_pattern(kind: EncodingKind, p: &Pattern) -> Result<DensityPattern> {
    Ok(DensityPattern {
        state: encode(kind, &p.features)?,
        label: p.label,
        source_norm: p.norm(),
        encoding: kind,
    })
}

/// Encodes every pattern, preserving order. The feature dimension is checked
/// once against the first pattern; failures carry the pattern index.
pub fn encode_dataset(patterns: &[Pattern], kind: EncodingKind) -> Result<Vec<DensityPattern>> {
    let Some(first) = patterns.first() else {
        return Ok(Vec::new());
    };
    let d = first.dim();
    kind.check_dim(d).map_err(|e| Error::at_pattern(0, e))?;
    if let Some(i) = patterns.iter().position(|p| p.dim() != d) {
        return Err(Error::at_pattern(
            i,
            Error::DimensionMismatch {
                left: patterns[i].dim(),
                right: d,
            },
        ));
    }

    let encoded: Vec<Result<DensityPattern>> = patterns
        .par_iter()
        .map(|p| encode_pattern(kind, p))
        .collect();
    encoded
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.map_err(|e| Error::at_pattern(i, e)))
        .collect()
}
