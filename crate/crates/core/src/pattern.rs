use std::fmt;

use serde::{Deserialize, Serialize};

/// Class identifier, drawn from `1..=L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ClassLabel(pub u32);

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for ClassLabel {
    fn from(v: u32) -> Self {
        ClassLabel(v)
    }
}

/// A labeled real feature vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Pattern {
    pub features: Vec<f64>,
    pub label: ClassLabel,
}

impl Pattern {
    pub fn new(features: Vec<f64>, label: impl Into<ClassLabel>) -> Self {
        Self {
            features,
            label: label.into(),
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.features.len()
    }

    pub fn norm(&self) -> f64 {
        norm(&self.features)
    }
}

pub(crate) fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}
