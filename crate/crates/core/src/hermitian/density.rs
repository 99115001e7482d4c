use num_complex::Complex64;

use super::jacobi::eigenvalues_with;
use super::ComplexMatrix;
use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

/// Hermitian, unit-trace, positive semidefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(ComplexMatrix);

impl DensityMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        Self::new_with(m, &Tolerances::DEFAULT)
    }

    /// Validates all three invariants. Eigenvalues in `[-tol.psd, 0)` pass
    /// (they are treated as zero for this check only).
    pub fn new_with(m: ComplexMatrix, tol: &Tolerances) -> Result<Self> {
        if m.dim() == 0 {
            return Err(Error::InvalidDensity("empty matrix".into()));
        }
        m.check_hermitian(tol.hermitian)?;
        let tr = m.trace();
        if (tr.re - 1.0).abs() > tol.trace || tr.im.abs() > tol.trace {
            return Err(Error::InvalidDensity(format!("trace is {tr}, expected 1")));
        }
        let values = eigenvalues_with(&m, tol)?;
        if let Some(&min) = values.first() {
            if min < -tol.psd {
                return Err(Error::InvalidDensity(format!(
                    "negative eigenvalue {min:e}"
                )));
            }
        }
        Ok(Self(m))
    }

    /// Pure state `|v><v|`; `v` must have unit norm within `trace` tolerance.
    pub fn pure(v: &[Complex64]) -> Result<Self> {
        let norm_sqr: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        check_unit(norm_sqr, v.len())?;
        Ok(Self(ComplexMatrix::outer(v)))
    }

    pub fn pure_real(v: &[f64]) -> Result<Self> {
        let norm_sqr: f64 = v.iter().map(|x| x * x).sum();
        check_unit(norm_sqr, v.len())?;
        Ok(Self(ComplexMatrix::outer_real(v)))
    }

    /// Equal-weight mixture of states sharing one dimension.
    pub fn average<'a>(states: impl IntoIterator<Item = &'a DensityMatrix>) -> Result<Self> {
        let mut iter = states.into_iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::InvalidDensity("average of no states".into()))?;
        let mut sum = first.0.clone();
        let mut count = 1usize;
        for s in iter {
            sum.add_scaled(&s.0, 1.0)?;
            count += 1;
        }
        Self::new(sum.scale(1.0 / count as f64))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    /// `Tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        purity(self)
    }

    pub fn is_pure(&self, tol: &Tolerances) -> bool {
        (self.purity() - 1.0).abs() <= tol.purity
    }

    pub fn trace_distance(&self, other: &DensityMatrix) -> Result<f64> {
        trace_distance(self, other)
    }
}

fn check_unit(norm_sqr: f64, dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(Error::InvalidDensity("empty state vector".into()));
    }
    if !(norm_sqr - 1.0).abs().le(&Tolerances::DEFAULT.trace) {
        return Err(Error::InvalidDensity(format!(
            "state vector has squared norm {norm_sqr}, expected 1"
        )));
    }
    Ok(())
}

/// `Tr(rho^2) = sum |rho_ij|^2` for Hermitian `rho`.
pub fn purity(a: &DensityMatrix) -> f64 {
    a.0.as_slice().iter().map(|z| z.norm_sqr()).sum()
}

/// `1/2 Tr|a - b|`, from the eigenvalues of the Hermitian difference.
pub fn trace_distance(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let diff = a.0.sub(&b.0)?;
    let mut abs: Vec<f64> = eigenvalues_with(&diff, &Tolerances::DEFAULT)?
        .into_iter()
        .map(f64::abs)
        .collect();
    // Sum in a fixed order so d(a,b) and d(b,a) agree bit for bit.
    abs.sort_by(f64::total_cmp);
    Ok((0.5 * abs.iter().sum::<f64>()).min(1.0))
}
