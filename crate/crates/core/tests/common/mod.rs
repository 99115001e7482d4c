//! Helpers shared by the integration suites: random states, the benchmark
//! data directory, and a brute-force classifier built on nalgebra.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use nalgebra::DMatrix;
use num_complex::Complex64;
use qnmc_core::{ComplexMatrix, CsvSchema, Dataset, DensityMatrix, EncodingKind};

/// `QNMC_DATA_DIR`, or the workspace `data/` directory.
pub fn data_dir() -> PathBuf {
    std::env::var_os("QNMC_DATA_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data"))
}

/// Loads `data/<file>` (header line, label last), or `None` if absent.
pub fn load(file: &str, name: &str) -> Option<Dataset> {
    let path = data_dir().join(file);
    if !path.exists() {
        return None;
    }
    let schema = CsvSchema {
        has_header: true,
        ..Default::default()
    };
    let mut d = qnmc_core::load_csv(&path, &schema)
        .unwrap_or_else(|e| panic!("{} is present but unreadable: {e}", path.display()));
    d.name = name.to_string();
    Some(d)
}

/// Density matrix `G G^† / tr(G G^†)` from a `dim x rank` complex matrix
/// given as `2 * dim * rank` reals.
pub fn density_from(dim: usize, rank: usize, entries: &[f64]) -> DensityMatrix {
    assert!(entries.len() >= 2 * dim * rank);
    let g = |i: usize, k: usize| {
        let at = 2 * (i * rank + k);
        Complex64::new(entries[at], entries[at + 1])
    };
    let mut m = ComplexMatrix::from_fn(dim, |i, j| {
        (0..rank).map(|k| g(i, k) * g(j, k).conj()).sum()
    });
    let tr = m.trace().re;
    m = m.scale(1.0 / tr);
    // Exact Hermitian symmetry.
    let m = ComplexMatrix::from_fn(dim, |i, j| {
        if i == j {
            Complex64::new(m[(i, i)].re, 0.0)
        } else if i < j {
            m[(i, j)]
        } else {
            m[(j, i)].conj()
        }
    });
    DensityMatrix::new(m).expect("Gram matrices are density matrices")
}

pub fn to_nalgebra(m: &ComplexMatrix) -> DMatrix<Complex64> {
    let n = m.dim();
    DMatrix::from_fn(n, n, |i, j| m[(i, j)])
}

/// Half the sum of singular values of `a - b`.
pub fn svd_trace_distance(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    0.5 * (a - b).singular_values().iter().sum::<f64>()
}

/// Independent encoders, written straight from the defining formulas.
pub fn oracle_state(kind: EncodingKind, x: &[f64]) -> DMatrix<Complex64> {
    let n2: f64 = x.iter().map(|v| v * v).sum();
    let column: Vec<Complex64> = match kind {
        EncodingKind::Stereo2D => {
            // Bloch vector (2x1, 2x2, n^2 - 1) / (n^2 + 1); rho = (I + r.sigma) / 2
            let s = n2 + 1.0;
            let (r1, r2, r3) = (2.0 * x[0] / s, 2.0 * x[1] / s, (n2 - 1.0) / s);
            let i = Complex64::i();
            let one = Complex64::new(1.0, 0.0);
            return DMatrix::from_row_slice(
                2,
                2,
                &[
                    (one + r3) * 0.5,
                    (one * r1 - i * r2) * 0.5,
                    (one * r1 + i * r2) * 0.5,
                    (one - r3) * 0.5,
                ],
            );
        }
        EncodingKind::StereoProjector => {
            let s = n2 + 1.0;
            x.iter()
                .map(|&v| 2.0 * v / s)
                .chain([(n2 - 1.0) / s])
                .map(|v| Complex64::new(v, 0.0))
                .collect()
        }
        EncodingKind::NormAugmented => {
            let n = n2.sqrt();
            let lift = (n2 + 1.0).sqrt();
            x.iter()
                .map(|&v| v / (n * lift))
                .chain([n / lift])
                .map(|v| Complex64::new(v, 0.0))
                .collect()
        }
    };
    let v = nalgebra::DVector::from_vec(column);
    &v * v.adjoint()
}

/// Brute-force nearest quantum centroid: every class mean is summed
/// explicitly and every distance comes from an SVD. Returns all labels
/// whose distance is within `tie` of the minimum, smallest first.
pub struct OracleModel {
    centroids: BTreeMap<u32, DMatrix<Complex64>>,
    kind: EncodingKind,
}

impl OracleModel {
    pub fn train(training: &[(Vec<f64>, u32)], kind: EncodingKind) -> Self {
        let mut sums: BTreeMap<u32, (DMatrix<Complex64>, usize)> = BTreeMap::new();
        for (x, label) in training {
            let rho = oracle_state(kind, x);
            let entry = sums
                .entry(*label)
                .or_insert_with(|| (DMatrix::zeros(rho.nrows(), rho.ncols()), 0));
            entry.0 += rho;
            entry.1 += 1;
        }
        let centroids = sums
            .into_iter()
            .map(|(l, (s, n))| (l, s / Complex64::new(n as f64, 0.0)))
            .collect();
        Self { centroids, kind }
    }

    pub fn nearest(&self, x: &[f64], tie: f64) -> Vec<u32> {
        let q = oracle_state(self.kind, x);
        let d: Vec<(u32, f64)> = self
            .centroids
            .iter()
            .map(|(l, c)| (*l, svd_trace_distance(&q, c)))
            .collect();
        let min = d.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
        d.into_iter()
            .filter(|p| p.1 <= min + tie)
            .map(|p| p.0)
            .collect()
    }
}
