//! Cyclic Jacobi diagonalization of complex Hermitian matrices.
//!
//! Each pivot `(p, q)` is handled by a unitary `U = D R`, where
//! `D = diag(1, e^{-i phi})` rotates the phase of `a_pq` onto the real axis
//! and `R` is the classical real Jacobi rotation for the resulting real
//! symmetric 2x2 block. `A <- U^H A U` zeroes `a_pq` and `a_qp`; eigenvectors
//! accumulate as `V <- V U`.

use num_complex::Complex64;

use super::ComplexMatrix;
use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

/// Spectral decomposition `m = V diag(values) V^H`.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// Column `k` is the eigenvector for `values[k]`.
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.values.len();
        let v = &self.vectors;
        ComplexMatrix::from_fn(n, |i, j| {
            (0..n)
                .map(|k| v[(i, k)] * self.values[k] * v[(j, k)].conj())
                .sum()
        })
    }
}

/// Eigenvalues of a Hermitian matrix in ascending order.
pub fn eigenvalues_hermitian(m: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(jacobi(m, &Tolerances::DEFAULT, false)?.0)
}

/// Eigenvalues and eigenvectors of a Hermitian matrix.
pub fn eigh(m: &ComplexMatrix) -> Result<HermitianEigen> {
    eigh_with(m, &Tolerances::DEFAULT)
}

pub fn eigh_with(m: &ComplexMatrix, tol: &Tolerances) -> Result<HermitianEigen> {
    let (values, vectors) = jacobi(m, tol, true)?;
    Ok(HermitianEigen {
        values,
        vectors: vectors.expect("vectors requested"),
    })
}

pub(crate) fn eigenvalues_with(m: &ComplexMatrix, tol: &Tolerances) -> Result<Vec<f64>> {
    Ok(jacobi(m, tol, false)?.0)
}

fn off_diagonal_norm(a: &[Complex64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            s += a[i * n + j].norm_sqr();
        }
    }
    (2.0 * s).sqrt()
}

fn jacobi(
    m: &ComplexMatrix,
    tol: &Tolerances,
    want_vectors: bool,
) -> Result<(Vec<f64>, Option<ComplexMatrix>)> {
    m.check_hermitian(tol.hermitian)?;
    let n = m.dim();

    // Work on the exactly Hermitian part so small input asymmetry cannot
    // leak into the rotations.
    let mut work = ComplexMatrix::from_fn(n, |i, j| {
        if i == j {
            Complex64::new(m[(i, i)].re, 0.0)
        } else {
            (m[(i, j)] + m[(j, i)].conj()) * 0.5
        }
    });
    let mut vectors = want_vectors.then(|| ComplexMatrix::identity(n));

    let threshold = tol.jacobi_off_diagonal * work.frobenius_norm().max(1.0);
    let a = work.as_mut_slice();

    let mut sweep = 0;
    loop {
        let off = off_diagonal_norm(a, n);
        if off < threshold {
            break;
        }
        if sweep == tol.jacobi_max_sweeps {
            return Err(Error::NoConvergence { sweeps: sweep, off });
        }
        sweep += 1;

        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;

                let theta = (aqq - app) / (2.0 * r);
                let t = if theta.is_infinite() {
                    0.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // e = e^{-i phi} with a_pq = r e^{i phi}
                let e = apq.conj() / r;
                let se = e * s;
                let ce = e * c;

                // A <- A U  (columns p, q)
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * c - se * akq;
                    a[k * n + q] = akp * s + ce * akq;
                }
                // A <- U^H A  (rows p, q)
                let (se_bar, ce_bar) = (se.conj(), ce.conj());
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = apk * c - se_bar * aqk;
                    a[q * n + k] = apk * s + ce_bar * aqk;
                }
                a[p * n + p] = Complex64::new(app - t * r, 0.0);
                a[q * n + q] = Complex64::new(aqq + t * r, 0.0);
                a[p * n + q] = Complex64::new(0.0, 0.0);
                a[q * n + p] = Complex64::new(0.0, 0.0);

                if let Some(v) = vectors.as_mut() {
                    let v = v.as_mut_slice();
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = vkp * c - se * vkq;
                        v[k * n + q] = vkp * s + ce * vkq;
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].re.total_cmp(&a[j * n + j].re));
    let values = order.iter().map(|&i| a[i * n + i].re).collect();
    let vectors = vectors.map(|v| ComplexMatrix::from_fn(n, |i, k| v[(i, order[k])]));
    Ok((values, vectors))
}
