//! Numerical tolerances shared by validation code and the test suites.

/// Epsilons used when validating and decomposing density matrices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Maximum `|m[i][j] - conj(m[j][i])|` accepted as Hermitian.
    pub hermitian: f64,
    /// Maximum `|Tr(m) - 1|` for a density matrix.
    pub trace: f64,
    /// Smallest eigenvalue still accepted as positive semidefinite (negated).
    pub psd: f64,
    /// Jacobi stops once the off-diagonal Frobenius norm falls below this
    /// (scaled by `max(1, ||A||_F)`).
    pub jacobi_off_diagonal: f64,
    pub jacobi_max_sweeps: usize,
    /// Purity within this distance of 1 counts as a pure state.
    pub purity: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        hermitian: 1e-10,
        trace: 1e-10,
        psd: 1e-10,
        jacobi_off_diagonal: 1e-12,
        jacobi_max_sweeps: 100,
        purity: 1e-10,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
