//! Complex Hermitian matrices, their spectra, and the trace distance between
//! density matrices.

mod density;
mod jacobi;
mod matrix;

pub use density::{purity, trace_distance, DensityMatrix};
pub use jacobi::{eigenvalues_hermitian, eigh, eigh_with, HermitianEigen};
pub use matrix::ComplexMatrix;
