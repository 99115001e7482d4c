//! Fixtures shared by the criterion benchmarks in `benches/`.

use qnmc_core::rng::{self, unit_f64};
use qnmc_core::{encode, DensityMatrix, EncodingKind};

/// Reproducible feature vector with entries in `[-1, 1)`.
pub fn features(d: usize, seed: u64) -> Vec<f64> {
    let mut r = rng::stream(seed, 0xbe9c);
    (0..d).map(|_| 2.0 * unit_f64(&mut r) - 1.0).collect()
}

/// Mixed state of dimension `d + 1`: the average of `k` encoded vectors.
pub fn mixed_state(d: usize, k: usize, seed: u64) -> DensityMatrix {
    let pure: Vec<DensityMatrix> = (0..k as u64)
        .map(|i| encode(EncodingKind::NormAugmented, &features(d, seed * 1000 + i)).unwrap())
        .collect();
    DensityMatrix::average(&pure).unwrap()
}
