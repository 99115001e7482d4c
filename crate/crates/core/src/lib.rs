//! Nearest-mean classification with density-matrix encodings.
//!
//! Real feature vectors are encoded as pure density matrices, class
//! centroids are averaged states, and a query goes to the class whose
//! centroid is nearest in trace distance. The classical Euclidean nearest
//! mean classifier is provided alongside for comparison, together with a
//! repeated hold-out protocol, a feature-rescaling sweep and the usual
//! confusion-based indices.
//!
//! ```
//! use qnmc_core::{encode_dataset, train_qnmc, EncodingKind, Pattern};
//!
//! let training = vec![
//!     Pattern::new(vec![1.0, 0.2], 1),
//!     Pattern::new(vec![0.9, 0.1], 1),
//!     Pattern::new(vec![-1.0, 2.0], 2),
//!     Pattern::new(vec![-1.2, 1.8], 2),
//! ];
//! let states = encode_dataset(&training, EncodingKind::NormAugmented).unwrap();
//! let model = train_qnmc(&states).unwrap();
//! assert_eq!(model.classify_features(&[1.1, 0.0]).unwrap().0, 1);
//! ```

pub mod classifier;
pub mod datagen;
pub mod encoding;
mod error;
pub mod experiment;
pub mod hermitian;
pub mod metrics;
mod pattern;
pub mod report;
pub mod rng;
mod tolerance;

pub use classifier::{
    centroid_gaps, classify_nmc, classify_qnmc, train_nmc, train_nmc_with_classes, train_qnmc,
    train_qnmc_with_classes, verify_centroid_inequality, ClassicalModel, QuantumModel,
};
pub use datagen::{
    load_csv, rescale, split, split_indices, CsvSchema, Dataset, Generator, Manifest, RescaleGrid,
    SplitSpec,
};
pub use encoding::{encode, encode_dataset, encode_pattern, DensityPattern, EncodingKind};
pub use error::{Error, Result};
pub use experiment::{
    run_experiment, run_sweep, ClassifierKind, ExperimentConfig, ExperimentResult, SweepResult,
};
pub use hermitian::{eigenvalues_hermitian, purity, trace_distance, ComplexMatrix, DensityMatrix};
pub use metrics::{evaluate, summarize_runs, ClassIndices, EvaluationReport, Index, RunReport};
pub use pattern::{ClassLabel, Pattern};
pub use report::{emit_report, OutputFormat};
pub use tolerance::Tolerances;
