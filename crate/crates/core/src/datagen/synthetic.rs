//! Synthetic benchmark families.
//!
//! Generator parameters are fixed constants (class sizes and dimensions
//! follow the usual benchmark catalogue):
//!
//! | family        | classes (sizes)        | d  | means (per feature) | spread                              |
//! |---------------|------------------------|----|---------------------|-------------------------------------|
//! | Gaussian (I)  | 200 + 200              | 30 | 1.0 / 1.15          | sigma 1, features 0..10 corr. 0.8   |
//! | Gaussian (II) | 100 + 900              | 8  | 1.0 / 1.5           | sigma 0.5 / 1.5, uncorrelated       |
//! | Gaussian (III)| 50 + 500 + 1500        | 8  | 1.0 / 2.0 / 3.0     | sigma 0.5 / 1 / 2, corr. .3 / .5 / .7 |
//! | Moon          | 100 + 100              | 2  | two interleaved unit half circles, N(0, 0.2^2) noise |
//! | Banana        | 2376 + 2924            | 2  | two arcs of radius 5, N(0, 1) noise  |
//!
//! Correlated blocks are equicorrelated: `x_i = mu_i + sigma (sqrt(1-rho) z_i + sqrt(rho) w)`
//! with a shared `w ~ N(0, 1)`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::StandardNormal;

use super::Dataset;
use crate::error::{Error, Result};
use crate::pattern::{ClassLabel, Pattern};
use crate::rng::{self, unit_f64};

const GAUSSIAN_STREAM: u64 = 0x6761_7573;
const MOON_STREAM: u64 = 0x6d6f_6f6e;
const BANANA_STREAM: u64 = 0x6261_6e61;

pub const MOON_DEFAULT_PER_CLASS: usize = 100;
pub const MOON_DEFAULT_NOISE: f64 = 0.2;
pub const BANANA_DEFAULT_TOTAL: usize = 5300;
const BANANA_CLASS1_SHARE: (usize, usize) = (2376, 5300);
const BANANA_RADIUS: f64 = 5.0;
const BANANA_SPREAD: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GaussianFamily {
    I,
    II,
    III,
}

impl fmt::Display for GaussianFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GaussianFamily::I => "I",
            GaussianFamily::II => "II",
            GaussianFamily::III => "III",
        })
    }
}

impl FromStr for GaussianFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(GaussianFamily::I),
            "II" | "2" => Ok(GaussianFamily::II),
            "III" | "3" => Ok(GaussianFamily::III),
            _ => Err(Error::Config(format!("unknown gaussian family '{s}'"))),
        }
    }
}

struct ClassSpec {
    count: usize,
    mean: Vec<f64>,
    sigma: f64,
    /// Equicorrelation and the features it applies to.
    rho: f64,
    correlated: std::ops::Range<usize>,
}

fn family_spec(family: GaussianFamily) -> Vec<ClassSpec> {
    match family {
        GaussianFamily::I => vec![
            ClassSpec {
                count: 200,
                mean: vec![1.0; 30],
                sigma: 1.0,
                rho: 0.8,
                correlated: 0..10,
            },
            ClassSpec {
                count: 200,
                mean: vec![1.15; 30],
                sigma: 1.0,
                rho: 0.8,
                correlated: 0..10,
            },
        ],
        GaussianFamily::II => vec![
            ClassSpec {
                count: 100,
                mean: vec![1.0; 8],
                sigma: 0.5,
                rho: 0.0,
                correlated: 0..0,
            },
            ClassSpec {
                count: 900,
                mean: vec![1.5; 8],
                sigma: 1.5,
                rho: 0.0,
                correlated: 0..0,
            },
        ],
        GaussianFamily::III => vec![
            ClassSpec {
                count: 50,
                mean: vec![1.0; 8],
                sigma: 0.5,
                rho: 0.3,
                correlated: 0..8,
            },
            ClassSpec {
                count: 500,
                mean: vec![2.0; 8],
                sigma: 1.0,
                rho: 0.5,
                correlated: 0..8,
            },
            ClassSpec {
                count: 1500,
                mean: vec![3.0; 8],
                sigma: 2.0,
                rho: 0.7,
                correlated: 0..8,
            },
        ],
    }
}

fn normal(rng: &mut rng::Rng) -> f64 {
    rng.sample(StandardNormal)
}

fn numbered_labels(n: usize) -> Vec<String> {
    (1..=n).map(|l| l.to_string()).collect()
}

pub fn gen_gaussian(family: GaussianFamily, seed: u64) -> Dataset {
    let mut rng = rng::stream(seed, GAUSSIAN_STREAM);
    let specs = family_spec(family);
    let mut patterns = Vec::new();
    for (ci, spec) in specs.iter().enumerate() {
        for _ in 0..spec.count {
            let shared = normal(&mut rng);
            let features = spec
                .mean
                .iter()
                .enumerate()
                .map(|(i, &mu)| {
                    let z = normal(&mut rng);
                    let noise = if spec.correlated.contains(&i) {
                        (1.0 - spec.rho).sqrt() * z + spec.rho.sqrt() * shared
                    } else {
                        z
                    };
                    mu + spec.sigma * noise
                })
                .collect();
            patterns.push(Pattern::new(features, ClassLabel(ci as u32 + 1)));
        }
    }
    Dataset::with_label_names(
        format!("Gaussian ({family})"),
        patterns,
        numbered_labels(specs.len()),
    )
    .expect("generated data is well formed")
}

/// Two interleaving half circles: class 1 on `(cos a, sin a)`, class 2 on
/// `(1 - cos a, 1/2 - sin a)`, `a ~ U[0, pi)`, plus isotropic gaussian noise.
pub fn gen_moon(n_per_class: usize, noise: f64, seed: u64) -> Result<Dataset> {
    if n_per_class == 0 {
        return Err(Error::Config(
            "moon needs at least one pattern per class".into(),
        ));
    }
    let mut rng = rng::stream(seed, MOON_STREAM);
    let mut patterns = Vec::with_capacity(2 * n_per_class);
    for class in 1..=2u32 {
        for _ in 0..n_per_class {
            let a = PI * unit_f64(&mut rng);
            let (x, y) = if class == 1 {
                (a.cos(), a.sin())
            } else {
                (1.0 - a.cos(), 0.5 - a.sin())
            };
            let (nx, ny) = (normal(&mut rng), normal(&mut rng));
            patterns.push(Pattern::new(vec![x + noise * nx, y + noise * ny], class));
        }
    }
    Dataset::with_label_names("Moon", patterns, numbered_labels(2))
}

/// Two banana-shaped arcs of radius 5 with unit gaussian spread; class 1
/// gets `round(n_total * 2376 / 5300)` patterns.
pub fn gen_banana(n_total: usize, seed: u64) -> Result<Dataset> {
    let (share, of) = BANANA_CLASS1_SHARE;
    let n1 = ((n_total * share) as f64 / of as f64).round() as usize;
    let n2 = n_total - n1;
    if n1 == 0 || n2 == 0 {
        return Err(Error::Config(format!(
            "banana needs both classes non-empty, total {n_total}"
        )));
    }
    let mut rng = rng::stream(seed, BANANA_STREAM);
    let r = BANANA_RADIUS;
    let mut patterns = Vec::with_capacity(n_total);
    for _ in 0..n1 {
        let a = 0.125 * PI + 1.25 * PI * unit_f64(&mut rng);
        let (nx, ny) = (normal(&mut rng), normal(&mut rng));
        patterns.push(Pattern::new(
            vec![
                r * a.sin() + BANANA_SPREAD * nx,
                r * a.cos() + BANANA_SPREAD * ny,
            ],
            1,
        ));
    }
    for _ in 0..n2 {
        let a = 0.375 * PI - 1.25 * PI * unit_f64(&mut rng);
        let (nx, ny) = (normal(&mut rng), normal(&mut rng));
        patterns.push(Pattern::new(
            vec![
                r * a.sin() + BANANA_SPREAD * nx - 0.75 * r,
                r * a.cos() + BANANA_SPREAD * ny - 0.75 * r,
            ],
            2,
        ));
    }
    Dataset::with_label_names("Banana", patterns, numbered_labels(2))
}
