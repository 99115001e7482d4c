//! Seeded randomness.
//!
//! Every stream is PCG-XSH-RR 64/32 (`rand_pcg::Pcg32`, 64-bit state)
//! constructed as `Pcg32::new(seed, stream)`: a split for run `r` uses
//! stream `r`, generators use their own stream constants. Bounded integers
//! use Lemire's widening-multiply rejection method on `next_u64`, so
//! permutations depend only on the PCG output sequence and not on the
//! sampling internals of a particular `rand` release.

use rand::RngCore;
use rand_pcg::Pcg32;

pub type Rng = Pcg32;

pub fn stream(seed: u64, stream: u64) -> Rng {
    Pcg32::new(seed, stream)
}

/// Uniform integer in `0..n`. `n` must be nonzero.
pub fn below(rng: &mut impl RngCore, n: u64) -> u64 {
    assert!(n > 0, "below(0)");
    let mut m = (rng.next_u64() as u128) * (n as u128);
    let mut low = m as u64;
    if low < n {
        let threshold = n.wrapping_neg() % n;
        while low < threshold {
            m = (rng.next_u64() as u128) * (n as u128);
            low = m as u64;
        }
    }
    (m >> 64) as u64
}

/// Uniform in `[0, 1)` with 53 random bits.
pub fn unit_f64(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Fisher-Yates shuffle, last position first.
pub fn shuffle<T>(rng: &mut impl RngCore, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        let j = below(rng, i as u64 + 1) as usize;
        items.swap(i, j);
    }
}

pub fn permutation(rng: &mut impl RngCore, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    shuffle(rng, &mut p);
    p
}
