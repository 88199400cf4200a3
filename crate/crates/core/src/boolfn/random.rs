//! Reproducible pseudorandom tables.
//!
//! The generator is ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`. Uniform reals are `(next_u64() >> 11) * 2^-53`, which is
//! platform independent and does not depend on any sampling code in `rand`.

use rand_core::{RngCore, SeedableRng};

use crate::{Result, TruthTable};

pub type Rng = rand_chacha::ChaCha8Rng;

/// A uniform draw from `[0, 1)` with 53 random bits.
pub fn unit_f64(rng: &mut Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Each output bit is independently 1 with probability `density`, drawn in
/// mask order from ChaCha8 seeded with `seed`.
pub fn random_function(n: usize, seed: u64, density: f64) -> Result<TruthTable> {
    if !(0.0..=1.0).contains(&density) {
        return Err(crate::Error::InvalidArgument(alloc::format!(
            "density must lie in [0, 1], got {density}"
        )));
    }
    super::check_cap(n)?;
    let mut rng = Rng::seed_from_u64(seed);
    let bits: alloc::vec::Vec<bool> = (0..1usize << n)
        .map(|_| unit_f64(&mut rng) < density)
        .collect();
    TruthTable::from_bits(n, &bits)
}
