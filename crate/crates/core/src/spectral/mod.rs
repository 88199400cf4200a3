//! Fourier-Walsh spectra with respect to `mu_p`.
//!
//! The character of `S` is
//! `u_S(x) = prod_{i in S} (x_i = 0 ? sqrt(p/(1-p)) : -sqrt((1-p)/p))`,
//! orthonormal under `mu_p`; at `p = 1/2` it is `(-1)^{|S & x|}`. The
//! coefficient at mask `S` is `E_{mu_p}[f * u_S]`.

mod butterfly;
mod exact;
mod stats;
mod transform;

pub use exact::{dyadic_check, exact_transform, exact_transform_integer, DyadicSpectrum, ExactLevelProfile};
pub use stats::{
    degree, influence_combinatorial, influences_combinatorial, level_profile, min_support,
    spectral_entropy, tail_weight, total_influence_combinatorial, total_influence_spectral,
    LevelProfile, MinSupport, DEGREE_ZERO_THRESHOLD,
};
pub use transform::{inverse_transform, transform, CubeFunction, Spectrum};
