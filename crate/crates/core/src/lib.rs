//! Fourier-Walsh analysis of Boolean functions on the (possibly biased)
//! discrete cube `{0,1}^n` with product measure `mu_p`.
//!
//! The crate is `no_std` (with `alloc`). The `parallel` feature pulls in
//! `std` and rayon; every parallel path uses the same reduction tree and the
//! same per-element arithmetic as the sequential one, so results are
//! bitwise identical for any thread count.
//!
//! Conventions used throughout:
//!
//! - A point of the cube is a mask `x`; coordinate `i` (1-based) is bit `i - 1`.
//! - A Boolean output bit `b` is read as the real value `(-1)^b`.
//! - Logarithms are base 2, so entropies are in bits.
#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod boolfn;
pub mod conjecture;
mod error;
pub mod reduction;
pub mod spectral;
pub mod sum;
pub mod tensor;

pub use boolfn::{Bias, GraphPropertySpec, RealTable, TruthTable};
pub use error::{Error, Result};
pub use spectral::{DyadicSpectrum, LevelProfile, Spectrum};
