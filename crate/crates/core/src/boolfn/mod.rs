//! Boolean and real-valued functions on the cube, the named families used to
//! exercise the spectral machinery, and graph-property indicators.

mod bias;
mod families;
mod graph;
mod random;
mod table;
mod tree;

use core::sync::atomic::{AtomicUsize, Ordering};

pub use bias::Bias;
pub use families::{and_fn, constant, dictator, majority, mux3, or_fn, parity, tribes};
pub use graph::{binomial, clique_indicator, critical_p0, GraphPropertySpec};
pub use random::{random_function, unit_f64, Rng};
pub use table::{RealTable, TruthTable};
pub use tree::{junta, DecisionTree};

use crate::{Error, Result};

/// Default cap on the number of variables of any materialized table.
pub const DEFAULT_MAX_VARS: usize = 26;

/// Masks are `usize`, and `2^n` doubles must stay addressable.
pub const HARD_MAX_VARS: usize = 40;

static MAX_VARS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_VARS);

/// Current cap on the number of variables of a materialized table.
pub fn max_vars() -> usize {
    MAX_VARS.load(Ordering::Relaxed)
}

/// Overrides the cap. Affects every later allocation in the process.
pub fn set_max_vars(n: usize) -> Result<()> {
    if n == 0 || n > HARD_MAX_VARS || n >= usize::BITS as usize {
        return Err(Error::InvalidArgument(alloc::format!(
            "memory cap must lie in 1..={HARD_MAX_VARS}, got {n}"
        )));
    }
    MAX_VARS.store(n, Ordering::Relaxed);
    Ok(())
}

pub(crate) fn check_cap(n: usize) -> Result<()> {
    let max = max_vars();
    if n > max {
        Err(Error::TooLarge { n, max })
    } else {
        Ok(())
    }
}

pub(crate) fn check_coordinate(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::CoordinateOutOfRange { i, n })
    } else {
        Ok(())
    }
}

/// Inserts `value` at position `bit`, shifting the higher bits up by one.
#[inline]
pub(crate) fn insert_bit(x: usize, bit: usize, value: bool) -> usize {
    let low = x & ((1 << bit) - 1);
    let high = (x >> bit) << (bit + 1);
    low | high | (usize::from(value) << bit)
}
