//! Standard test families. Output bit 1 means "true", which reads as `-1`.

use super::check_coordinate;
use crate::{Error, Result, TruthTable};

pub fn constant(n: usize, bit: bool) -> Result<TruthTable> {
    TruthTable::from_fn(n, |_| bit)
}

/// Output bit equals input bit `i`.
pub fn dictator(n: usize, i: usize) -> Result<TruthTable> {
    check_coordinate(i, n)?;
    TruthTable::from_fn(n, |x| x >> (i - 1) & 1 == 1)
}

/// The character of `s` at the uniform measure: `(-1)^{|s & x|}`.
pub fn parity(n: usize, s: usize) -> Result<TruthTable> {
    if n < usize::BITS as usize && s >> n != 0 {
        return Err(Error::MaskOutOfRange { mask: s, n });
    }
    TruthTable::from_fn(n, |x| (x & s).count_ones() % 2 == 1)
}

/// Majority of an odd number of bits.
pub fn majority(n: usize) -> Result<TruthTable> {
    if n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(alloc::format!(
            "majority needs an odd variable count, got {n}"
        )));
    }
    TruthTable::from_fn(n, |x| x.count_ones() as usize > n / 2)
}

/// OR of `s` disjoint ANDs of width `w`; tribe `j` owns coordinates
/// `j*w + 1 ..= (j+1)*w`.
pub fn tribes(w: usize, s: usize) -> Result<TruthTable> {
    if w == 0 || s == 0 {
        return Err(Error::InvalidArgument(alloc::format!(
            "tribes needs positive width and count, got {w},{s}"
        )));
    }
    let n = w.checked_mul(s).ok_or(Error::TooLarge {
        n: usize::MAX,
        max: super::max_vars(),
    })?;
    let tribe = (1usize << w) - 1;
    TruthTable::from_fn(n, |x| (0..s).any(|j| (x >> (j * w)) & tribe == tribe))
}

pub fn and_fn(n: usize) -> Result<TruthTable> {
    let full = if n >= usize::BITS as usize { 0 } else { (1usize << n) - 1 };
    TruthTable::from_fn(n, |x| x == full)
}

pub fn or_fn(n: usize) -> Result<TruthTable> {
    TruthTable::from_fn(n, |x| x != 0)
}

/// `x2` if `x1 = 1`, else `x3`.
pub fn mux3() -> Result<TruthTable> {
    TruthTable::from_fn(3, |x| {
        let sel = x & 1 == 1;
        if sel {
            x >> 1 & 1 == 1
        } else {
            x >> 2 & 1 == 1
        }
    })
}
