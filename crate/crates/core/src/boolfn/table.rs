use alloc::vec;
use alloc::vec::Vec;

use super::{check_cap, check_coordinate, insert_bit};
use crate::{Error, Result};

/// A Boolean function on `{0,1}^n`, stored as one packed bit per input mask.
///
/// Bit `b` at mask `x` is the output; its real value is `(-1)^b`, so a stored
/// 0 reads as `+1` and a stored 1 as `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: usize,
    words: Vec<u64>,
}

impl TruthTable {
    fn blank(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVariables);
        }
        check_cap(n)?;
        let words = vec![0u64; (1usize << n).div_ceil(64)];
        Ok(TruthTable { n, words })
    }

    /// Builds a table from `2^n` output bits in mask order.
    pub fn from_bits(n: usize, bits: &[bool]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVariables);
        }
        check_cap(n)?;
        let expected = 1usize << n;
        if bits.len() != expected {
            return Err(Error::LengthMismatch {
                n,
                expected,
                found: bits.len(),
            });
        }
        Self::from_fn(n, |x| bits[x])
    }

    /// Builds a table by evaluating `f` at every mask.
    pub fn from_fn<F>(n: usize, f: F) -> Result<Self>
    where
        F: Fn(usize) -> bool + Sync,
    {
        let mut table = Self::blank(n)?;
        let len = table.len();
        let fill = |(w, word): (usize, &mut u64)| {
            let base = w * 64;
            let end = (base + 64).min(len);
            let mut acc = 0u64;
            for x in base..end {
                acc |= u64::from(f(x)) << (x - base);
            }
            *word = acc;
        };
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            table.words.par_iter_mut().enumerate().for_each(fill);
        }
        #[cfg(not(feature = "parallel"))]
        table.words.iter_mut().enumerate().for_each(fill);
        Ok(table)
    }

    /// Builds the table whose bit at mask `x` is bit `x` of `index`
    /// (`n <= 6`). Enumerating `index` over `0..2^(2^n)` visits every
    /// Boolean function on `n` variables.
    pub fn from_index(n: usize, index: u64) -> Result<Self> {
        if n > 6 {
            return Err(Error::InvalidArgument(alloc::format!(
                "function index encoding supports n <= 6, got {n}"
            )));
        }
        let mut table = Self::blank(n)?;
        let len = table.len();
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        if index & !mask != 0 {
            return Err(Error::InvalidArgument(alloc::format!(
                "function index {index:#x} too large for n={n}"
            )));
        }
        table.words[0] = index;
        Ok(table)
    }

    /// The inverse of [`Self::from_index`], for `n <= 6`.
    pub fn index(&self) -> Option<u64> {
        (self.n <= 6).then(|| self.words[0])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of entries, `2^n`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Output bit at mask `x`.
    #[inline]
    pub fn bit(&self, x: usize) -> bool {
        debug_assert!(x < self.len());
        self.words[x / 64] >> (x % 64) & 1 == 1
    }

    /// Output in the `+-1` encoding.
    #[inline]
    pub fn value(&self, x: usize) -> f64 {
        if self.bit(x) {
            -1.0
        } else {
            1.0
        }
    }

    /// Output in the `+-1` encoding as an integer.
    #[inline]
    pub fn sign(&self, x: usize) -> i64 {
        1 - 2 * i64::from(self.bit(x))
    }

    /// Raw packed words, 64 masks per word, low bit first.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |x| self.bit(x))
    }

    /// Number of masks with output bit 1.
    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// All `2^n` values in the `+-1` encoding.
    pub fn to_signs(&self) -> Vec<f64> {
        (0..self.len()).map(|x| self.value(x)).collect()
    }

    pub fn to_real(&self) -> RealTable {
        RealTable {
            n: self.n,
            values: self.to_signs(),
        }
    }

    /// Pointwise negation of the output bit.
    pub fn negate(&self) -> TruthTable {
        let mut out = self.clone();
        let len = out.len();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        if len < 64 {
            out.words[0] &= (1u64 << len) - 1;
        }
        out
    }

    /// Discrete derivative along coordinate `i`; see [`RealTable::derivative`].
    pub fn derivative(&self, i: usize) -> Result<RealTable> {
        check_coordinate(i, self.n)?;
        let bit = i - 1;
        let values = (0..1usize << (self.n - 1))
            .map(|x| {
                let plus = self.sign(insert_bit(x, bit, false));
                let minus = self.sign(insert_bit(x, bit, true));
                ((plus - minus) / 2) as f64
            })
            .collect();
        Ok(RealTable {
            n: self.n - 1,
            values,
        })
    }
}

/// A real-valued function on `{0,1}^n` with finite values. `n = 0` is
/// allowed and denotes a single constant.
#[derive(Debug, Clone, PartialEq)]
pub struct RealTable {
    n: usize,
    values: Vec<f64>,
}

impl RealTable {
    pub fn new(n: usize, values: Vec<f64>) -> Result<Self> {
        check_cap(n)?;
        let expected = 1usize << n;
        if values.len() != expected {
            return Err(Error::LengthMismatch {
                n,
                expected,
                found: values.len(),
            });
        }
        if let Some(mask) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { mask });
        }
        Ok(RealTable { n, values })
    }

    pub fn from_fn<F: FnMut(usize) -> f64>(n: usize, f: F) -> Result<Self> {
        check_cap(n)?;
        Self::new(n, (0..1usize << n).map(f).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn value(&self, x: usize) -> f64 {
        self.values[x]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Discrete derivative along coordinate `i`:
    /// `g(x) = (f(x, x_i = +1) - f(x, x_i = -1)) / 2` in the `+-1` domain,
    /// where `+1` is bit 0. The other coordinates keep their relative order.
    pub fn derivative(&self, i: usize) -> Result<RealTable> {
        check_coordinate(i, self.n)?;
        let bit = i - 1;
        let values = (0..1usize << (self.n - 1))
            .map(|x| {
                let plus = self.values[insert_bit(x, bit, false)];
                let minus = self.values[insert_bit(x, bit, true)];
                (plus - minus) / 2.0
            })
            .collect();
        Ok(RealTable {
            n: self.n - 1,
            values,
        })
    }

    /// Restriction fixing coordinate `i` to the given bit.
    pub fn restrict(&self, i: usize, value: bool) -> Result<RealTable> {
        check_coordinate(i, self.n)?;
        let bit = i - 1;
        let values = (0..1usize << (self.n - 1))
            .map(|x| self.values[insert_bit(x, bit, value)])
            .collect();
        Ok(RealTable {
            n: self.n - 1,
            values,
        })
    }
}

impl From<&TruthTable> for RealTable {
    fn from(t: &TruthTable) -> Self {
        t.to_real()
    }
}

// Used by the junta constructor.
pub(crate) fn project(x: usize, coords: &[usize]) -> usize {
    coords
        .iter()
        .enumerate()
        .fold(0, |acc, (j, &c)| acc | ((x >> (c - 1) & 1) << j))
}
