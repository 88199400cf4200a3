//! Exact integer spectra at the uniform measure.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::butterfly;
use super::transform::Spectrum;
use crate::boolfn::check_cap;
use crate::{Bias, Error, RealTable, Result, TruthTable};

/// Uniform-measure spectrum with coefficient `numerators[S] / 2^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicSpectrum {
    n: usize,
    numerators: Vec<i64>,
}

impl DyadicSpectrum {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn numerators(&self) -> &[i64] {
        &self.numerators
    }

    pub fn numerator(&self, s: usize) -> i64 {
        self.numerators[s]
    }

    /// `sum_S numerators[S]^2`; equals `4^n` for a `+-1` function.
    pub fn parseval_numerator_sum(&self) -> u128 {
        self.numerators
            .iter()
            .map(|&a| (i128::from(a) * i128::from(a)) as u128)
            .sum()
    }

    /// Highest level with a nonzero coefficient, `None` for the zero function.
    pub fn degree(&self) -> Option<usize> {
        self.numerators
            .iter()
            .enumerate()
            .filter(|(_, a)| **a != 0)
            .map(|(s, _)| s.count_ones() as usize)
            .max()
    }

    /// Applies the butterfly again and divides by `2^n`, recovering the
    /// original values exactly.
    pub fn reconstruct(&self) -> Vec<i64> {
        let mut data = self.numerators.clone();
        butterfly::run(&mut data, |a, b| (a + b, a - b));
        data.into_iter().map(|v| v >> self.n).collect()
    }

    pub fn to_spectrum(&self) -> Spectrum {
        let scale = 1.0 / (1u64 << self.n) as f64;
        let coeffs = self.numerators.iter().map(|&a| a as f64 * scale).collect();
        Spectrum::new(self.n, Bias::half(), coeffs).expect("dyadic coefficients are finite")
    }

    /// Exact level weights `W_k = (sum_{|S| = k} numerators[S]^2) / 4^n`.
    pub fn level_profile_exact(&self) -> ExactLevelProfile {
        let mut acc = vec![0u128; self.n + 1];
        for (s, &a) in self.numerators.iter().enumerate() {
            acc[s.count_ones() as usize] += (i128::from(a) * i128::from(a)) as u128;
        }
        ExactLevelProfile {
            numerators: acc.into_iter().map(BigUint::from).collect(),
            denominator_log2: 2 * self.n,
        }
    }
}

/// Level weights as exact rationals `numerators[k] / 2^denominator_log2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactLevelProfile {
    pub numerators: Vec<BigUint>,
    pub denominator_log2: usize,
}

impl ExactLevelProfile {
    pub fn to_f64(&self) -> Vec<f64> {
        let scale = libm::exp2(-(self.denominator_log2 as f64));
        self.numerators
            .iter()
            .map(|a| biguint_to_f64(a) * scale)
            .collect()
    }

    /// Exact convolution: the level profile of a tensor product.
    pub fn convolve(&self, other: &ExactLevelProfile) -> ExactLevelProfile {
        let len = self.numerators.len() + other.numerators.len() - 1;
        let mut out = vec![BigUint::from(0u8); len];
        for (i, a) in self.numerators.iter().enumerate() {
            if *a == BigUint::from(0u8) {
                continue;
            }
            for (j, b) in other.numerators.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactLevelProfile {
            numerators: out,
            denominator_log2: self.denominator_log2 + other.denominator_log2,
        }
    }

    /// `true` iff the weights sum to exactly 1.
    pub fn sums_to_one(&self) -> bool {
        let total: BigUint = self.numerators.iter().sum();
        total == BigUint::from(1u8) << self.denominator_log2
    }
}

fn biguint_to_f64(a: &BigUint) -> f64 {
    let bits = a.bits();
    if bits <= 64 {
        return a.iter_u64_digits().next().unwrap_or(0) as f64;
    }
    // Keep the top 64 bits; the dropped tail is below f64 precision.
    let shift = bits - 64;
    let top: BigUint = a >> shift;
    top.iter_u64_digits().next().unwrap_or(0) as f64 * libm::exp2(shift as f64)
}

fn integer_butterfly(n: usize, mut data: Vec<i64>) -> DyadicSpectrum {
    butterfly::run(&mut data, |a, b| (a + b, a - b));
    DyadicSpectrum {
        n,
        numerators: data,
    }
}

/// `numerators[S] = sum_x f(x) (-1)^{|S & x|}` in integer arithmetic.
pub fn exact_transform(f: &TruthTable) -> Result<DyadicSpectrum> {
    let n = f.n();
    check_cap(n)?;
    let data = (0..f.len()).map(|x| f.sign(x)).collect();
    Ok(integer_butterfly(n, data))
}

/// Exact transform of an integer-valued real table. Entries must be
/// integers of magnitude at most `2^(62 - n)` so no sum can overflow.
pub fn exact_transform_integer(f: &RealTable) -> Result<DyadicSpectrum> {
    let n = f.n();
    check_cap(n)?;
    let bound = libm::exp2((62 - n as i32) as f64);
    let mut data = Vec::with_capacity(f.len());
    for (x, &v) in f.values().iter().enumerate() {
        if libm::trunc(v) != v || v.abs() > bound {
            return Err(Error::NotInteger { mask: x });
        }
        data.push(v as i64);
    }
    Ok(integer_butterfly(n, data))
}

/// `true` iff the spectrum has degree at most `k` and every coefficient is an
/// integer multiple of `2^-k`, i.e. `2^(n-k)` divides every numerator.
pub fn dyadic_check(d: &DyadicSpectrum, k: usize) -> Result<bool> {
    if k > d.n {
        return Err(Error::LevelOutOfRange { level: k, max: d.n });
    }
    if d.degree().is_some_and(|deg| deg > k) {
        return Ok(false);
    }
    let modulus = 1i64 << (d.n - k);
    Ok(d.numerators.iter().all(|a| a % modulus == 0))
}
