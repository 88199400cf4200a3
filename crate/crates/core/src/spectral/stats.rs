use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use super::transform::Spectrum;
use crate::boolfn::check_coordinate;
use crate::sum::{pairwise_reduce, pairwise_sum_by};
use crate::{Bias, Error, Result, TruthTable};

/// Floating coefficients below this magnitude count as zero for [`degree`].
pub const DEGREE_ZERO_THRESHOLD: f64 = 1e-9;

/// `-w log2 w` with `0 log 0 = 0`.
#[inline]
pub(crate) fn entropy_term(w: f64) -> f64 {
    if w > 0.0 {
        -w * libm::log2(w)
    } else {
        0.0
    }
}

/// Shannon entropy in bits of the distribution `S -> f^(S)^2`.
pub fn spectral_entropy(s: &Spectrum) -> f64 {
    let c = s.coeffs();
    pairwise_sum_by(c.len(), |m| entropy_term(c[m] * c[m]))
}

/// `I_p(f) = (1 / (4p(1-p))) sum_S |S| f^(S)^2`.
pub fn total_influence_spectral(s: &Spectrum) -> f64 {
    let p = s.p();
    let c = s.coeffs();
    let level_mass = pairwise_sum_by(c.len(), |m| m.count_ones() as f64 * c[m] * c[m]);
    level_mass / (4.0 * p * (1.0 - p))
}

/// `mu_p` mass of each point, indexed by its Hamming weight.
fn point_masses(n: usize, p: f64) -> Vec<f64> {
    (0..=n)
        .map(|k| libm::pow(p, k as f64) * libm::pow(1.0 - p, (n - k) as f64))
        .collect()
}

/// `Pr_{x ~ mu_p}[f(x) != f(x ^ e_i)]`, summed pairwise over all masks.
pub fn influence_combinatorial(f: &TruthTable, bias: Bias, i: usize) -> Result<f64> {
    check_coordinate(i, f.n())?;
    bias.validate()?;
    let masses = point_masses(f.n(), bias.value());
    Ok(pivotal_mass(f, &masses, i - 1))
}

fn pivotal_mass(f: &TruthTable, masses: &[f64], bit: usize) -> f64 {
    let e = 1usize << bit;
    pairwise_sum_by(f.len(), |x| {
        if f.bit(x) != f.bit(x ^ e) {
            masses[x.count_ones() as usize]
        } else {
            0.0
        }
    })
}

/// Every coordinate's influence, coordinate `i` at index `i - 1`.
pub fn influences_combinatorial(f: &TruthTable, bias: Bias) -> Result<Vec<f64>> {
    bias.validate()?;
    let masses = point_masses(f.n(), bias.value());
    Ok((0..f.n()).map(|bit| pivotal_mass(f, &masses, bit)).collect())
}

pub fn total_influence_combinatorial(f: &TruthTable, bias: Bias) -> Result<f64> {
    Ok(crate::sum::pairwise_sum(&influences_combinatorial(f, bias)?))
}

/// Fourier weight per level, `W_k = sum_{|S| = k} f^(S)^2`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LevelProfile {
    pub weights: Vec<f64>,
}

impl LevelProfile {
    pub fn total(&self) -> f64 {
        crate::sum::pairwise_sum(&self.weights)
    }

    /// `sum_{k > t} W_k`; zero once `t` reaches the top level.
    pub fn tail(&self, t: usize) -> f64 {
        if t + 1 >= self.weights.len() {
            return 0.0;
        }
        crate::sum::pairwise_sum(&self.weights[t + 1..])
    }

    /// Expected level under the normalized weights.
    pub fn mean_level(&self) -> f64 {
        let mass: f64 = self.total();
        let first = crate::sum::pairwise_sum_by(self.weights.len(), |k| k as f64 * self.weights[k]);
        first / mass
    }

    pub fn level_variance(&self) -> f64 {
        let mass = self.total();
        let mean = self.mean_level();
        crate::sum::pairwise_sum_by(self.weights.len(), |k| {
            let d = k as f64 - mean;
            d * d * self.weights[k]
        }) / mass
    }

    /// Profile of the tensor product of two functions.
    pub fn convolve(&self, other: &LevelProfile) -> LevelProfile {
        let len = self.weights.len() + other.weights.len() - 1;
        let weights = (0..len)
            .map(|k| {
                let lo = k.saturating_sub(other.weights.len() - 1);
                let hi = k.min(self.weights.len() - 1);
                crate::sum::pairwise_sum_by(hi + 1 - lo, |j| {
                    self.weights[lo + j] * other.weights[k - lo - j]
                })
            })
            .collect();
        LevelProfile { weights }
    }
}

pub fn level_profile(s: &Spectrum) -> LevelProfile {
    let c = s.coeffs();
    let levels = s.n() + 1;
    let weights = pairwise_reduce(
        0..c.len(),
        &|r: Range<usize>| {
            let mut acc = vec![0.0; levels];
            for m in r {
                acc[m.count_ones() as usize] += c[m] * c[m];
            }
            acc
        },
        &|mut a: Vec<f64>, b: Vec<f64>| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    LevelProfile { weights }
}

/// `sum_{|S| > t} f^(S)^2`.
pub fn tail_weight(s: &Spectrum, t: usize) -> f64 {
    let c = s.coeffs();
    pairwise_sum_by(c.len(), |m| {
        if m.count_ones() as usize > t {
            c[m] * c[m]
        } else {
            0.0
        }
    })
}

/// Highest level holding a coefficient of magnitude at least
/// [`DEGREE_ZERO_THRESHOLD`]; `None` if there is none.
pub fn degree(s: &Spectrum) -> Option<usize> {
    s.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.abs() >= DEGREE_ZERO_THRESHOLD)
        .map(|(m, _)| m.count_ones() as usize)
        .max()
}

/// Smallest set of coefficients whose complement carries less than
/// `epsilon` of the squared mass.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MinSupport {
    pub size: usize,
    pub captured: f64,
    pub epsilon: f64,
}

/// Greedy by descending squared coefficient (ties by ascending mask): the
/// shortest prefix whose complement weight is below `epsilon`.
pub fn min_support(s: &Spectrum, epsilon: f64) -> Result<MinSupport> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidArgument(alloc::format!(
            "epsilon must lie in (0, 1), got {epsilon}"
        )));
    }
    let c = s.coeffs();
    let mut order: Vec<usize> = (0..c.len()).collect();
    order.sort_unstable_by(|&a, &b| {
        let (wa, wb) = (c[a] * c[a], c[b] * c[b]);
        wb.total_cmp(&wa).then(a.cmp(&b))
    });
    // suffix[k] = weight of order[k..], accumulated smallest first
    let mut suffix = vec![0.0; order.len() + 1];
    for k in (0..order.len()).rev() {
        let m = order[k];
        suffix[k] = suffix[k + 1] + c[m] * c[m];
    }
    let size = (0..=order.len())
        .find(|&k| suffix[k] < epsilon)
        .unwrap_or(order.len());
    let captured = pairwise_sum_by(size, |k| c[order[k]] * c[order[k]]);
    Ok(MinSupport {
        size,
        captured,
        epsilon,
    })
}
