use alloc::vec::Vec;

use super::butterfly;
use crate::boolfn::check_cap;
use crate::sum::pairwise_sum_by;
use crate::{Bias, Error, RealTable, Result, TruthTable};

/// Anything with a real value at each of the `2^n` masks.
pub trait CubeFunction {
    fn n(&self) -> usize;
    fn to_values(&self) -> Vec<f64>;
}

impl CubeFunction for TruthTable {
    fn n(&self) -> usize {
        TruthTable::n(self)
    }
    fn to_values(&self) -> Vec<f64> {
        self.to_signs()
    }
}

impl CubeFunction for RealTable {
    fn n(&self) -> usize {
        RealTable::n(self)
    }
    fn to_values(&self) -> Vec<f64> {
        self.values().to_vec()
    }
}

/// All `2^n` Fourier-Walsh coefficients of a function with respect to
/// `mu_p`, indexed by subset mask.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    n: usize,
    bias: Bias,
    coeffs: Vec<f64>,
}

impl Spectrum {
    pub fn new(n: usize, bias: Bias, coeffs: Vec<f64>) -> Result<Self> {
        bias.validate()?;
        check_cap(n)?;
        let expected = 1usize << n;
        if coeffs.len() != expected {
            return Err(Error::LengthMismatch {
                n,
                expected,
                found: coeffs.len(),
            });
        }
        if let Some(mask) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite { mask });
        }
        Ok(Spectrum { n, bias, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bias(&self) -> Bias {
        self.bias
    }

    pub fn p(&self) -> f64 {
        self.bias.value()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    #[inline]
    pub fn coeff(&self, s: usize) -> f64 {
        self.coeffs[s]
    }

    /// The coefficient at the empty set, which is the `mu_p`-mean.
    pub fn mean(&self) -> f64 {
        self.coeffs[0]
    }

    /// `sum_S f^(S)^2`, which equals `E[f^2]` (1 for Boolean functions).
    pub fn parseval_sum(&self) -> f64 {
        pairwise_sum_by(self.coeffs.len(), |s| self.coeffs[s] * self.coeffs[s])
    }
}

/// Computes the spectrum with an `n`-stage butterfly in `O(n 2^n)`.
///
/// Stage `i` maps the pair `(a, b) = (f at x_i = 0, f at x_i = 1)` to
/// `((1-p) a + p b, sqrt(p(1-p)) (a - b))`: the first slot averages under
/// the coordinate's marginal, the second pairs it with `u_{i}`.
pub fn transform<F: CubeFunction + ?Sized>(f: &F, bias: Bias) -> Result<Spectrum> {
    bias.validate()?;
    let n = f.n();
    check_cap(n)?;
    let p = bias.value();
    let q = 1.0 - p;
    let s = libm::sqrt(p * q);
    let mut data = f.to_values();
    butterfly::run(&mut data, |a, b| (q * a + p * b, s * (a - b)));
    Ok(Spectrum {
        n,
        bias,
        coeffs: data,
    })
}

/// Evaluates `sum_S f^(S) u_S` at every mask.
pub fn inverse_transform(spectrum: &Spectrum) -> RealTable {
    let p = spectrum.p();
    let q = 1.0 - p;
    let up = libm::sqrt(p / q);
    let down = libm::sqrt(q / p);
    let mut data = spectrum.coeffs.clone();
    butterfly::run(&mut data, |c0, c1| (c0 + up * c1, c0 - down * c1));
    RealTable::new(spectrum.n, data).expect("inverse of a finite spectrum is finite")
}
