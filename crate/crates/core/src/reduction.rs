//! Reduction from the biased cube `{0,1}^n_p`, `p = t/2^m`, to the uniform
//! cube `{0,1}^{mn}`.
//!
//! Each biased bit is replaced by a block of `m` uniform bits `y^i`. The
//! block's mask bits, taken as an ordinary binary number, give `Bin(y^i)`;
//! the first bit `y^i_1` of the block is its most significant bit. Then
//! `h(y^i) = 1` iff `Bin(y^i) >= 2^m - t`. The reduced function is
//! `g(y) = f(h(y^1), ..., h(y^n))`.

use alloc::vec;
use alloc::vec::Vec;

use crate::boolfn::check_cap;
use crate::spectral::{
    spectral_entropy, total_influence_combinatorial, transform, Spectrum,
};
use crate::{Bias, Error, Result, TruthTable};

/// Slack allowed when comparing both sides of a proven inequality.
pub const INEQUALITY_SLACK: f64 = 1e-9;

/// Block geometry of the reduction. Block `i` (1-based) occupies reduced
/// mask bits `(i-1)m .. im - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ReductionLayout {
    n: usize,
    m: u32,
    t: u64,
}

impl ReductionLayout {
    pub fn new(n: usize, t: u64, m: u32) -> Result<Self> {
        Bias::exact(t, m)?;
        if n == 0 {
            return Err(Error::NoVariables);
        }
        let total = n.checked_mul(m as usize).ok_or(Error::TooLarge {
            n: usize::MAX,
            max: crate::boolfn::max_vars(),
        })?;
        check_cap(total)?;
        Ok(ReductionLayout { n, m, t })
    }

    /// Layout for a dyadic bias. `Exact` is used as given; a `General` value
    /// is accepted only if it is exactly dyadic, and never rounded.
    pub fn for_bias(n: usize, bias: Bias) -> Result<Self> {
        match bias {
            Bias::Exact { t, m } => Self::new(n, t, m),
            Bias::General(p) => match bias.as_dyadic() {
                Some((t, m)) => Self::new(n, t, m),
                None => Err(Error::NonDyadicBias(p)),
            },
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Number of variables of the reduced function, `m * n`.
    pub fn total(&self) -> usize {
        self.n * self.m as usize
    }

    pub fn bias(&self) -> Bias {
        Bias::Exact {
            t: self.t,
            m: self.m,
        }
    }

    pub fn p(&self) -> f64 {
        self.bias().value()
    }

    /// `Bin(y^i)` for the 0-based block `block`.
    #[inline]
    pub fn block_value(&self, y: usize, block: usize) -> u64 {
        let width = self.m as usize;
        ((y >> (block * width)) & ((1usize << width) - 1)) as u64
    }

    #[inline]
    pub fn threshold(&self, block_value: u64) -> bool {
        block_value >= (1u64 << self.m) - self.t
    }

    /// The biased point `(h(y^1), ..., h(y^n))` as a mask.
    #[inline]
    pub fn project_point(&self, y: usize) -> usize {
        (0..self.n).fold(0, |acc, i| {
            acc | (usize::from(self.threshold(self.block_value(y, i))) << i)
        })
    }

    fn check_f(&self, f_n: usize) -> Result<()> {
        if f_n != self.n {
            return Err(Error::InvalidArgument(alloc::format!(
                "layout expects {} variables, function has {f_n}",
                self.n
            )));
        }
        Ok(())
    }
}

/// `Red(f)`: the function on `m n` uniform bits.
pub fn reduce(f: &TruthTable, layout: &ReductionLayout) -> Result<TruthTable> {
    layout.check_f(f.n())?;
    TruthTable::from_fn(layout.total(), |y| f.bit(layout.project_point(y)))
}

/// The set of blocks a reduced mask touches, `{i : S_i nonempty}`.
pub fn block_projection(s: usize, layout: &ReductionLayout) -> usize {
    (0..layout.n).fold(0, |acc, i| {
        acc | (usize::from(layout.block_value(s, i) != 0) << i)
    })
}

/// For each biased point `x`, the number of uniform points `y` mapping to it.
/// Dividing by `2^{mn}` gives the pushforward of `mu_{1/2}`.
pub fn pushforward_counts(layout: &ReductionLayout) -> Vec<u64> {
    let mut counts = vec![0u64; 1 << layout.n];
    for y in 0..1usize << layout.total() {
        counts[layout.project_point(y)] += 1;
    }
    counts
}

/// One fiber `V(S')` of the coefficient-block identity.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Red0Row {
    pub original_mask: usize,
    /// `sum_{S in V(S')} g^(S)^2` at the uniform measure.
    pub reduced_weight: f64,
    /// `f^(S')^2` at `mu_p`.
    pub original_weight: f64,
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Red0Report {
    pub rows: Vec<Red0Row>,
    pub max_gap: f64,
}

fn red0_from_spectra(f_spec: &Spectrum, g_spec: &Spectrum, layout: &ReductionLayout) -> Red0Report {
    let mut reduced = vec![0.0; 1 << layout.n];
    for (s, c) in g_spec.coeffs().iter().enumerate() {
        reduced[block_projection(s, layout)] += c * c;
    }
    let rows: Vec<Red0Row> = reduced
        .into_iter()
        .enumerate()
        .map(|(mask, reduced_weight)| {
            let c = f_spec.coeff(mask);
            let original_weight = c * c;
            Red0Row {
                original_mask: mask,
                reduced_weight,
                original_weight,
                gap: (reduced_weight - original_weight).abs(),
            }
        })
        .collect();
    let max_gap = rows.iter().map(|r| r.gap).fold(0.0, f64::max);
    Red0Report { rows, max_gap }
}

/// Compares the fiber sums of the reduced spectrum with the squared
/// coefficients of `f` at `mu_p`, computed independently.
pub fn verify_red0(f: &TruthTable, layout: &ReductionLayout) -> Result<Red0Report> {
    let g = reduce(f, layout)?;
    let f_spec = transform(f, layout.bias())?;
    let g_spec = transform(&g, Bias::half())?;
    Ok(red0_from_spectra(&f_spec, &g_spec, layout))
}

/// `floor(log2(1/p))` for `p = t/2^m`: the largest `k` with `t 2^k <= 2^m`.
pub fn floor_log2_inverse(t: u64, m: u32) -> u32 {
    let mut k = 0;
    while k < m && (t as u128) << (k + 1) <= 1u128 << m {
        k += 1;
    }
    k
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RedFkReport {
    /// `I_{1/2}(Red f)`.
    pub lhs: f64,
    /// `6 p floor(log2(1/p)) I_p(f)`.
    pub rhs: f64,
    pub holds: bool,
    /// `lhs / rhs`; `None` when `rhs = 0`.
    pub ratio: Option<f64>,
}

fn red_fk_from(influence_g: f64, influence_f: f64, layout: &ReductionLayout) -> RedFkReport {
    let k = floor_log2_inverse(layout.t, layout.m);
    let rhs = 6.0 * layout.p() * k as f64 * influence_f;
    RedFkReport {
        lhs: influence_g,
        rhs,
        holds: influence_g <= rhs + INEQUALITY_SLACK,
        ratio: (rhs > 0.0).then(|| influence_g / rhs),
    }
}

/// Total influence of the reduced function against the biased bound.
/// Requires `p <= 1/2`.
pub fn verify_red_fk(f: &TruthTable, layout: &ReductionLayout) -> Result<RedFkReport> {
    if layout.p() > 0.5 {
        return Err(Error::BiasAboveHalf(layout.p()));
    }
    let g = reduce(f, layout)?;
    let lhs = total_influence_combinatorial(&g, Bias::half())?;
    let i_f = total_influence_combinatorial(f, layout.bias())?;
    Ok(red_fk_from(lhs, i_f, layout))
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EntropyMonotoneReport {
    /// `Ent_{1/2}(Red f)`.
    pub reduced: f64,
    /// `Ent_p(f)`.
    pub original: f64,
    pub holds: bool,
}

fn entropy_from(g_spec: &Spectrum, f_spec: &Spectrum) -> EntropyMonotoneReport {
    let reduced = spectral_entropy(g_spec);
    let original = spectral_entropy(f_spec);
    EntropyMonotoneReport {
        reduced,
        original,
        holds: reduced >= original - INEQUALITY_SLACK,
    }
}

pub fn verify_entropy_monotone(
    f: &TruthTable,
    layout: &ReductionLayout,
) -> Result<EntropyMonotoneReport> {
    let g = reduce(f, layout)?;
    let f_spec = transform(f, layout.bias())?;
    let g_spec = transform(&g, Bias::half())?;
    Ok(entropy_from(&g_spec, &f_spec))
}

/// All three checks on one reduced table and one pair of spectra.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ReductionReport {
    pub p: f64,
    pub t: u64,
    pub m: u32,
    pub red0: Red0Report,
    /// Skipped (`None`) when `p > 1/2`.
    pub red_fk: Option<RedFkReport>,
    pub entropy: EntropyMonotoneReport,
}

impl ReductionReport {
    /// `true` iff every proven relation checked here held.
    pub fn all_hold(&self, red0_tolerance: f64) -> bool {
        self.red0.max_gap < red0_tolerance
            && self.red_fk.is_none_or(|r| r.holds)
            && self.entropy.holds
    }
}

pub fn verify_all(f: &TruthTable, layout: &ReductionLayout) -> Result<ReductionReport> {
    let g = reduce(f, layout)?;
    let f_spec = transform(f, layout.bias())?;
    let g_spec = transform(&g, Bias::half())?;
    let red_fk = if layout.p() <= 0.5 {
        let lhs = total_influence_combinatorial(&g, Bias::half())?;
        let i_f = total_influence_combinatorial(f, layout.bias())?;
        Some(red_fk_from(lhs, i_f, layout))
    } else {
        None
    };
    Ok(ReductionReport {
        p: layout.p(),
        t: layout.t,
        m: layout.m,
        red0: red0_from_spectra(&f_spec, &g_spec, layout),
        red_fk,
        entropy: entropy_from(&g_spec, &f_spec),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::{and_fn, constant, dictator, parity};

    fn quarter(n: usize) -> ReductionLayout {
        ReductionLayout::new(n, 1, 2).unwrap()
    }

    #[test]
    fn dictator_reduces_to_and() {
        let g = reduce(&dictator(1, 1).unwrap(), &quarter(1)).unwrap();
        assert_eq!(g, and_fn(2).unwrap());
    }

    #[test]
    fn constant_reduces_to_constant() {
        let layout = ReductionLayout::new(3, 3, 3).unwrap();
        let g = reduce(&constant(3, true).unwrap(), &layout).unwrap();
        assert_eq!(g.count_ones(), 1 << 9);
    }

    #[test]
    fn block_projection_examples() {
        let layout = quarter(2);
        assert_eq!(block_projection(0, &layout), 0);
        assert_eq!(block_projection(0b0110, &layout), 0b11);
        assert_eq!(block_projection(0b0011, &layout), 0b01);
    }

    #[test]
    fn floor_logs() {
        assert_eq!(floor_log2_inverse(1, 2), 2);
        assert_eq!(floor_log2_inverse(1, 1), 1);
        assert_eq!(floor_log2_inverse(3, 3), 1);
        assert_eq!(floor_log2_inverse(3, 4), 2);
        assert_eq!(floor_log2_inverse(1, 5), 5);
    }

    #[test]
    fn worked_dictator_checks() {
        let f = dictator(1, 1).unwrap();
        let red0 = verify_red0(&f, &quarter(1)).unwrap();
        assert!((red0.rows[1].reduced_weight - 0.75).abs() < 1e-12);
        assert!((red0.rows[1].original_weight - 0.75).abs() < 1e-12);
        assert!(red0.max_gap < 1e-12);
        let fk = verify_red_fk(&f, &quarter(1)).unwrap();
        assert_eq!((fk.lhs, fk.rhs, fk.holds), (1.0, 3.0, true));
        let ent = verify_entropy_monotone(&f, &quarter(1)).unwrap();
        assert_eq!(ent.reduced, 2.0);
        assert!((ent.original - 0.811278124459).abs() < 1e-9);
        assert!(ent.holds);
    }

    #[test]
    fn constant_and_parity_fk() {
        let fk = verify_red_fk(&constant(2, false).unwrap(), &quarter(2)).unwrap();
        assert_eq!((fk.lhs, fk.rhs, fk.holds, fk.ratio), (0.0, 0.0, true, None));
        let fk = verify_red_fk(&parity(2, 0b11).unwrap(), &quarter(2)).unwrap();
        assert!(fk.holds);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(ReductionLayout::new(2, 4, 2).is_err());
        assert!(ReductionLayout::new(14, 1, 2).is_err());
        assert_eq!(
            ReductionLayout::for_bias(2, Bias::General(0.3)),
            Err(Error::NonDyadicBias(0.3))
        );
        assert_eq!(
            ReductionLayout::for_bias(2, Bias::General(0.375)).unwrap(),
            ReductionLayout::new(2, 3, 3).unwrap()
        );
        let hi = ReductionLayout::new(1, 3, 2).unwrap();
        assert!(matches!(
            verify_red_fk(&dictator(1, 1).unwrap(), &hi),
            Err(Error::BiasAboveHalf(_))
        ));
        assert!(reduce(&dictator(2, 1).unwrap(), &quarter(1)).is_err());
    }

    #[test]
    fn pushforward_is_biased_measure() {
        let layout = ReductionLayout::new(2, 3, 3).unwrap();
        let counts = pushforward_counts(&layout);
        // t^{|x|} (2^m - t)^{n - |x|}
        assert_eq!(counts, vec![25, 15, 15, 9]);
    }
}
