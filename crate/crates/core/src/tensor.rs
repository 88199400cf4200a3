//! Tensor products `(f (x) g)(x, y) = f(x) g(y)` in the `+-1` encoding, and
//! statistics of `N`-fold tensor powers computed without materializing them.
//!
//! Entropy and total influence are additive under tensoring, and the level
//! distribution of a product is the convolution of the factors' level
//! distributions.

use crate::spectral::{
    level_profile, spectral_entropy, total_influence_spectral, transform, DyadicSpectrum,
    ExactLevelProfile, LevelProfile,
};
use crate::{Bias, Error, Result, TruthTable};

/// `f` on the low `f.n()` bits, `g` on the high `g.n()` bits.
pub fn tensor(f: &TruthTable, g: &TruthTable) -> Result<TruthTable> {
    let l = f.n();
    let n = l + g.n();
    let low = (1usize << l) - 1;
    // product of +-1 values is XOR of output bits
    TruthTable::from_fn(n, |x| f.bit(x & low) ^ g.bit(x >> l))
}

/// Statistics of `f^{(x)N}`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VirtualPowerStats {
    pub exponent: usize,
    pub bias: Bias,
    /// `N Ent_p(f)`.
    pub entropy: f64,
    /// `N I_p(f)`.
    pub influence: f64,
    /// `N`-fold self-convolution of the level profile of `f`; length `N n + 1`.
    pub level_profile: LevelProfile,
}

impl VirtualPowerStats {
    /// Entropy over influence, `None` when the influence vanishes.
    pub fn ratio(&self) -> Option<f64> {
        (self.influence > 0.0).then(|| self.entropy / self.influence)
    }

    /// Total influence recovered from the convolved profile,
    /// `mean level / (4p(1-p))`. Independent of the scalar `influence` field.
    pub fn influence_from_profile(&self) -> f64 {
        let p = self.bias.value();
        let first = crate::sum::pairwise_sum_by(self.level_profile.weights.len(), |k| {
            k as f64 * self.level_profile.weights[k]
        });
        first / (4.0 * p * (1.0 - p))
    }
}

fn check_exponent(exponent: usize) -> Result<()> {
    if exponent == 0 {
        return Err(Error::InvalidArgument("tensor exponent must be at least 1".into()));
    }
    Ok(())
}

/// `profile^{*N}` by repeated convolution.
pub fn power_profile(profile: &LevelProfile, exponent: usize) -> Result<LevelProfile> {
    check_exponent(exponent)?;
    let mut acc = profile.clone();
    for _ in 1..exponent {
        acc = acc.convolve(profile);
    }
    Ok(acc)
}

/// Exact `N`-fold profile from an exact uniform-measure spectrum.
pub fn power_profile_exact(d: &DyadicSpectrum, exponent: usize) -> Result<ExactLevelProfile> {
    check_exponent(exponent)?;
    let base = d.level_profile_exact();
    let mut acc = base.clone();
    for _ in 1..exponent {
        acc = acc.convolve(&base);
    }
    Ok(acc)
}

pub fn virtual_power_stats(f: &TruthTable, bias: Bias, exponent: usize) -> Result<VirtualPowerStats> {
    check_exponent(exponent)?;
    let spec = transform(f, bias)?;
    let scale = exponent as f64;
    Ok(VirtualPowerStats {
        exponent,
        bias,
        entropy: scale * spectral_entropy(&spec),
        influence: scale * total_influence_spectral(&spec),
        level_profile: power_profile(&level_profile(&spec), exponent)?,
    })
}

/// `sum_{|S| > t}` of the power's squared coefficients.
pub fn tail_decay_profile(stats: &VirtualPowerStats, t: usize) -> Result<f64> {
    let max = stats.level_profile.weights.len() - 1;
    if t > max {
        return Err(Error::LevelOutOfRange { level: t, max });
    }
    Ok(stats.level_profile.tail(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::{constant, dictator, majority, parity};

    #[test]
    fn dictators_tensor_to_parity() {
        let d = dictator(1, 1).unwrap();
        assert_eq!(tensor(&d, &d).unwrap(), parity(2, 0b11).unwrap());
    }

    #[test]
    fn tensor_with_constant_pads() {
        let f = majority(3).unwrap();
        let t = tensor(&f, &constant(2, false).unwrap()).unwrap();
        for x in 0..t.len() {
            assert_eq!(t.bit(x), f.bit(x & 0b111));
        }
    }

    #[test]
    fn maj3_square_stats() {
        let s = virtual_power_stats(&majority(3).unwrap(), Bias::half(), 2).unwrap();
        assert_eq!(s.entropy, 4.0);
        assert_eq!(s.influence, 3.0);
        assert_eq!(
            s.level_profile.weights,
            [0.0, 0.0, 9.0 / 16.0, 0.0, 6.0 / 16.0, 0.0, 1.0 / 16.0]
        );
        assert_eq!(tail_decay_profile(&s, 2).unwrap(), 7.0 / 16.0);
        assert_eq!(tail_decay_profile(&s, 6).unwrap(), 0.0);
        assert!(tail_decay_profile(&s, 7).is_err());
        assert_eq!(s.influence_from_profile(), 3.0);
    }

    #[test]
    fn exponent_one_is_identity() {
        let f = majority(5).unwrap();
        let s = virtual_power_stats(&f, Bias::General(0.3), 1).unwrap();
        let spec = transform(&f, Bias::General(0.3)).unwrap();
        assert_eq!(s.entropy, spectral_entropy(&spec));
        assert_eq!(s.level_profile, level_profile(&spec));
        assert!(virtual_power_stats(&f, Bias::half(), 0).is_err());
    }
}
