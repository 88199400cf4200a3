use alloc::vec::Vec;

use super::bounds::{bounds_from, normalized_ratio, EntropyBounds, Normalization};
use crate::spectral::{
    degree, influences_combinatorial, level_profile, min_support, spectral_entropy,
    total_influence_spectral, transform, LevelProfile, MinSupport,
};
use crate::{Bias, Error, Result, TruthTable};

/// Everything known about one function at one bias, from a single transform.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AnalysisReport {
    pub n: usize,
    pub p: f64,
    pub entropy: f64,
    /// Total influence from the spectrum.
    pub influence: f64,
    /// Pivotal probabilities, coordinate `i` at index `i - 1`.
    pub per_coordinate_influences: Vec<f64>,
    pub normalization: Normalization,
    /// `None` iff the influence is zero.
    pub ei_ratio: Option<f64>,
    /// Uniform-measure bounds; `None` at other biases.
    pub bounds: Option<EntropyBounds>,
    pub min_support: MinSupport,
    pub level_profile: LevelProfile,
    pub degree: Option<usize>,
    /// `|sum_S f^(S)^2 - 1|`.
    pub parseval_gap: f64,
}

impl AnalysisReport {
    /// `false` iff an asserted bound failed.
    pub fn proven_bounds_hold(&self) -> bool {
        self.bounds.is_none_or(|b| b.flags.proven_ok())
    }
}

pub fn analyze(f: &TruthTable, bias: Bias, epsilon: f64) -> Result<AnalysisReport> {
    let spec = transform(f, bias)?;
    let p = bias.value();
    let entropy = spectral_entropy(&spec);
    let influence = total_influence_spectral(&spec);
    let per_coordinate_influences = influences_combinatorial(f, bias)?;
    let bounds = bias
        .is_half()
        .then(|| bounds_from(entropy, &per_coordinate_influences));
    Ok(AnalysisReport {
        n: f.n(),
        p,
        entropy,
        influence,
        per_coordinate_influences,
        normalization: Normalization::for_bias(p),
        ei_ratio: normalized_ratio(entropy, influence, p),
        bounds,
        min_support: min_support(&spec, epsilon)?,
        level_profile: level_profile(&spec),
        degree: degree(&spec),
        parseval_gap: (spec.parseval_sum() - 1.0).abs(),
    })
}

/// Empirical constant for the min-support form: `log2 |B_eps| / I_p(f)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MinSupportCheck {
    pub log2_size: f64,
    pub influence: f64,
    pub ratio: f64,
    pub support: MinSupport,
}

pub fn min_support_conjecture_check(
    f: &TruthTable,
    bias: Bias,
    epsilon: f64,
) -> Result<MinSupportCheck> {
    let spec = transform(f, bias)?;
    let influence = total_influence_spectral(&spec);
    if influence <= 0.0 {
        return Err(Error::ZeroInfluence);
    }
    let support = min_support(&spec, epsilon)?;
    let log2_size = libm::log2(support.size as f64);
    Ok(MinSupportCheck {
        log2_size,
        influence,
        ratio: log2_size / influence,
        support,
    })
}
