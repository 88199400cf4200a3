use crate::spectral::{influences_combinatorial, spectral_entropy, transform};
use crate::sum::pairwise_sum;
use crate::{Bias, Error, Result, TruthTable};

/// Slack for floating comparisons in asserted bounds; equality cases such as
/// parity (`Ent = sum h(I_i) = 0`) must pass.
pub const BOUND_SLACK: f64 = 1e-9;

/// `h(x) = -x log2 x - (1-x) log2(1-x)`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::InvalidArgument(alloc::format!(
            "binary entropy argument must lie in [0, 1], got {x}"
        )));
    }
    Ok(term(x) + term(1.0 - x))
}

fn term(x: f64) -> f64 {
    if x > 0.0 {
        -x * libm::log2(x)
    } else {
        0.0
    }
}

/// Which normalization an entropy/influence ratio uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Normalization {
    /// `Ent / I`, used at `p = 1/2`.
    Uniform,
    /// `Ent_p / (q log2(1/q) I_p)` with `q = min(p, 1-p)`, used elsewhere.
    Biased,
}

impl Normalization {
    pub fn for_bias(p: f64) -> Self {
        if p == 0.5 {
            Normalization::Uniform
        } else {
            Normalization::Biased
        }
    }
}

/// The normalized ratio, or `None` when the influence is zero.
pub fn normalized_ratio(entropy: f64, influence: f64, p: f64) -> Option<f64> {
    if influence <= 0.0 {
        return None;
    }
    Some(match Normalization::for_bias(p) {
        Normalization::Uniform => entropy / influence,
        Normalization::Biased => {
            let q = p.min(1.0 - p);
            entropy / (q * libm::log2(1.0 / q) * influence)
        }
    })
}

pub fn ei_ratio(f: &TruthTable, bias: Bias) -> Result<f64> {
    let spec = transform(f, bias)?;
    let entropy = spectral_entropy(&spec);
    let influence = crate::spectral::total_influence_spectral(&spec);
    normalized_ratio(entropy, influence, bias.value()).ok_or(Error::ZeroInfluence)
}

/// `Ent_p / (p(1-p) log2(n) I_p)`; `None` if `n < 2` or the influence is zero.
pub fn biased_claim_ratio(entropy: f64, influence: f64, p: f64, n: usize) -> Option<f64> {
    if n < 2 || influence <= 0.0 {
        return None;
    }
    Some(entropy / (p * (1.0 - p) * libm::log2(n as f64) * influence))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundFlags {
    /// `Ent <= sum_i h(I_i)`.
    pub h_bound: bool,
    /// `Ent <= 2 I (1 + log2 n - log2 I)`; vacuously true when `I = 0`.
    pub proof_form: bool,
    /// `Ent <= (log2 n + 1) I + 1`.
    pub logn_bound: bool,
    /// `Ent <= 2 I (log2 n - log2 I)`. Recorded only, never asserted.
    pub displayed_form: Option<bool>,
}

impl BoundFlags {
    /// All asserted bounds hold.
    pub fn proven_ok(&self) -> bool {
        self.h_bound && self.proof_form && self.logn_bound
    }
}

/// Right-hand sides of the uniform-measure entropy bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EntropyBounds {
    pub h_bound: f64,
    /// `None` when `I = 0`.
    pub proof_form_bound: Option<f64>,
    pub displayed_form_bound: Option<f64>,
    pub logn_bound: f64,
    pub flags: BoundFlags,
}

/// Evaluates all bounds from the entropy and the per-coordinate influences
/// of a Boolean function at the uniform measure.
pub fn bounds_from(entropy: f64, influences: &[f64]) -> EntropyBounds {
    let n = influences.len();
    let h_terms: alloc::vec::Vec<f64> = influences
        .iter()
        .map(|&i| binary_entropy(i.clamp(0.0, 1.0)).expect("clamped"))
        .collect();
    let h_bound = pairwise_sum(&h_terms);
    let total = pairwise_sum(influences);
    let log_n = libm::log2(n as f64);
    let logn_bound = (log_n + 1.0) * total + 1.0;
    let (proof_form_bound, displayed_form_bound) = if total > 0.0 {
        let log_i = libm::log2(total);
        (
            Some(2.0 * total * (1.0 + log_n - log_i)),
            Some(2.0 * total * (log_n - log_i)),
        )
    } else {
        (None, None)
    };
    let within = |bound: f64| entropy <= bound + BOUND_SLACK;
    EntropyBounds {
        h_bound,
        proof_form_bound,
        displayed_form_bound,
        logn_bound,
        flags: BoundFlags {
            h_bound: within(h_bound),
            proof_form: proof_form_bound.is_none_or(within),
            logn_bound: within(logn_bound),
            displayed_form: displayed_form_bound.map(within),
        },
    }
}

/// All uniform-measure entropy upper bounds for `f`.
pub fn entropy_upper_bounds(f: &TruthTable) -> Result<EntropyBounds> {
    let spec = transform(f, Bias::half())?;
    let influences = influences_combinatorial(f, Bias::half())?;
    Ok(bounds_from(spectral_entropy(&spec), &influences))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::{dictator, majority, parity};

    #[test]
    fn binary_entropy_values() {
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        // -(1/4)log2(1/4) - (3/4)log2(3/4) = 2 - (3/4)log2 3
        let expect = 2.0 - 0.75 * libm::log2(3.0);
        assert!((binary_entropy(0.25).unwrap() - expect).abs() < 1e-15);
        assert!((binary_entropy(0.25).unwrap() - 0.811278).abs() < 1e-6);
        assert!(binary_entropy(1.1).is_err());
    }

    #[test]
    fn ratio_examples() {
        let r = ei_ratio(&majority(3).unwrap(), Bias::half()).unwrap();
        assert!((r - 4.0 / 3.0).abs() < 1e-12);
        let r = ei_ratio(&dictator(1, 1).unwrap(), Bias::General(0.25)).unwrap();
        let expect = binary_entropy(0.25).unwrap() / 0.5;
        assert!((r - expect).abs() < 1e-12);
        assert!((r - 1.6226).abs() < 1e-3);
        assert_eq!(ei_ratio(&parity(3, 0b111).unwrap(), Bias::half()).unwrap(), 0.0);
        let c = crate::boolfn::constant(2, false).unwrap();
        assert_eq!(ei_ratio(&c, Bias::half()), Err(Error::ZeroInfluence));
    }

    #[test]
    fn upper_bound_examples() {
        let b = entropy_upper_bounds(&majority(3).unwrap()).unwrap();
        assert_eq!(b.h_bound, 3.0);
        assert!(b.flags.proven_ok());
        let b = entropy_upper_bounds(&parity(4, 0b1111).unwrap()).unwrap();
        assert_eq!(b.h_bound, 0.0);
        assert!(b.flags.h_bound);
        let b = entropy_upper_bounds(&dictator(3, 1).unwrap()).unwrap();
        assert_eq!(b.h_bound, 0.0);
        assert!(b.flags.proven_ok());
    }
}
