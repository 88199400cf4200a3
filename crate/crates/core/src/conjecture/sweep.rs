//! Sweeps over every Boolean function on `n <= 4` variables, or over a
//! seeded sample of random functions for larger `n`.

use alloc::vec::Vec;

use super::bounds::{biased_claim_ratio, bounds_from, normalized_ratio};
use crate::boolfn::random_function;
use crate::spectral::{influences_combinatorial, spectral_entropy, total_influence_spectral, transform};
use crate::{Bias, Error, Result, TruthTable};

/// `2^(2^4) = 65536` functions is the largest exhaustive sweep.
pub const EXHAUSTIVE_MAX_N: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum BoundKind {
    HBound,
    ProofForm,
    LognBound,
}

impl BoundKind {
    pub fn name(&self) -> &'static str {
        match self {
            BoundKind::HBound => "h_bound",
            BoundKind::ProofForm => "proof_form",
            BoundKind::LognBound => "logn_bound",
        }
    }
}

/// Which asserted bounds a sweep checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundSelection {
    pub h_bound: bool,
    pub proof_form: bool,
    pub logn_bound: bool,
}

impl BoundSelection {
    pub const ALL: BoundSelection = BoundSelection {
        h_bound: true,
        proof_form: true,
        logn_bound: true,
    };
    pub const NONE: BoundSelection = BoundSelection {
        h_bound: false,
        proof_form: false,
        logn_bound: false,
    };
}

impl Default for BoundSelection {
    fn default() -> Self {
        Self::ALL
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Exhaustive,
    /// `count` random functions; sample `k` is `random_function(n, seed + k, 1/2)`.
    Sampled { count: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub n: usize,
    pub bias: Bias,
    pub bounds: BoundSelection,
    pub mode: SweepMode,
    /// Keep one row per function (for CSV export).
    pub keep_rows: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub function: TruthTable,
    pub entropy: f64,
    pub influence: f64,
    pub ratio: Option<f64>,
    /// Uniform measure only.
    pub h_bound: Option<f64>,
    pub logn_bound: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub bound: BoundKind,
    pub function: TruthTable,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub n: usize,
    pub p: f64,
    pub function_count: usize,
    /// Largest normalized ratio over functions with positive influence.
    pub max_ratio: f64,
    /// First function (in sweep order) attaining `max_ratio`.
    pub argmax_function: Option<TruthTable>,
    pub violations: Vec<Violation>,
    /// Functions failing `Ent <= 2I(log2 n - log2 I)`; recorded, not asserted.
    pub displayed_form_failures: usize,
    /// Largest `Ent_p / (p(1-p) log2(n) I_p)`; `None` for `n < 2`.
    pub max_claim_ratio: Option<f64>,
    pub rows: Vec<SweepRow>,
}

struct Eval {
    row: SweepRow,
    failed: Vec<BoundKind>,
    displayed_failed: bool,
    claim_ratio: Option<f64>,
}

fn evaluate(f: TruthTable, bias: Bias, bounds: BoundSelection) -> Result<Eval> {
    let spec = transform(&f, bias)?;
    let p = bias.value();
    let entropy = spectral_entropy(&spec);
    let influence = total_influence_spectral(&spec);
    let ratio = normalized_ratio(entropy, influence, p);
    let claim_ratio = biased_claim_ratio(entropy, influence, p, f.n());
    let mut failed = Vec::new();
    let mut displayed_failed = false;
    let (h_bound, logn_bound) = if bias.is_half() {
        let b = bounds_from(entropy, &influences_combinatorial(&f, bias)?);
        if bounds.h_bound && !b.flags.h_bound {
            failed.push(BoundKind::HBound);
        }
        if bounds.proof_form && !b.flags.proof_form {
            failed.push(BoundKind::ProofForm);
        }
        if bounds.logn_bound && !b.flags.logn_bound {
            failed.push(BoundKind::LognBound);
        }
        displayed_failed = b.flags.displayed_form == Some(false);
        (Some(b.h_bound), Some(b.logn_bound))
    } else {
        (None, None)
    };
    Ok(Eval {
        row: SweepRow {
            function: f,
            entropy,
            influence,
            ratio,
            h_bound,
            logn_bound,
        },
        failed,
        displayed_failed,
        claim_ratio,
    })
}

fn generate(config: &SweepConfig, k: usize) -> Result<TruthTable> {
    match config.mode {
        SweepMode::Exhaustive => TruthTable::from_index(config.n, k as u64),
        SweepMode::Sampled { seed, .. } => random_function(config.n, seed.wrapping_add(k as u64), 0.5),
    }
}

/// Runs a sweep. Functions are evaluated independently (in parallel with the
/// `parallel` feature) and merged in sweep order, so the result does not
/// depend on the thread count.
pub fn sweep(config: &SweepConfig) -> Result<SweepResult> {
    config.bias.validate()?;
    let count = match config.mode {
        SweepMode::Exhaustive => {
            if config.n == 0 || config.n > EXHAUSTIVE_MAX_N {
                return Err(Error::InvalidArgument(alloc::format!(
                    "exhaustive sweeps need 1 <= n <= {EXHAUSTIVE_MAX_N}, got {}; use sampled mode",
                    config.n
                )));
            }
            1usize << (1usize << config.n)
        }
        SweepMode::Sampled { count, .. } => count,
    };
    let eval = |k: usize| generate(config, k).and_then(|f| evaluate(f, config.bias, config.bounds));

    #[cfg(feature = "parallel")]
    let evals: Vec<Result<Eval>> = {
        use rayon::prelude::*;
        (0..count).into_par_iter().map(eval).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let evals: Vec<Result<Eval>> = (0..count).map(eval).collect();

    let mut result = SweepResult {
        n: config.n,
        p: config.bias.value(),
        function_count: count,
        max_ratio: 0.0,
        argmax_function: None,
        violations: Vec::new(),
        displayed_form_failures: 0,
        max_claim_ratio: None,
        rows: Vec::new(),
    };
    for e in evals {
        let e = e?;
        if let Some(r) = e.row.ratio {
            if result.argmax_function.is_none() || r > result.max_ratio {
                result.max_ratio = r;
                result.argmax_function = Some(e.row.function.clone());
            }
        }
        if let Some(c) = e.claim_ratio {
            if result.max_claim_ratio.is_none_or(|m| c > m) {
                result.max_claim_ratio = Some(c);
            }
        }
        for bound in e.failed {
            result.violations.push(Violation {
                bound,
                function: e.row.function.clone(),
            });
        }
        result.displayed_form_failures += usize::from(e.displayed_failed);
        if config.keep_rows {
            result.rows.push(e.row);
        }
    }
    Ok(result)
}

/// Every function on `n <= 4` variables.
pub fn exhaustive_sweep(n: usize, bias: Bias, bounds: BoundSelection) -> Result<SweepResult> {
    sweep(&SweepConfig {
        n,
        bias,
        bounds,
        mode: SweepMode::Exhaustive,
        keep_rows: false,
    })
}
