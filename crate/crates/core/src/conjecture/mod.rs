//! Entropy/influence ratios and the checkers for the known upper bounds on
//! spectral entropy.
//!
//! Inequalities with explicit constants are asserted; statements with
//! unknown constants are only measured.

mod bounds;
mod clique;
mod report;
mod sweep;

pub use bounds::{
    binary_entropy, biased_claim_ratio, bounds_from, ei_ratio, entropy_upper_bounds,
    normalized_ratio, BoundFlags, EntropyBounds, Normalization, BOUND_SLACK,
};
pub use clique::{clique_experiment, CliqueReport, CLIQUE_MAX_VERTICES};
pub use report::{analyze, min_support_conjecture_check, AnalysisReport, MinSupportCheck};
pub use sweep::{
    exhaustive_sweep, sweep, BoundKind, BoundSelection, SweepConfig, SweepMode, SweepResult,
    SweepRow, Violation, EXHAUSTIVE_MAX_N,
};
