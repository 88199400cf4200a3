//! Machine-readable outputs. Every JSON document carries `schema_version`.

use std::io::Write;

use serde::Serialize;
use serde_json::Value;

use boolfourier::conjecture::{AnalysisReport, CliqueReport, SweepResult};
use boolfourier::reduction::{EntropyMonotoneReport, RedFkReport, ReductionReport};
use boolfourier::spectral::{degree, spectral_entropy, total_influence_spectral};
use boolfourier::tensor::VirtualPowerStats;
use boolfourier::{LevelProfile, Spectrum};

use crate::format::to_hex;
use crate::ToolError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct AnalyzeOutput<'a> {
    pub schema_version: u32,
    pub function_hex: String,
    #[serde(flatten)]
    pub report: &'a AnalysisReport,
}

#[derive(Debug, Serialize)]
pub struct ReduceOutput {
    pub schema_version: u32,
    pub p: f64,
    pub t: u64,
    pub m: u32,
    pub n: usize,
    pub reduced_n: usize,
    pub red0_max_gap: f64,
    pub red_fk: Option<RedFkReport>,
    pub entropy: EntropyMonotoneReport,
}

impl ReduceOutput {
    pub fn new(report: &ReductionReport, n: usize) -> Self {
        ReduceOutput {
            schema_version: SCHEMA_VERSION,
            p: report.p,
            t: report.t,
            m: report.m,
            n,
            reduced_n: n * report.m as usize,
            red0_max_gap: report.red0.max_gap,
            red_fk: report.red_fk,
            entropy: report.entropy,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ViolationOutput {
    pub bound: &'static str,
    pub function_hex: String,
}

#[derive(Debug, Serialize)]
pub struct SweepOutput {
    pub schema_version: u32,
    pub n: usize,
    pub p: f64,
    pub function_count: usize,
    pub max_ratio: f64,
    pub argmax_function_hex: Option<String>,
    pub violations: Vec<ViolationOutput>,
    pub displayed_form_failures: usize,
    pub max_claim_ratio: Option<f64>,
}

impl SweepOutput {
    pub fn new(r: &SweepResult) -> Self {
        SweepOutput {
            schema_version: SCHEMA_VERSION,
            n: r.n,
            p: r.p,
            function_count: r.function_count,
            max_ratio: r.max_ratio,
            argmax_function_hex: r.argmax_function.as_ref().map(to_hex),
            violations: r
                .violations
                .iter()
                .map(|v| ViolationOutput {
                    bound: v.bound.name(),
                    function_hex: to_hex(&v.function),
                })
                .collect(),
            displayed_form_failures: r.displayed_form_failures,
            max_claim_ratio: r.max_claim_ratio,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CliqueOutput<'a> {
    pub schema_version: u32,
    #[serde(flatten)]
    pub report: &'a CliqueReport,
}

#[derive(Debug, Serialize)]
pub struct FunctionStats {
    pub n: usize,
    pub entropy: f64,
    pub influence: f64,
}

impl FunctionStats {
    pub fn of(spec: &Spectrum) -> Self {
        FunctionStats {
            n: spec.n(),
            entropy: spectral_entropy(spec),
            influence: total_influence_spectral(spec),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TensorOutput {
    pub schema_version: u32,
    pub p: f64,
    pub left: FunctionStats,
    pub right: FunctionStats,
    pub product: FunctionStats,
    /// `|Ent(f (x) g) - Ent(f) - Ent(g)|`.
    pub entropy_additivity_gap: f64,
    pub influence_additivity_gap: f64,
}

#[derive(Debug, Serialize)]
pub struct PowerOutput<'a> {
    pub schema_version: u32,
    pub p: f64,
    pub ratio: Option<f64>,
    pub influence_from_profile: f64,
    pub mean_level: f64,
    pub level_variance: f64,
    /// `(t, W_{> t})` for the requested cut, if any.
    pub tail: Option<(usize, f64)>,
    #[serde(flatten)]
    pub stats: &'a VirtualPowerStats,
}

#[derive(Debug, Serialize)]
pub struct SpectrumSummary {
    pub schema_version: u32,
    pub n: usize,
    pub p: f64,
    pub parseval_sum: f64,
    pub entropy: f64,
    pub influence: f64,
    pub degree: Option<usize>,
    pub level_profile: LevelProfile,
}

impl SpectrumSummary {
    pub fn of(spec: &Spectrum) -> Self {
        SpectrumSummary {
            schema_version: SCHEMA_VERSION,
            n: spec.n(),
            p: spec.p(),
            parseval_sum: spec.parseval_sum(),
            entropy: spectral_entropy(spec),
            influence: total_influence_spectral(spec),
            degree: degree(spec),
            level_profile: boolfourier::spectral::level_profile(spec),
        }
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

/// One CSV row per function:
/// `function_hex,entropy,influence,ratio,h_bound,logn_bound`.
/// Missing values (zero influence, non-uniform bias) are empty fields.
pub fn write_sweep_csv<W: Write>(result: &SweepResult, out: W) -> Result<(), ToolError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["function_hex", "entropy", "influence", "ratio", "h_bound", "logn_bound"])?;
    for row in &result.rows {
        w.write_record([
            to_hex(&row.function),
            row.entropy.to_string(),
            row.influence.to_string(),
            opt(row.ratio),
            opt(row.h_bound),
            opt(row.logn_bound),
        ])?;
    }
    w.flush().map_err(|e| ToolError::io("csv output", e))?;
    Ok(())
}

/// A one-row summary:
/// `n,p,function_count,max_ratio,argmax_function_hex,violations,max_claim_ratio`.
pub fn write_sweep_summary_csv<W: Write>(result: &SweepResult, out: W) -> Result<(), ToolError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "n",
        "p",
        "function_count",
        "max_ratio",
        "argmax_function_hex",
        "violations",
        "max_claim_ratio",
    ])?;
    w.write_record([
        result.n.to_string(),
        result.p.to_string(),
        result.function_count.to_string(),
        result.max_ratio.to_string(),
        result.argmax_function.as_ref().map(to_hex).unwrap_or_default(),
        result.violations.len().to_string(),
        opt(result.max_claim_ratio),
    ])?;
    w.flush().map_err(|e| ToolError::io("csv output", e))?;
    Ok(())
}

fn text_lines(prefix: &str, value: &Value, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                text_lines(&key, v, out);
            }
        }
        other => {
            out.push_str(prefix);
            out.push_str(": ");
            out.push_str(&other.to_string());
            out.push('\n');
        }
    }
}

/// `key.path: value` lines, one per scalar or array.
pub fn to_text<T: Serialize>(value: &T) -> Result<String, ToolError> {
    let mut out = String::new();
    text_lines("", &serde_json::to_value(value)?, &mut out);
    Ok(out)
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String, ToolError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
