//! Command-line interface.
//!
//! Exit codes: 0 success, 1 invalid input (the message names the flag),
//! 2 a proven inequality failed numerically.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use boolfourier::boolfn::set_max_vars;
use boolfourier::conjecture::{
    analyze, clique_experiment, sweep, BoundSelection, SweepConfig, SweepMode,
};
use boolfourier::reduction::{reduce, verify_all, ReductionLayout};
use boolfourier::spectral::transform;
use boolfourier::tensor::{tail_decay_profile, tensor, virtual_power_stats};
use boolfourier::{Bias, GraphPropertySpec, TruthTable};

use crate::family::parse_family;
use crate::format::{parse_bits, parse_truth_table, write_truth_table};
use crate::report::{
    self, AnalyzeOutput, CliqueOutput, FunctionStats, PowerOutput, ReduceOutput,
    SpectrumSummary, SweepOutput, TensorOutput, SCHEMA_VERSION,
};
use crate::spectrum_io;
use crate::ToolError;

/// Tolerance for the coefficient-block identity check in `reduce --verify`.
pub const RED0_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(name = "boolfourier", version, about = "Biased Fourier-Walsh analysis of Boolean functions")]
pub struct Cli {
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Largest number of variables a table may have.
    #[arg(long = "max-n", env = "BOOLFOURIER_MAX_N", global = true)]
    pub max_n: Option<usize>,
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Default, Args)]
pub struct SourceArgs {
    /// Named family, e.g. `majority:3` or `clique:6,3`.
    #[arg(long)]
    pub family: Option<String>,
    /// Truth-table file.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Inline table of 2^n characters 0/1.
    #[arg(long)]
    pub bits: Option<String>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct BiasArgs {
    /// Bias as a number in (0, 1).
    #[arg(long)]
    pub p: Option<f64>,
    /// Numerator of a dyadic bias t / 2^m.
    #[arg(long, visible_alias = "t")]
    pub pt: Option<u64>,
    /// Exponent of a dyadic bias t / 2^m.
    #[arg(long, visible_alias = "m")]
    pub pm: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Entropy, influences, bounds and level profile of one function.
    Analyze {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        bias: BiasArgs,
        /// Mass fraction left outside the minimal support.
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
    },
    /// Print, export or import a spectrum.
    Spectrum {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        bias: BiasArgs,
        /// Write the spectrum to this file.
        #[arg(long)]
        export: Option<PathBuf>,
        /// Use the binary layout for `--export`.
        #[arg(long)]
        binary: bool,
        /// Read a spectrum (JSON or binary) and summarize it.
        #[arg(long, conflicts_with_all = ["family", "file", "bits"])]
        import: Option<PathBuf>,
    },
    /// Reduce a dyadic-bias function to the uniform measure.
    Reduce {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        bias: BiasArgs,
        /// Check the preserved relations instead of printing the table.
        #[arg(long)]
        verify: bool,
    },
    /// Tensor product with a second function, or statistics of a tensor power.
    Tensor {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        bias: BiasArgs,
        #[arg(long)]
        with_family: Option<String>,
        #[arg(long)]
        with_file: Option<PathBuf>,
        #[arg(long)]
        with_bits: Option<String>,
        /// Exponent of a tensor power, computed without materializing it.
        #[arg(long)]
        power: Option<usize>,
        /// Report the weight strictly above this level (with `--power`).
        #[arg(long)]
        tail: Option<usize>,
    },
    /// Check bounds over all functions on n variables, or a random sample.
    Sweep {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        bias: BiasArgs,
        /// Sample this many random functions instead of enumerating.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write a one-row CSV with the maximum ratio and its argmax.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Clique-containment property at its critical bias.
    Clique {
        #[arg(long, visible_alias = "nv")]
        vertices: usize,
        #[arg(long)]
        r: usize,
    },
}

/// Whether every checked inequality held.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    BoundFailure,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::BoundFailure => 2,
        }
    }

    fn from_holds(holds: bool) -> Self {
        if holds {
            Status::Ok
        } else {
            Status::BoundFailure
        }
    }
}

fn input(msg: impl Into<String>) -> ToolError {
    ToolError::Input(msg.into())
}

fn flag_err(flag: &str, e: impl std::fmt::Display) -> ToolError {
    input(format!("{flag}: {e}"))
}

impl BiasArgs {
    fn resolve(&self) -> Result<Bias, ToolError> {
        match (self.p, self.pt, self.pm) {
            (Some(_), Some(_), _) | (Some(_), _, Some(_)) => {
                Err(input("--p cannot be combined with --pt/--pm"))
            }
            (Some(p), None, None) => Bias::general(p).map_err(|e| flag_err("--p", e)),
            (None, Some(t), Some(m)) => Bias::exact(t, m).map_err(|e| flag_err("--pt/--pm", e)),
            (None, Some(_), None) => Err(input("--pt needs --pm")),
            (None, None, Some(_)) => Err(input("--pm needs --pt")),
            (None, None, None) => Ok(Bias::half()),
        }
    }
}

fn load_table_file(flag: &str, path: &PathBuf) -> Result<TruthTable, ToolError> {
    let text = fs::read_to_string(path).map_err(|e| ToolError::io(path.display().to_string(), e))?;
    parse_truth_table(&text).map_err(|e| match e {
        ToolError::Core(boolfourier::Error::TooLarge { .. }) => e,
        other => flag_err(&format!("{flag} {}", path.display()), other),
    })
}

fn load_bits(flag: &str, bits: &str) -> Result<TruthTable, ToolError> {
    let len = bits.trim().len();
    if len < 2 || !len.is_power_of_two() {
        return Err(flag_err(flag, format!("length {len} is not 2^n for some n >= 1")));
    }
    parse_bits(len.trailing_zeros() as usize, bits).map_err(|e| flag_err(flag, e))
}

fn load_source(
    family: Option<&str>,
    file: Option<&PathBuf>,
    bits: Option<&str>,
    names: [&str; 3],
) -> Result<TruthTable, ToolError> {
    match (family, file, bits) {
        (Some(f), None, None) => parse_family(f),
        (None, Some(path), None) => load_table_file(names[1], path),
        (None, None, Some(b)) => load_bits(names[2], b),
        (None, None, None) => Err(input(format!(
            "one of {}, {}, {} is required",
            names[0], names[1], names[2]
        ))),
        _ => Err(input(format!(
            "give only one of {}, {}, {}",
            names[0], names[1], names[2]
        ))),
    }
}

impl SourceArgs {
    fn load(&self) -> Result<TruthTable, ToolError> {
        load_source(
            self.family.as_deref(),
            self.file.as_ref(),
            self.bits.as_deref(),
            ["--family", "--file", "--bits"],
        )
    }

    fn is_empty(&self) -> bool {
        self.family.is_none() && self.file.is_none() && self.bits.is_none()
    }
}

struct Sink<'a> {
    output: Option<&'a PathBuf>,
    stdout: &'a mut Vec<u8>,
}

impl Sink<'_> {
    fn emit(&mut self, content: &[u8]) -> Result<(), ToolError> {
        match self.output {
            Some(path) => fs::write(path, content).map_err(|e| ToolError::io(path.display().to_string(), e)),
            None => {
                self.stdout.extend_from_slice(content);
                Ok(())
            }
        }
    }

    fn emit_doc<T: serde::Serialize>(&mut self, format: Format, doc: &T) -> Result<(), ToolError> {
        let text = match format {
            Format::Json => report::to_json(doc)?,
            Format::Text => report::to_text(doc)?,
            Format::Csv => return Err(input("--format csv is only supported by sweep")),
        };
        self.emit(text.as_bytes())
    }
}

/// Runs a parsed command line, writing the main output to `--output` or
/// `stdout`.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<Status, ToolError> {
    if let Some(n) = cli.max_n {
        set_max_vars(n).map_err(|e| flag_err("--max-n", e))?;
    }
    let mut buf = Vec::new();
    let status = match cli.threads {
        Some(0) => Err(input("--threads must be at least 1")),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| flag_err("--threads", e))?;
            pool.install(|| dispatch(cli, &mut buf))
        }
        None => dispatch(cli, &mut buf),
    }?;
    stdout.write_all(&buf).map_err(|e| ToolError::io("stdout", e))?;
    Ok(status)
}

fn dispatch(cli: &Cli, stdout: &mut Vec<u8>) -> Result<Status, ToolError> {
    let mut sink = Sink {
        output: cli.output.as_ref(),
        stdout,
    };
    match &cli.command {
        Command::Analyze {
            source,
            bias,
            epsilon,
        } => {
            let bias = bias.resolve()?;
            if !(*epsilon > 0.0 && *epsilon < 1.0) {
                return Err(input(format!("--epsilon must lie in (0, 1), got {epsilon}")));
            }
            let f = source.load()?;
            let r = analyze(&f, bias, *epsilon)?;
            let doc = AnalyzeOutput {
                schema_version: SCHEMA_VERSION,
                function_hex: crate::format::to_hex(&f),
                report: &r,
            };
            sink.emit_doc(cli.format.unwrap_or(Format::Json), &doc)?;
            Ok(Status::from_holds(r.proven_bounds_hold()))
        }
        Command::Spectrum {
            source,
            bias,
            export,
            binary,
            import,
        } => {
            let format = cli.format.unwrap_or(Format::Json);
            let spec = match import {
                Some(path) => {
                    if !source.is_empty() {
                        return Err(input("--import cannot be combined with a function source"));
                    }
                    let bytes = fs::read(path).map_err(|e| ToolError::io(path.display().to_string(), e))?;
                    spectrum_io::read_any(&bytes)
                        .map_err(|e| flag_err(&format!("--import {}", path.display()), e))?
                }
                None => {
                    let bias = bias.resolve()?;
                    transform(&source.load()?, bias)?
                }
            };
            if let Some(path) = export {
                let bytes = if *binary {
                    spectrum_io::to_binary(&spec)
                } else {
                    spectrum_io::to_json(&spec)?.into_bytes()
                };
                fs::write(path, bytes).map_err(|e| ToolError::io(path.display().to_string(), e))?;
            }
            if import.is_some() || export.is_some() {
                sink.emit_doc(format, &SpectrumSummary::of(&spec))?;
            } else if format == Format::Json {
                let mut s = spectrum_io::to_json(&spec)?;
                s.push('\n');
                sink.emit(s.as_bytes())?;
            } else {
                sink.emit_doc(format, &SpectrumSummary::of(&spec))?;
            }
            Ok(Status::Ok)
        }
        Command::Reduce {
            source,
            bias,
            verify,
        } => {
            let bias = bias.resolve()?;
            if bias.as_dyadic().is_none() {
                return Err(input(format!(
                    "reduce needs a dyadic bias t/2^m (use --pt/--pm), got p = {}",
                    bias.value()
                )));
            }
            let f = source.load()?;
            let layout = ReductionLayout::for_bias(f.n(), bias)?;
            if *verify {
                let r = verify_all(&f, &layout)?;
                sink.emit_doc(cli.format.unwrap_or(Format::Json), &ReduceOutput::new(&r, f.n()))?;
                Ok(Status::from_holds(r.all_hold(RED0_TOLERANCE)))
            } else {
                let g = reduce(&f, &layout)?;
                sink.emit(write_truth_table(&g).as_bytes())?;
                Ok(Status::Ok)
            }
        }
        Command::Tensor {
            source,
            bias,
            with_family,
            with_file,
            with_bits,
            power,
            tail,
        } => {
            let bias = bias.resolve()?;
            let has_second = with_family.is_some() || with_file.is_some() || with_bits.is_some();
            match (power, has_second) {
                (Some(_), true) => Err(input("--power cannot be combined with --with-*")),
                (None, false) => Err(input("tensor needs --power or one of --with-family, --with-file, --with-bits")),
                (Some(exponent), false) => {
                    let f = source.load()?;
                    let stats = virtual_power_stats(&f, bias, *exponent)
                        .map_err(|e| flag_err("--power", e))?;
                    let tail = match tail {
                        Some(t) => Some((
                            *t,
                            tail_decay_profile(&stats, *t).map_err(|e| flag_err("--tail", e))?,
                        )),
                        None => None,
                    };
                    let doc = PowerOutput {
                        schema_version: SCHEMA_VERSION,
                        p: bias.value(),
                        ratio: stats.ratio(),
                        influence_from_profile: stats.influence_from_profile(),
                        mean_level: stats.level_profile.mean_level(),
                        level_variance: stats.level_profile.level_variance(),
                        tail,
                        stats: &stats,
                    };
                    sink.emit_doc(cli.format.unwrap_or(Format::Json), &doc)?;
                    Ok(Status::Ok)
                }
                (None, true) => {
                    let f = source.load()?;
                    let g = load_source(
                        with_family.as_deref(),
                        with_file.as_ref(),
                        with_bits.as_deref(),
                        ["--with-family", "--with-file", "--with-bits"],
                    )?;
                    let h = tensor(&f, &g)?;
                    match cli.format.unwrap_or(Format::Text) {
                        Format::Text => sink.emit(write_truth_table(&h).as_bytes())?,
                        format => {
                            let left = FunctionStats::of(&transform(&f, bias)?);
                            let right = FunctionStats::of(&transform(&g, bias)?);
                            let product = FunctionStats::of(&transform(&h, bias)?);
                            let doc = TensorOutput {
                                schema_version: SCHEMA_VERSION,
                                p: bias.value(),
                                entropy_additivity_gap: (product.entropy - left.entropy - right.entropy).abs(),
                                influence_additivity_gap: (product.influence - left.influence - right.influence).abs(),
                                left,
                                right,
                                product,
                            };
                            sink.emit_doc(format, &doc)?;
                        }
                    }
                    Ok(Status::Ok)
                }
            }
        }
        Command::Sweep {
            n,
            bias,
            samples,
            seed,
            summary,
        } => {
            let bias = bias.resolve()?;
            let mode = match samples {
                Some(0) => return Err(input("--samples must be at least 1")),
                Some(count) => SweepMode::Sampled {
                    count: *count,
                    seed: *seed,
                },
                None => SweepMode::Exhaustive,
            };
            let format = cli.format.unwrap_or(Format::Csv);
            let config = SweepConfig {
                n: *n,
                bias,
                bounds: BoundSelection::ALL,
                mode,
                keep_rows: format == Format::Csv,
            };
            let result = sweep(&config).map_err(|e| flag_err("--n", e))?;
            if let Some(path) = summary {
                let mut buf = Vec::new();
                report::write_sweep_summary_csv(&result, &mut buf)?;
                fs::write(path, buf).map_err(|e| ToolError::io(path.display().to_string(), e))?;
            }
            if format == Format::Csv {
                let mut buf = Vec::new();
                report::write_sweep_csv(&result, &mut buf)?;
                sink.emit(&buf)?;
            } else {
                sink.emit_doc(format, &SweepOutput::new(&result))?;
            }
            Ok(Status::from_holds(result.violations.is_empty()))
        }
        Command::Clique { vertices, r } => {
            let spec = GraphPropertySpec::new(*vertices, *r).map_err(|e| flag_err("--vertices/--r", e))?;
            let report = clique_experiment(&spec).map_err(|e| flag_err("--vertices", e))?;
            let doc = CliqueOutput {
                schema_version: SCHEMA_VERSION,
                report: &report,
            };
            sink.emit_doc(cli.format.unwrap_or(Format::Json), &doc)?;
            Ok(Status::from_holds(report.union_bound_holds && report.edge_bound_holds))
        }
    }
}
