//! `ssnm` — run and compare SSNM/SAGA/MiG on LIBSVM or synthetic problems,
//! verify the convergence theory numerically, and generate synthetic data.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error, 3 divergence,
//! 4 verification failure.

mod commands;
mod manifest;
mod outputs;
mod setup;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use ssnm_core::error::SolverError;

#[derive(Parser)]
#[command(
    name = "ssnm",
    version,
    about = "SSNM benchmark and verification harness"
)]
pub(crate) struct Cli {
    #[command(subcommand)]
    pub(crate) command: Command,
}

#[derive(Subcommand)]
pub(crate) enum Command {
    /// Run one solver and write trace.csv, manifest.json and iterate.json
    Run(RunArgs),
    /// Run several algorithms over a shared seed set and summarize
    Compare(CompareArgs),
    /// Run the numerical verification suite (one JSON report line per check)
    Verify(VerifyArgs),
    /// Generate a synthetic LIBSVM dataset with a prescribed condition number
    GenData(GenDataArgs),
}

#[derive(Args, Clone)]
pub(crate) struct ProblemArgs {
    /// LIBSVM dataset path
    #[arg(long, conflicts_with = "synthetic")]
    pub(crate) data: Option<PathBuf>,
    /// Synthetic problem spec: `n=..,d=..,kappa=..[,noise=..][,decay=..][,seed=..]`
    #[arg(long)]
    pub(crate) synthetic: Option<String>,
    /// Loss kind: logistic | squared
    #[arg(long, default_value = "logistic", value_parser = parse_loss)]
    pub(crate) loss: ssnm_core::model::LossKind,
    /// L2 regularization weight (defaults to the synthetic spec's derived value)
    #[arg(long)]
    pub(crate) lambda2: Option<f64>,
    /// L1 regularization weight (elastic net when > 0)
    #[arg(long, default_value_t = 0.0)]
    pub(crate) lambda1: f64,
    /// Row scaling: none | rows | columns
    #[arg(long, default_value = "none")]
    pub(crate) normalize: manifest::NormalizeMode,
    /// Pad the feature dimension upward (index alignment across splits)
    #[arg(long)]
    pub(crate) pad_dim: Option<usize>,
    /// Explicit label mapping, e.g. "1=+1,2=-1"
    #[arg(long)]
    pub(crate) label_map: Option<String>,
}

pub(crate) fn parse_loss(s: &str) -> Result<ssnm_core::model::LossKind, String> {
    match s {
        "logistic" => Ok(ssnm_core::model::LossKind::Logistic),
        "squared" => Ok(ssnm_core::model::LossKind::Squared),
        other => Err(format!("unknown loss {other:?} (logistic|squared)")),
    }
}

#[derive(Args)]
pub(crate) struct RunArgs {
    /// Re-execute a previously written manifest (other flags ignored)
    #[arg(long)]
    pub(crate) manifest: Option<PathBuf>,
    #[command(flatten)]
    pub(crate) problem: ProblemArgs,
    /// Algorithm: ssnm | ssnm-i | saga | mig
    #[arg(long, default_value = "ssnm")]
    pub(crate) algo: ssnm_core::solvers::Algorithm,
    #[arg(long, default_value_t = 30)]
    pub(crate) epochs: usize,
    /// Epochs between trace evaluations
    #[arg(long, default_value_t = 1)]
    pub(crate) eval_every: usize,
    #[arg(long, default_value_t = 0)]
    pub(crate) seed: u64,
    /// Manual learning rate (bypasses the schedule assertions)
    #[arg(long)]
    pub(crate) eta: Option<f64>,
    /// Manual momentum weight (bypasses the schedule assertions)
    #[arg(long)]
    pub(crate) tau: Option<f64>,
    /// Output directory
    #[arg(long)]
    pub(crate) out: PathBuf,
    /// Load a reference optimum (reference.json) for suboptimality columns
    #[arg(long, conflicts_with = "compute_reference")]
    pub(crate) reference: Option<PathBuf>,
    /// Solve for the reference optimum before running
    #[arg(long)]
    pub(crate) compute_reference: bool,
    /// Gradient-mapping tolerance for --compute-reference
    #[arg(long, default_value_t = 1e-12)]
    pub(crate) ref_tol: f64,
    /// Record wall-clock seconds inside trace.csv (breaks byte reproducibility)
    #[arg(long)]
    pub(crate) timing: bool,
}

#[derive(Args)]
pub(crate) struct CompareArgs {
    #[command(flatten)]
    pub(crate) problem: ProblemArgs,
    /// Comma-separated algorithms, e.g. "ssnm,ssnm-i,saga,mig"
    #[arg(long, value_delimiter = ',', required = true)]
    pub(crate) algos: Vec<ssnm_core::solvers::Algorithm>,
    /// Number of seeds per algorithm
    #[arg(long, default_value_t = 3)]
    pub(crate) seeds: usize,
    #[arg(long, default_value_t = 0)]
    pub(crate) base_seed: u64,
    #[arg(long, default_value_t = 30)]
    pub(crate) epochs: usize,
    #[arg(long, default_value_t = 1)]
    pub(crate) eval_every: usize,
    /// Suboptimality tolerance for the epochs-to-tolerance summary
    #[arg(long, default_value_t = 1e-9)]
    pub(crate) tol: f64,
    #[arg(long)]
    pub(crate) out: PathBuf,
    /// Load a reference optimum instead of solving for one
    #[arg(long)]
    pub(crate) reference: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-12)]
    pub(crate) ref_tol: f64,
    /// Record wall-clock seconds inside the per-cell trace files
    #[arg(long)]
    pub(crate) timing: bool,
}

#[derive(Args)]
pub(crate) struct VerifyArgs {
    /// Check group: lemmas | contraction | theorem | all
    #[arg(long, default_value = "all")]
    pub(crate) suite: ssnm_core::verify::Suite,
    /// Seeds for the theorem-level statistical checks
    #[arg(long, default_value_t = 100)]
    pub(crate) seeds: usize,
}

#[derive(Args)]
pub(crate) struct GenDataArgs {
    #[arg(long)]
    pub(crate) n: usize,
    #[arg(long)]
    pub(crate) d: usize,
    #[arg(long)]
    pub(crate) kappa: f64,
    #[arg(long, default_value_t = 0.5)]
    pub(crate) noise: f64,
    /// Geometric per-feature scale decay (1.0 = isotropic)
    #[arg(long, default_value_t = 1.0)]
    pub(crate) decay: f64,
    #[arg(long, default_value_t = 0)]
    pub(crate) seed: u64,
    /// Loss the condition number is computed for: logistic | squared
    #[arg(long, default_value = "logistic", value_parser = parse_loss)]
    pub(crate) loss: ssnm_core::model::LossKind,
    /// Output LIBSVM file path
    #[arg(long)]
    pub(crate) out: PathBuf,
}

/// Failure modes mapped to process exit codes.
pub(crate) enum CliError {
    Usage(String),
    Data(anyhow::Error),
    Divergence(SolverError),
    VerificationFailed,
}

impl CliError {
    fn exit(self) -> ExitCode {
        match self {
            CliError::Usage(msg) => {
                eprintln!("usage error: {msg}");
                ExitCode::from(1)
            }
            CliError::Data(err) => {
                eprintln!("error: {err:#}");
                ExitCode::from(2)
            }
            CliError::Divergence(err) => {
                eprintln!("divergence: {err}");
                ExitCode::from(3)
            }
            CliError::VerificationFailed => {
                eprintln!("verification failed");
                ExitCode::from(4)
            }
        }
    }
}

/// Solver errors split into divergence (exit 3) vs everything else (exit 2).
pub(crate) fn classify_solver_error(err: SolverError) -> CliError {
    match err {
        SolverError::Diverged { .. } | SolverError::NonFinite { .. } => CliError::Divergence(err),
        other => CliError::Data(anyhow::Error::new(other)),
    }
}

fn init_thread_pool() {
    #[cfg(feature = "parallel")]
    if let Ok(value) = std::env::var("SSNM_THREADS") {
        match value.parse::<usize>() {
            Ok(threads) if threads >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
            _ => eprintln!("warning: ignoring invalid SSNM_THREADS={value:?}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    init_thread_pool();
    let result = match cli.command {
        Command::Run(args) => commands::run::execute(args),
        Command::Compare(args) => commands::compare::execute(args),
        Command::Verify(args) => commands::verify::execute(args),
        Command::GenData(args) => commands::gen_data::execute(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => err.exit(),
    }
}
