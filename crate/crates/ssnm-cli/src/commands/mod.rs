pub(crate) mod compare;
pub(crate) mod gen_data;
pub(crate) mod run;
pub(crate) mod verify;

use anyhow::anyhow;
use ssnm_core::solvers::{Algorithm, Overrides};

use crate::manifest::{DataSource, RunManifest, CSV_SCHEMA, SCHEMA_VERSION};
use crate::setup::parse_synthetic_spec;
use crate::{CliError, ProblemArgs};

/// Turns the shared problem flags plus run settings into a manifest.
pub(crate) fn manifest_from_args(
    problem: &ProblemArgs,
    algorithm: Algorithm,
    epochs: usize,
    eval_every: usize,
    seed: u64,
    overrides: Overrides,
    timing: bool,
) -> Result<RunManifest, CliError> {
    let source = match (&problem.data, &problem.synthetic) {
        (Some(path), None) => DataSource::Path(path.display().to_string()),
        (None, Some(spec)) => DataSource::Synthetic(
            parse_synthetic_spec(spec, problem.loss)
                .map_err(|e| CliError::Usage(format!("{e:#}")))?,
        ),
        (None, None) => {
            return Err(CliError::Usage(
                "one of --data or --synthetic is required".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };
    if problem.data.is_some() && problem.lambda2.is_none() {
        return Err(CliError::Usage("--lambda2 is required with --data".into()));
    }
    if let Some(l2) = problem.lambda2 {
        if l2 <= 0.0 || l2.is_nan() {
            return Err(CliError::Usage(format!(
                "--lambda2 must be positive (got {l2}); the schedule requires strong convexity"
            )));
        }
    }
    Ok(RunManifest {
        version: env!("CARGO_PKG_VERSION").to_string(),
        schema_version: SCHEMA_VERSION,
        csv_schema: CSV_SCHEMA.to_string(),
        rng_algorithm: ssnm_core::solvers::RNG_ALGORITHM.to_string(),
        algorithm,
        source,
        loss: problem.loss,
        lambda1: problem.lambda1,
        lambda2: problem.lambda2.unwrap_or(0.0),
        normalize: problem.normalize,
        pad_dim: problem.pad_dim,
        label_map: problem.label_map.clone(),
        epochs,
        eval_every,
        seed,
        overrides,
        timing_in_trace: timing,
        reference_path: None,
        compute_reference: false,
        reference_tol: 1e-12,
        derived: None,
    })
}

pub(crate) fn data_err(err: impl Into<anyhow::Error>) -> CliError {
    CliError::Data(err.into())
}

pub(crate) fn io_err(context: String, err: anyhow::Error) -> CliError {
    CliError::Data(anyhow!("{context}: {err:#}"))
}
