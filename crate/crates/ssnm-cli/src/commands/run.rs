use std::path::Path;

use ssnm_core::solvers::{self, Overrides, Reference, RunTrace};

use crate::commands::{data_err, io_err, manifest_from_args};
use crate::manifest::{Derived, RunManifest};
use crate::outputs;
use crate::setup::build_problem;
use crate::{classify_solver_error, CliError, RunArgs};

pub(crate) fn execute(args: RunArgs) -> Result<(), CliError> {
    let mut manifest = match &args.manifest {
        Some(path) => RunManifest::load(path).map_err(CliError::Data)?,
        None => {
            let overrides = Overrides {
                eta: args.eta,
                tau: args.tau,
            };
            let mut m = manifest_from_args(
                &args.problem,
                args.algo,
                args.epochs,
                args.eval_every,
                args.seed,
                overrides,
                args.timing,
            )?;
            m.reference_path = args.reference.as_ref().map(|p| p.display().to_string());
            m.compute_reference = args.compute_reference;
            m.reference_tol = args.ref_tol;
            m
        }
    };

    std::fs::create_dir_all(&args.out)
        .map_err(|e| io_err(format!("creating {}", args.out.display()), e.into()))?;

    let (trace, reference) = run_manifest(&mut manifest, Some(&args.out))?;
    write_run_outputs(&args.out, &manifest, &trace)?;
    if let Some(r) = &reference {
        if manifest.compute_reference {
            outputs::write_reference(&args.out.join("reference.json"), r)
                .map_err(CliError::Data)?;
        }
    }

    let last = trace.final_point();
    match last.subopt {
        Some(s) => println!(
            "{} finished: epoch {}, objective {:e}, suboptimality {:e}, ifo {}, po {}",
            manifest.algorithm, last.epoch, last.objective, s, last.ifo, last.po
        ),
        None => println!(
            "{} finished: epoch {}, objective {:e}, ifo {}, po {}",
            manifest.algorithm, last.epoch, last.objective, last.ifo, last.po
        ),
    }
    Ok(())
}

/// Builds the problem, resolves the reference, runs the solver, and fills
/// the manifest's derived block. Shared by `run` and `compare`.
pub(crate) fn run_manifest(
    manifest: &mut RunManifest,
    _out: Option<&Path>,
) -> Result<(RunTrace, Option<Reference>), CliError> {
    let resolved = build_problem(manifest).map_err(CliError::Data)?;
    if resolved.dropped_rows > 0 {
        eprintln!(
            "warning: dropped {} all-zero rows during normalization",
            resolved.dropped_rows
        );
    }
    manifest.lambda2 = resolved.lambda2;
    let problem = resolved.problem;

    if !manifest.overrides.is_empty() {
        eprintln!("warning: manual eta/tau overrides bypass the schedule assertions");
    }

    let reference = match (&manifest.reference_path, manifest.compute_reference) {
        (Some(path), _) => Some(outputs::load_reference(Path::new(path)).map_err(CliError::Data)?),
        (None, true) => {
            Some(solvers::reference_solve(&problem, manifest.reference_tol).map_err(data_err)?)
        }
        (None, false) => None,
    };

    let config = solvers::SolverConfig {
        algorithm: manifest.algorithm,
        seed: manifest.seed,
        epochs: manifest.epochs,
        eval_every: manifest.eval_every,
        overrides: manifest.overrides,
    };
    let trace =
        solvers::run(&problem, &config, reference.as_ref()).map_err(classify_solver_error)?;

    manifest.derived = Some(Derived {
        n: problem.n(),
        d: problem.d(),
        l_smooth: problem.l_smooth(),
        mu: problem.mu(),
        kappa: problem.kappa(),
        eta: trace.eta,
        momentum: trace.momentum,
        case: solvers::make_schedule(problem.n(), problem.l_smooth(), problem.mu())
            .ok()
            .map(|s| s.case.to_string()),
    });
    Ok((trace, reference))
}

pub(crate) fn write_run_outputs(
    dir: &Path,
    manifest: &RunManifest,
    trace: &RunTrace,
) -> Result<(), CliError> {
    outputs::write_trace(dir, trace, manifest.timing_in_trace).map_err(CliError::Data)?;
    outputs::write_iterate(dir, &trace.final_iterate).map_err(CliError::Data)?;
    outputs::write_timing(dir, trace).map_err(CliError::Data)?;
    manifest
        .save(&dir.join("manifest.json"))
        .map_err(CliError::Data)?;
    Ok(())
}
