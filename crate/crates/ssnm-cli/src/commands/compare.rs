use std::path::Path;

use serde::Serialize;
use ssnm_core::par;
use ssnm_core::solvers::{self, Algorithm, Overrides, Reference};

use crate::commands::{data_err, io_err, manifest_from_args};
use crate::outputs;
use crate::setup::build_problem;
use crate::{classify_solver_error, CliError, CompareArgs};

#[derive(Serialize)]
struct SeedResult {
    seed: u64,
    epochs_to_tol: Option<usize>,
    passes_to_tol: Option<f64>,
    final_subopt: f64,
}

#[derive(Serialize)]
struct AlgoSummary {
    algorithm: String,
    median_epochs_to_tol: Option<usize>,
    per_seed: Vec<SeedResult>,
}

pub(crate) fn execute(args: CompareArgs) -> Result<(), CliError> {
    if args.algos.is_empty() {
        return Err(CliError::Usage(
            "--algos must list at least one algorithm".into(),
        ));
    }
    if args.seeds == 0 {
        return Err(CliError::Usage("--seeds must be at least 1".into()));
    }
    let base = manifest_from_args(
        &args.problem,
        args.algos[0],
        args.epochs,
        args.eval_every,
        args.base_seed,
        Overrides::default(),
        args.timing,
    )?;

    std::fs::create_dir_all(&args.out)
        .map_err(|e| io_err(format!("creating {}", args.out.display()), e.into()))?;

    let resolved = build_problem(&base).map_err(CliError::Data)?;
    if resolved.dropped_rows > 0 {
        eprintln!(
            "warning: dropped {} all-zero rows during normalization",
            resolved.dropped_rows
        );
    }
    let problem = resolved.problem;
    let lambda2 = resolved.lambda2;

    // the summary needs suboptimality, so a reference is mandatory here
    let reference: Reference = match &args.reference {
        Some(path) => outputs::load_reference(path).map_err(CliError::Data)?,
        None => solvers::reference_solve(&problem, args.ref_tol).map_err(data_err)?,
    };
    outputs::write_reference(&args.out.join("reference.json"), &reference)
        .map_err(CliError::Data)?;

    // (algorithm, seed) cells are independent; run them data-parallel.
    // Duplicate algorithm listings get distinct output directories so no
    // two cells ever write the same path.
    let cells: Vec<(Algorithm, u64, String)> = args
        .algos
        .iter()
        .enumerate()
        .flat_map(|(pos, &a)| {
            let occurrence = args.algos[..pos].iter().filter(|&&b| b == a).count();
            (0..args.seeds).map(move |s| {
                let seed = args.base_seed + s as u64;
                let dir = if occurrence == 0 {
                    format!("{a}-seed{seed}")
                } else {
                    format!("{a}-seed{seed}-dup{occurrence}")
                };
                (a, seed, dir)
            })
        })
        .collect();
    let out_dir = args.out.clone();
    let results: Vec<Result<(Algorithm, u64, SeedResult), CliError>> =
        par::collect_indexed(cells.len(), |idx| {
            let (algorithm, seed, ref dir_name) = cells[idx];
            let mut manifest = base.clone();
            manifest.algorithm = algorithm;
            manifest.seed = seed;
            manifest.lambda2 = lambda2;
            let config = solvers::SolverConfig {
                algorithm,
                seed,
                epochs: args.epochs,
                eval_every: args.eval_every,
                overrides: Overrides::default(),
            };
            let trace =
                solvers::run(&problem, &config, Some(&reference)).map_err(classify_solver_error)?;
            let cell_dir = out_dir.join(dir_name);
            std::fs::create_dir_all(&cell_dir)
                .map_err(|e| io_err(format!("creating {}", cell_dir.display()), e.into()))?;
            crate::commands::run::write_run_outputs(&cell_dir, &manifest, &trace)?;
            Ok((
                algorithm,
                seed,
                SeedResult {
                    seed,
                    epochs_to_tol: trace.epochs_to_tolerance(args.tol),
                    passes_to_tol: trace.passes_to_tolerance(args.tol, problem.n()),
                    final_subopt: trace.final_point().subopt.unwrap_or(f64::NAN),
                },
            ))
        });

    let mut summaries: Vec<AlgoSummary> = Vec::new();
    for &algo in &args.algos {
        summaries.push(AlgoSummary {
            algorithm: algo.to_string(),
            median_epochs_to_tol: None,
            per_seed: Vec::new(),
        });
    }
    for result in results {
        let (algorithm, _seed, seed_result) = result?;
        // attach to the first not-yet-full summary slot for this algorithm,
        // so duplicate listings produce duplicate (identical) entries
        let slot = summaries
            .iter_mut()
            .find(|s| s.algorithm == algorithm.to_string() && s.per_seed.len() < args.seeds)
            .expect("cell belongs to a requested algorithm");
        slot.per_seed.push(seed_result);
    }
    for summary in summaries.iter_mut() {
        summary.per_seed.sort_by_key(|r| r.seed);
        summary.median_epochs_to_tol = median_epochs(&summary.per_seed);
    }

    let body = serde_json::to_string_pretty(&serde_json::json!({
        "tolerance": args.tol,
        "epochs": args.epochs,
        "seeds": (0..args.seeds).map(|s| args.base_seed + s as u64).collect::<Vec<_>>(),
        "reference_f_star": reference.f_star,
        "algorithms": summaries,
    }))
    .map_err(|e| CliError::Data(e.into()))?;
    let summary_path: &Path = &args.out.join("summary.json");
    outputs::write_atomic(summary_path, body.as_bytes()).map_err(CliError::Data)?;

    for s in &summaries {
        match s.median_epochs_to_tol {
            Some(e) => println!("{}: median epochs to {:e} = {}", s.algorithm, args.tol, e),
            None => println!(
                "{}: did not reach {:e} within {} epochs",
                s.algorithm, args.tol, args.epochs
            ),
        }
    }
    println!("summary written to {}", summary_path.display());
    Ok(())
}

/// Median of epochs-to-tolerance; unreached runs count as slower than any
/// reached one, and a majority of unreached runs yields `None`.
fn median_epochs(per_seed: &[SeedResult]) -> Option<usize> {
    let mut values: Vec<Option<usize>> = per_seed.iter().map(|r| r.epochs_to_tol).collect();
    values.sort_by_key(|v| v.map_or(usize::MAX, |e| e));
    values[(values.len() - 1) / 2]
}
