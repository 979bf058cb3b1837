//! Solver runs: SSNM (with the sampled-negative-momentum step), SAGA and
//! MiG baselines, the deterministic reference solver, and run tracing.
//!
//! Every run owns a single seeded ChaCha8 generator. An SSNM iteration
//! draws `i_k` first and `I_k` second; the two draws are independent
//! uniforms on `{0,..,n-1}`. Runs are strictly sequential; the harness may
//! execute independent runs concurrently.

mod mig;
mod reference;
mod saga;
mod schedule;
mod ssnm;

pub use mig::mig_run;
pub use reference::{reference_solve, reference_solve_from, Reference};
pub use saga::{saga_learning_rate, saga_run};
pub use schedule::{make_schedule, Schedule, ScheduleCase};
pub use ssnm::{ssnm_run, ssnm_run_from, ssnm_step, SsnmState};

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{ScheduleError, SolverError};
use crate::model::Problem;

/// Identifier of the pinned random number generator.
pub const RNG_ALGORITHM: &str = "chacha8";

/// Objective blow-up factor that triggers the divergence guard.
const DIVERGENCE_FACTOR: f64 = 1e3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Ssnm,
    /// SSNM with the table update reusing the gradient sample (`I_k = i_k`).
    SsnmI,
    Saga,
    Mig,
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Algorithm::Ssnm => write!(f, "ssnm"),
            Algorithm::SsnmI => write!(f, "ssnm-i"),
            Algorithm::Saga => write!(f, "saga"),
            Algorithm::Mig => write!(f, "mig"),
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ssnm" => Ok(Algorithm::Ssnm),
            "ssnm-i" | "ssnm_i" => Ok(Algorithm::SsnmI),
            "saga" => Ok(Algorithm::Saga),
            "mig" => Ok(Algorithm::Mig),
            other => Err(format!("unknown algorithm {other:?}")),
        }
    }
}

/// Manual step-size/momentum overrides (tuning mode). These bypass the
/// schedule assertions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Overrides {
    pub eta: Option<f64>,
    pub tau: Option<f64>,
}

impl Overrides {
    pub fn is_empty(&self) -> bool {
        self.eta.is_none() && self.tau.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub algorithm: Algorithm,
    pub seed: u64,
    /// Number of epochs; one epoch is `n` stochastic iterations.
    pub epochs: usize,
    /// Epochs between trace evaluations.
    pub eval_every: usize,
    pub overrides: Overrides,
}

impl SolverConfig {
    pub fn new(algorithm: Algorithm, seed: u64, epochs: usize) -> Self {
        SolverConfig {
            algorithm,
            seed,
            epochs,
            eval_every: 1,
            overrides: Overrides::default(),
        }
    }
}

/// One trace evaluation point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub epoch: usize,
    pub objective: f64,
    /// `F(x) - F*` when a reference is known.
    pub subopt: Option<f64>,
    /// `||x - x*||^2` when a reference is known.
    pub dist_sq: Option<f64>,
    /// Cumulative incremental-first-order-oracle calls.
    pub ifo: u64,
    /// Cumulative proximal-oracle calls.
    pub po: u64,
    /// Wall-clock seconds since the run started.
    pub seconds: f64,
}

/// Full record of one solver run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunTrace {
    pub algorithm: Algorithm,
    pub seed: u64,
    /// Resolved learning rate.
    pub eta: f64,
    /// Resolved momentum weight: `tau` for SSNM, `theta` for MiG.
    pub momentum: Option<f64>,
    pub points: Vec<TracePoint>,
    pub final_iterate: Vec<f64>,
}

impl RunTrace {
    /// First traced epoch at which the suboptimality drops to `tol`.
    pub fn epochs_to_tolerance(&self, tol: f64) -> Option<usize> {
        self.points
            .iter()
            .find(|p| p.subopt.is_some_and(|s| s <= tol))
            .map(|p| p.epoch)
    }

    /// Effective passes (`ifo / n`) at the first epoch reaching `tol`.
    pub fn passes_to_tolerance(&self, tol: f64, n: usize) -> Option<f64> {
        self.points
            .iter()
            .find(|p| p.subopt.is_some_and(|s| s <= tol))
            .map(|p| p.ifo as f64 / n as f64)
    }

    pub fn final_point(&self) -> &TracePoint {
        self.points
            .last()
            .expect("trace always has the initial point")
    }
}

/// Runs the configured algorithm from `x1 = 0`.
pub fn run(
    problem: &Problem,
    config: &SolverConfig,
    reference: Option<&Reference>,
) -> Result<RunTrace, SolverError> {
    run_from(problem, config, reference, &vec![0.0; problem.d()])
}

/// Runs the configured algorithm from a caller-chosen initial point.
pub fn run_from(
    problem: &Problem,
    config: &SolverConfig,
    reference: Option<&Reference>,
    x1: &[f64],
) -> Result<RunTrace, SolverError> {
    match config.algorithm {
        Algorithm::Ssnm | Algorithm::SsnmI => ssnm_run_from(problem, config, reference, x1),
        Algorithm::Saga => saga::saga_run_from(problem, config, reference, x1),
        Algorithm::Mig => mig::mig_run_from(problem, config, reference, x1),
    }
}

/// Resolves the SSNM schedule, honoring manual overrides (which skip the
/// constraint assertions).
pub(crate) fn resolve_schedule(
    problem: &Problem,
    overrides: &Overrides,
) -> Result<Schedule, ScheduleError> {
    if overrides.is_empty() {
        return make_schedule(problem.n(), problem.l_smooth(), problem.mu());
    }
    let auto = make_schedule(problem.n(), problem.l_smooth(), problem.mu())?;
    Ok(Schedule::manual(
        problem.n(),
        problem.l_smooth(),
        problem.mu(),
        overrides.eta.unwrap_or(auto.eta),
        overrides.tau.unwrap_or(auto.tau),
    ))
}

/// Shared trace accumulation plus the divergence guard.
pub(crate) struct TraceBuilder<'a> {
    problem: &'a Problem,
    reference: Option<&'a Reference>,
    points: Vec<TracePoint>,
    initial_objective: f64,
    started: Instant,
}

impl<'a> TraceBuilder<'a> {
    pub(crate) fn new(
        problem: &'a Problem,
        reference: Option<&'a Reference>,
        x1: &[f64],
        init_ifo: u64,
    ) -> Result<Self, SolverError> {
        let mut builder = TraceBuilder {
            problem,
            reference,
            points: Vec::new(),
            initial_objective: f64::INFINITY,
            started: Instant::now(),
        };
        let f = problem.full_objective(x1);
        if !f.is_finite() {
            return Err(SolverError::NonFinite { iteration: 0 });
        }
        builder.initial_objective = f;
        builder.push(0, f, x1, init_ifo, 0);
        Ok(builder)
    }

    /// Evaluates the objective at an epoch boundary and appends a point.
    pub(crate) fn record(
        &mut self,
        epoch: usize,
        x: &[f64],
        ifo: u64,
        po: u64,
        iteration: u64,
    ) -> Result<(), SolverError> {
        let f = self.problem.full_objective(x);
        if !f.is_finite() {
            return Err(SolverError::NonFinite { iteration });
        }
        if f > DIVERGENCE_FACTOR * self.initial_objective {
            return Err(SolverError::Diverged {
                iteration,
                objective: f,
                initial: self.initial_objective,
            });
        }
        self.push(epoch, f, x, ifo, po);
        Ok(())
    }

    fn push(&mut self, epoch: usize, objective: f64, x: &[f64], ifo: u64, po: u64) {
        let (subopt, dist_sq) = match self.reference {
            Some(r) => (
                Some(objective - r.f_star),
                Some(crate::linalg::dist_sq(x, &r.x_star)),
            ),
            None => (None, None),
        };
        self.points.push(TracePoint {
            epoch,
            objective,
            subopt,
            dist_sq,
            ifo,
            po,
            seconds: self.started.elapsed().as_secs_f64(),
        });
    }

    pub(crate) fn finish(self) -> Vec<TracePoint> {
        self.points
    }
}

/// Epochs at which the trace evaluates the objective: multiples of
/// `eval_every`, plus the final epoch.
pub(crate) fn should_eval(epoch: usize, total_epochs: usize, eval_every: usize) -> bool {
    epoch == total_epochs || epoch.is_multiple_of(eval_every.max(1))
}
