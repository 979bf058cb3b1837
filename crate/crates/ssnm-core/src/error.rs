//! Error types for dataset handling, problem construction and solver runs.

use thiserror::Error;

/// Errors from dataset loading, validation and synthesis.
#[derive(Debug, Error)]
pub enum DataError {
    #[error("io error on {path}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error(
        "unsupported label set {labels:?}: expected {{-1,+1}} or {{1,2}}, or an explicit label map"
    )]
    LabelSet { labels: Vec<f64> },
    #[error("dataset is empty")]
    Empty,
    #[error("invalid dataset: {0}")]
    Invalid(String),
    #[error("infeasible synthetic spec: {0}")]
    InfeasibleSpec(String),
}

/// Errors from objective / regularizer construction.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error(
        "l2 coefficient must be positive and finite (got {0}); strong convexity requires mu > 0"
    )]
    NonPositiveL2(f64),
    #[error("l1 coefficient must be nonnegative and finite (got {0})")]
    NegativeL1(f64),
    #[error("dataset is empty")]
    EmptyDataset,
}

/// Errors from schedule construction (only reachable through manual overrides).
#[derive(Debug, Error)]
pub enum ScheduleError {
    #[error("invalid schedule inputs: n = {n}, L = {l}, mu = {mu}")]
    InvalidInputs { n: usize, l: f64, mu: f64 },
    #[error("tau = {tau} outside (0, 1/2)")]
    TauOutOfRange { tau: f64 },
    #[error("step constraint violated: L*tau = {lhs} > 1/eta - L*tau/(1-tau) = {rhs}")]
    StepConstraint { lhs: f64, rhs: f64 },
}

/// Errors raised while running a solver.
#[derive(Debug, Error)]
pub enum SolverError {
    #[error(
        "objective diverged at iteration {iteration}: F = {objective:e} (initial F = {initial:e})"
    )]
    Diverged {
        iteration: u64,
        objective: f64,
        initial: f64,
    },
    #[error("non-finite objective at iteration {iteration}")]
    NonFinite { iteration: u64 },
    #[error(transparent)]
    Schedule(#[from] ScheduleError),
    #[error("reference solve failed: {0}")]
    Reference(#[from] ReferenceError),
}

/// Errors from the high-accuracy reference solver.
#[derive(Debug, Error)]
pub enum ReferenceError {
    #[error("iteration cap {cap} reached with gradient mapping norm {best_norm:e} > tol {tol:e}")]
    IterationCap {
        cap: usize,
        tol: f64,
        best_norm: f64,
        /// Best iterate found so far.
        best_x: Vec<f64>,
        best_f: f64,
    },
    #[error("normal-equations solve failed (matrix not positive definite)")]
    NotPositiveDefinite,
}

/// Errors from the verification checks.
#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("instance too large for exact enumeration: n = {n} exceeds cap {cap}")]
    EnumerationCap { n: usize, cap: usize },
}
