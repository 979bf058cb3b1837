//! Stochastic variance-reduced solvers for strongly convex composite
//! finite-sum minimization.
//!
//! The centerpiece is SSNM, a directly accelerated SAGA variant that blends
//! the iterate with a sampled entry of the points table (negative momentum)
//! and stores the updated coupled point at an independently sampled slot.
//! SAGA and MiG are included as baselines, together with a high-accuracy
//! deterministic reference solver, LIBSVM data handling, synthetic problem
//! generation with a prescribed condition number, and a verification module
//! that certifies the variance bound, estimator unbiasedness, proximal
//! lemma, one-step Lyapunov contraction and theorem-level convergence
//! bounds numerically.
//!
//! Batch work (multi-seed runs, objective evaluation, enumeration checks)
//! is data-parallel via rayon when the default `parallel` feature is on,
//! and falls back to sequential execution without it; either way the
//! results are bitwise identical.

pub mod data;
pub mod error;
pub mod linalg;
pub mod model;
pub mod par;
pub mod solvers;
pub mod tables;
pub mod verify;

pub use data::{generate_synthetic, load_libsvm, normalize_rows, Dataset, SyntheticSpec};
pub use error::{DataError, ModelError, ReferenceError, ScheduleError, SolverError, VerifyError};
pub use model::{LossKind, Problem, Regularizer};
pub use solvers::{
    make_schedule, mig_run, reference_solve, run, run_from, saga_run, ssnm_run, Algorithm,
    Overrides, Reference, RunTrace, Schedule, ScheduleCase, SolverConfig, TracePoint,
    RNG_ALGORITHM,
};
pub use tables::PointsTable;
pub use verify::{Suite, VerificationReport};
