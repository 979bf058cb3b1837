//! SSNM: SAGA with sampled negative momentum.
//!
//! Per iteration: sample `i_k`, form the coupled point
//! `y = tau x_k + (1-tau) phi_{i_k}`, take a proximal step along
//! `grad f_{i_k}(y) - g_{i_k} + avg`, then sample an independent `I_k` and
//! store `tau x_{k+1} + (1-tau) phi_{I_k}` at table slot `I_k`.
//! Exactly 2 IFO + 1 PO per iteration with the cached gradient table.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::SolverError;
use crate::linalg::{combine_into, sparse_axpy};
use crate::model::Problem;
use crate::solvers::{
    resolve_schedule, should_eval, RunTrace, Schedule, SolverConfig, TraceBuilder,
};
use crate::tables::PointsTable;

/// Mutable per-run state: the iterate, oracle counters and scratch buffers.
#[derive(Debug, Clone)]
pub struct SsnmState {
    pub x: Vec<f64>,
    /// IFO calls made directly by the solver (the table counts its own).
    pub fresh_ifo: u64,
    pub po: u64,
    /// `I_k := i_k` (the SSNM-i ablation) instead of an independent draw.
    pub reuse_sample: bool,
    y: Vec<f64>,
    grad_tilde: Vec<f64>,
    x_next: Vec<f64>,
    new_phi: Vec<f64>,
}

impl SsnmState {
    pub fn new(x1: &[f64], reuse_sample: bool) -> Self {
        let d = x1.len();
        SsnmState {
            x: x1.to_vec(),
            fresh_ifo: 0,
            po: 0,
            reuse_sample,
            y: vec![0.0; d],
            grad_tilde: vec![0.0; d],
            x_next: vec![0.0; d],
            new_phi: vec![0.0; d],
        }
    }
}

/// One SSNM iteration. Draws `i_k` then (unless `reuse_sample`) `I_k`, in
/// that order, from `rng`.
pub fn ssnm_step(
    state: &mut SsnmState,
    table: &mut PointsTable,
    problem: &Problem,
    schedule: &Schedule,
    rng: &mut ChaCha8Rng,
) {
    let n = problem.n();
    let tau = schedule.tau;

    let i_k = rng.gen_range(0..n);
    combine_into(tau, &state.x, 1.0 - tau, table.phi(i_k), &mut state.y);

    let coeff = problem.grad_coefficient(i_k, &state.y);
    state.fresh_ifo += 1;
    let table_grad = table.grad(i_k);
    for ((gt, &a), &g) in state.grad_tilde.iter_mut().zip(table.avg()).zip(table_grad) {
        *gt = a - g;
    }
    let (idx, val) = problem.dataset().row(i_k);
    sparse_axpy(coeff, idx, val, &mut state.grad_tilde);

    problem
        .regularizer()
        .prox_into(&state.x, &state.grad_tilde, schedule.eta, &mut state.x_next);
    state.po += 1;
    std::mem::swap(&mut state.x, &mut state.x_next);

    let slot = if state.reuse_sample {
        i_k
    } else {
        rng.gen_range(0..n)
    };
    combine_into(
        tau,
        &state.x,
        1.0 - tau,
        table.phi(slot),
        &mut state.new_phi,
    );
    table.update_entry(problem, slot, &state.new_phi);
}

/// Runs SSNM (or SSNM-i, per the config) from `x1 = 0`.
pub fn ssnm_run(
    problem: &Problem,
    config: &SolverConfig,
    reference: Option<&super::Reference>,
) -> Result<RunTrace, SolverError> {
    ssnm_run_from(problem, config, reference, &vec![0.0; problem.d()])
}

/// Runs SSNM for `epochs * n` iterations and returns the last iterate
/// `x_{K+1}` (no tail averaging).
pub fn ssnm_run_from(
    problem: &Problem,
    config: &SolverConfig,
    reference: Option<&super::Reference>,
    x1: &[f64],
) -> Result<RunTrace, SolverError> {
    let schedule = resolve_schedule(problem, &config.overrides)?;
    let reuse = matches!(config.algorithm, super::Algorithm::SsnmI);
    let mut rng = <ChaCha8Rng as rand::SeedableRng>::seed_from_u64(config.seed);
    let mut table = PointsTable::init(problem, x1);
    let mut state = SsnmState::new(x1, reuse);
    let mut tracer = TraceBuilder::new(problem, reference, x1, table.ifo_calls())?;

    let n = problem.n();
    let mut iteration: u64 = 0;
    for epoch in 1..=config.epochs {
        for _ in 0..n {
            ssnm_step(&mut state, &mut table, problem, &schedule, &mut rng);
            iteration += 1;
        }
        if should_eval(epoch, config.epochs, config.eval_every) {
            tracer.record(
                epoch,
                &state.x,
                table.ifo_calls() + state.fresh_ifo,
                state.po,
                iteration,
            )?;
        }
    }

    Ok(RunTrace {
        algorithm: config.algorithm,
        seed: config.seed,
        eta: schedule.eta,
        momentum: Some(schedule.tau),
        points: tracer.finish(),
        final_iterate: state.x,
    })
}
