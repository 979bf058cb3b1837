//! Proximal SAGA baseline with the theoretically analyzed step size
//! `1 / (2 (mu n + L))`.
//!
//! The gradient table caches `grad f_i(phi_i)`, so each iteration costs one
//! fresh IFO call (the table entry reuses it) plus one PO call.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::SolverError;
use crate::linalg::sparse_axpy;
use crate::model::Problem;
use crate::solvers::{should_eval, Reference, RunTrace, SolverConfig, TraceBuilder};
use crate::tables::PointsTable;

/// SAGA learning rate `1 / (2 (mu n + L))`.
pub fn saga_learning_rate(n: usize, l_smooth: f64, mu: f64) -> f64 {
    1.0 / (2.0 * (mu * n as f64 + l_smooth))
}

/// Runs SAGA from `x1 = 0`.
pub fn saga_run(
    problem: &Problem,
    config: &SolverConfig,
    reference: Option<&Reference>,
) -> Result<RunTrace, SolverError> {
    saga_run_from(problem, config, reference, &vec![0.0; problem.d()])
}

pub(crate) fn saga_run_from(
    problem: &Problem,
    config: &SolverConfig,
    reference: Option<&Reference>,
    x1: &[f64],
) -> Result<RunTrace, SolverError> {
    let n = problem.n();
    let d = problem.d();
    let eta = config
        .overrides
        .eta
        .unwrap_or_else(|| saga_learning_rate(n, problem.l_smooth(), problem.mu()));

    let mut rng = <ChaCha8Rng as rand::SeedableRng>::seed_from_u64(config.seed);
    let mut table = PointsTable::init(problem, x1);
    let mut tracer = TraceBuilder::new(problem, reference, x1, table.ifo_calls())?;

    let mut x = x1.to_vec();
    let mut x_next = vec![0.0; d];
    let mut grad_tilde = vec![0.0; d];
    let mut grad_buf = vec![0.0; d];
    let mut fresh_ifo: u64 = 0;
    let mut po: u64 = 0;
    let mut iteration: u64 = 0;

    for epoch in 1..=config.epochs {
        for _ in 0..n {
            let i = rng.gen_range(0..n);
            let coeff = problem.grad_coefficient(i, &x);
            fresh_ifo += 1;
            let (idx, val) = problem.dataset().row(i);

            // grad_tilde = grad f_i(x) - g_i + avg, using the pre-update table
            let g_old = table.grad(i);
            for ((gt, &a), &g) in grad_tilde.iter_mut().zip(table.avg()).zip(g_old) {
                *gt = a - g;
            }
            sparse_axpy(coeff, idx, val, &mut grad_tilde);

            // table slot i takes the point the fresh gradient was computed at
            grad_buf.fill(0.0);
            sparse_axpy(coeff, idx, val, &mut grad_buf);
            table.set_entry_with_grad(i, &x, &grad_buf);

            problem
                .regularizer()
                .prox_into(&x, &grad_tilde, eta, &mut x_next);
            po += 1;
            std::mem::swap(&mut x, &mut x_next);
            iteration += 1;
        }
        if should_eval(epoch, config.epochs, config.eval_every) {
            tracer.record(epoch, &x, table.ifo_calls() + fresh_ifo, po, iteration)?;
        }
    }

    Ok(RunTrace {
        algorithm: config.algorithm,
        seed: config.seed,
        eta,
        momentum: None,
        points: tracer.finish(),
        final_iterate: x,
    })
}
