//! MiG baseline: SVRG-style two-loop method with negative momentum.
//!
//! Settings follow the accelerated-comparator convention: epoch length
//! `m = 2n`, coupling `theta = sqrt(m / (3 kappa))`, learning rate
//! `eta = 1 / (3 theta L)`. Each outer loop snapshots `x_tilde`, takes `m`
//! coupled proximal steps, and replaces the snapshot with the
//! `(1 + eta mu)^j`-weighted average of the coupled points; the last inner
//! iterate carries into the next outer loop.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::SolverError;
use crate::linalg::{combine_into, sparse_axpy};
use crate::model::Problem;
use crate::solvers::{should_eval, Reference, RunTrace, SolverConfig, TraceBuilder};

/// MiG coupling weight `sqrt(m / (3 kappa))` for epoch length `m`.
pub fn mig_theta(m: usize, kappa: f64) -> f64 {
    (m as f64 / (3.0 * kappa)).sqrt()
}

/// Runs MiG from `x1 = 0`.
pub fn mig_run(
    problem: &Problem,
    config: &SolverConfig,
    reference: Option<&Reference>,
) -> Result<RunTrace, SolverError> {
    mig_run_from(problem, config, reference, &vec![0.0; problem.d()])
}

pub(crate) fn mig_run_from(
    problem: &Problem,
    config: &SolverConfig,
    reference: Option<&Reference>,
    x1: &[f64],
) -> Result<RunTrace, SolverError> {
    let n = problem.n();
    let d = problem.d();
    let m = 2 * n;
    let mu = problem.mu();
    let theta = config
        .overrides
        .tau
        .unwrap_or_else(|| mig_theta(m, problem.kappa()));
    let eta = config
        .overrides
        .eta
        .unwrap_or_else(|| 1.0 / (3.0 * theta * problem.l_smooth()));

    let mut rng = <ChaCha8Rng as rand::SeedableRng>::seed_from_u64(config.seed);
    let mut tracer = TraceBuilder::new(problem, reference, x1, 0)?;

    let mut x = x1.to_vec();
    let mut x_tilde = x1.to_vec();
    let mut x_next = vec![0.0; d];
    let mut y = vec![0.0; d];
    let mut grad_tilde = vec![0.0; d];
    let mut acc = vec![0.0; d];
    let mut ifo: u64 = 0;
    let mut po: u64 = 0;
    let mut iteration: u64 = 0;

    // one outer loop covers m = 2n inner iterations, i.e. two epochs of
    // stochastic work; run ceil(epochs / 2) outer loops
    let outer_loops = config.epochs.div_ceil(2);
    for s in 1..=outer_loops {
        let full_grad = problem.full_smooth_gradient(&x_tilde);
        ifo += n as u64;

        acc.fill(0.0);
        let mut weight = 1.0;
        let mut weight_sum = 0.0;
        for _ in 0..m {
            let i = rng.gen_range(0..n);
            combine_into(theta, &x, 1.0 - theta, &x_tilde, &mut y);
            let c_y = problem.grad_coefficient(i, &y);
            let c_s = problem.grad_coefficient(i, &x_tilde);
            ifo += 2;
            grad_tilde.copy_from_slice(&full_grad);
            let (idx, val) = problem.dataset().row(i);
            sparse_axpy(c_y - c_s, idx, val, &mut grad_tilde);

            problem
                .regularizer()
                .prox_into(&x, &grad_tilde, eta, &mut x_next);
            po += 1;
            std::mem::swap(&mut x, &mut x_next);
            iteration += 1;

            // accumulate the post-update coupled point with weight (1+eta mu)^j
            combine_into(theta, &x, 1.0 - theta, &x_tilde, &mut y);
            for (a, &yi) in acc.iter_mut().zip(&y) {
                *a += weight * yi;
            }
            weight_sum += weight;
            weight *= 1.0 + eta * mu;
            if weight > 1e280 {
                // rescale to avoid overflow; only the ratios matter
                for a in acc.iter_mut() {
                    *a /= weight;
                }
                weight_sum /= weight;
                weight = 1.0;
            }
        }
        for (t, &a) in x_tilde.iter_mut().zip(&acc) {
            *t = a / weight_sum;
        }

        let epoch = 2 * s;
        if should_eval(epoch, 2 * outer_loops, config.eval_every) {
            tracer.record(epoch, &x, ifo, po, iteration)?;
        }
    }

    Ok(RunTrace {
        algorithm: config.algorithm,
        seed: config.seed,
        eta,
        momentum: Some(theta),
        points: tracer.finish(),
        final_iterate: x,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::{generate_synthetic, SyntheticSpec};
    use crate::model::{LossKind, Problem, Regularizer};
    use crate::solvers::{reference_solve, Algorithm, SolverConfig};
    use approx::assert_relative_eq;

    #[test]
    fn theta_formula() {
        // m = 2n with n = 100, kappa = 1e4
        assert_relative_eq!(mig_theta(200, 1e4), 0.0816497, max_relative = 1e-6);
    }

    #[test]
    fn snapshot_gradient_matches_direct_sum() {
        let spec = SyntheticSpec {
            n: 40,
            d: 7,
            target_kappa: 1e3,
            noise: 0.3,
            feature_decay: 1.0,
            seed: 21,
            loss: LossKind::Logistic,
        };
        let (ds, l2) = generate_synthetic(&spec).unwrap();
        let p = Problem::new(ds, LossKind::Logistic, Regularizer::l2_only(l2).unwrap()).unwrap();
        let x: Vec<f64> = (0..p.d()).map(|j| 0.05 * j as f64 - 0.1).collect();
        let fast = p.full_smooth_gradient(&x);
        let mut direct = vec![0.0; p.d()];
        for i in 0..p.n() {
            let g = p.component_gradient(i, &x);
            for (dj, gj) in direct.iter_mut().zip(&g) {
                *dj += gj / p.n() as f64;
            }
        }
        for (a, b) in fast.iter().zip(&direct) {
            assert!((a - b).abs() <= 1e-12 * (1.0 + b.abs()));
        }
    }

    #[test]
    fn converges_on_ill_conditioned_logistic() {
        let spec = SyntheticSpec {
            n: 100,
            d: 10,
            target_kappa: 1e3,
            noise: 0.4,
            feature_decay: 1.0,
            seed: 22,
            loss: LossKind::Logistic,
        };
        let (ds, l2) = generate_synthetic(&spec).unwrap();
        let p = Problem::new(ds, LossKind::Logistic, Regularizer::l2_only(l2).unwrap()).unwrap();
        let reference = reference_solve(&p, 1e-12).unwrap();
        let config = SolverConfig::new(Algorithm::Mig, 3, 50);
        let trace = mig_run(&p, &config, Some(&reference)).unwrap();
        let first = trace.points.first().unwrap().subopt.unwrap();
        let last = trace.final_point().subopt.unwrap();
        assert!(last < 1e-4 * first, "subopt {first:e} -> {last:e}");
    }
}
