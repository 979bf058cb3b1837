//! Cross-solver integration runs on desk-scale instances.

use ssnm_core::data::{generate_synthetic, SyntheticSpec};
use ssnm_core::model::{LossKind, Problem, Regularizer};
use ssnm_core::par;
use ssnm_core::solvers::{reference_solve, run, Algorithm, SolverConfig};

fn ill_conditioned_logistic(n: usize, kappa: f64, seed: u64) -> Problem {
    let spec = SyntheticSpec {
        n,
        d: 15,
        target_kappa: kappa,
        noise: 0.5,
        feature_decay: 1e-3,
        seed,
        loss: LossKind::Logistic,
    };
    let (ds, l2) = generate_synthetic(&spec).unwrap();
    Problem::new(ds, LossKind::Logistic, Regularizer::l2_only(l2).unwrap()).unwrap()
}

#[test]
fn all_four_solvers_converge_on_an_ill_conditioned_instance() {
    let problem = ill_conditioned_logistic(500, 1e4, 42);
    let reference = reference_solve(&problem, 1e-12).unwrap();
    for algo in [
        Algorithm::Ssnm,
        Algorithm::SsnmI,
        Algorithm::Saga,
        Algorithm::Mig,
    ] {
        let config = SolverConfig::new(algo, 5, 150);
        let trace = run(&problem, &config, Some(&reference)).unwrap();
        let epochs = trace.epochs_to_tolerance(1e-6);
        assert!(
            epochs.is_some(),
            "{algo} did not reach 1e-6 within 150 epochs (final {:e})",
            trace.final_point().subopt.unwrap()
        );
    }
}

#[test]
fn elastic_net_path_converges() {
    let spec = SyntheticSpec {
        n: 200,
        d: 10,
        target_kappa: 1e3,
        noise: 0.4,
        feature_decay: 1.0,
        seed: 9,
        loss: LossKind::Logistic,
    };
    let (ds, l2) = generate_synthetic(&spec).unwrap();
    let reg = Regularizer::new(l2, l2).unwrap();
    let problem = Problem::new(ds, LossKind::Logistic, reg).unwrap();
    let reference = reference_solve(&problem, 1e-12).unwrap();
    assert!(reference.grad_mapping_norm <= 1e-12);
    let trace = run(
        &problem,
        &SolverConfig::new(Algorithm::Ssnm, 2, 120),
        Some(&reference),
    )
    .unwrap();
    let last = trace.final_point().subopt.unwrap();
    assert!(last <= 1e-8, "elastic-net suboptimality {last:e}");
}

#[test]
fn objective_evaluation_is_consistent_across_summation_orders() {
    let problem = ill_conditioned_logistic(5000, 1e4, 3);
    let x: Vec<f64> = (0..problem.d()).map(|j| 0.02 * j as f64 - 0.1).collect();
    let fast = problem.full_objective(&x);
    // naive left-to-right summation oracle
    let mut naive = 0.0;
    for i in 0..problem.n() {
        naive += problem.component_value(i, &x);
    }
    naive = naive / problem.n() as f64 + problem.regularizer().value(&x);
    assert!((fast - naive).abs() <= 1e-10 * (1.0 + naive.abs()));
    // and the chunked sum is identical whether or not it runs on a pool
    let seq = par::sum_indexed_seq(problem.n(), |i| problem.component_value(i, &x));
    let par_sum = par::sum_indexed(problem.n(), |i| problem.component_value(i, &x));
    assert_eq!(seq.to_bits(), par_sum.to_bits());
}
