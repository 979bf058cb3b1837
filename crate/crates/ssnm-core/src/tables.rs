//! SAGA-style state: the points table `phi`, the gradient table
//! `g_i = grad f_i(phi_i)`, and the incrementally maintained running
//! average `(1/n) sum_i g_i`.
//!
//! Storage is exactly `n*d` points plus `n*d` gradients. The average is
//! recomputed by pairwise summation every `10 n` incremental updates to
//! keep the floating-point drift bounded.

use crate::linalg;
use crate::model::Problem;
use crate::par;

/// Incremental updates between automatic average refreshes, in units of `n`.
const REFRESH_EPOCHS: usize = 10;

#[derive(Debug, Clone)]
pub struct PointsTable {
    n: usize,
    d: usize,
    /// Row-major `n x d` points.
    phi: Vec<f64>,
    /// Row-major `n x d` gradients, `grads[i] = grad f_i(phi_i)`.
    grads: Vec<f64>,
    /// Running average `(1/n) sum_i grads[i]`.
    avg: Vec<f64>,
    updates_since_refresh: usize,
    ifo_calls: u64,
}

impl PointsTable {
    /// Initializes `phi_i = x1` for all `i`, computes every gradient
    /// (`n` IFO calls) and the exact average.
    pub fn init(problem: &Problem, x1: &[f64]) -> Self {
        let (n, d) = (problem.n(), problem.d());
        assert_eq!(x1.len(), d);
        let mut phi = vec![0.0; n * d];
        for i in 0..n {
            phi[i * d..(i + 1) * d].copy_from_slice(x1);
        }
        let grad_rows = par::collect_indexed(n, |i| problem.component_gradient(i, x1));
        let mut grads = vec![0.0; n * d];
        for (i, row) in grad_rows.iter().enumerate() {
            grads[i * d..(i + 1) * d].copy_from_slice(row);
        }
        let mut table = PointsTable {
            n,
            d,
            phi,
            grads,
            avg: vec![0.0; d],
            updates_since_refresh: 0,
            ifo_calls: n as u64,
        };
        table.refresh_average();
        table
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn phi(&self, i: usize) -> &[f64] {
        &self.phi[i * self.d..(i + 1) * self.d]
    }

    pub fn grad(&self, i: usize) -> &[f64] {
        &self.grads[i * self.d..(i + 1) * self.d]
    }

    pub fn avg(&self) -> &[f64] {
        &self.avg
    }

    /// Incremental-first-order-oracle calls performed by this table
    /// (initialization plus every `update_entry`).
    pub fn ifo_calls(&self) -> u64 {
        self.ifo_calls
    }

    /// Replaces `phi_i` with `new_point`, recomputes `g_i` (exactly one IFO
    /// call), folds the change into the running average, and returns the
    /// previous point.
    pub fn update_entry(&mut self, problem: &Problem, i: usize, new_point: &[f64]) -> Vec<f64> {
        assert!(i < self.n, "table index {i} out of range (n = {})", self.n);
        let c = problem.grad_coefficient(i, new_point);
        self.ifo_calls += 1;
        let (idx, val) = problem.dataset().row(i);
        let d = self.d;
        let g_new = {
            let mut g = vec![0.0; d];
            linalg::sparse_axpy(c, idx, val, &mut g);
            g
        };
        self.apply_entry(i, new_point, &g_new)
    }

    /// Like [`PointsTable::update_entry`] but with a caller-supplied
    /// gradient (no IFO call). Used by SAGA, which already evaluated
    /// `grad f_i` at the stored point.
    pub fn set_entry_with_grad(
        &mut self,
        i: usize,
        new_point: &[f64],
        new_grad: &[f64],
    ) -> Vec<f64> {
        assert!(i < self.n, "table index {i} out of range (n = {})", self.n);
        self.apply_entry(i, new_point, new_grad)
    }

    fn apply_entry(&mut self, i: usize, new_point: &[f64], g_new: &[f64]) -> Vec<f64> {
        let d = self.d;
        assert_eq!(new_point.len(), d);
        assert_eq!(g_new.len(), d);
        let old_point = self.phi[i * d..(i + 1) * d].to_vec();
        self.phi[i * d..(i + 1) * d].copy_from_slice(new_point);
        let inv_n = 1.0 / self.n as f64;
        {
            let g_old = &self.grads[i * d..(i + 1) * d];
            for ((a, &gn), &go) in self.avg.iter_mut().zip(g_new).zip(g_old) {
                *a += (gn - go) * inv_n;
            }
        }
        self.grads[i * d..(i + 1) * d].copy_from_slice(g_new);
        self.updates_since_refresh += 1;
        if self.updates_since_refresh >= REFRESH_EPOCHS * self.n {
            self.refresh_average();
        }
        old_point
    }

    /// Recomputes the running average as the exact pairwise-summed mean of
    /// the stored gradients and resets the refresh counter.
    pub fn refresh_average(&mut self) {
        let (n, d) = (self.n, self.d);
        let grads = &self.grads;
        let mut sum = par::sum_rows(n, d, &|i: usize, buf: &mut [f64]| {
            linalg::axpy(1.0, &grads[i * d..(i + 1) * d], buf);
        });
        let inv_n = 1.0 / n as f64;
        for s in sum.iter_mut() {
            *s *= inv_n;
        }
        self.avg = sum;
        self.updates_since_refresh = 0;
    }

    /// `(1/n) sum_i f_i(phi_i)`, the table part of the Lyapunov quantity.
    pub fn mean_component_value(&self, problem: &Problem) -> f64 {
        par::sum_indexed(self.n, |i| problem.component_value(i, self.phi(i))) / self.n as f64
    }

    /// Exact pairwise-summed mean of the stored gradients, without touching
    /// the running average.
    pub fn exact_average(&self) -> Vec<f64> {
        let (n, d) = (self.n, self.d);
        let grads = &self.grads;
        let mut sum = par::sum_rows(n, d, &|i: usize, buf: &mut [f64]| {
            linalg::axpy(1.0, &grads[i * d..(i + 1) * d], buf);
        });
        let inv_n = 1.0 / n as f64;
        for s in sum.iter_mut() {
            *s *= inv_n;
        }
        sum
    }
}
