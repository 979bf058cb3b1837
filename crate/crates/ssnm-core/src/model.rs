//! Composite objectives: smooth finite-sum losses plus a strongly convex
//! regularizer with a closed-form proximal operator.
//!
//! The split is fixed: `f_i` is the pure data loss of example `i`, and `h`
//! carries the whole regularizer, so `mu = lambda2` and the smoothness
//! constant `L` depends on the data only.

use serde::{Deserialize, Serialize};

use crate::data::Dataset;
use crate::error::ModelError;
use crate::linalg::{self, soft_threshold};
use crate::par;

/// Smooth per-component loss.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LossKind {
    /// `f_i(x) = log(1 + exp(-b_i a_i^T x))`
    Logistic,
    /// `f_i(x) = (a_i^T x - b_i)^2 / 2`
    Squared,
}

impl std::fmt::Display for LossKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LossKind::Logistic => write!(f, "logistic"),
            LossKind::Squared => write!(f, "squared"),
        }
    }
}

/// Elastic-net regularizer `h(x) = (l2/2)||x||^2 + l1*||x||_1`.
///
/// `l2 > 0` is required: the schedule and the convergence theory need
/// `h` to be strongly convex with `mu = l2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Regularizer {
    l2: f64,
    l1: f64,
}

impl Regularizer {
    pub fn new(l2: f64, l1: f64) -> Result<Self, ModelError> {
        if l2 <= 0.0 || !l2.is_finite() {
            return Err(ModelError::NonPositiveL2(l2));
        }
        if l1 < 0.0 || !l1.is_finite() {
            return Err(ModelError::NegativeL1(l1));
        }
        Ok(Regularizer { l2, l1 })
    }

    /// Pure L2 (ridge) regularizer.
    pub fn l2_only(l2: f64) -> Result<Self, ModelError> {
        Regularizer::new(l2, 0.0)
    }

    pub fn l2(&self) -> f64 {
        self.l2
    }

    pub fn l1(&self) -> f64 {
        self.l1
    }

    /// Strong-convexity constant of `h`.
    pub fn mu(&self) -> f64 {
        self.l2
    }

    /// `h(x)`.
    pub fn value(&self, x: &[f64]) -> f64 {
        let sq: f64 = x.iter().map(|v| v * v).sum();
        let abs: f64 = if self.l1 > 0.0 {
            x.iter().map(|v| v.abs()).sum()
        } else {
            0.0
        };
        0.5 * self.l2 * sq + self.l1 * abs
    }

    /// Exact minimizer of `h(x) + <g, x> + ||x_k - x||^2 / (2 eta)`:
    /// `soft_threshold(x_k - eta g, eta l1) / (1 + eta l2)` componentwise.
    pub fn prox(&self, x_k: &[f64], g: &[f64], eta: f64) -> Vec<f64> {
        let mut out = vec![0.0; x_k.len()];
        self.prox_into(x_k, g, eta, &mut out);
        out
    }

    /// In-place variant of [`Regularizer::prox`]. `out` may alias nothing.
    pub fn prox_into(&self, x_k: &[f64], g: &[f64], eta: f64, out: &mut [f64]) {
        debug_assert!(eta > 0.0);
        debug_assert_eq!(x_k.len(), g.len());
        debug_assert_eq!(x_k.len(), out.len());
        let shrink = 1.0 / (1.0 + eta * self.l2);
        let t = eta * self.l1;
        if self.l1 > 0.0 {
            for ((o, &xk), &gi) in out.iter_mut().zip(x_k).zip(g) {
                *o = soft_threshold(xk - eta * gi, t) * shrink;
            }
        } else {
            for ((o, &xk), &gi) in out.iter_mut().zip(x_k).zip(g) {
                *o = (xk - eta * gi) * shrink;
            }
        }
    }
}

/// Numerically stable `1 / (1 + exp(-t))`.
pub(crate) fn sigmoid(t: f64) -> f64 {
    if t >= 0.0 {
        1.0 / (1.0 + (-t).exp())
    } else {
        let e = t.exp();
        e / (1.0 + e)
    }
}

/// Stable `log(1 + exp(-z))`.
fn logistic_loss(z: f64) -> f64 {
    (-z).max(0.0) + (-z.abs()).exp().ln_1p()
}

/// Composite finite-sum objective `F = (1/n) sum f_i + h`.
#[derive(Debug, Clone)]
pub struct Problem {
    dataset: Dataset,
    loss: LossKind,
    regularizer: Regularizer,
    l_smooth: f64,
}

impl Problem {
    /// Builds a problem, deriving `L = max_i L_i` from the data.
    pub fn new(
        dataset: Dataset,
        loss: LossKind,
        regularizer: Regularizer,
    ) -> Result<Self, ModelError> {
        let l_smooth = smoothness_constant(&dataset, loss)?;
        Ok(Problem {
            dataset,
            loss,
            regularizer,
            l_smooth,
        })
    }

    pub fn dataset(&self) -> &Dataset {
        &self.dataset
    }

    pub fn loss(&self) -> LossKind {
        self.loss
    }

    pub fn regularizer(&self) -> &Regularizer {
        &self.regularizer
    }

    pub fn n(&self) -> usize {
        self.dataset.n()
    }

    pub fn d(&self) -> usize {
        self.dataset.d()
    }

    /// Per-component smoothness constant (max over `i`).
    pub fn l_smooth(&self) -> f64 {
        self.l_smooth
    }

    /// Strong-convexity constant of `h`.
    pub fn mu(&self) -> f64 {
        self.regularizer.mu()
    }

    /// Condition number `L / mu`.
    pub fn kappa(&self) -> f64 {
        self.l_smooth / self.mu()
    }

    /// `f_i(x)`.
    pub fn component_value(&self, i: usize, x: &[f64]) -> f64 {
        assert!(
            i < self.n(),
            "component index {i} out of range (n = {})",
            self.n()
        );
        let (idx, val) = self.dataset.row(i);
        let ax = linalg::sparse_dot(idx, val, x);
        let b = self.dataset.label(i);
        match self.loss {
            LossKind::Logistic => logistic_loss(b * ax),
            LossKind::Squared => {
                let r = ax - b;
                0.5 * r * r
            }
        }
    }

    /// Scalar `c` with `grad f_i(x) = c * a_i` (both losses are linear
    /// models, so the gradient is supported on row `i`).
    pub fn grad_coefficient(&self, i: usize, x: &[f64]) -> f64 {
        assert!(
            i < self.n(),
            "component index {i} out of range (n = {})",
            self.n()
        );
        let (idx, val) = self.dataset.row(i);
        let ax = linalg::sparse_dot(idx, val, x);
        let b = self.dataset.label(i);
        match self.loss {
            LossKind::Logistic => -b * sigmoid(-b * ax),
            LossKind::Squared => ax - b,
        }
    }

    /// `grad f_i(x)` as a dense vector.
    pub fn component_gradient(&self, i: usize, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.d()];
        self.write_component_gradient(i, x, &mut out);
        out
    }

    /// Writes `grad f_i(x)` into `out` (overwrites all of `out`).
    pub fn write_component_gradient(&self, i: usize, x: &[f64], out: &mut [f64]) {
        let c = self.grad_coefficient(i, x);
        out.fill(0.0);
        let (idx, val) = self.dataset.row(i);
        linalg::sparse_axpy(c, idx, val, out);
    }

    /// `(1/n) sum_i f_i(x)` with a deterministic chunked summation.
    pub fn mean_smooth_value(&self, x: &[f64]) -> f64 {
        par::sum_indexed(self.n(), |i| self.component_value(i, x)) / self.n() as f64
    }

    /// Full objective `F(x) = (1/n) sum_i f_i(x) + h(x)`.
    pub fn full_objective(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.d());
        self.mean_smooth_value(x) + self.regularizer.value(x)
    }

    /// `(1/n) sum_i grad f_i(x)` (smooth part only).
    pub fn full_smooth_gradient(&self, x: &[f64]) -> Vec<f64> {
        let n = self.n();
        let mut g = par::sum_rows(n, self.d(), &|i: usize, buf: &mut [f64]| {
            let c = self.grad_coefficient(i, x);
            let (idx, val) = self.dataset.row(i);
            linalg::sparse_axpy(c, idx, val, buf);
        });
        let inv = 1.0 / n as f64;
        for gi in g.iter_mut() {
            *gi *= inv;
        }
        g
    }
}

/// Conservative per-component smoothness constant:
/// logistic `max_i ||a_i||^2 / 4`, squared `max_i ||a_i||^2`.
pub fn smoothness_constant(dataset: &Dataset, loss: LossKind) -> Result<f64, ModelError> {
    if dataset.n() == 0 {
        return Err(ModelError::EmptyDataset);
    }
    let max_sq = (0..dataset.n())
        .map(|i| dataset.row_norm_sq(i))
        .fold(0.0f64, f64::max);
    Ok(match loss {
        LossKind::Logistic => max_sq / 4.0,
        LossKind::Squared => max_sq,
    })
}
