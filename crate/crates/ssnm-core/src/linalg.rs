//! Small dense-vector kernels shared by the solvers and checks.
//!
//! Iterates are dense `Vec<f64>`; data rows are sparse index/value pairs.
//! Summations that feed reproducibility-sensitive outputs go through
//! [`pairwise_sum`], which has a fixed reduction tree regardless of length.

/// Dense dot product.
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Sparse-row dot dense vector: `sum_j v[j] * x[idx[j]]`.
pub fn sparse_dot(indices: &[u32], values: &[f64], x: &[f64]) -> f64 {
    indices
        .iter()
        .zip(values)
        .map(|(&i, &v)| v * x[i as usize])
        .sum()
}

/// `y += alpha * row` where `row` is sparse.
pub fn sparse_axpy(alpha: f64, indices: &[u32], values: &[f64], y: &mut [f64]) {
    for (&i, &v) in indices.iter().zip(values) {
        y[i as usize] += alpha * v;
    }
}

/// `y += alpha * x`, dense.
pub fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    debug_assert_eq!(x.len(), y.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

/// Squared Euclidean norm.
pub fn norm_sq(a: &[f64]) -> f64 {
    dot(a, a)
}

/// Euclidean norm.
pub fn norm(a: &[f64]) -> f64 {
    norm_sq(a).sqrt()
}

/// `||a - b||^2`.
pub fn dist_sq(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Writes `out = c1 * a + c2 * b` elementwise.
pub fn combine_into(c1: f64, a: &[f64], c2: f64, b: &[f64], out: &mut [f64]) {
    debug_assert_eq!(a.len(), b.len());
    debug_assert_eq!(a.len(), out.len());
    for ((o, x), y) in out.iter_mut().zip(a).zip(b) {
        *o = c1 * x + c2 * y;
    }
}

/// Scalar soft-thresholding: `sign(v) * max(|v| - t, 0)`.
pub fn soft_threshold(v: f64, t: f64) -> f64 {
    if v > t {
        v - t
    } else if v < -t {
        v + t
    } else {
        0.0
    }
}

/// Pairwise (cascade) summation with a deterministic reduction tree.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 32 {
        return xs.iter().sum();
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}
