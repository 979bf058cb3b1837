//! Data-parallel building blocks with a sequential fallback.
//!
//! With the `parallel` feature (default) these run on rayon; without it they
//! run sequentially. Both paths use fixed chunk boundaries and a fixed
//! combine tree, so the results are bitwise identical across thread counts
//! and across the two builds. Anything written to a trace file goes through
//! these helpers.

use crate::linalg::pairwise_sum;

/// Leaf size for indexed sums; per-chunk accumulation is sequential.
const SUM_CHUNK: usize = 512;

/// Leaf size for the row-sum reduction tree.
const ROW_CHUNK: usize = 64;

/// Sum of `f(0) + f(1) + ... + f(n-1)` over fixed chunks.
///
/// Result is bitwise independent of the thread count.
pub fn sum_indexed<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    let chunks = chunk_sums(n, &f);
    pairwise_sum(&chunks)
}

/// Always-sequential twin of [`sum_indexed`]; same chunking, same bits.
pub fn sum_indexed_seq<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64,
{
    let chunks: Vec<f64> = (0..n)
        .step_by(SUM_CHUNK)
        .map(|lo| {
            let hi = (lo + SUM_CHUNK).min(n);
            (lo..hi).map(&f).sum()
        })
        .collect();
    pairwise_sum(&chunks)
}

#[cfg(feature = "parallel")]
fn chunk_sums<F>(n: usize, f: &F) -> Vec<f64>
where
    F: Fn(usize) -> f64 + Sync,
{
    use rayon::prelude::*;
    let starts: Vec<usize> = (0..n).step_by(SUM_CHUNK).collect();
    starts
        .par_iter()
        .map(|&lo| {
            let hi = (lo + SUM_CHUNK).min(n);
            (lo..hi).map(f).sum()
        })
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn chunk_sums<F>(n: usize, f: &F) -> Vec<f64>
where
    F: Fn(usize) -> f64 + Sync,
{
    (0..n)
        .step_by(SUM_CHUNK)
        .map(|lo| {
            let hi = (lo + SUM_CHUNK).min(n);
            (lo..hi).map(f).sum()
        })
        .collect()
}

/// Ordered map over `0..n`, parallel when the feature is on.
pub fn collect_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sum of `n` dense rows of length `d` via a fixed binary reduction tree.
///
/// `add_row(i, buf)` must do `buf += row_i`. Within a leaf the rows are
/// accumulated in index order; leaves are combined pairwise, so the result
/// does not depend on scheduling.
pub fn sum_rows<F>(n: usize, d: usize, add_row: &F) -> Vec<f64>
where
    F: Fn(usize, &mut [f64]) + Sync,
{
    sum_rows_range(0, n, d, add_row)
}

fn sum_rows_range<F>(lo: usize, hi: usize, d: usize, add_row: &F) -> Vec<f64>
where
    F: Fn(usize, &mut [f64]) + Sync,
{
    if hi - lo <= ROW_CHUNK {
        let mut buf = vec![0.0; d];
        for i in lo..hi {
            add_row(i, &mut buf);
        }
        return buf;
    }
    let mid = lo + (hi - lo) / 2;
    let (mut left, right) = join_halves(lo, mid, hi, d, add_row);
    for (l, r) in left.iter_mut().zip(&right) {
        *l += r;
    }
    left
}

#[cfg(feature = "parallel")]
fn join_halves<F>(lo: usize, mid: usize, hi: usize, d: usize, add_row: &F) -> (Vec<f64>, Vec<f64>)
where
    F: Fn(usize, &mut [f64]) + Sync,
{
    rayon::join(
        || sum_rows_range(lo, mid, d, add_row),
        || sum_rows_range(mid, hi, d, add_row),
    )
}

#[cfg(not(feature = "parallel"))]
fn join_halves<F>(lo: usize, mid: usize, hi: usize, d: usize, add_row: &F) -> (Vec<f64>, Vec<f64>)
where
    F: Fn(usize, &mut [f64]) + Sync,
{
    (
        sum_rows_range(lo, mid, d, add_row),
        sum_rows_range(mid, hi, d, add_row),
    )
}
