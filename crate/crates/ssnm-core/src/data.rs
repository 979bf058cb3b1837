//! Dataset ingestion: LIBSVM text files, row normalization and synthetic
//! problems with a prescribed condition number.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::DataError;
use crate::linalg;
use crate::model::LossKind;

/// Sparse binary-classification dataset in CSR layout.
///
/// Row indices are 0-based and strictly increasing within a row; explicit
/// zeros are never stored. Labels are exactly -1 or +1.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    n: usize,
    d: usize,
    indptr: Vec<usize>,
    indices: Vec<u32>,
    values: Vec<f64>,
    labels: Vec<f64>,
}

impl Dataset {
    /// Builds a dataset from per-row `(index, value)` pairs, validating the
    /// invariants.
    pub fn from_rows(
        d: usize,
        rows: &[Vec<(u32, f64)>],
        labels: &[f64],
    ) -> Result<Self, DataError> {
        if rows.len() != labels.len() {
            return Err(DataError::Invalid(format!(
                "{} rows but {} labels",
                rows.len(),
                labels.len()
            )));
        }
        let mut indptr = Vec::with_capacity(rows.len() + 1);
        let mut indices = Vec::new();
        let mut values = Vec::new();
        indptr.push(0);
        for (r, row) in rows.iter().enumerate() {
            let mut prev: Option<u32> = None;
            for &(idx, val) in row {
                if idx as usize >= d {
                    return Err(DataError::Invalid(format!(
                        "row {r}: feature index {idx} out of range for d = {d}"
                    )));
                }
                if let Some(p) = prev {
                    if idx <= p {
                        return Err(DataError::Invalid(format!(
                            "row {r}: indices not strictly increasing ({p} then {idx})"
                        )));
                    }
                }
                prev = Some(idx);
                if val != 0.0 {
                    indices.push(idx);
                    values.push(val);
                }
            }
            indptr.push(indices.len());
        }
        for (r, &b) in labels.iter().enumerate() {
            if b != 1.0 && b != -1.0 {
                return Err(DataError::Invalid(format!(
                    "row {r}: label {b} is not +/-1"
                )));
            }
        }
        Ok(Dataset {
            n: rows.len(),
            d,
            indptr,
            indices,
            values,
            labels: labels.to_vec(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Sparse row `i` as `(indices, values)`.
    pub fn row(&self, i: usize) -> (&[u32], &[f64]) {
        let (lo, hi) = (self.indptr[i], self.indptr[i + 1]);
        (&self.indices[lo..hi], &self.values[lo..hi])
    }

    pub fn label(&self, i: usize) -> f64 {
        self.labels[i]
    }

    pub fn labels(&self) -> &[f64] {
        &self.labels
    }

    pub fn row_norm_sq(&self, i: usize) -> f64 {
        let (_, vals) = self.row(i);
        vals.iter().map(|v| v * v).sum()
    }

    /// Number of stored nonzeros.
    pub fn nnz(&self) -> usize {
        self.values.len()
    }
}

/// Options for [`load_libsvm_with`].
#[derive(Debug, Clone, Default)]
pub struct LoadOptions {
    /// Pad the feature dimension up to this value (for index alignment
    /// between train/test splits). Ignored when smaller than the observed d.
    pub pad_dim: Option<usize>,
    /// Explicit label mapping `(file label, +/-1)`. When absent, labels must
    /// already be in {-1,+1}, or in {1,2} which maps to {+1,-1}.
    pub label_map: Option<Vec<(f64, f64)>>,
}

/// Loads a LIBSVM-format text file: `<label> <idx>:<val> ...` with 1-based
/// feature indices.
pub fn load_libsvm(path: impl AsRef<Path>) -> Result<Dataset, DataError> {
    load_libsvm_with(path, &LoadOptions::default())
}

pub fn load_libsvm_with(path: impl AsRef<Path>, opts: &LoadOptions) -> Result<Dataset, DataError> {
    let path = path.as_ref();
    let io_err = |source| DataError::Io {
        path: path.display().to_string(),
        source,
    };
    let file = File::open(path).map_err(io_err)?;
    let reader = BufReader::new(file);

    let mut raw_labels: Vec<f64> = Vec::new();
    let mut rows: Vec<Vec<(u32, f64)>> = Vec::new();
    let mut max_index: u32 = 0;

    for (lineno, line) in reader.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.map_err(io_err)?;
        let mut tokens = line.split_ascii_whitespace();
        let Some(label_tok) = tokens.next() else {
            continue; // blank line
        };
        let label: f64 = label_tok.parse().map_err(|_| DataError::Malformed {
            line: lineno,
            msg: format!("non-numeric label {label_tok:?}"),
        })?;
        let mut row: Vec<(u32, f64)> = Vec::new();
        let mut prev: Option<u32> = None;
        for tok in tokens {
            if tok.starts_with('#') {
                break; // trailing comment
            }
            let (idx_s, val_s) = tok.split_once(':').ok_or_else(|| DataError::Malformed {
                line: lineno,
                msg: format!("expected idx:val, got {tok:?}"),
            })?;
            let idx: u32 = idx_s.parse().map_err(|_| DataError::Malformed {
                line: lineno,
                msg: format!("non-numeric feature index {idx_s:?}"),
            })?;
            let val: f64 = val_s.parse().map_err(|_| DataError::Malformed {
                line: lineno,
                msg: format!("non-numeric feature value {val_s:?}"),
            })?;
            if idx == 0 {
                return Err(DataError::Malformed {
                    line: lineno,
                    msg: "feature index 0 in 1-based format".into(),
                });
            }
            if let Some(p) = prev {
                if idx <= p {
                    return Err(DataError::Malformed {
                        line: lineno,
                        msg: format!("indices not strictly increasing ({p} then {idx})"),
                    });
                }
            }
            prev = Some(idx);
            max_index = max_index.max(idx);
            if val != 0.0 {
                row.push((idx - 1, val));
            }
        }
        raw_labels.push(label);
        rows.push(row);
    }

    if rows.is_empty() {
        return Err(DataError::Empty);
    }

    let labels = map_labels(&raw_labels, opts.label_map.as_deref())?;
    let mut d = max_index as usize;
    if let Some(pad) = opts.pad_dim {
        d = d.max(pad);
    }
    Dataset::from_rows(d, &rows, &labels)
}

fn map_labels(raw: &[f64], map: Option<&[(f64, f64)]>) -> Result<Vec<f64>, DataError> {
    if let Some(map) = map {
        let lookup = |b: f64| map.iter().find(|(from, _)| *from == b).map(|(_, to)| *to);
        return raw
            .iter()
            .map(|&b| {
                lookup(b).ok_or_else(|| DataError::LabelSet {
                    labels: distinct(raw),
                })
            })
            .collect();
    }
    if raw.iter().all(|&b| b == 1.0 || b == -1.0) {
        return Ok(raw.to_vec());
    }
    // covtype-style {1,2} -> {+1,-1}
    if raw.iter().all(|&b| b == 1.0 || b == 2.0) {
        return Ok(raw
            .iter()
            .map(|&b| if b == 1.0 { 1.0 } else { -1.0 })
            .collect());
    }
    Err(DataError::LabelSet {
        labels: distinct(raw),
    })
}

fn distinct(raw: &[f64]) -> Vec<f64> {
    let mut seen: Vec<f64> = Vec::new();
    for &b in raw {
        if !seen.contains(&b) {
            seen.push(b);
        }
        if seen.len() > 8 {
            break;
        }
    }
    seen.sort_by(f64::total_cmp);
    seen
}

/// Writes a dataset in LIBSVM format (1-based indices, shortest exact
/// decimal values), so that `load_libsvm` reproduces it exactly.
pub fn save_libsvm(dataset: &Dataset, path: impl AsRef<Path>) -> Result<(), DataError> {
    let path = path.as_ref();
    let io_err = |source| DataError::Io {
        path: path.display().to_string(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    let mut w = BufWriter::new(file);
    let mut line = String::new();
    for i in 0..dataset.n() {
        line.clear();
        let b = dataset.label(i);
        line.push_str(if b > 0.0 { "+1" } else { "-1" });
        let (idx, val) = dataset.row(i);
        for (&j, &v) in idx.iter().zip(val) {
            let _ = write!(line, " {}:{}", j + 1, v);
        }
        line.push('\n');
        w.write_all(line.as_bytes()).map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

/// Result of [`normalize_rows`]: the scaled dataset plus how many all-zero
/// rows were dropped.
pub struct Normalized {
    pub dataset: Dataset,
    pub dropped_rows: usize,
}

/// Scales every row to unit Euclidean norm; all-zero rows are dropped.
pub fn normalize_rows(dataset: &Dataset) -> Normalized {
    let mut rows: Vec<Vec<(u32, f64)>> = Vec::with_capacity(dataset.n());
    let mut labels: Vec<f64> = Vec::with_capacity(dataset.n());
    let mut dropped = 0usize;
    for i in 0..dataset.n() {
        let nrm = dataset.row_norm_sq(i).sqrt();
        if nrm == 0.0 {
            dropped += 1;
            continue;
        }
        let (idx, val) = dataset.row(i);
        rows.push(idx.iter().zip(val).map(|(&j, &v)| (j, v / nrm)).collect());
        labels.push(dataset.label(i));
    }
    let dataset = Dataset::from_rows(dataset.d(), &rows, &labels)
        .expect("normalization preserves invariants");
    Normalized {
        dataset,
        dropped_rows: dropped,
    }
}

/// Scales each feature column by the inverse of its root mean square, the
/// sparsity-preserving alternative to row normalization (no centering).
/// Empty columns are left untouched.
pub fn scale_columns(dataset: &Dataset) -> Dataset {
    let mut col_sq = vec![0.0f64; dataset.d()];
    for i in 0..dataset.n() {
        let (idx, val) = dataset.row(i);
        for (&j, &v) in idx.iter().zip(val) {
            col_sq[j as usize] += v * v;
        }
    }
    let n = dataset.n() as f64;
    let scale: Vec<f64> = col_sq
        .iter()
        .map(|&s| if s > 0.0 { (s / n).sqrt().recip() } else { 1.0 })
        .collect();
    let mut rows: Vec<Vec<(u32, f64)>> = Vec::with_capacity(dataset.n());
    for i in 0..dataset.n() {
        let (idx, val) = dataset.row(i);
        rows.push(
            idx.iter()
                .zip(val)
                .map(|(&j, &v)| (j, v * scale[j as usize]))
                .collect(),
        );
    }
    Dataset::from_rows(dataset.d(), &rows, dataset.labels())
        .expect("column scaling preserves invariants")
}

/// Parameters for a synthetic problem with a prescribed condition number.
///
/// Rows are unit-normalized Gaussian vectors, optionally with a geometric
/// per-feature scale decay so the data covariance spectrum spans several
/// orders of magnitude (mimicking sparse categorical datasets, whose local
/// curvature at the optimum drops to the regularizer scale). Labels come
/// from a planted unit-norm parameter `w`:
/// `b_i = sign(sqrt(d) * a_i.w + noise * eps_i)` with standard normal
/// `eps_i`. The returned `lambda2 = L / target_kappa` makes
/// `kappa = L / mu` hit the target exactly.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SyntheticSpec {
    pub n: usize,
    pub d: usize,
    pub target_kappa: f64,
    /// Gaussian label-noise scale relative to the unit-variance margin.
    pub noise: f64,
    /// Scale of the last feature relative to the first (geometric decay
    /// across features). `1.0` gives isotropic rows.
    pub feature_decay: f64,
    pub seed: u64,
    pub loss: LossKind,
}

impl Default for SyntheticSpec {
    fn default() -> Self {
        SyntheticSpec {
            n: 200,
            d: 20,
            target_kappa: 1e4,
            noise: 0.5,
            feature_decay: 1.0,
            seed: 0,
            loss: LossKind::Logistic,
        }
    }
}

/// Generates a synthetic dataset and the `lambda2` that achieves the target
/// condition number. Deterministic given the seed.
pub fn generate_synthetic(spec: &SyntheticSpec) -> Result<(Dataset, f64), DataError> {
    if spec.n == 0 || spec.d == 0 {
        return Err(DataError::InfeasibleSpec("n and d must be positive".into()));
    }
    if spec.target_kappa < 1.0 || spec.target_kappa.is_nan() {
        return Err(DataError::InfeasibleSpec(format!(
            "target kappa {} < 1",
            spec.target_kappa
        )));
    }
    if spec.noise < 0.0 || spec.noise.is_nan() {
        return Err(DataError::InfeasibleSpec(format!(
            "noise {} < 0",
            spec.noise
        )));
    }
    if spec.feature_decay.is_nan() || spec.feature_decay <= 0.0 || spec.feature_decay > 1.0 {
        return Err(DataError::InfeasibleSpec(format!(
            "feature decay {} outside (0, 1]",
            spec.feature_decay
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let scales: Vec<f64> = (0..spec.d)
        .map(|j| {
            if spec.d == 1 {
                1.0
            } else {
                spec.feature_decay.powf(j as f64 / (spec.d - 1) as f64)
            }
        })
        .collect();
    let mut w = vec![0.0f64; spec.d];
    for wi in w.iter_mut() {
        *wi = rng.sample(StandardNormal);
    }
    let w_norm = linalg::norm(&w);
    for wi in w.iter_mut() {
        *wi /= w_norm;
    }
    let sqrt_d = (spec.d as f64).sqrt();

    let mut rows: Vec<Vec<(u32, f64)>> = Vec::with_capacity(spec.n);
    let mut labels: Vec<f64> = Vec::with_capacity(spec.n);
    let mut a = vec![0.0f64; spec.d];
    for _ in 0..spec.n {
        for (ai, s) in a.iter_mut().zip(&scales) {
            let z: f64 = rng.sample(StandardNormal);
            *ai = z * s;
        }
        let nrm = linalg::norm(&a);
        for ai in a.iter_mut() {
            *ai /= nrm;
        }
        let margin = sqrt_d * linalg::dot(&a, &w);
        let eps: f64 = rng.sample(StandardNormal);
        let b = if margin + spec.noise * eps >= 0.0 {
            1.0
        } else {
            -1.0
        };
        rows.push(a.iter().enumerate().map(|(j, &v)| (j as u32, v)).collect());
        labels.push(b);
    }
    let dataset = Dataset::from_rows(spec.d, &rows, &labels)?;
    let l_smooth = crate::model::smoothness_constant(&dataset, spec.loss)
        .map_err(|e| DataError::Invalid(e.to_string()))?;
    let lambda2 = l_smooth / spec.target_kappa;
    Ok((dataset, lambda2))
}
