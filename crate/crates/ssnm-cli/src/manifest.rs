//! Run manifests: the resolved configuration that fully determines a run.
//! Re-executing a manifest reproduces the trace byte for byte.

use std::path::Path;

use anyhow::Context;
use serde::{Deserialize, Serialize};
use ssnm_core::data::SyntheticSpec;
use ssnm_core::model::LossKind;
use ssnm_core::solvers::{Algorithm, Overrides};

/// Trace CSV column layout, recorded in every manifest.
pub const CSV_SCHEMA: &str = "epoch,objective,subopt,dist_sq,ifo,po,seconds";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DataSource {
    Path(String),
    Synthetic(SyntheticSpec),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalizeMode {
    None,
    Rows,
    Columns,
}

impl std::str::FromStr for NormalizeMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(NormalizeMode::None),
            "rows" => Ok(NormalizeMode::Rows),
            "columns" => Ok(NormalizeMode::Columns),
            other => Err(format!(
                "unknown normalization {other:?} (none|rows|columns)"
            )),
        }
    }
}

/// Constants derived from the resolved problem; informational (recomputed
/// on re-execution).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Derived {
    pub n: usize,
    pub d: usize,
    pub l_smooth: f64,
    pub mu: f64,
    pub kappa: f64,
    pub eta: f64,
    pub momentum: Option<f64>,
    pub case: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub version: String,
    pub schema_version: u32,
    pub csv_schema: String,
    pub rng_algorithm: String,
    pub algorithm: Algorithm,
    pub source: DataSource,
    pub loss: LossKind,
    pub lambda1: f64,
    pub lambda2: f64,
    pub normalize: NormalizeMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pad_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label_map: Option<String>,
    pub epochs: usize,
    pub eval_every: usize,
    pub seed: u64,
    pub overrides: Overrides,
    /// Whether wall-clock seconds are written into trace.csv. Off by
    /// default so identical manifests yield byte-identical traces.
    pub timing_in_trace: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference_path: Option<String>,
    pub compute_reference: bool,
    pub reference_tol: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived: Option<Derived>,
}

impl RunManifest {
    pub fn save(&self, path: &Path) -> anyhow::Result<()> {
        let body = serde_json::to_string_pretty(self)?;
        crate::outputs::write_atomic(path, body.as_bytes())
            .with_context(|| format!("writing manifest {}", path.display()))
    }

    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let body = std::fs::read_to_string(path)
            .with_context(|| format!("reading manifest {}", path.display()))?;
        serde_json::from_str(&body).with_context(|| format!("parsing manifest {}", path.display()))
    }
}
