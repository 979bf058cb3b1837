//! Resolves CLI problem flags into a `Problem`.

use anyhow::{anyhow, bail, Context};
use ssnm_core::data::{
    generate_synthetic, load_libsvm_with, normalize_rows, scale_columns, LoadOptions, SyntheticSpec,
};
use ssnm_core::model::{LossKind, Problem, Regularizer};

use crate::manifest::{DataSource, NormalizeMode, RunManifest};

/// Parses `n=200,d=20,kappa=1e4[,noise=0.5][,decay=1][,seed=0]` into a spec.
pub fn parse_synthetic_spec(s: &str, loss: LossKind) -> anyhow::Result<SyntheticSpec> {
    let mut spec = SyntheticSpec {
        loss,
        ..SyntheticSpec::default()
    };
    let mut saw_n = false;
    let mut saw_d = false;
    let mut saw_kappa = false;
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| anyhow!("expected key=value in synthetic spec, got {part:?}"))?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "n" => {
                spec.n = value.parse().context("parsing n")?;
                saw_n = true;
            }
            "d" => {
                spec.d = value.parse().context("parsing d")?;
                saw_d = true;
            }
            "kappa" => {
                spec.target_kappa = value.parse().context("parsing kappa")?;
                saw_kappa = true;
            }
            "noise" => spec.noise = value.parse().context("parsing noise")?,
            "decay" => spec.feature_decay = value.parse().context("parsing decay")?,
            "seed" => spec.seed = value.parse().context("parsing seed")?,
            other => bail!("unknown synthetic spec key {other:?}"),
        }
    }
    if !(saw_n && saw_d && saw_kappa) {
        bail!("synthetic spec must set n, d and kappa");
    }
    Ok(spec)
}

/// Parses "1=+1,2=-1" into label-map pairs.
pub fn parse_label_map(s: &str) -> anyhow::Result<Vec<(f64, f64)>> {
    s.split(',')
        .map(|pair| {
            let (from, to) = pair
                .split_once('=')
                .ok_or_else(|| anyhow!("expected from=to in label map, got {pair:?}"))?;
            let from: f64 = from.trim().parse().context("label map key")?;
            let to: f64 = to.trim().parse().context("label map value")?;
            if to != 1.0 && to != -1.0 {
                bail!("label map target must be +/-1, got {to}");
            }
            Ok((from, to))
        })
        .collect()
}

pub struct ResolvedProblem {
    pub problem: Problem,
    pub dropped_rows: usize,
    /// lambda2 resolved from the synthetic spec when not given explicitly.
    pub lambda2: f64,
}

/// Builds the problem described by a manifest's data fields.
pub fn build_problem(manifest: &RunManifest) -> anyhow::Result<ResolvedProblem> {
    let (dataset, derived_lambda2) = match &manifest.source {
        DataSource::Path(path) => {
            let opts = LoadOptions {
                pad_dim: manifest.pad_dim,
                label_map: match &manifest.label_map {
                    Some(s) => Some(parse_label_map(s)?),
                    None => None,
                },
            };
            (load_libsvm_with(path, &opts)?, None)
        }
        DataSource::Synthetic(spec) => {
            let (ds, l2) = generate_synthetic(spec)?;
            (ds, Some(l2))
        }
    };
    let mut dropped_rows = 0;
    let dataset = match manifest.normalize {
        NormalizeMode::None => dataset,
        NormalizeMode::Rows => {
            let out = normalize_rows(&dataset);
            dropped_rows = out.dropped_rows;
            out.dataset
        }
        NormalizeMode::Columns => scale_columns(&dataset),
    };
    let lambda2 = if manifest.lambda2 > 0.0 {
        manifest.lambda2
    } else {
        derived_lambda2.ok_or_else(|| anyhow!("--lambda2 is required with --data"))?
    };
    let regularizer = Regularizer::new(lambda2, manifest.lambda1)?;
    let problem = Problem::new(dataset, manifest.loss, regularizer)?;
    Ok(ResolvedProblem {
        problem,
        dropped_rows,
        lambda2,
    })
}
