//! Output files: trace CSV, iterate/timing/reference JSON. All writes are
//! atomic (temp file + rename) so concurrent compare cells never expose
//! partial files.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};

use anyhow::Context;
use ssnm_core::solvers::{Reference, RunTrace};

use crate::manifest::CSV_SCHEMA;

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

pub fn write_atomic(path: &Path, bytes: &[u8]) -> anyhow::Result<()> {
    // unique temp name per call: concurrent writers never share one
    let tag = TMP_COUNTER.fetch_add(1, Ordering::Relaxed);
    let tmp = path.with_extension(format!("tmp{}-{tag}", std::process::id()));
    fs::write(&tmp, bytes).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| format!("{x:e}")).unwrap_or_default()
}

/// Renders the trace as CSV. The `seconds` column is filled only when
/// `timing` is on; otherwise it stays empty to keep the bytes a pure
/// function of the manifest.
pub fn trace_to_csv(trace: &RunTrace, timing: bool) -> String {
    let mut out = String::with_capacity(64 * (trace.points.len() + 1));
    out.push_str(CSV_SCHEMA);
    out.push('\n');
    for p in &trace.points {
        let seconds = if timing {
            format!("{:.6}", p.seconds)
        } else {
            String::new()
        };
        let _ = writeln!(
            out,
            "{},{:e},{},{},{},{},{}",
            p.epoch,
            p.objective,
            fmt_opt(p.subopt),
            fmt_opt(p.dist_sq),
            p.ifo,
            p.po,
            seconds
        );
    }
    out
}

pub fn write_trace(dir: &Path, trace: &RunTrace, timing: bool) -> anyhow::Result<()> {
    write_atomic(
        &dir.join("trace.csv"),
        trace_to_csv(trace, timing).as_bytes(),
    )
}

pub fn write_iterate(dir: &Path, x: &[f64]) -> anyhow::Result<()> {
    let body = serde_json::to_string(&serde_json::json!({ "x": x }))?;
    write_atomic(&dir.join("iterate.json"), body.as_bytes())
}

/// Wall-clock timings always land here, outside the reproducibility
/// contract of trace.csv.
pub fn write_timing(dir: &Path, trace: &RunTrace) -> anyhow::Result<()> {
    let per_eval: Vec<serde_json::Value> = trace
        .points
        .iter()
        .map(|p| serde_json::json!({ "epoch": p.epoch, "seconds": p.seconds }))
        .collect();
    let total = trace.points.last().map_or(0.0, |p| p.seconds);
    let body = serde_json::to_string_pretty(&serde_json::json!({
        "total_seconds": total,
        "per_eval": per_eval,
    }))?;
    write_atomic(&dir.join("timing.json"), body.as_bytes())
}

pub fn write_reference(path: &Path, reference: &Reference) -> anyhow::Result<()> {
    let body = serde_json::to_string(reference)?;
    write_atomic(path, body.as_bytes())
}

pub fn load_reference(path: &Path) -> anyhow::Result<Reference> {
    let body = std::fs::read_to_string(path)
        .with_context(|| format!("reading reference {}", path.display()))?;
    serde_json::from_str(&body).with_context(|| format!("parsing reference {}", path.display()))
}
