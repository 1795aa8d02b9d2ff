//! Executes experiment specs into artifact files.
//!
//! Cells (one per `t`, `L`, window mode) are independent and may run in
//! parallel; each cell is computed with single-threaded deterministic
//! summation, and rows are emitted in spec order, so artifacts are
//! byte-identical for any worker count.

use crate::spec::{validate_spec, ExperimentSpec, OutputFormat, WindowModeSpec};
use nvsinc_core::{report, SamplingConfig, TruncationWindow};
use rayon::prelude::*;
use serde::Serialize;
use std::path::{Path, PathBuf};

/// One output row: a single formula's estimate for one cell.
#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub omega: f64,
    pub omega1: f64,
    pub n: i64,
    pub signal: String,
    pub window: &'static str,
    pub t: f64,
    pub l: u64,
    pub kind: &'static str,
    pub truth_re: f64,
    pub truth_im: f64,
    pub estimate_re: f64,
    pub estimate_im: f64,
    pub abs_err: f64,
}

#[derive(Debug)]
pub enum RunError {
    /// Spec failed validation; carries the offending field and a message.
    Invalid { field: String, message: String },
    /// A numerical operation failed while executing the spec.
    Numeric(nvsinc_core::Error),
    Io(std::io::Error),
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Invalid { field, message } => {
                write!(f, "invalid spec: field `{field}`: {message}")
            }
            RunError::Numeric(e) => write!(f, "numerical failure: {e}"),
            RunError::Io(e) => write!(f, "io failure: {e}"),
        }
    }
}

impl std::error::Error for RunError {}

/// Artifact contents plus where they were written.
pub struct RunArtifacts {
    pub path: PathBuf,
    pub rows: Vec<Row>,
}

/// Runs every cell of the spec and writes the artifact under `out_dir`.
pub fn run_spec(spec: &ExperimentSpec, out_dir: &Path) -> Result<RunArtifacts, RunError> {
    let rows = compute_rows(spec)?;
    let path = out_dir.join(&spec.output);
    let payload = match spec.format {
        OutputFormat::Csv => render_csv(&rows),
        OutputFormat::Json => render_json(spec, &rows),
    };
    std::fs::write(&path, payload).map_err(RunError::Io)?;
    Ok(RunArtifacts { path, rows })
}

/// Computes all rows without touching the filesystem.
pub fn compute_rows(spec: &ExperimentSpec) -> Result<Vec<Row>, RunError> {
    validate_spec(spec).map_err(|(field, message)| RunError::Invalid { field, message })?;
    let config = spec
        .config
        .resolve()
        .map_err(RunError::Numeric)?;

    let mut cells = Vec::new();
    for &t in &spec.t {
        for &l in &spec.l {
            for &w in &spec.windows {
                cells.push((t, l, w));
            }
        }
    }

    let results: Vec<Result<Vec<Row>, RunError>> = cells
        .par_iter()
        .map(|&(t, l, w)| run_cell(spec, &config, t, l, w))
        .collect();

    let mut rows = Vec::with_capacity(results.len() * 2);
    for r in results {
        rows.extend(r?);
    }
    Ok(rows)
}

fn run_cell(
    spec: &ExperimentSpec,
    config: &SamplingConfig,
    t: f64,
    l: u64,
    w: WindowModeSpec,
) -> Result<Vec<Row>, RunError> {
    let signal = spec
        .signal
        .resolve(l)
        .map_err(|message| RunError::Invalid { field: "signal".into(), message })?;
    let window = TruncationWindow::from_mode(w.to_mode(), l);
    let rep = report(config, &signal, t, &window).map_err(RunError::Numeric)?;
    let describe = spec.signal.describe(l);
    let mk = |kind: &'static str, est: nvsinc_core::Complex64, abs_err: f64| Row {
        omega: config.omega(),
        omega1: config.omega1(),
        n: config.n_even(),
        signal: describe.clone(),
        window: w.label(),
        t,
        l,
        kind,
        truth_re: rep.truth.re,
        truth_im: rep.truth.im,
        estimate_re: est.re,
        estimate_im: est.im,
        abs_err,
    };
    Ok(vec![
        mk("classical", rep.estimate_classical, rep.abs_err_classical),
        mk("modified", rep.estimate_modified, rep.abs_err_modified),
    ])
}

/// 20 significant decimal digits, the reporting precision of the artifact.
pub fn full_precision(x: f64) -> String {
    format!("{x:.19e}")
}

pub fn render_csv(rows: &[Row]) -> String {
    let mut out = String::new();
    out.push_str(
        "omega,omega1,n,signal,window,t,L,kind,truth_re,truth_im,estimate_re,estimate_im,abs_err\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.omega,
            r.omega1,
            r.n,
            r.signal,
            r.window,
            r.t,
            r.l,
            r.kind,
            full_precision(r.truth_re),
            full_precision(r.truth_im),
            full_precision(r.estimate_re),
            full_precision(r.estimate_im),
            full_precision(r.abs_err),
        ));
    }
    out
}

fn render_json(spec: &ExperimentSpec, rows: &[Row]) -> String {
    #[derive(Serialize)]
    struct Artifact<'a> {
        name: &'a str,
        rows: &'a [Row],
    }
    let mut text = serde_json::to_string_pretty(&Artifact { name: &spec.name, rows })
        .expect("serializable artifact");
    text.push('\n');
    text
}
