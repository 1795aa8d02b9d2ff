//! Truncated interpolation series and error reporting.
//!
//! Both formulas are evaluated as `sum_k c_k(t) * x(k)` over a finite index
//! window. Windows come in three flavours: centered at zero (`[-L, L]`),
//! centered at the evaluation time (`[round(t)-L, round(t)+L]`), or explicit.
//! Both centerings matter: far from the origin they select very different
//! samples, and experiment reports record which one was used.
//!
//! Summation is compensated (Neumaier) in ascending k on a single thread, so
//! results are bit-identical across runs and caller thread counts.

use crate::error::{Error, Result};
use crate::kernel::{ClassicalEval, Formula, ModifiedEval};
use crate::params::{SamplingConfig, MAX_ABS_TIME};
use crate::signals::{SampleGrid, Signal};
use crate::sum::ComplexSum;
use num_complex::Complex64;
use serde::Serialize;

/// Largest number of points a report grid may hold.
pub const MAX_GRID_POINTS: u64 = 10_000_000;

/// Window centering parameterized by the half-width `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WindowMode {
    CenteredAtZero,
    CenteredAtT,
}

/// The index set replacing the full integer line in a truncated sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TruncationWindow {
    CenteredAtZero { l: u64 },
    CenteredAtT { l: u64 },
    Explicit { k_lo: i64, k_hi: i64 },
}

impl TruncationWindow {
    pub fn from_mode(mode: WindowMode, l: u64) -> Self {
        match mode {
            WindowMode::CenteredAtZero => TruncationWindow::CenteredAtZero { l },
            WindowMode::CenteredAtT => TruncationWindow::CenteredAtT { l },
        }
    }

    /// Binds the window to an evaluation time, yielding `[k_lo, k_hi]`.
    pub fn resolve(&self, t: f64) -> Result<(i64, i64)> {
        const MAX_L: u64 = MAX_ABS_TIME as u64;
        match *self {
            TruncationWindow::CenteredAtZero { l } => {
                if l == 0 {
                    return Err(Error::EmptyWindow);
                }
                if l > MAX_L {
                    return Err(Error::WindowExceedsGrid { k_lo: -(l as i64), k_hi: l as i64 });
                }
                Ok((-(l as i64), l as i64))
            }
            TruncationWindow::CenteredAtT { l } => {
                if l == 0 {
                    return Err(Error::EmptyWindow);
                }
                if !t.is_finite() {
                    return Err(Error::NonFiniteTime);
                }
                if t.abs() > MAX_ABS_TIME || l > MAX_L {
                    return Err(Error::TimeOutOfRange { t });
                }
                let c = t.round() as i64;
                match (c.checked_sub(l as i64), c.checked_add(l as i64)) {
                    (Some(lo), Some(hi)) => Ok((lo, hi)),
                    _ => Err(Error::WindowExceedsGrid { k_lo: c, k_hi: c }),
                }
            }
            TruncationWindow::Explicit { k_lo, k_hi } => {
                if k_lo > k_hi {
                    return Err(Error::EmptyWindow);
                }
                Ok((k_lo, k_hi))
            }
        }
    }
}

/// Per-point reconstruction record for one `(t, window)` cell.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ErrorReport {
    pub t: f64,
    pub truth: Complex64,
    pub estimate_modified: Complex64,
    pub estimate_classical: Complex64,
    pub abs_err_modified: f64,
    pub abs_err_classical: f64,
    pub window: TruncationWindow,
    pub config: SamplingConfig,
}

/// Evaluates the truncated series for one formula over a resolved window.
///
/// The window must lie inside the grid. Output is deterministic: fixed
/// ascending-k order with compensated accumulation.
pub fn interpolate(
    config: &SamplingConfig,
    grid: &SampleGrid,
    t: f64,
    window: &TruncationWindow,
    kind: Formula,
) -> Result<Complex64> {
    let (lo, hi) = window.resolve(t)?;
    if lo < grid.k_lo() || hi > grid.k_hi() {
        return Err(Error::WindowExceedsGrid { k_lo: lo, k_hi: hi });
    }
    let mut acc = ComplexSum::default();
    match kind {
        Formula::Modified => {
            let ev = ModifiedEval::new(config, t)?;
            for k in lo..=hi {
                let c = ev.coeff(k);
                acc.add(grid.value(k).expect("window inside grid") * c);
            }
        }
        Formula::Classical => {
            let ev = ClassicalEval::new(t)?;
            for k in lo..=hi {
                let c = ev.coeff(k);
                acc.add(grid.value(k).expect("window inside grid") * c);
            }
        }
    }
    Ok(acc.total())
}

/// Samples the signal over the resolved window and reports both estimates
/// against the directly evaluated truth.
pub fn report(
    config: &SamplingConfig,
    signal: &Signal,
    t: f64,
    window: &TruncationWindow,
) -> Result<ErrorReport> {
    let (lo, hi) = window.resolve(t)?;
    let points = (hi - lo) as u64 + 1;
    if points > MAX_GRID_POINTS {
        return Err(Error::WindowExceedsGrid { k_lo: lo, k_hi: hi });
    }
    let grid = signal.sample(lo, hi)?;
    let estimate_modified = interpolate(config, &grid, t, window, Formula::Modified)?;
    let estimate_classical = interpolate(config, &grid, t, window, Formula::Classical)?;
    let truth = signal.eval(t)?;
    Ok(ErrorReport {
        t,
        truth,
        estimate_modified,
        estimate_classical,
        abs_err_modified: (estimate_modified - truth).norm(),
        abs_err_classical: (estimate_classical - truth).norm(),
        window: *window,
        config: *config,
    })
}

/// One report per truncation half-width, in the given order.
///
/// `l_values` should be ascending; the decay comparison between consecutive
/// entries is only meaningful then.
pub fn convergence_sweep(
    config: &SamplingConfig,
    signal: &Signal,
    t: f64,
    l_values: &[u64],
    mode: WindowMode,
) -> Result<Vec<ErrorReport>> {
    if l_values.is_empty() {
        return Err(Error::EmptyWindow);
    }
    l_values
        .iter()
        .map(|&l| report(config, signal, t, &TruncationWindow::from_mode(mode, l)))
        .collect()
}
