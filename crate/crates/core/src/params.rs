//! Sampling parameters and the sawtooth frequency function.
//!
//! A configuration is a validated triple `(omega, omega1, n)`:
//!
//! - `omega` in (0, pi) is the signal band edge;
//! - `omega1` in (omega, pi) is an oversampled band edge;
//! - `n` is a positive even integer with `n > omega/(pi-omega)` (strict) and
//!   `n >= omega1/(pi-omega1)` (non-strict), equivalently
//!   `pi*n/(n+1) >= omega1`.
//!
//! Every evaluation time `t` is reduced to a segment: the unique integer `m`
//! with `tau = t - m` in `[n, n+1)`. On that interval the frequency function is
//! `g(t) = pi*n / tau`, extended 1-periodically, so `g(t) * (t - m) = pi*n`
//! holds exactly and `g` stays inside `[pi*n/(n+1), pi] ⊆ [omega1, pi]`.

use crate::error::{Error, Result};
use crate::trig::Dd;
use serde::Serialize;
use std::f64::consts::PI;

/// Largest |t| accepted by [`SamplingConfig::segment`]: 2^52. Beyond this the
/// segment arithmetic `t - m` is no longer exact in f64.
pub const MAX_ABS_TIME: f64 = 4_503_599_627_370_496.0;

/// Validated interpolation parameters. Immutable once constructed.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SamplingConfig {
    omega: f64,
    omega1: f64,
    n_even: i64,
}

/// A time reduced to its segment: `t = tau + m` with `tau` in `[n, n+1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SegmentedTime {
    pub t: f64,
    pub m: i64,
    pub tau: f64,
}

impl SegmentedTime {
    /// True when `t` has no fractional part.
    #[inline]
    pub fn is_integer(&self) -> bool {
        self.t.fract() == 0.0
    }
}

/// Checks all admissibility conditions and builds a configuration.
pub fn validate_config(omega: f64, omega1: f64, n: i64) -> Result<SamplingConfig> {
    if !omega.is_finite()
        || !omega1.is_finite()
        || omega <= 0.0
        || omega >= PI
        || omega1 <= omega
        || omega1 >= PI
    {
        return Err(Error::BandEdgeOutOfRange { omega, omega1 });
    }
    if n % 2 != 0 {
        return Err(Error::OddN { n });
    }
    let nf = n as f64;
    if nf <= omega / (PI - omega) || nf < omega1 / (PI - omega1) {
        return Err(Error::NTooSmall { n, omega, omega1 });
    }
    Ok(SamplingConfig { omega, omega1, n_even: n })
}

/// Fills the remaining parameters from the band edge alone:
/// `omega1 = (omega + pi)/2` and `n` the smallest even integer strictly
/// greater than `omega1 / (pi - omega1)`.
pub fn default_config(omega: f64) -> Result<SamplingConfig> {
    let omega1 = 0.5 * (omega + PI);
    if !omega.is_finite() || omega <= 0.0 || omega >= PI || omega1 >= PI {
        return Err(Error::BandEdgeOutOfRange { omega, omega1 });
    }
    let n = smallest_even_above(omega1 / (PI - omega1));
    validate_config(omega, omega1, n)
}

/// Smallest even integer strictly greater than `x`.
pub(crate) fn smallest_even_above(x: f64) -> i64 {
    2 * (x / 2.0).floor() as i64 + 2
}

impl SamplingConfig {
    /// Band edge of admissible signals.
    #[inline]
    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Oversampled band edge; `g(t) >= omega1` for all `t`.
    #[inline]
    pub fn omega1(&self) -> f64 {
        self.omega1
    }

    /// The even segment length parameter.
    #[inline]
    pub fn n_even(&self) -> i64 {
        self.n_even
    }

    #[inline]
    pub(crate) fn n_f64(&self) -> f64 {
        self.n_even as f64
    }

    /// Reduces `t` to the unique `m` with `t - m` in `[n, n+1)`.
    ///
    /// `t - m` is computed exactly: for |t| <= 2^52 both operands live on a
    /// common ulp grid and the difference is representable.
    pub fn segment(&self, t: f64) -> Result<SegmentedTime> {
        if !t.is_finite() {
            return Err(Error::NonFiniteTime);
        }
        if t.abs() > MAX_ABS_TIME {
            return Err(Error::TimeOutOfRange { t });
        }
        let m = t.floor() as i64 - self.n_even;
        let tau = t - m as f64;
        Ok(SegmentedTime { t, m, tau })
    }

    /// The sawtooth frequency `g(t) = pi*n / (t - m)`, 1-periodic,
    /// right-continuous, with values in `[pi*n/(n+1), pi]`.
    pub fn g(&self, t: f64) -> Result<f64> {
        let seg = self.segment(t)?;
        Ok(self.g_dd(seg.tau).to_f64())
    }

    /// `g` as a double-double, for phase products `g * (k - m)`.
    #[inline]
    pub(crate) fn g_dd(&self, tau: f64) -> Dd {
        Dd::pi().mul_f64(self.n_f64()).div_f64(tau)
    }
}

/// Free-function form of [`SamplingConfig::segment`].
pub fn segment(config: &SamplingConfig, t: f64) -> Result<SegmentedTime> {
    config.segment(t)
}

/// Free-function form of [`SamplingConfig::g`].
pub fn g_of_t(config: &SamplingConfig, t: f64) -> Result<f64> {
    config.g(t)
}
