//! The piecewise-exponential function `E(t, w)` and the quadrature oracle.
//!
//! For `t` in segment `m` with `g = g(t)`, on `|w| <= pi`:
//!
//! - `E(t, w) = exp(i*w*t)` for `|w| <= g(t)`,
//! - `E(t, w) = exp(i*w*m)` otherwise, using `exp(i*g*(t-m)) = exp(i*pi*n) = 1`
//!   for even `n`.
//!
//! Every interpolation coefficient is the Fourier integral
//! `a_k(t) = (1/2pi) * integral_{-pi}^{pi} E(t,w) exp(-i*w*k) dw`. The oracle
//! evaluates that integral with composite Gauss-Legendre quadrature, split at
//! the jump points `w = +-g(t)`, doubling the panel count until two successive
//! estimates agree. This path shares no algebra with the closed forms in
//! [`crate::kernel`], which is what makes the agreement tests meaningful.

use crate::error::{Error, Result};
use crate::kernel::ModifiedEval;
use crate::params::SamplingConfig;
use crate::quad::GaussLegendre;
use crate::sum::ComplexSum;
use crate::trig::{sincos_dd, Dd};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Panel-doubling acceptance threshold between successive estimates.
const CONVERGE_TOL: f64 = 1e-11;
/// Hard failure threshold: if the final doubling still moves the estimate by
/// more than this, the quadrature has not converged.
const FAIL_TOL: f64 = 1e-10;
/// Largest magnitude tolerated for the imaginary part of a coefficient.
const IMAG_TOL: f64 = 1e-10;
const MIN_PANELS: u32 = 64;
const MAX_DOUBLINGS: u32 = 7;
const GL_ORDER: usize = 32;

/// `E(t, ·)` bound to one configuration.
#[derive(Clone, Copy, Debug)]
pub struct EFunction {
    config: SamplingConfig,
}

impl EFunction {
    pub fn new(config: SamplingConfig) -> Self {
        EFunction { config }
    }

    pub fn config(&self) -> &SamplingConfig {
        &self.config
    }

    pub fn value(&self, t: f64, omega: f64) -> Result<Complex64> {
        e_value(&self.config, t, omega)
    }
}

#[inline]
fn cis(phase: Dd) -> Complex64 {
    let (s, c) = sincos_dd(phase);
    Complex64::new(c, s)
}

/// Evaluates `E(t, omega)` on `|omega| <= pi`.
pub fn e_value(config: &SamplingConfig, t: f64, omega: f64) -> Result<Complex64> {
    if !omega.is_finite() || omega.abs() > PI {
        return Err(Error::OmegaOutOfRange { omega });
    }
    let seg = config.segment(t)?;
    let g = config.g_dd(seg.tau).to_f64();
    if omega.abs() <= g {
        Ok(cis(Dd::prod(omega, t)))
    } else {
        Ok(cis(Dd::prod(omega, seg.m as f64)))
    }
}

fn integrate_once(
    config: &SamplingConfig,
    t: f64,
    k: i64,
    g: f64,
    rule: &GaussLegendre,
    panels: u32,
) -> Complex64 {
    let kf = k as f64;
    let integrand = |w: f64| {
        let e = e_value(config, t, w).expect("node inside [-pi, pi]");
        e * cis(Dd::prod(w, -kf))
    };
    let pieces: &[(f64, f64)] = if g < PI {
        &[(-PI, -g), (-g, g), (g, PI)]
    } else {
        &[(-PI, PI)]
    };
    let mut acc = ComplexSum::default();
    for &(a, b) in pieces {
        let len = b - a;
        if len <= 0.0 {
            continue;
        }
        let np = ((panels as f64 * len / (2.0 * PI)).round() as u32).max(1);
        let step = len / np as f64;
        for j in 0..np {
            let lo = a + step * j as f64;
            let hi = if j + 1 == np { b } else { a + step * (j + 1) as f64 };
            acc.add(rule.integrate(lo, hi, integrand));
        }
    }
    acc.total() / (2.0 * PI)
}

/// Recomputes `a_k(t)` from its defining Fourier integral.
///
/// Returns the real part once successive panel doublings agree; the imaginary
/// part must vanish (Hermitian symmetry of `E`) and is checked against 1e-10.
pub fn coeff_by_quadrature(
    config: &SamplingConfig,
    t: f64,
    k: i64,
    panels: u32,
) -> Result<f64> {
    if panels < MIN_PANELS {
        return Err(Error::TooFewPanels { got: panels, min: MIN_PANELS });
    }
    let seg = config.segment(t)?;
    let g = config.g_dd(seg.tau).to_f64();
    let rule = GaussLegendre::new(GL_ORDER);

    let mut p = panels;
    let mut prev = integrate_once(config, t, k, g, &rule, p);
    let mut delta = f64::INFINITY;
    for _ in 0..MAX_DOUBLINGS {
        p *= 2;
        let next = integrate_once(config, t, k, g, &rule, p);
        delta = (next - prev).norm();
        prev = next;
        if delta <= CONVERGE_TOL {
            break;
        }
    }
    if delta > FAIL_TOL {
        return Err(Error::QuadratureNotConverged { delta });
    }
    if prev.im.abs() > IMAG_TOL {
        return Err(Error::QuadratureNotConverged { delta: prev.im.abs() });
    }
    Ok(prev.re)
}

/// `| sum_{|k-m| <= K} a_k(t) exp(i*w*k) - exp(i*w*t) |`.
///
/// On `|w| <= omega1` this converges to zero as `K` grows; between `omega1`
/// and `pi` the series converges to `E(t, w)` instead, so the error stays
/// bounded away from zero — that contrast is part of the test surface, which
/// is why any `|w| <= pi` is accepted here.
pub fn exp_reconstruction_error(
    config: &SamplingConfig,
    t: f64,
    omega: f64,
    k_radius: i64,
) -> Result<f64> {
    if !omega.is_finite() || omega.abs() > PI {
        return Err(Error::OmegaOutOfRange { omega });
    }
    if k_radius < 1 {
        return Err(Error::EmptyWindow);
    }
    let ev = ModifiedEval::new(config, t)?;
    let (lo, hi) = match (
        ev.m().checked_sub(k_radius),
        ev.m().checked_add(k_radius),
    ) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(Error::WindowExceedsGrid { k_lo: i64::MIN, k_hi: i64::MAX }),
    };
    let mut acc = ComplexSum::default();
    for k in lo..=hi {
        let a = ev.coeff(k);
        acc.add(cis(Dd::prod(omega, k as f64)) * a);
    }
    let target = cis(Dd::prod(omega, t));
    Ok((acc.total() - target).norm())
}
