//! Reconstruction of bounded band-limited signals from unit-rate integer samples.
//!
//! The classical cardinal-series coefficients `sin(pi(k-t))/(pi(k-t))` decay
//! like `1/k`, which restricts the series to signals that vanish at infinity.
//! This crate implements an alternative coefficient family with `1/k^2` decay,
//! driven by a 1-periodic sawtooth frequency function `g(t)`, so that bounded
//! non-vanishing signals (a pure cosine, say) can be reconstructed from their
//! integer samples as well.
//!
//! Modules:
//!
//! - [`params`] — validated sampling parameters `(omega, omega1, n)` and `g(t)`;
//! - [`kernel`] — the modified and classical interpolation coefficients;
//! - [`spectral`] — the piecewise-exponential function `E(t, w)` and a
//!   numerical-quadrature oracle that recomputes each coefficient from its
//!   defining Fourier integral, independently of the closed forms;
//! - [`signals`] — evaluable test signals with declared band limits;
//! - [`interpolator`] — truncated-series evaluation over index windows, with
//!   compensated deterministic summation and error reporting.

pub mod interpolator;
pub mod kernel;
pub mod params;
pub mod signals;
pub mod spectral;

mod error;
mod quad;
mod sum;
mod trig;

pub use error::{Error, Result};
pub use interpolator::{
    convergence_sweep, interpolate, report, ErrorReport, TruncationWindow, WindowMode,
};
pub use kernel::{
    classical_coeff, classical_row, coeff, coeff_row, shift_check, CoefficientRow, Formula,
};
pub use num_complex::Complex64;
pub use params::{default_config, validate_config, SamplingConfig, SegmentedTime, MAX_ABS_TIME};
pub use signals::{random_trig_poly, KptVariant, SampleGrid, Signal};
pub use spectral::{coeff_by_quadrature, e_value, exp_reconstruction_error, EFunction};
