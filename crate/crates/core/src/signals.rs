//! Test signals with declared band limits.
//!
//! Three families:
//!
//! - `TrigPoly` — finite sums `sum_j amp_j * exp(i*(freq_j*t + phase_j))`,
//!   bounded and non-vanishing; the main carrier of reconstruction tests;
//! - `Cosine` — `cos(omega*t - shift)`, the canonical non-vanishing signal;
//! - `KptSinc` — `A*(sinc(M*pi*t) + sinc(M*pi*(t-1)/2))`, a vanishing
//!   two-pulse reference signal. At integer times only k = 0 and k = 1
//!   sample to non-zero values. With `M = 256` this signal is not actually
//!   band-limited to [-pi, pi] on the unit sampling grid; it is kept verbatim
//!   as a reproduction target and excluded from exactness guarantees.
//!
//! The printed source for `KptSinc` has unbalanced brackets, so both readings
//! ship: [`KptVariant::HalfArgument`] scales the second argument by 1/2,
//! [`KptVariant::HalfTerm`] halves the second term instead. Evaluation uses
//! extended-precision phase reduction so integer-grid samples keep ~4 ulp
//! accuracy out to |k| ~ 1e5 and beyond.

use crate::error::{Error, Result};
use crate::trig::{sinc_pi, sincos_dd, Dd};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;

/// Reading of the two-sinc pulse formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KptVariant {
    /// `A * (sinc(M*pi*t) + sinc(M*pi*(t-1)/2))`
    HalfArgument,
    /// `A * (sinc(M*pi*t) + sinc(M*pi*(t-1))/2)`
    HalfTerm,
}

/// Signal descriptor.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum SignalKind {
    TrigPoly {
        freqs: Vec<f64>,
        amps: Vec<Complex64>,
        phases: Vec<f64>,
    },
    KptSinc {
        m_scale: f64,
        amplitude: f64,
        variant: KptVariant,
    },
    Cosine {
        omega: f64,
        shift: f64,
    },
}

/// An evaluable signal with its declared spectral radius.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Signal {
    kind: SignalKind,
    band_limit: f64,
}

/// Samples `x(k)` on a contiguous integer range.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleGrid {
    k_lo: i64,
    values: Vec<Complex64>,
}

impl SampleGrid {
    pub fn new(k_lo: i64, values: Vec<Complex64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyWindow);
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::InvalidSignal("non-finite sample".into()));
        }
        Ok(SampleGrid { k_lo, values })
    }

    #[inline]
    pub fn k_lo(&self) -> i64 {
        self.k_lo
    }

    #[inline]
    pub fn k_hi(&self) -> i64 {
        self.k_lo + self.values.len() as i64 - 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn value(&self, k: i64) -> Option<Complex64> {
        if k < self.k_lo || k > self.k_hi() {
            None
        } else {
            Some(self.values[(k - self.k_lo) as usize])
        }
    }
}

impl Signal {
    pub fn cosine(omega: f64, shift: f64) -> Result<Signal> {
        if !omega.is_finite() || !shift.is_finite() {
            return Err(Error::InvalidSignal("cosine parameters must be finite".into()));
        }
        Ok(Signal {
            band_limit: omega.abs(),
            kind: SignalKind::Cosine { omega, shift },
        })
    }

    pub fn kpt_sinc(m_scale: f64, amplitude: f64, variant: KptVariant) -> Result<Signal> {
        if !(m_scale.is_finite() && m_scale > 0.0) || !(amplitude.is_finite() && amplitude > 0.0) {
            return Err(Error::InvalidSignal("kpt parameters must be positive".into()));
        }
        Ok(Signal {
            band_limit: m_scale * PI,
            kind: SignalKind::KptSinc { m_scale, amplitude, variant },
        })
    }

    /// A trigonometric polynomial from `(freq, amp, phase)` components.
    pub fn trig_poly(components: Vec<(f64, Complex64, f64)>) -> Result<Signal> {
        if components.is_empty() {
            return Err(Error::InvalidSignal("trig poly needs at least one component".into()));
        }
        let mut band = 0.0f64;
        for &(f, a, p) in &components {
            if !f.is_finite() || !a.re.is_finite() || !a.im.is_finite() || !p.is_finite() {
                return Err(Error::InvalidSignal("trig poly component must be finite".into()));
            }
            band = band.max(f.abs());
        }
        let (freqs, rest): (Vec<f64>, Vec<(Complex64, f64)>) = components
            .into_iter()
            .map(|(f, a, p)| (f, (a, p)))
            .unzip();
        let (amps, phases) = rest.into_iter().unzip();
        Ok(Signal {
            band_limit: band,
            kind: SignalKind::TrigPoly { freqs, amps, phases },
        })
    }

    #[inline]
    pub fn band_limit(&self) -> f64 {
        self.band_limit
    }

    #[inline]
    pub fn kind(&self) -> &SignalKind {
        &self.kind
    }

    /// Evaluates the signal at an arbitrary finite time.
    pub fn eval(&self, t: f64) -> Result<Complex64> {
        if !t.is_finite() {
            return Err(Error::NonFiniteTime);
        }
        Ok(match &self.kind {
            SignalKind::TrigPoly { freqs, amps, phases } => {
                let mut acc = Complex64::new(0.0, 0.0);
                for ((&f, &a), &p) in freqs.iter().zip(amps).zip(phases) {
                    let (s, c) = sincos_dd(Dd::prod(f, t).add_f64(p));
                    acc += a * Complex64::new(c, s);
                }
                acc
            }
            SignalKind::KptSinc { m_scale, amplitude, variant } => {
                let first = sinc_pi(m_scale * t);
                let second = match variant {
                    KptVariant::HalfArgument => sinc_pi(m_scale * (t - 1.0) / 2.0),
                    KptVariant::HalfTerm => 0.5 * sinc_pi(m_scale * (t - 1.0)),
                };
                Complex64::new(amplitude * (first + second), 0.0)
            }
            SignalKind::Cosine { omega, shift } => {
                let (_, c) = sincos_dd(Dd::prod(*omega, t).sub_f64(*shift));
                Complex64::new(c, 0.0)
            }
        })
    }

    /// Samples the signal at every integer in `[k_lo, k_hi]`.
    pub fn sample(&self, k_lo: i64, k_hi: i64) -> Result<SampleGrid> {
        if k_lo > k_hi {
            return Err(Error::EmptyWindow);
        }
        let mut values = Vec::with_capacity((k_hi - k_lo + 1) as usize);
        for k in k_lo..=k_hi {
            values.push(self.eval(k as f64)?);
        }
        SampleGrid::new(k_lo, values)
    }
}

/// Deterministic random trigonometric polynomial: `count` components with
/// frequencies uniform in `[-band, band)`, unit amplitudes and uniform phases.
pub fn random_trig_poly(band: f64, count: usize, seed: u64) -> Result<Signal> {
    if !(band > 0.0 && band < PI) {
        return Err(Error::BandEdgeOutOfRange { omega: band, omega1: f64::NAN });
    }
    if count == 0 {
        return Err(Error::InvalidSignal("count must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut components = Vec::with_capacity(count);
    for _ in 0..count {
        let f = rng.gen_range(-band..band);
        let p = rng.gen_range(0.0..2.0 * PI);
        components.push((f, Complex64::new(1.0, 0.0), p));
    }
    let mut sig = Signal::trig_poly(components)?;
    sig.band_limit = band;
    Ok(sig)
}
