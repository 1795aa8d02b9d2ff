use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Band edges must satisfy `0 < omega < omega1 < pi`.
    #[error("band edge out of range: omega={omega}, omega1={omega1} (need 0 < omega < omega1 < pi)")]
    BandEdgeOutOfRange { omega: f64, omega1: f64 },
    #[error("n must be even, got {n}")]
    OddN { n: i64 },
    /// `n` fails `n > omega/(pi-omega)` or `n >= omega1/(pi-omega1)`.
    #[error("n={n} too small for omega={omega}, omega1={omega1}")]
    NTooSmall { n: i64, omega: f64, omega1: f64 },
    #[error("time must be finite")]
    NonFiniteTime,
    /// |t| beyond 2^52: adjacent integers are no longer representable with a
    /// fractional part, and segment indices stop fitting sample indexing.
    #[error("time magnitude {t} exceeds the supported range 2^52")]
    TimeOutOfRange { t: f64 },
    #[error("window is empty")]
    EmptyWindow,
    #[error("omega={omega} outside [-pi, pi]")]
    OmegaOutOfRange { omega: f64 },
    #[error("quadrature did not converge: last delta {delta:e}")]
    QuadratureNotConverged { delta: f64 },
    #[error("quadrature needs at least {min} panels, got {got}")]
    TooFewPanels { got: u32, min: u32 },
    #[error("window [{k_lo}, {k_hi}] exceeds the sample grid or the size limit")]
    WindowExceedsGrid { k_lo: i64, k_hi: i64 },
    #[error("invalid signal: {0}")]
    InvalidSignal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
