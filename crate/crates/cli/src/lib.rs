//! Batch experiment harness for the interpolation library.
//!
//! An [`spec::ExperimentSpec`] describes a reproducible run: sampling
//! parameters, a signal, evaluation times, truncation half-widths and window
//! centerings, and the output artifact. [`runner::run_spec`] executes every
//! cell and writes one row per `(t, L, window, formula)` with full-precision
//! errors. Two specs are bundled with the binary, `paper_sec3_cosine` and
//! `paper_sec3_kpt`; they reproduce a published error table for a
//! non-vanishing cosine and a two-pulse sinc signal at `t = 47830.4`.

pub mod samples;
pub mod selftest;
pub mod spec;
pub mod runner;

/// Bundled experiment specs, addressable by name from `nvsinc run --spec`.
pub const BUNDLED_SPECS: &[(&str, &str)] = &[
    (
        "paper_sec3_cosine",
        include_str!("../specs/paper_sec3_cosine.json"),
    ),
    ("paper_sec3_kpt", include_str!("../specs/paper_sec3_kpt.json")),
];

/// Looks up a bundled spec by its name.
pub fn bundled_spec(name: &str) -> Option<&'static str> {
    BUNDLED_SPECS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
}
