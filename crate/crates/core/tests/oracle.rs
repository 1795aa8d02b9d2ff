//! Quadrature-oracle agreement: the closed-form coefficients must match their
//! defining Fourier integral, evaluated by a path that shares no algebra with
//! the kernel module.

use nvsinc_core::*;
use std::f64::consts::PI;

fn cfg() -> SamplingConfig {
    default_config(5.0 * PI / 12.0).unwrap()
}

#[test]
fn frozen_reference_coefficients() {
    let cfg = cfg();
    // a_0(4.5) = 1 - g/pi with g = 8*pi/9
    let q = coeff_by_quadrature(&cfg, 4.5, 0, 64).unwrap();
    assert!((q - 1.0 / 9.0).abs() < 1e-10, "q={q}");
    // a_1(4.5), frozen from this oracle
    let q = coeff_by_quadrature(&cfg, 4.5, 1, 64).unwrap();
    assert!((q - -0.139_973_648_007_288).abs() < 1e-10, "q={q}");
    assert!((q - coeff(&cfg, 4.5, 1).unwrap()).abs() < 1e-10);
    // Kronecker row at integer t
    let q = coeff_by_quadrature(&cfg, 5.0, 5, 64).unwrap();
    assert!((q - 1.0).abs() < 1e-10);
}

#[test]
fn oracle_matches_closed_form_at_spread_times() {
    let cfg = cfg();
    // wider sweep runs in the acceptance suite; this covers each segment class
    for &t in &[4.5, 17.3, -2.75] {
        for k in (-50i64..=50).step_by(5) {
            let a = coeff(&cfg, t, k).unwrap();
            let q = coeff_by_quadrature(&cfg, t, k, 64).unwrap();
            assert!((a - q).abs() <= 1e-9, "t={t} k={k}: closed={a} quad={q}");
        }
    }
}

#[test]
fn oracle_holds_for_non_default_configs() {
    let cfg = validate_config(0.9, 2.0, 6).unwrap();
    for k in -12i64..=12 {
        let a = coeff(&cfg, 6.37, k).unwrap();
        let q = coeff_by_quadrature(&cfg, 6.37, k, 64).unwrap();
        assert!((a - q).abs() <= 1e-9, "k={k}");
    }
}

#[test]
fn quadrature_rejects_too_few_panels() {
    let cfg = cfg();
    assert_eq!(
        coeff_by_quadrature(&cfg, 4.5, 0, 63),
        Err(Error::TooFewPanels { got: 63, min: 64 })
    );
}

#[test]
fn quadrature_reports_non_convergence_for_wild_oscillation() {
    let cfg = cfg();
    // |k - t| ~ 1e9 needs ~1e9 oscillations across the domain; no admissible
    // panel count resolves that, and the failure must be loud.
    let r = coeff_by_quadrature(&cfg, 4.5, 1_000_000_000, 64);
    assert!(
        matches!(r, Err(Error::QuadratureNotConverged { .. })),
        "got {r:?}"
    );
}
