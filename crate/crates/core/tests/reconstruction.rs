//! Reconstruction behaviour of the truncated series: exponentials on and off
//! the band, partition of unity, convergence in the window half-width, and
//! vanishing band-limited signals handled by both formulas.

use nvsinc_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn cfg() -> SamplingConfig {
    default_config(5.0 * PI / 12.0).unwrap()
}

#[test]
fn exponential_reconstruction_inside_band() {
    let cfg = cfg();
    // Kronecker row reproduces the exponential exactly at integer t
    let e = exp_reconstruction_error(&cfg, 5.0, 0.7, 10).unwrap();
    assert!(e <= 1e-12, "integer t: {e}");
    // tail of the absolutely convergent series at ω = 0 and the band edge
    let e = exp_reconstruction_error(&cfg, 4.5, 0.0, 10_000).unwrap();
    assert!(e <= 1e-3, "omega=0: {e}");
    let e = exp_reconstruction_error(&cfg, 4.5, cfg.omega1(), 10_000).unwrap();
    assert!(e <= 1e-3, "omega=omega1: {e}");
}

#[test]
fn exponential_reconstruction_across_the_segment() {
    // 21-point omega grid over [-omega1, omega1] at the quarter points of the
    // segment; the t = 4.5 case belongs to the acceptance suite
    let cfg = cfg();
    let om1 = cfg.omega1();
    for &t in &[4.25, 4.75] {
        for i in 0..21 {
            let omega = -om1 + i as f64 * (2.0 * om1 / 20.0);
            let e = exp_reconstruction_error(&cfg, t, omega, 100_000).unwrap();
            assert!(e <= 1e-4, "t={t} omega={omega}: {e:e}");
        }
    }
}

#[test]
fn exponential_identity_fails_beyond_the_band() {
    let cfg = cfg();
    // between omega1 and pi the series converges to E(t, w), not exp(iwt)
    let e = exp_reconstruction_error(&cfg, 4.5, PI - 0.01, 10_000).unwrap();
    assert!(e >= 1e-2, "expected O(1) error, got {e}");
}

#[test]
fn partition_of_unity_limit() {
    let cfg = cfg();
    let mut prev = f64::INFINITY;
    for k in [1_000i64, 10_000, 100_000] {
        let e = exp_reconstruction_error(&cfg, 4.5, 0.0, k).unwrap();
        assert!(e < prev, "K={k}: {e} did not improve on {prev}");
        prev = e;
    }
    assert!(prev <= 1e-4);
}

#[test]
fn trig_poly_error_shrinks_with_l() {
    let cfg = cfg();
    let signal = random_trig_poly(cfg.omega(), 10, 11).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut errs_small = Vec::new();
    let mut errs_large = Vec::new();
    for _ in 0..8 {
        let t: f64 = rng.gen_range(-40.0..40.0);
        let rs =
            convergence_sweep(&cfg, &signal, t, &[1_000, 10_000], WindowMode::CenteredAtT)
                .unwrap();
        errs_small.push(rs[0].abs_err_modified);
        errs_large.push(rs[1].abs_err_modified);
    }
    errs_small.sort_by(f64::total_cmp);
    errs_large.sort_by(f64::total_cmp);
    let med_small = errs_small[4];
    let med_large = errs_large[4];
    assert!(med_large <= 1e-3, "median at L=1e4: {med_large}");
    assert!(
        med_small > 2.0 * med_large,
        "L=1e3 median {med_small} vs L=1e4 median {med_large}"
    );
}

/// Finite combinations of shifted sinc kernels: band pi for the classical
/// formula, band omega for the modified one. Each formula reconstructs its
/// in-scope signal from samples alone.
#[test]
fn sinc_kernel_signals_reconstruct() {
    let cfg = cfg();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let coeffs: Vec<f64> = (0..41).map(|_| rng.gen_range(-1.0..1.0)).collect();

    // classical side: x(t) = sum_j c_j sinc(pi (t - j)), samples are c_j
    let classical_truth = |t: f64| -> f64 {
        let mut acc = 0.0;
        for (idx, c) in coeffs.iter().enumerate() {
            let j = idx as i64 - 20;
            let x = PI * (t - j as f64);
            acc += c * if x == 0.0 { 1.0 } else { x.sin() / x };
        }
        acc
    };
    // modified side: y(t) = sum_j c_j sinc(omega (t - j)), band omega < pi
    let om = cfg.omega();
    let modified_truth = |t: f64| -> f64 {
        let mut acc = 0.0;
        for (idx, c) in coeffs.iter().enumerate() {
            let j = idx as i64 - 20;
            let x = om * (t - j as f64);
            acc += c * if x == 0.0 { 1.0 } else { x.sin() / x };
        }
        acc
    };

    let l = 10_000u64;
    for &t in &[3.3, -7.77, 12.06] {
        let window = TruncationWindow::CenteredAtT { l };
        let (lo, hi) = window.resolve(t).unwrap();

        let grid_c = SampleGrid::new(
            lo,
            (lo..=hi)
                .map(|k| Complex64::new(classical_truth(k as f64), 0.0))
                .collect(),
        )
        .unwrap();
        let est = interpolate(&cfg, &grid_c, t, &window, Formula::Classical).unwrap();
        let err = (est.re - classical_truth(t)).abs();
        assert!(err <= 1e-6, "classical at t={t}: err={err}");

        let grid_m = SampleGrid::new(
            lo,
            (lo..=hi)
                .map(|k| Complex64::new(modified_truth(k as f64), 0.0))
                .collect(),
        )
        .unwrap();
        let est = interpolate(&cfg, &grid_m, t, &window, Formula::Modified).unwrap();
        let err = (est.re - modified_truth(t)).abs();
        assert!(err <= 1e-6, "modified at t={t}: err={err}");
    }
}

#[test]
fn kpt_examples_from_the_source_table() {
    // at t = 0 the pulse equals its amplitude (second sinc vanishes exactly)
    let a = (256.0f64 * 4.0 / 5.0).sqrt();
    assert!((a - 14.310835055998654).abs() < 1e-14);
    let sig = Signal::kpt_sinc(256.0, a, KptVariant::HalfArgument).unwrap();
    assert_eq!(sig.eval(0.0).unwrap().re, a);
}

#[test]
fn complex_signals_are_supported_end_to_end() {
    let cfg = cfg();
    let signal = Signal::trig_poly(vec![
        (0.9, Complex64::new(1.0, 0.5), 0.3),
        (-1.2, Complex64::new(0.0, -2.0), 1.1),
    ])
    .unwrap();
    let w = TruncationWindow::CenteredAtT { l: 5_000 };
    let r = report(&cfg, &signal, 6.3, &w).unwrap();
    assert!(r.truth.im != 0.0);
    assert!(r.abs_err_modified <= 1e-4, "err={}", r.abs_err_modified);
}
