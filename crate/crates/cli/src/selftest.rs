//! Built-in verification suites for `nvsinc selftest`.
//!
//! Each suite re-derives a core guarantee on a small budget: Kronecker
//! exactness, oracle agreement, the shift identity, the decay envelope,
//! partition of unity, and bit determinism. `coeff_bias` perturbs the
//! closed-form side of the oracle comparison and exists so tests can prove
//! the suites actually detect a corrupted coefficient; production callers
//! pass 0.0.

use nvsinc_core::*;
use std::f64::consts::PI;

pub struct SuiteResult {
    pub name: &'static str,
    pub detail: String,
    pub passed: bool,
}

pub fn run_selftest(coeff_bias: f64) -> Vec<SuiteResult> {
    let cfg = default_config(5.0 * PI / 12.0).expect("reference config");
    vec![
        suite_kronecker(&cfg),
        suite_oracle(&cfg, coeff_bias),
        suite_shift(&cfg),
        suite_decay(&cfg),
        suite_partition(&cfg),
        suite_determinism(&cfg),
    ]
}

pub fn all_passed(results: &[SuiteResult]) -> bool {
    results.iter().all(|r| r.passed)
}

fn suite_kronecker(cfg: &SamplingConfig) -> SuiteResult {
    let mut passed = true;
    for l in -30i64..=30 {
        for k in -30i64..=30 {
            let want = if k == l { 1.0 } else { 0.0 };
            if coeff(cfg, l as f64, k).unwrap() != want
                || classical_coeff(l as f64, k).unwrap() != want
            {
                passed = false;
            }
        }
    }
    SuiteResult {
        name: "kronecker",
        detail: "delta rows at integer times, |l|,|k| <= 30".into(),
        passed,
    }
}

fn suite_oracle(cfg: &SamplingConfig, coeff_bias: f64) -> SuiteResult {
    let mut worst = 0.0f64;
    let mut failed = false;
    for k in -20i64..=20 {
        let closed = coeff(cfg, 4.5, k).unwrap() + coeff_bias;
        match coeff_by_quadrature(cfg, 4.5, k, 64) {
            Ok(quad) => worst = worst.max((closed - quad).abs()),
            Err(_) => failed = true,
        }
    }
    SuiteResult {
        name: "oracle-equivalence",
        detail: format!("max |closed - quadrature| = {worst:.3e}"),
        passed: !failed && worst <= 1e-9,
    }
}

fn suite_shift(cfg: &SamplingConfig) -> SuiteResult {
    // fixed linear-congruential walk; no RNG dependency needed here
    let mut state: u64 = 0x9e3779b97f4a7c15;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    let n = cfg.n_even() as f64;
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let t = n + next();
        let k = (next() * 101.0) as i64 - 50;
        let m = (next() * 101.0) as i64 - 50;
        let (lhs, rhs) = shift_check(cfg, t, k, m).unwrap();
        worst = worst.max((lhs - rhs).abs() / rhs.abs().max(1.0));
    }
    SuiteResult {
        name: "shift-identity",
        detail: format!("max relative defect = {worst:.3e}"),
        passed: worst <= 1e-12,
    }
}

fn suite_decay(cfg: &SamplingConfig) -> SuiteResult {
    let t = 4.5;
    let seg_m = 0i64;
    let n1 = (cfg.n_even() + 1) as f64;
    let mut passed = true;
    for k in [-100_000i64, -999, -13, 7, 100, 5_000, 99_999] {
        let a = coeff(cfg, t, k).unwrap().abs();
        let bound = n1 / (PI * (k - seg_m).abs() as f64 * (k as f64 - t).abs());
        if a > bound {
            passed = false;
        }
    }
    SuiteResult {
        name: "decay-envelope",
        detail: "(n+1)/(pi |k-m| |k-t|) bound spot checks".into(),
        passed,
    }
}

fn suite_partition(cfg: &SamplingConfig) -> SuiteResult {
    let e = exp_reconstruction_error(cfg, 4.5, 0.0, 10_000).unwrap();
    SuiteResult {
        name: "partition-of-unity",
        detail: format!("|sum a_k - 1| = {e:.3e} at K = 1e4"),
        passed: e <= 1e-3,
    }
}

fn suite_determinism(cfg: &SamplingConfig) -> SuiteResult {
    let signal = random_trig_poly(cfg.omega(), 6, 5).unwrap();
    let w = TruncationWindow::CenteredAtT { l: 2_000 };
    let a = report(cfg, &signal, 9.125, &w).unwrap();
    let b = report(cfg, &signal, 9.125, &w).unwrap();
    SuiteResult {
        name: "determinism",
        detail: "two identical runs compared bit for bit".into(),
        passed: a == b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_build_passes() {
        assert!(all_passed(&run_selftest(0.0)));
    }

    #[test]
    fn corrupted_coefficient_is_detected() {
        let results = run_selftest(1e-6);
        let oracle = results
            .iter()
            .find(|r| r.name == "oracle-equivalence")
            .unwrap();
        assert!(!oracle.passed, "fault injection must trip the oracle suite");
    }

    #[test]
    fn transcript_is_reproducible() {
        let a: Vec<String> = run_selftest(0.0).iter().map(|r| r.detail.clone()).collect();
        let b: Vec<String> = run_selftest(0.0).iter().map(|r| r.detail.clone()).collect();
        assert_eq!(a, b);
    }
}
