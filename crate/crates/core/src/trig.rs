//! Extended-precision phase arithmetic.
//!
//! Coefficient and signal evaluation need `sin(a*k)` for `k` up to ~1e5..1e6,
//! where a plain f64 product already carries an absolute phase error far above
//! the value of interest. Phases are therefore built and reduced mod 2*pi in
//! double-double arithmetic before calling libm on the reduced angle.

use std::f64::consts::PI;

/// Tail of pi beyond its f64 representation: pi = PI + PI_LO to ~32 digits.
pub(crate) const PI_LO: f64 = 1.2246467991473532e-16;

const TWO_PI_HI: f64 = 2.0 * PI;
const TWO_PI_LO: f64 = 2.0 * PI_LO;

/// Unevaluated sum `hi + lo` with |lo| <= ulp(hi)/2.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    let aa = s - bb;
    Dd { hi: s, lo: (a - aa) + (b - bb) }
}

/// Requires |a| >= |b|.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd { hi: s, lo: b - (s - a) }
}

#[inline]
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    Dd { hi: p, lo: a.mul_add(b, -p) }
}

impl Dd {
    #[inline]
    pub fn pi() -> Dd {
        Dd { hi: PI, lo: PI_LO }
    }

    /// Exact product of two f64 values.
    #[inline]
    pub fn prod(a: f64, b: f64) -> Dd {
        two_prod(a, b)
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Dd {
        let p = two_prod(self.hi, x);
        quick_two_sum(p.hi, self.lo.mul_add(x, p.lo))
    }

    #[inline]
    pub fn div_f64(self, x: f64) -> Dd {
        let q1 = self.hi / x;
        let r = two_prod(q1, x);
        let e = ((self.hi - r.hi) - r.lo + self.lo) / x;
        quick_two_sum(q1, e)
    }

    #[inline]
    pub fn add_f64(self, x: f64) -> Dd {
        let s = two_sum(self.hi, x);
        quick_two_sum(s.hi, s.lo + self.lo)
    }

    #[inline]
    pub fn sub_f64(self, x: f64) -> Dd {
        self.add_f64(-x)
    }
}

/// Reduce `x` into (-pi, pi] modulo 2*pi, keeping double-double accuracy.
pub(crate) fn reduce_two_pi(x: Dd) -> Dd {
    let n = (x.hi / TWO_PI_HI).round();
    let mut r = if n == 0.0 {
        x
    } else {
        let p1 = two_prod(n, TWO_PI_HI);
        let p2 = two_prod(n, TWO_PI_LO);
        let d = two_sum(x.hi, -p1.hi);
        let lo = ((x.lo - p1.lo) - p2.hi) + d.lo - p2.lo;
        quick_two_sum(d.hi, lo)
    };
    if r.hi > PI {
        r = r.add_f64(-TWO_PI_HI).add_f64(-TWO_PI_LO);
    } else if r.hi < -PI {
        r = r.add_f64(TWO_PI_HI).add_f64(TWO_PI_LO);
    }
    r
}

/// sin of a full-precision phase.
#[inline]
pub(crate) fn sin_dd(x: Dd) -> f64 {
    let r = reduce_two_pi(x);
    r.lo.mul_add(r.hi.cos(), r.hi.sin())
}

/// (sin, cos) of a full-precision phase.
#[inline]
pub(crate) fn sincos_dd(x: Dd) -> (f64, f64) {
    let r = reduce_two_pi(x);
    let (s, c) = (r.hi.sin(), r.hi.cos());
    (r.lo.mul_add(c, s), r.lo.mul_add(-s, c))
}

/// sin(pi * x), exactly zero at every integer x.
pub(crate) fn sinpi(x: f64) -> f64 {
    let n = x.round();
    let s = x - n; // exact: |s| <= 1/2 and x, n share the grid of ulp(x)
    if s == 0.0 {
        return 0.0;
    }
    let mut p = two_prod(PI, s);
    p.lo = PI_LO.mul_add(s, p.lo);
    let v = p.lo.mul_add(p.hi.cos(), p.hi.sin());
    if n.rem_euclid(2.0) == 1.0 {
        -v
    } else {
        v
    }
}

/// sin(pi * u) / (pi * u) with the removable singularity filled in.
#[inline]
pub(crate) fn sinc_pi(u: f64) -> f64 {
    if u == 0.0 {
        1.0
    } else {
        sinpi(u) / (PI * u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sinpi_integer_zeros() {
        for k in -1000i64..=1000 {
            assert_eq!(sinpi(k as f64), 0.0, "sinpi({k})");
        }
        assert_eq!(sinpi(1.2244582e7), 0.0);
    }

    #[test]
    fn sinpi_half_integers() {
        assert_eq!(sinpi(0.5), 1.0);
        assert_eq!(sinpi(1.5), -1.0);
        assert_eq!(sinpi(-0.5), -1.0);
        assert_eq!(sinpi(2.5), 1.0);
    }

    #[test]
    fn sinpi_matches_naive_for_small_args() {
        for i in 1..200 {
            let x = i as f64 * 0.01 - 1.0;
            let expect = (PI * x).sin();
            assert!((sinpi(x) - expect).abs() <= 1e-15, "x={x}");
        }
    }

    #[test]
    fn reduction_agrees_with_naive_at_moderate_phase() {
        for i in 0..100 {
            let a = 0.7 + i as f64 * 0.013;
            let k = 3.0 + i as f64;
            let naive = (a * k).sin();
            let careful = sin_dd(Dd::prod(a, k));
            assert!((naive - careful).abs() < 1e-12, "a={a} k={k}");
        }
    }

    #[test]
    fn reduction_handles_large_multiples_of_two_pi() {
        // 2*pi*j reduces to (nearly) zero; the residue reflects only the
        // double-double tail of 2*pi, not the catastrophic f64 loss.
        let x = Dd::prod(TWO_PI_HI, 1.0e9).add_f64(1.0e9 * TWO_PI_LO);
        let r = reduce_two_pi(x);
        assert!(r.hi.abs() < 1e-20, "residue {}", r.hi);
    }

    #[test]
    fn sincos_pythagoras() {
        for i in 0..50 {
            let x = Dd::prod(1.3, 7.0 + i as f64 * 11.0);
            let (s, c) = sincos_dd(x);
            assert!((s * s + c * c - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn div_mul_roundtrip() {
        let g = Dd::pi().mul_f64(4.0).div_f64(4.4);
        // g * 4.4 must recover 4*pi to double-double accuracy
        let back = g.mul_f64(4.4);
        let four_pi = Dd::pi().mul_f64(4.0);
        assert!((back.hi - four_pi.hi).abs() < 1e-15);
        assert!(((back.hi - four_pi.hi) + (back.lo - four_pi.lo)).abs() < 1e-28);
    }
}
