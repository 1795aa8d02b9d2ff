//! Compensated summation (Kahan with the Neumaier correction).

use num_complex::Complex64;

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Neumaier {
    s: f64,
    c: f64,
}

impl Neumaier {
    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.s + x;
        if self.s.abs() >= x.abs() {
            self.c += (self.s - t) + x;
        } else {
            self.c += (x - t) + self.s;
        }
        self.s = t;
    }

    #[inline]
    pub fn total(self) -> f64 {
        self.s + self.c
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct ComplexSum {
    re: Neumaier,
    im: Neumaier,
}

impl ComplexSum {
    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn total(self) -> Complex64 {
        Complex64::new(self.re.total(), self.im.total())
    }
}
