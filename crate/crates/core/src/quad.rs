//! Fixed-order Gauss-Legendre rule on arbitrary intervals.

use num_complex::Complex64;

/// Nodes and weights of an `order`-point Gauss-Legendre rule on [-1, 1].
pub(crate) struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Computes the rule by Newton iteration on the Legendre polynomial roots.
    pub fn new(order: usize) -> Self {
        assert!(order >= 2);
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let half = n.div_ceil(2);
        for i in 0..half {
            // Tricomi-style initial guess for the i-th root
            let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                // three-term recurrence for P_n(z) and P_{n-1}(z)
                let mut p0 = 1.0;
                let mut p1 = z;
                for j in 2..=n {
                    let jf = j as f64;
                    let p2 = ((2.0 * jf - 1.0) * z * p1 - (jf - 1.0) * p0) / jf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
                let dz = p1 / dp;
                z -= dz;
                if dz.abs() < 1e-15 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - z * z) * dp * dp);
            nodes[i] = -z;
            nodes[n - 1 - i] = z;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    /// Integrates a complex-valued function over [a, b].
    pub fn integrate(&self, a: f64, b: f64, f: impl Fn(f64) -> Complex64) -> Complex64 {
        let mid = 0.5 * (a + b);
        let halfwidth = 0.5 * (b - a);
        let mut acc = Complex64::new(0.0, 0.0);
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += f(mid + halfwidth * x) * w;
        }
        acc * halfwidth
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_three_reference_values() {
        let rule = GaussLegendre::new(3);
        let x_ref = [-0.7745966692414834, 0.0, 0.7745966692414834];
        let w_ref = [0.5555555555555556, 0.8888888888888888, 0.5555555555555556];
        for i in 0..3 {
            assert!((rule.nodes[i] - x_ref[i]).abs() < 1e-14);
            assert!((rule.weights[i] - w_ref[i]).abs() < 1e-14);
        }
    }

    #[test]
    fn integrates_polynomials_exactly() {
        let rule = GaussLegendre::new(8);
        let val = rule.integrate(-1.0, 1.0, |x| Complex64::new(x.powi(5) - x.powi(2), 0.0));
        assert!((val.re - (-2.0 / 3.0)).abs() < 1e-14);
        assert!(val.im.abs() < 1e-15);
    }

    #[test]
    fn integrates_oscillatory_exponential() {
        // integral of exp(i*5x) over [0, pi] = (exp(i*5*pi) - 1)/(5i)
        let rule = GaussLegendre::new(32);
        let val = rule.integrate(0.0, std::f64::consts::PI, |x| {
            Complex64::new(0.0, 5.0 * x).exp()
        });
        let expect = (Complex64::new(0.0, 5.0 * std::f64::consts::PI).exp()
            - Complex64::new(1.0, 0.0))
            / Complex64::new(0.0, 5.0);
        assert!((val - expect).norm() < 1e-13);
    }

    #[test]
    fn weights_sum_to_interval_length() {
        for order in [2usize, 5, 16, 32, 64] {
            let rule = GaussLegendre::new(order);
            let total: f64 = rule.weights.iter().sum();
            assert!((total - 2.0).abs() < 1e-13, "order={order}");
        }
    }
}
