//! Real roots of a real cubic in closed form.
//!
//! Three real roots use the trigonometric form; one real root uses the
//! hyperbolic (Cardano) form. Each root then gets a single Newton step that is
//! kept only if it lowers the residual.

use std::f64::consts::PI;

/// Coefficients of `a t³ + b t² + c t + d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cubic {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Cubic {
    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d }
    }

    pub fn eval(&self, t: f64) -> f64 {
        ((self.a * t + self.b) * t + self.c) * t + self.d
    }

    pub fn derivative(&self, t: f64) -> f64 {
        (3.0 * self.a * t + 2.0 * self.b) * t + self.c
    }

    /// Distinct real roots in ascending order. Requires `a != 0`.
    pub fn real_roots(&self) -> Vec<f64> {
        assert!(self.a != 0.0, "leading coefficient must be nonzero");
        let Cubic { a, b, c, d } = *self;
        let shift = -b / (3.0 * a);
        let p = (3.0 * a * c - b * b) / (3.0 * a * a);
        let q = (2.0 * b * b * b - 9.0 * a * b * c + 27.0 * a * a * d) / (27.0 * a * a * a);
        let disc = -(4.0 * p * p * p + 27.0 * q * q);

        let depressed: Vec<f64> = if p == 0.0 {
            vec![(-q).cbrt()]
        } else if disc > 0.0 {
            // p < 0 here.
            let m = 2.0 * (-p / 3.0).sqrt();
            let arg = (3.0 * q / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
            let theta = arg.acos() / 3.0;
            (0..3)
                .map(|k| m * (theta - 2.0 * PI * k as f64 / 3.0).cos())
                .collect()
        } else if disc == 0.0 {
            vec![3.0 * q / p, -1.5 * q / p]
        } else if p < 0.0 {
            let arg = -1.5 * q.abs() / p * (-3.0 / p).sqrt();
            vec![-2.0 * q.signum() * (-p / 3.0).sqrt() * (arg.max(1.0).acosh() / 3.0).cosh()]
        } else {
            let arg = 1.5 * q / p * (3.0 / p).sqrt();
            vec![-2.0 * (p / 3.0).sqrt() * (arg.asinh() / 3.0).sinh()]
        };

        let mut roots: Vec<f64> = depressed
            .into_iter()
            .map(|s| self.polish(s + shift))
            .collect();
        roots.sort_by(f64::total_cmp);
        roots.dedup();
        roots
    }

    fn polish(&self, r: f64) -> f64 {
        let slope = self.derivative(r);
        if slope == 0.0 || !slope.is_finite() {
            return r;
        }
        let next = r - self.eval(r) / slope;
        if next.is_finite() && self.eval(next).abs() < self.eval(r).abs() {
            next
        } else {
            r
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_roots(r: [f64; 3]) -> Cubic {
        Cubic::new(
            1.0,
            -(r[0] + r[1] + r[2]),
            r[0] * r[1] + r[0] * r[2] + r[1] * r[2],
            -r[0] * r[1] * r[2],
        )
    }

    #[test]
    fn three_real_roots() {
        let roots = from_roots([-2.0, 0.5, 3.0]).real_roots();
        assert_eq!(roots.len(), 3);
        for (got, want) in roots.iter().zip([-2.0, 0.5, 3.0]) {
            assert!((got - want).abs() < 1e-14, "{got} vs {want}");
        }
    }

    #[test]
    fn one_real_root() {
        // (t - 2)(t² + 1)
        let roots = Cubic::new(1.0, -2.0, 1.0, -2.0).real_roots();
        assert_eq!(roots.len(), 1);
        assert!((roots[0] - 2.0).abs() < 1e-14);
        // (t + 1)(t² - t + 3): p > 0 branch
        let roots = Cubic::new(1.0, 0.0, 2.0, 3.0).real_roots();
        assert_eq!(roots.len(), 1);
        assert!((roots[0] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn odd_cubic_through_origin() {
        // 4t³ - 3t: roots 0, ±√3/2
        let roots = Cubic::new(4.0, 0.0, -3.0, 0.0).real_roots();
        assert_eq!(roots.len(), 3);
        assert!(roots[1].abs() < 1e-15);
        assert!((roots[2] - 3f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn triple_and_double_roots() {
        let roots = from_roots([1.0, 1.0, 1.0]).real_roots();
        assert_eq!(roots, vec![1.0]);
        let roots = Cubic::new(1.0, 0.0, -3.0, 2.0).real_roots(); // (t-1)²(t+2)
        assert!((roots[0] + 2.0).abs() < 1e-14);
        assert!(roots.iter().any(|r| (r - 1.0).abs() < 1e-7));
    }
}
