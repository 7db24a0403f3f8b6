//! Sturm normal form `y'' + F(t) y = 0` of each family's differential
//! equation, the cubic numerator `j(t)` of `F'(t)`, its discriminant and the
//! closed-form critical points.
//!
//! Writing `x'' + g x' + f x = 0` and substituting `y = x exp(½∫g)` leaves the
//! zeros unchanged and gives `F = f - g²/4 - g'/2`.

use serde::{Deserialize, Serialize};

use crate::cubic::Cubic;
use crate::error::{Error, Result};
use crate::family::{validate, FamilyKind, FamilySpec, Purpose};
use crate::interval::Interval;

type RealFn = Box<dyn Fn(f64) -> f64 + Send + Sync>;

/// Coefficients of `x'' + g(t) x' + f(t) x = 0` on an open domain.
pub struct OdeCoefficients {
    pub g: RealFn,
    pub g_prime: RealFn,
    pub f: RealFn,
    pub domain: Interval,
}

impl OdeCoefficients {
    /// The family's differential equation divided by its leading coefficient.
    pub fn for_family(spec: &FamilySpec) -> Self {
        let n = spec.degree as f64;
        match spec.kind {
            FamilyKind::Laguerre => {
                // t x'' + (α+1-t) x' + n x = 0
                let a = spec.alpha;
                OdeCoefficients {
                    g: Box::new(move |t| (a + 1.0 - t) / t),
                    g_prime: Box::new(move |t| -(a + 1.0) / (t * t)),
                    f: Box::new(move |t| n / t),
                    domain: spec.support(),
                }
            }
            FamilyKind::Jacobi | FamilyKind::Ultraspherical => {
                // (1-t²) x'' + (β-α-(α+β+2)t) x' + n(n+α+β+1) x = 0
                let (a, b) = spec.jacobi_params();
                let s = a + b + 2.0;
                OdeCoefficients {
                    g: Box::new(move |t| (b - a - s * t) / (1.0 - t * t)),
                    g_prime: Box::new(move |t| {
                        let w = 1.0 - t * t;
                        (-s * w + 2.0 * t * (b - a - s * t)) / (w * w)
                    }),
                    f: Box::new(move |t| n * (n + a + b + 1.0) / (1.0 - t * t)),
                    domain: spec.support(),
                }
            }
        }
    }
}

fn check_inside(domain: &Interval, t: f64) -> Result<()> {
    if domain.contains(t) {
        Ok(())
    } else {
        Err(Error::DomainViolation {
            t,
            lo: domain.lo,
            hi: domain.hi,
        })
    }
}

/// `F(t) = f(t) - g(t)²/4 - g'(t)/2` for arbitrary coefficients.
pub fn normal_form_generic(coeffs: &OdeCoefficients, t: f64) -> Result<f64> {
    check_inside(&coeffs.domain, t)?;
    let g = (coeffs.g)(t);
    Ok((coeffs.f)(t) - 0.25 * g * g - 0.5 * (coeffs.g_prime)(t))
}

/// Shorthand `x = α²-1`, `y = β²-1`, `z = (α+β+2n)(α+β+2n+2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiAux {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl JacobiAux {
    pub fn of(spec: &FamilySpec) -> Self {
        let (a, b) = spec.jacobi_params();
        let m = a + b + 2.0 * spec.degree as f64;
        JacobiAux {
            x: a * a - 1.0,
            y: b * b - 1.0,
            z: m * (m + 2.0),
        }
    }

    /// `j(t) = z t³ + 3(x-y) t² + (4x+4y-z) t + (x-y)`.
    pub fn j_cubic(&self) -> Cubic {
        let JacobiAux { x, y, z } = *self;
        Cubic::new(z, 3.0 * (x - y), 4.0 * x + 4.0 * y - z, x - y)
    }

    /// Numerator of `F` over `4(t²-1)²`.
    fn f_numerator(&self, t: f64) -> f64 {
        // grouped as (1+t)(z(1-t) - 2x) - 2y(1-t) to keep precision near ±1
        let JacobiAux { x, y, z } = *self;
        (1.0 + t) * (z * (1.0 - t) - 2.0 * x) - 2.0 * y * (1.0 - t)
    }

    fn f_numerator_slope(&self, t: f64) -> f64 {
        -2.0 * self.z * t - 2.0 * (self.x - self.y)
    }

    fn discriminant_scale(&self) -> f64 {
        let JacobiAux { x, y, z } = *self;
        12.0 * (3.0 * x * x
            + 3.0 * y * y
            + z * z
            + 6.0 * (x * y).abs()
            + 4.0 * (x * z).abs()
            + 4.0 * (y * z).abs())
    }
}

/// Ultraspherical `(α+n)(α+n+1)` and `2+n+n²+α+2αn-α²`.
fn ultraspherical_pq(spec: &FamilySpec) -> (f64, f64) {
    let a = spec.alpha;
    let n = spec.degree as f64;
    let p = (a + n) * (a + n + 1.0);
    let q = 2.0 + n + n * n + a + 2.0 * a * n - a * a;
    (p, q)
}

fn require_jacobi_like(spec: &FamilySpec, operation: &'static str) -> Result<()> {
    if spec.kind == FamilyKind::Laguerre {
        Err(Error::UnsupportedFamily {
            operation,
            kind: spec.kind,
        })
    } else {
        Ok(())
    }
}

/// Closed-form normal-form coefficient `F(t)`.
pub fn f_eval(spec: &FamilySpec, t: f64) -> Result<f64> {
    validate(*spec, Purpose::Classification)?;
    check_inside(&spec.support(), t)?;
    Ok(f_eval_unchecked(spec, t))
}

pub(crate) fn f_eval_unchecked(spec: &FamilySpec, t: f64) -> f64 {
    let n = spec.degree as f64;
    let a = spec.alpha;
    match spec.kind {
        FamilyKind::Laguerre => {
            (-t * t + 2.0 * a * t + 2.0 * t + 4.0 * n * t - a * a + 1.0) / (4.0 * t * t)
        }
        FamilyKind::Jacobi => {
            let w = (1.0 - t) * (1.0 + t);
            JacobiAux::of(spec).f_numerator(t) / (4.0 * w * w)
        }
        FamilyKind::Ultraspherical => {
            // (α+n)(α+n+1)(1-t²) + 1 - α²
            let w = (1.0 - t) * (1.0 + t);
            let num = (a + n) * (a + n + 1.0) * w + 1.0 - a * a;
            num / (w * w)
        }
    }
}

/// Cubic numerator of `F'(t) = j(t) / (2(t²-1)³)`. On `(-1, 1)` the sign of
/// `F'` is the opposite of the sign of `j`.
pub fn j_eval(spec: &FamilySpec, t: f64) -> Result<f64> {
    require_jacobi_like(spec, "j(t)")?;
    validate(*spec, Purpose::Classification)?;
    Ok(j_eval_unchecked(spec, t))
}

pub(crate) fn j_eval_unchecked(spec: &FamilySpec, t: f64) -> f64 {
    match spec.kind {
        FamilyKind::Ultraspherical => {
            let (p, q) = ultraspherical_pq(spec);
            4.0 * (p * t * t * t - q * t)
        }
        _ => JacobiAux::of(spec).j_cubic().eval(t),
    }
}

/// Discriminant `D` of `j'(t)`.
pub fn discriminant(spec: &FamilySpec) -> Result<f64> {
    require_jacobi_like(spec, "discriminant")?;
    validate(*spec, Purpose::Classification)?;
    Ok(discriminant_unchecked(spec))
}

fn discriminant_unchecked(spec: &FamilySpec) -> f64 {
    match spec.kind {
        FamilyKind::Ultraspherical => {
            let (p, q) = ultraspherical_pq(spec);
            192.0 * p * q
        }
        _ => {
            let JacobiAux { x, y, z } = JacobiAux::of(spec);
            12.0 * (3.0 * x * x + 3.0 * y * y + z * z - 6.0 * x * y - 4.0 * x * z - 4.0 * y * z)
        }
    }
}

/// Relative threshold below which `|D|` is treated as zero.
pub const DISCRIMINANT_DEGENERACY: f64 = 1e-8;

/// Closed-form structure of `F` for one family member.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalFormProfile {
    pub family: FamilySpec,
    pub x_aux: Option<f64>,
    pub y_aux: Option<f64>,
    pub z_aux: Option<f64>,
    /// Laguerre: stationary point of `F` (reported even when negative).
    /// Jacobi/ultraspherical: inflection point of `j`.
    pub t0: Option<f64>,
    /// Stationary points of `j`, smaller first. A doubled point when `D` is
    /// numerically zero.
    pub t12: Option<(f64, f64)>,
    pub t12_in_support: Option<(bool, bool)>,
    /// Ultraspherical only: nonzero roots `(T₁, T₂)` of `j`, `T₁ = -T₂ < 0`.
    pub big_t12: Option<(f64, f64)>,
    pub discriminant: Option<f64>,
    pub discriminant_degenerate: bool,
    pub support: Interval,
}

/// Populates the profile from closed forms.
pub fn critical_points(spec: &FamilySpec) -> Result<NormalFormProfile> {
    validate(*spec, Purpose::Classification)?;
    let n = spec.degree as f64;
    let support = spec.support();
    if spec.kind == FamilyKind::Laguerre {
        let a = spec.alpha;
        return Ok(NormalFormProfile {
            family: *spec,
            x_aux: None,
            y_aux: None,
            z_aux: None,
            t0: Some((a * a - 1.0) / (a + 2.0 * n + 1.0)),
            t12: None,
            t12_in_support: None,
            big_t12: None,
            discriminant: None,
            discriminant_degenerate: false,
            support,
        });
    }

    let aux = JacobiAux::of(spec);
    let JacobiAux { x, y, z } = aux;
    let d = discriminant_unchecked(spec);
    let degenerate = d.abs() <= DISCRIMINANT_DEGENERACY * aux.discriminant_scale();
    let t12 = if degenerate {
        let t = (y - x) / z;
        Some((t, t))
    } else if d > 0.0 {
        let r = d.sqrt();
        Some((
            (6.0 * (y - x) - r) / (6.0 * z),
            (6.0 * (y - x) + r) / (6.0 * z),
        ))
    } else {
        None
    };
    let big_t12 = if spec.kind == FamilyKind::Ultraspherical {
        let (p, q) = ultraspherical_pq(spec);
        (q > 0.0).then(|| {
            let t2 = (q / p).sqrt();
            (-t2, t2)
        })
    } else {
        None
    };
    Ok(NormalFormProfile {
        family: *spec,
        x_aux: Some(x),
        y_aux: Some(y),
        z_aux: Some(z),
        t0: Some((y - x) / z),
        t12,
        t12_in_support: t12.map(|(a, b)| (support.contains(a), support.contains(b))),
        big_t12,
        discriminant: Some(d),
        discriminant_degenerate: degenerate,
        support,
    })
}

/// Real roots of `j` strictly inside `interval`, ascending.
pub(crate) fn j_roots_in(spec: &FamilySpec, interval: &Interval) -> Vec<f64> {
    JacobiAux::of(spec)
        .j_cubic()
        .real_roots()
        .into_iter()
        .filter(|r| interval.contains(*r))
        .collect()
}

/// One-sided limit of `F` at the support endpoint `e`, approached from inside.
fn endpoint_limit(spec: &FamilySpec, e: f64) -> f64 {
    let signed_inf = |s: f64| {
        if s > 0.0 {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    };
    match spec.kind {
        FamilyKind::Laguerre => {
            if e.is_infinite() {
                return -0.25;
            }
            let a = spec.alpha;
            let n = spec.degree as f64;
            let at_zero = 1.0 - a * a;
            if at_zero != 0.0 {
                signed_inf(at_zero)
            } else {
                signed_inf(2.0 * a + 2.0 + 4.0 * n)
            }
        }
        FamilyKind::Jacobi | FamilyKind::Ultraspherical => {
            let aux = JacobiAux::of(spec);
            let value = aux.f_numerator(e);
            let slope = aux.f_numerator_slope(e);
            // Near e, F ≈ N(e)/(16(t-e)²) + N'(e)/(16(t-e)).
            if value != 0.0 {
                signed_inf(value)
            } else if slope != 0.0 {
                signed_inf(if e < 0.0 { slope } else { -slope })
            } else {
                -aux.z / 16.0
            }
        }
    }
}

/// Interior stationary points of `F` in `interval`.
fn f_stationary_points(spec: &FamilySpec, interval: &Interval) -> Vec<f64> {
    match spec.kind {
        FamilyKind::Laguerre => {
            let a = spec.alpha;
            let t0 = (a * a - 1.0) / (a + 2.0 * spec.degree as f64 + 1.0);
            if interval.contains(t0) {
                vec![t0]
            } else {
                Vec::new()
            }
        }
        _ => j_roots_in(spec, interval),
    }
}

fn f_candidates(spec: &FamilySpec, interval: &Interval) -> Result<Vec<f64>> {
    validate(*spec, Purpose::Classification)?;
    let support = spec.support();
    if !(interval.lo < interval.hi) || !support.contains_interval(interval) {
        return Err(Error::DomainViolation {
            t: if support.contains_closed(interval.lo) {
                interval.hi
            } else {
                interval.lo
            },
            lo: support.lo,
            hi: support.hi,
        });
    }
    let at = |e: f64| {
        if support.contains(e) {
            f_eval_unchecked(spec, e)
        } else {
            endpoint_limit(spec, e)
        }
    };
    let mut values = vec![at(interval.lo), at(interval.hi)];
    values.extend(
        f_stationary_points(spec, interval)
            .into_iter()
            .map(|t| f_eval_unchecked(spec, t)),
    );
    Ok(values)
}

/// `sup F` over `interval`, or `None` when it is `+∞`.
pub fn f_supremum(spec: &FamilySpec, interval: &Interval) -> Result<Option<f64>> {
    let sup = f_candidates(spec, interval)?
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);
    Ok((sup < f64::INFINITY).then_some(sup))
}

/// `inf F` over `interval`, or `None` when it is `-∞`.
pub fn f_infimum(spec: &FamilySpec, interval: &Interval) -> Result<Option<f64>> {
    let inf = f_candidates(spec, interval)?
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    Ok((inf > f64::NEG_INFINITY).then_some(inf))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn generic_identity_transform() {
        let c = OdeCoefficients {
            g: Box::new(|_| 0.0),
            g_prime: Box::new(|_| 0.0),
            f: Box::new(|_| 1.0),
            domain: Interval::new(-1.0, 1.0),
        };
        assert_eq!(normal_form_generic(&c, 0.7), Ok(1.0));
        assert!(matches!(
            normal_form_generic(&c, 1.5),
            Err(Error::DomainViolation { .. })
        ));
    }

    #[test]
    fn generic_matches_laguerre_and_jacobi_witnesses() {
        let lag = OdeCoefficients::for_family(&FamilySpec::laguerre(0.0, 3));
        assert_relative_eq!(
            normal_form_generic(&lag, 1.0).unwrap(),
            3.5,
            max_relative = 1e-15
        );
        let jac = OdeCoefficients::for_family(&FamilySpec::jacobi(0.0, 0.0, 2));
        assert_relative_eq!(
            normal_form_generic(&jac, 0.0).unwrap(),
            7.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn closed_form_values() {
        assert_relative_eq!(f_eval(&FamilySpec::laguerre(0.0, 3), 1.0).unwrap(), 3.5);
        assert_eq!(
            f_eval(&FamilySpec::ultraspherical(7.0, 2), 0.0).unwrap(),
            42.0
        );
        assert_eq!(f_eval(&FamilySpec::jacobi(0.0, 0.0, 2), 0.0).unwrap(), 7.0);
        assert_eq!(
            f_eval(&FamilySpec::ultraspherical(0.0, 2), 0.0).unwrap(),
            7.0
        );
        assert!(matches!(
            f_eval(&FamilySpec::laguerre(0.0, 3), 0.0),
            Err(Error::DomainViolation { .. })
        ));
    }

    #[test]
    fn j_endpoint_values() {
        let spec = FamilySpec::jacobi(2.0, 0.5, 5);
        assert_relative_eq!(j_eval(&spec, -1.0).unwrap(), 6.0, max_relative = 1e-12);
        assert_relative_eq!(j_eval(&spec, 1.0).unwrap(), 24.0, max_relative = 1e-12);
        assert_eq!(
            j_eval(&FamilySpec::ultraspherical(3.3, 9), 0.0).unwrap(),
            0.0
        );
        assert!(matches!(
            j_eval(&FamilySpec::laguerre(1.0, 2), 0.5),
            Err(Error::UnsupportedFamily { .. })
        ));
    }

    #[test]
    fn discriminant_witnesses() {
        assert_eq!(
            discriminant(&FamilySpec::ultraspherical(7.0, 2)).unwrap(),
            -103_680.0
        );
        assert_eq!(
            discriminant(&FamilySpec::jacobi(20.0, 0.0, 3)).unwrap(),
            -1_787_904.0
        );
        assert_eq!(
            discriminant(&FamilySpec::ultraspherical(1.0, 1)).unwrap(),
            6912.0
        );
    }

    #[test]
    fn laguerre_stationary_point() {
        let p = critical_points(&FamilySpec::laguerre(3.0, 5)).unwrap();
        assert_relative_eq!(p.t0.unwrap(), 4.0 / 7.0, max_relative = 1e-15);
        for n in 1..6 {
            let p = critical_points(&FamilySpec::laguerre(0.0, n)).unwrap();
            assert_relative_eq!(p.t0.unwrap(), -1.0 / (2 * n + 1) as f64);
        }
    }

    #[test]
    fn ultraspherical_outer_roots() {
        let p = critical_points(&FamilySpec::ultraspherical(2.0, 5)).unwrap();
        let (t1, t2) = p.big_t12.unwrap();
        assert_relative_eq!(t2, (25.0f64 / 28.0).sqrt(), max_relative = 1e-15);
        assert_eq!(t1, -t2);
        let (_, s2) = p.t12.unwrap();
        assert_relative_eq!(t2, s2 * 3f64.sqrt(), max_relative = 1e-13);
    }

    #[test]
    fn degenerate_discriminant_reports_doubled_point() {
        // 2+n+n²+α+2αn-α² vanishes at α = 4, n = 1.
        let p = critical_points(&FamilySpec::ultraspherical(4.0, 1)).unwrap();
        assert_eq!(p.discriminant, Some(0.0));
        assert!(p.discriminant_degenerate);
        let (s1, s2) = p.t12.unwrap();
        assert_eq!(s1, s2);
    }

    #[test]
    fn suprema() {
        let lag = FamilySpec::laguerre(3.0, 5);
        let t0 = 4.0 / 7.0;
        let sup = f_supremum(&lag, &Interval::new(t0, f64::INFINITY))
            .unwrap()
            .unwrap();
        assert_relative_eq!(sup, 5.875, max_relative = 1e-14);
        let us = FamilySpec::ultraspherical(7.0, 2);
        assert_eq!(f_supremum(&us, &us.support()).unwrap(), Some(42.0));
        let lag0 = FamilySpec::laguerre(0.0, 3);
        assert_eq!(f_supremum(&lag0, &lag0.support()).unwrap(), None);
        assert_eq!(f_infimum(&lag0, &lag0.support()).unwrap(), Some(-0.25));
        assert!(f_supremum(&lag0, &Interval::new(-1.0, 2.0)).is_err());
    }
}
