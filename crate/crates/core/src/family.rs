//! The three polynomial families, parameter validation, and evaluation of
//! `p_n(t)` and `p_n'(t)` by forward three-term recurrence.
//!
//! Normalizations are the conventional ones: Laguerre `L_n^α` has leading
//! coefficient `(-1)^n / n!` and Jacobi `P_n^(α,β)(1) = binom(n+α, n)`.
//! Ultraspherical is evaluated as Jacobi with `β = α`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::Interval;

/// Largest degree accepted by [`validate`].
pub const MAX_DEGREE: usize = 200;
/// Largest `|α|`, `|β|` accepted by [`validate`].
pub const MAX_PARAMETER: f64 = 30.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Laguerre,
    Jacobi,
    Ultraspherical,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Laguerre => "laguerre",
            FamilyKind::Jacobi => "jacobi",
            FamilyKind::Ultraspherical => "ultraspherical",
        })
    }
}

/// A family member: kind, parameters and degree.
///
/// `beta` is carried only by Jacobi specs; ultraspherical specs use `β = α`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub alpha: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    pub degree: usize,
}

impl FamilySpec {
    pub fn laguerre(alpha: f64, degree: usize) -> Self {
        Self {
            kind: FamilyKind::Laguerre,
            alpha,
            beta: None,
            degree,
        }
    }

    pub fn jacobi(alpha: f64, beta: f64, degree: usize) -> Self {
        Self {
            kind: FamilyKind::Jacobi,
            alpha,
            beta: Some(beta),
            degree,
        }
    }

    pub fn ultraspherical(alpha: f64, degree: usize) -> Self {
        Self {
            kind: FamilyKind::Ultraspherical,
            alpha,
            beta: None,
            degree,
        }
    }

    /// The effective second parameter: `β` for Jacobi, `α` for
    /// ultraspherical, `None` for Laguerre.
    pub fn effective_beta(&self) -> Option<f64> {
        match self.kind {
            FamilyKind::Laguerre => None,
            FamilyKind::Jacobi => self.beta,
            FamilyKind::Ultraspherical => Some(self.alpha),
        }
    }

    /// `(α, β)` for Jacobi and ultraspherical specs.
    pub(crate) fn jacobi_params(&self) -> (f64, f64) {
        (self.alpha, self.effective_beta().unwrap_or(self.alpha))
    }

    /// The open interval of orthogonality.
    pub fn support(&self) -> Interval {
        match self.kind {
            FamilyKind::Laguerre => Interval::new(0.0, f64::INFINITY),
            FamilyKind::Jacobi | FamilyKind::Ultraspherical => Interval::new(-1.0, 1.0),
        }
    }

    /// Same parameters, different degree.
    pub fn with_degree(&self, degree: usize) -> Self {
        Self { degree, ..*self }
    }

    pub fn is_symmetric(&self) -> bool {
        match self.kind {
            FamilyKind::Laguerre => false,
            FamilyKind::Ultraspherical => true,
            FamilyKind::Jacobi => self.beta == Some(self.alpha),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::Jacobi => match self.beta {
                Some(b) => write!(
                    f,
                    "jacobi(alpha={}, beta={b}, n={})",
                    self.alpha, self.degree
                ),
                None => write!(f, "jacobi(alpha={}, n={})", self.alpha, self.degree),
            },
            kind => write!(f, "{kind}(alpha={}, n={})", self.alpha, self.degree),
        }
    }
}

/// What a spec is about to be used for; each use has its own parameter regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Purpose {
    /// Orthogonality regime: `α > -1` (and `β > -1`).
    ZeroComputation,
    /// Oscillation regime: `n+α+β > 0`, `n+α > 0`, `n+β > 0` for Jacobi.
    Classification,
}

fn require(holds: bool, condition: &str) -> Result<()> {
    if holds {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange {
            condition: condition.to_string(),
        })
    }
}

/// Checks the invariants `spec` must satisfy for `purpose`. Returns the spec
/// unchanged, or an error naming the first violated condition.
pub fn validate(spec: FamilySpec, purpose: Purpose) -> Result<FamilySpec> {
    if spec.degree == 0 {
        return Err(Error::DegreeNonPositive);
    }
    if spec.degree > MAX_DEGREE {
        return Err(Error::Overflow(format!(
            "degree {} exceeds the supported maximum {MAX_DEGREE}",
            spec.degree
        )));
    }
    require(spec.alpha.is_finite(), "alpha is finite")?;
    match (spec.kind, spec.beta) {
        (FamilyKind::Jacobi, None) => require(false, "beta is given for jacobi")?,
        (FamilyKind::Jacobi, Some(b)) => require(b.is_finite(), "beta is finite")?,
        (_, Some(_)) => require(false, "beta is given only for jacobi")?,
        _ => {}
    }
    let alpha = spec.alpha;
    let beta = spec.effective_beta();
    if alpha.abs() > MAX_PARAMETER || beta.is_some_and(|b| b.abs() > MAX_PARAMETER) {
        return Err(Error::Overflow(format!(
            "|alpha|, |beta| must not exceed {MAX_PARAMETER}"
        )));
    }

    let n = spec.degree as f64;
    match (spec.kind, purpose) {
        (FamilyKind::Laguerre, _) => require(alpha > -1.0, "alpha > -1")?,
        (_, Purpose::ZeroComputation) => {
            require(alpha > -1.0, "alpha > -1")?;
            require(beta.unwrap_or(alpha) > -1.0, "beta > -1")?;
        }
        (_, Purpose::Classification) => {
            let beta = beta.unwrap_or(alpha);
            require(n + alpha + beta > 0.0, "n + alpha + beta > 0")?;
            require(n + alpha > 0.0, "n + alpha > 0")?;
            require(n + beta > 0.0, "n + beta > 0")?;
        }
    }
    Ok(spec)
}

/// `p_n(t)` together with `p_n'(t)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    pub derivative: f64,
}

/// Evaluates the family polynomial and its derivative at `t`.
pub fn evaluate(spec: &FamilySpec, t: f64) -> Result<EvalResult> {
    validate(*spec, Purpose::ZeroComputation)?;
    if !t.is_finite() {
        return Err(Error::DomainViolation {
            t,
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
        });
    }
    let r = evaluate_unchecked(spec, t);
    if r.value.is_finite() && r.derivative.is_finite() {
        Ok(r)
    } else {
        Err(Error::Overflow(format!("{spec} at t = {t}")))
    }
}

/// Recurrence evaluation without validation. Callers must have validated
/// `spec` for zero computation.
pub(crate) fn evaluate_unchecked(spec: &FamilySpec, t: f64) -> EvalResult {
    match spec.kind {
        FamilyKind::Laguerre => laguerre_eval(spec.degree, spec.alpha, t),
        FamilyKind::Jacobi | FamilyKind::Ultraspherical => {
            let (a, b) = spec.jacobi_params();
            jacobi_eval(spec.degree, a, b, t)
        }
    }
}

fn laguerre_eval(n: usize, alpha: f64, t: f64) -> EvalResult {
    // (k+1) L_{k+1} = (2k+1+α-t) L_k - (k+α) L_{k-1}
    let (mut p_prev, mut p) = (1.0, 1.0 + alpha - t);
    let (mut d_prev, mut d) = (0.0, -1.0);
    if n == 0 {
        return EvalResult {
            value: 1.0,
            derivative: 0.0,
        };
    }
    for k in 1..n {
        let kf = k as f64;
        let c = 2.0 * kf + 1.0 + alpha - t;
        let p_next = (c * p - (kf + alpha) * p_prev) / (kf + 1.0);
        let d_next = (c * d - p - (kf + alpha) * d_prev) / (kf + 1.0);
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
    }
    EvalResult {
        value: p,
        derivative: d,
    }
}

fn jacobi_eval(n: usize, alpha: f64, beta: f64, t: f64) -> EvalResult {
    if n == 0 {
        return EvalResult {
            value: 1.0,
            derivative: 0.0,
        };
    }
    let s = alpha + beta;
    let (mut p_prev, mut p) = (1.0, 0.5 * ((alpha - beta) + (s + 2.0) * t));
    let (mut d_prev, mut d) = (0.0, 0.5 * (s + 2.0));
    let diff_sq = (alpha - beta) * (alpha + beta);
    for k in 1..n {
        let kf = k as f64;
        let c = 2.0 * kf + s;
        let a1 = 2.0 * (kf + 1.0) * (kf + s + 1.0) * c;
        let a2 = (c + 1.0) * diff_sq;
        let a3 = c * (c + 1.0) * (c + 2.0);
        let a4 = 2.0 * (kf + alpha) * (kf + beta) * (c + 2.0);
        let lin = a2 + a3 * t;
        let p_next = (lin * p - a4 * p_prev) / a1;
        let d_next = (a3 * p + lin * d - a4 * d_prev) / a1;
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
    }
    EvalResult {
        value: p,
        derivative: d,
    }
}

/// Symmetric tridiagonal (Jacobi) matrix of the monic recurrence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecurrenceCoefficients {
    pub diagonal: Vec<f64>,
    pub offdiagonal: Vec<f64>,
}

/// Jacobi-matrix entries whose eigenvalues are the zeros of `p_n`.
pub fn recurrence_coefficients(spec: &FamilySpec) -> Result<RecurrenceCoefficients> {
    validate(*spec, Purpose::ZeroComputation)?;
    let n = spec.degree;
    let (diagonal, offdiagonal) = match spec.kind {
        FamilyKind::Laguerre => {
            let a = spec.alpha;
            let diag = (0..n).map(|k| 2.0 * k as f64 + a + 1.0).collect();
            let off = (1..n)
                .map(|k| {
                    let k = k as f64;
                    (k * (k + a)).sqrt()
                })
                .collect();
            (diag, off)
        }
        FamilyKind::Jacobi | FamilyKind::Ultraspherical => {
            let (a, b) = spec.jacobi_params();
            let s = a + b;
            let diag = (0..n)
                .map(|k| {
                    if k == 0 {
                        (b - a) / (s + 2.0)
                    } else {
                        let c = 2.0 * k as f64 + s;
                        (b * b - a * a) / (c * (c + 2.0))
                    }
                })
                .collect();
            let off = (1..n)
                .map(|k| {
                    let kf = k as f64;
                    let c = 2.0 * kf + s;
                    let sq = if k == 1 {
                        // (k+α+β)/(2k+α+β-1) cancels to 1; avoids 0/0 at α+β = -1.
                        4.0 * (1.0 + a) * (1.0 + b) / (c * c * (c + 1.0))
                    } else {
                        4.0 * kf * (kf + a) * (kf + b) * (kf + s) / (c * c * (c + 1.0) * (c - 1.0))
                    };
                    sq.sqrt()
                })
                .collect();
            (diag, off)
        }
    };
    Ok(RecurrenceCoefficients {
        diagonal,
        offdiagonal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn validate_accepts_oscillating_jacobi() {
        let spec = FamilySpec::jacobi(2.0, 0.5, 5);
        assert_eq!(validate(spec, Purpose::Classification), Ok(spec));
    }

    #[test]
    fn validate_rejects_laguerre_at_alpha_minus_one() {
        let err = validate(FamilySpec::laguerre(-1.0, 3), Purpose::ZeroComputation).unwrap_err();
        assert_eq!(
            err,
            Error::ParameterOutOfRange {
                condition: "alpha > -1".into()
            }
        );
    }

    #[test]
    fn validate_names_failed_oscillation_condition() {
        // 1 - 0.5 - 0.7 = -0.2
        let err = validate(FamilySpec::jacobi(-0.5, -0.7, 1), Purpose::Classification).unwrap_err();
        assert_eq!(
            err,
            Error::ParameterOutOfRange {
                condition: "n + alpha + beta > 0".into()
            }
        );
        // Same spec is fine for zero computation.
        assert!(validate(FamilySpec::jacobi(-0.5, -0.7, 1), Purpose::ZeroComputation).is_ok());
    }

    #[test]
    fn validate_degree_and_caps() {
        assert_eq!(
            validate(FamilySpec::laguerre(0.0, 0), Purpose::ZeroComputation),
            Err(Error::DegreeNonPositive)
        );
        assert!(matches!(
            validate(FamilySpec::laguerre(0.0, 201), Purpose::ZeroComputation),
            Err(Error::Overflow(_))
        ));
        assert!(matches!(
            validate(FamilySpec::jacobi(0.0, 31.0, 4), Purpose::ZeroComputation),
            Err(Error::Overflow(_))
        ));
        let mut bad = FamilySpec::ultraspherical(0.5, 3);
        bad.beta = Some(0.5);
        assert!(matches!(
            validate(bad, Purpose::ZeroComputation),
            Err(Error::ParameterOutOfRange { .. })
        ));
    }

    #[test]
    fn linear_laguerre_vanishes_at_one() {
        let r = evaluate(&FamilySpec::laguerre(0.0, 1), 1.0).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.derivative, -1.0);
    }

    #[test]
    fn legendre_two_vanishes_at_inverse_sqrt3() {
        let t = 1.0 / 3f64.sqrt();
        let r = evaluate(&FamilySpec::jacobi(0.0, 0.0, 2), t).unwrap();
        assert!(r.value.abs() < 1e-15);
        assert_relative_eq!(r.derivative, 3.0 * t, max_relative = 1e-15);
    }

    #[test]
    fn chebyshev_u_zero_at_cos_quarter_pi() {
        let t = (std::f64::consts::PI / 4.0).cos();
        let r = evaluate(&FamilySpec::ultraspherical(0.5, 3), t).unwrap();
        assert!(r.value.abs() < 1e-14, "{}", r.value);
    }

    #[test]
    fn jacobi_endpoint_value_is_binomial() {
        // P_n^(α,β)(1) = binom(n+α, n)
        let r = evaluate(&FamilySpec::jacobi(2.0, 0.5, 4), 1.0).unwrap();
        assert_relative_eq!(r.value, 15.0, max_relative = 1e-14);
    }

    #[test]
    fn laguerre_recurrence_matrix() {
        let rc = recurrence_coefficients(&FamilySpec::laguerre(0.0, 2)).unwrap();
        assert_eq!(rc.diagonal, vec![1.0, 3.0]);
        assert_eq!(rc.offdiagonal, vec![1.0]);
    }

    #[test]
    fn legendre_recurrence_matrix() {
        let rc = recurrence_coefficients(&FamilySpec::jacobi(0.0, 0.0, 2)).unwrap();
        assert_eq!(rc.diagonal, vec![0.0, 0.0]);
        assert_relative_eq!(rc.offdiagonal[0], 1.0 / 3f64.sqrt(), max_relative = 1e-15);
    }

    #[test]
    fn jacobi_matrix_first_offdiagonal_at_alpha_plus_beta_minus_one() {
        let rc = recurrence_coefficients(&FamilySpec::jacobi(-0.25, -0.75, 3)).unwrap();
        assert!(rc.offdiagonal.iter().all(|b| b.is_finite() && *b > 0.0));
        assert_eq!(rc.diagonal.len(), 3);
        assert_eq!(rc.offdiagonal.len(), 2);
    }
}
