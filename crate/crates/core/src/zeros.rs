//! Zeros of a family member: Jacobi-matrix eigenvalues polished by Newton
//! iteration on the recurrence.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{
    evaluate_unchecked, recurrence_coefficients, validate, FamilyKind, FamilySpec, Purpose,
};
use crate::tridiagonal;

const NEWTON_MAX_ITERATIONS: usize = 50;
const NEWTON_STEP_TOL: f64 = 1e-14;
const NEWTON_NOISE_TOL: f64 = 1e-12;
/// Polishing may move an eigenvalue by at most this much.
const MAX_POLISH_SHIFT: f64 = 1e-6;
const DUPLICATE_TOL: f64 = 1e-12;
const RESIDUAL_TOL: f64 = 1e-10;

/// The `n` zeros of a family member with their first and second differences.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroSet {
    pub spec: FamilySpec,
    pub zeros: Vec<f64>,
    pub spacings: Vec<f64>,
    pub second_differences: Vec<f64>,
}

impl ZeroSet {
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }
}

/// Computes all zeros of `spec`, ascending.
pub fn compute_zeros(spec: &FamilySpec) -> Result<ZeroSet> {
    validate(*spec, Purpose::ZeroComputation)?;
    let rc = recurrence_coefficients(spec)?;
    let raw = tridiagonal::eigenvalues(&rc.diagonal, &rc.offdiagonal);
    let support = spec.support();

    let mut zeros = Vec::with_capacity(raw.len());
    for (index, &start) in raw.iter().enumerate() {
        let x = newton_polish(spec, start, index)?;
        if (x - start).abs() > MAX_POLISH_SHIFT {
            return Err(Error::ConvergenceFailure {
                index,
                reason: format!("polish moved eigenvalue {start} to {x}"),
            });
        }
        if !support.contains(x) {
            return Err(Error::ConvergenceFailure {
                index,
                reason: format!("zero {x} lies outside the support"),
            });
        }
        let r = evaluate_unchecked(spec, x);
        if r.value.abs() > RESIDUAL_TOL * r.derivative.abs() * x.abs().max(1.0) {
            return Err(Error::ConvergenceFailure {
                index,
                reason: format!("residual {} at {x} exceeds tolerance", r.value),
            });
        }
        if let Some(&prev) = zeros.last() {
            if x - prev <= DUPLICATE_TOL * x.abs().max(1.0) {
                return Err(Error::ConvergenceFailure {
                    index,
                    reason: format!("zero {x} coincides with or precedes {prev}"),
                });
            }
        }
        zeros.push(x);
    }

    let (spacings, second_differences) = differences(&zeros);
    Ok(ZeroSet {
        spec: *spec,
        zeros,
        spacings,
        second_differences,
    })
}

/// Newton iteration from `start`. Stops when the step is below
/// `NEWTON_STEP_TOL` relative, or when the iteration has reached the rounding
/// noise of the recurrence (the step stopped shrinking and is already below
/// `NEWTON_NOISE_TOL`). The caller checks the residual either way.
fn newton_polish(spec: &FamilySpec, start: f64, index: usize) -> Result<f64> {
    let mut x = start;
    let mut last_step = f64::INFINITY;
    for _ in 0..NEWTON_MAX_ITERATIONS {
        let r = evaluate_unchecked(spec, x);
        if !r.value.is_finite() || !r.derivative.is_finite() {
            return Err(Error::Overflow(format!("{spec} at t = {x}")));
        }
        if r.value == 0.0 {
            return Ok(x);
        }
        if r.derivative == 0.0 {
            return Err(Error::ConvergenceFailure {
                index,
                reason: format!("vanishing derivative at {x}"),
            });
        }
        let step = r.value / r.derivative;
        let scale = x.abs().max(1.0);
        if step.abs() >= last_step && step.abs() <= NEWTON_NOISE_TOL * scale {
            return Ok(x);
        }
        x -= step;
        if step.abs() <= NEWTON_STEP_TOL * scale {
            return Ok(x);
        }
        last_step = step.abs();
    }
    Err(Error::ConvergenceFailure {
        index,
        reason: format!("no convergence in {NEWTON_MAX_ITERATIONS} Newton steps from {start}"),
    })
}

fn differences(zeros: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let spacings: Vec<f64> = zeros.windows(2).map(|w| w[1] - w[0]).collect();
    let second = spacings.windows(2).map(|w| w[1] - w[0]).collect();
    (spacings, second)
}

/// Spacings `x_{k+1} - x_k` and second differences `Δx_{k+1} - Δx_k`.
///
/// Needs at least two zeros; with exactly two the second differences are
/// empty.
pub fn spacing_profile(zeros: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    if zeros.len() < 2 {
        return Err(Error::DegreeTooSmall {
            operation: "spacing profile",
            needed: 2,
            got: zeros.len(),
        });
    }
    Ok(differences(zeros))
}

/// Closed-form bounds on the smallest Laguerre zero and the stationary point
/// `t0` of `F` for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FirstZeroBounds {
    /// `(α+1)/n`
    pub lower: f64,
    /// `(α+1)(α+2)/(α+n+1)`
    pub upper_a: f64,
    /// `(α+1)(α+3)/(α+2n+1)`
    pub upper_b: f64,
    pub t0: f64,
    /// `t0 < min(upper_a, upper_b)`
    pub t0_below_upper: bool,
}

pub fn first_zero_bounds(spec: &FamilySpec) -> Result<FirstZeroBounds> {
    if spec.kind != FamilyKind::Laguerre {
        return Err(Error::UnsupportedFamily {
            operation: "first zero bounds",
            kind: spec.kind,
        });
    }
    validate(*spec, Purpose::ZeroComputation)?;
    let a = spec.alpha;
    let n = spec.degree as f64;
    let upper_a = (a + 1.0) * (a + 2.0) / (a + n + 1.0);
    let upper_b = (a + 1.0) * (a + 3.0) / (a + 2.0 * n + 1.0);
    let t0 = (a * a - 1.0) / (a + 2.0 * n + 1.0);
    Ok(FirstZeroBounds {
        lower: (a + 1.0) / n,
        upper_a,
        upper_b,
        t0,
        t0_below_upper: t0 < upper_a.min(upper_b),
    })
}
