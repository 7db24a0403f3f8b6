//! Spacing bounds between consecutive zeros.
//!
//! If `F < M` on a gap then the gap is longer than `π/√M`; if `F > m > 0` it is
//! shorter than `π/√m`. Local bounds take `M`, `m` from `F` at the gap
//! endpoints where `F` is monotone across the gap, and from the extrema of `F`
//! over the gap otherwise. Family-wide bounds come from the global structure
//! of `F`.
//!
//! All comparisons are strict and exact: a zero margin is a violation.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{validate, FamilyKind, FamilySpec, Purpose};
use crate::interval::Interval;
use crate::normal_form::{
    critical_points, f_eval_unchecked, f_infimum, f_supremum, j_eval_unchecked, j_roots_in,
    NormalFormProfile,
};
use crate::zeros::{compute_zeros, ZeroSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSource {
    /// `F` decreasing across the gap: `π/√F(x_k) < Δx_k < π/√F(x_{k+1})`.
    MonotoneDecreasing,
    /// `F` increasing across the gap: `π/√F(x_{k+1}) < Δx_k < π/√F(x_k)`.
    MonotoneIncreasing,
    /// Extrema of `F` over a gap that contains a stationary point.
    GapExtremum,
    /// Laguerre `π√2/√(2αn+α+2n²+2n+1)`, taken as written.
    LaguerreLiteral,
    /// Laguerre `π/√(sup F)` over `(x_1, ∞)`.
    LaguerreDerived,
    /// Ultraspherical, `|α| ≤ 1`: `Δx_k < π/√F(0)`.
    UltrasphericalCapAtZero,
    /// Ultraspherical, `|α| > 1`, no outer roots: `Δx_k > π/√F(0)`.
    UltrasphericalFloorAtZero,
    /// Ultraspherical, `|α| > 1`, outer roots: `Δx_k > π/√F(T₂)`.
    UltrasphericalFloorAtOuterRoot,
    /// Ultraspherical, outer roots, gap inside `(T₁, T₂)`: `Δx_k < π/√F(0)`.
    UltrasphericalInnerCap,
}

impl BoundSource {
    /// Sources whose failures are tabulated but not counted as violations.
    pub fn is_informational(&self) -> bool {
        matches!(self, BoundSource::LaguerreLiteral)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lower,
    Upper,
}

/// One gap checked against at most one lower and one upper bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapBoundRecord {
    /// Gap index counted from 1: the gap `(x_k, x_{k+1})`.
    pub k: usize,
    pub x_k: f64,
    pub x_k1: f64,
    pub spacing: f64,
    pub lower: Option<f64>,
    pub lower_source: Option<BoundSource>,
    pub lower_satisfied: Option<bool>,
    /// `spacing - lower`
    pub lower_margin: Option<f64>,
    pub upper: Option<f64>,
    pub upper_source: Option<BoundSource>,
    pub upper_satisfied: Option<bool>,
    /// `upper - spacing`
    pub upper_margin: Option<f64>,
}

impl GapBoundRecord {
    fn new(k: usize, x_k: f64, x_k1: f64) -> Self {
        GapBoundRecord {
            k,
            x_k,
            x_k1,
            spacing: x_k1 - x_k,
            lower: None,
            lower_source: None,
            lower_satisfied: None,
            lower_margin: None,
            upper: None,
            upper_source: None,
            upper_satisfied: None,
            upper_margin: None,
        }
    }

    fn with_lower(mut self, value: f64, source: BoundSource) -> Self {
        self.lower = Some(value);
        self.lower_source = Some(source);
        self.lower_satisfied = Some(self.spacing > value);
        self.lower_margin = Some(self.spacing - value);
        self
    }

    fn with_upper(mut self, value: f64, source: BoundSource) -> Self {
        self.upper = Some(value);
        self.upper_source = Some(source);
        self.upper_satisfied = Some(self.spacing < value);
        self.upper_margin = Some(value - self.spacing);
        self
    }

    pub fn is_satisfied(&self) -> bool {
        self.lower_satisfied != Some(false) && self.upper_satisfied != Some(false)
    }

    pub fn checks(&self) -> usize {
        self.lower.is_some() as usize + self.upper.is_some() as usize
    }
}

/// `π/√value` for positive finite `value`.
fn spacing_bound(value: f64) -> Option<f64> {
    (value > 0.0 && value.is_finite()).then(|| PI / value.sqrt())
}

/// Interior points of the support where `F` changes monotonicity.
fn monotonicity_breakpoints(spec: &FamilySpec, profile: &NormalFormProfile) -> Vec<f64> {
    let support = spec.support();
    match spec.kind {
        FamilyKind::Laguerre => profile
            .t0
            .filter(|t| support.contains(*t))
            .into_iter()
            .collect(),
        _ => j_roots_in(spec, &support),
    }
}

/// Direction-aware local bounds for every gap of `zs`.
pub fn gap_bounds(
    spec: &FamilySpec,
    profile: &NormalFormProfile,
    zs: &ZeroSet,
) -> Result<Vec<GapBoundRecord>> {
    validate(*spec, Purpose::Classification)?;
    let breaks = monotonicity_breakpoints(spec, profile);
    let mut out = Vec::with_capacity(zs.spacings.len());
    for (i, w) in zs.zeros.windows(2).enumerate() {
        let (a, b) = (w[0], w[1]);
        let rec = GapBoundRecord::new(i + 1, a, b);
        let monotone = !breaks.iter().any(|t| a < *t && *t < b);
        let decreasing = match spec.kind {
            FamilyKind::Laguerre => profile.t0.is_none_or(|t0| a >= t0),
            _ => j_eval_unchecked(spec, 0.5 * (a + b)) > 0.0,
        };
        let rec = if monotone {
            let (fa, fb) = (f_eval_unchecked(spec, a), f_eval_unchecked(spec, b));
            let (sup, inf, source) = if decreasing {
                (fa, fb, BoundSource::MonotoneDecreasing)
            } else {
                (fb, fa, BoundSource::MonotoneIncreasing)
            };
            let mut rec = rec;
            if let Some(v) = spacing_bound(sup) {
                rec = rec.with_lower(v, source);
            }
            if let Some(v) = spacing_bound(inf) {
                rec = rec.with_upper(v, source);
            }
            rec
        } else {
            let gap = Interval::new(a, b);
            let mut rec = rec;
            if let Some(v) = f_supremum(spec, &gap)?.and_then(spacing_bound) {
                rec = rec.with_lower(v, BoundSource::GapExtremum);
            }
            if let Some(v) = f_infimum(spec, &gap)?.and_then(spacing_bound) {
                rec = rec.with_upper(v, BoundSource::GapExtremum);
            }
            rec
        };
        out.push(rec);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaguerreGlobalBound {
    /// `π√2/√(2αn+α+2n²+2n+1)`
    pub literal_value: f64,
    /// `π/√(sup F)` over `(x_1, ∞)`, or over the whole support when no first
    /// zero is supplied.
    pub derived_value: Option<f64>,
    /// `π/√F(t0)` when `t0 > 0`.
    pub stationary_value: Option<f64>,
}

pub fn laguerre_global_bound(
    spec: &FamilySpec,
    profile: &NormalFormProfile,
    first_zero: Option<f64>,
) -> Result<LaguerreGlobalBound> {
    if spec.kind != FamilyKind::Laguerre {
        return Err(Error::UnsupportedFamily {
            operation: "laguerre global bound",
            kind: spec.kind,
        });
    }
    validate(*spec, Purpose::Classification)?;
    let a = spec.alpha;
    let n = spec.degree as f64;
    let literal_value = PI * 2f64.sqrt() / (2.0 * a * n + a + 2.0 * n * n + 2.0 * n + 1.0).sqrt();
    let region = Interval::new(first_zero.unwrap_or(0.0), f64::INFINITY);
    let derived_value = f_supremum(spec, &region)?.and_then(spacing_bound);
    let stationary_value = profile
        .t0
        .filter(|t| *t > 0.0)
        .and_then(|t| spacing_bound(f_eval_unchecked(spec, t)));
    Ok(LaguerreGlobalBound {
        literal_value,
        derived_value,
        stationary_value,
    })
}

/// Point right of `left` where the Laguerre `F` turns negative, by bisection
/// to absolute tolerance `1e-12`. `None` if `F(left) ≤ 0`.
pub fn laguerre_f_crossing(spec: &FamilySpec, left: f64, right_hint: f64) -> Option<f64> {
    if spec.kind != FamilyKind::Laguerre || !(left > 0.0) {
        return None;
    }
    let f = |t: f64| f_eval_unchecked(spec, t);
    if !(f(left) > 0.0) {
        return None;
    }
    let mut hi = right_hint.max(left + 1.0);
    while f(hi) >= 0.0 {
        hi *= 2.0;
        if !hi.is_finite() {
            return None;
        }
    }
    let mut lo = left;
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Family-wide ultraspherical bounds; exactly one field is set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UltrasphericalGlobalBounds {
    pub upper_from_f0: Option<f64>,
    pub lower_from_f0: Option<f64>,
    pub lower_from_ft2: Option<f64>,
}

pub fn ultraspherical_global_bounds(
    spec: &FamilySpec,
    profile: &NormalFormProfile,
) -> Result<UltrasphericalGlobalBounds> {
    if spec.kind != FamilyKind::Ultraspherical {
        return Err(Error::UnsupportedFamily {
            operation: "ultraspherical global bounds",
            kind: spec.kind,
        });
    }
    validate(*spec, Purpose::Classification)?;
    let a = spec.alpha;
    let n = spec.degree as f64;
    let f0 = 2.0 * a * n + a + n * n + n + 1.0;
    let mut out = UltrasphericalGlobalBounds {
        upper_from_f0: None,
        lower_from_f0: None,
        lower_from_ft2: None,
    };
    if a.abs() <= 1.0 {
        out.upper_from_f0 = spacing_bound(f0);
    } else if (n + a) * (n + a + 1.0) <= 2.0 * (a * a - 1.0) {
        out.lower_from_f0 = spacing_bound(f0);
    } else if let Some((_, t2)) = profile.big_t12 {
        out.lower_from_ft2 = spacing_bound(f_eval_unchecked(spec, t2));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub k: usize,
    pub source: BoundSource,
    pub side: Side,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundSuiteReport {
    pub spec: FamilySpec,
    pub global_lower_closed_form: Option<f64>,
    pub global_lower_derived: Option<f64>,
    pub global_upper_closed_form: Option<f64>,
    /// Laguerre: where `F` crosses zero right of its maximum.
    pub f_crossing: Option<f64>,
    pub records: Vec<GapBoundRecord>,
    /// Every record side with a false satisfied flag.
    pub violations: Vec<Violation>,
}

impl BoundSuiteReport {
    /// Violations excluding informational sources.
    pub fn counted_violations(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| !v.source.is_informational())
    }

    /// `(checks, failures)` for one source.
    pub fn tally(&self, source: BoundSource) -> (usize, usize) {
        let mut checks = 0;
        let mut failures = 0;
        for r in &self.records {
            if r.lower_source == Some(source) {
                checks += 1;
                failures += (r.lower_satisfied == Some(false)) as usize;
            }
            if r.upper_source == Some(source) {
                checks += 1;
                failures += (r.upper_satisfied == Some(false)) as usize;
            }
        }
        (checks, failures)
    }
}

fn global_records(
    zs: &ZeroSet,
    lower: Option<(f64, BoundSource)>,
    upper: Option<(f64, BoundSource)>,
    keep: impl Fn(f64, f64) -> bool,
) -> Vec<GapBoundRecord> {
    zs.zeros
        .windows(2)
        .enumerate()
        .filter(|(_, w)| keep(w[0], w[1]))
        .map(|(i, w)| {
            let mut rec = GapBoundRecord::new(i + 1, w[0], w[1]);
            if let Some((v, s)) = lower {
                rec = rec.with_lower(v, s);
            }
            if let Some((v, s)) = upper {
                rec = rec.with_upper(v, s);
            }
            rec
        })
        .collect()
}

/// Computes the zeros and checks every applicable bound on every gap.
pub fn verify_suite(spec: &FamilySpec) -> Result<BoundSuiteReport> {
    validate(*spec, Purpose::ZeroComputation)?;
    validate(*spec, Purpose::Classification)?;
    let zs = compute_zeros(spec)?;
    let profile = critical_points(spec)?;
    verify_with(spec, &profile, &zs)
}

/// [`verify_suite`] on already computed zeros and profile.
pub fn verify_with(
    spec: &FamilySpec,
    profile: &NormalFormProfile,
    zs: &ZeroSet,
) -> Result<BoundSuiteReport> {
    let mut records = gap_bounds(spec, profile, zs)?;
    let mut report = BoundSuiteReport {
        spec: *spec,
        global_lower_closed_form: None,
        global_lower_derived: None,
        global_upper_closed_form: None,
        f_crossing: None,
        records: Vec::new(),
        violations: Vec::new(),
    };
    let all = |_: f64, _: f64| true;

    match spec.kind {
        FamilyKind::Laguerre => {
            let x1 = zs.zeros.first().copied();
            let lg = laguerre_global_bound(spec, profile, x1)?;
            report.global_lower_closed_form = Some(lg.literal_value);
            report.global_lower_derived = lg.derived_value;
            records.extend(global_records(
                zs,
                Some((lg.literal_value, BoundSource::LaguerreLiteral)),
                None,
                all,
            ));
            if let Some(v) = lg.derived_value {
                records.extend(global_records(
                    zs,
                    Some((v, BoundSource::LaguerreDerived)),
                    None,
                    all,
                ));
            }
            if let (Some(&first), Some(&last)) = (zs.zeros.first(), zs.zeros.last()) {
                let left = profile.t0.map_or(first, |t0| t0.max(first));
                report.f_crossing = laguerre_f_crossing(spec, left, last + 10.0);
            }
        }
        FamilyKind::Ultraspherical => {
            let ug = ultraspherical_global_bounds(spec, profile)?;
            report.global_upper_closed_form = ug.upper_from_f0;
            report.global_lower_closed_form = ug.lower_from_f0.or(ug.lower_from_ft2);
            if let Some(v) = ug.upper_from_f0 {
                records.extend(global_records(
                    zs,
                    None,
                    Some((v, BoundSource::UltrasphericalCapAtZero)),
                    all,
                ));
            }
            if let Some(v) = ug.lower_from_f0 {
                records.extend(global_records(
                    zs,
                    Some((v, BoundSource::UltrasphericalFloorAtZero)),
                    None,
                    all,
                ));
            }
            if let Some(v) = ug.lower_from_ft2 {
                records.extend(global_records(
                    zs,
                    Some((v, BoundSource::UltrasphericalFloorAtOuterRoot)),
                    None,
                    all,
                ));
                let f0 = f_eval_unchecked(spec, 0.0);
                if let (Some(cap), Some((t1, t2))) = (spacing_bound(f0), profile.big_t12) {
                    records.extend(global_records(
                        zs,
                        None,
                        Some((cap, BoundSource::UltrasphericalInnerCap)),
                        |a, b| t1 <= a && b <= t2,
                    ));
                }
            }
        }
        FamilyKind::Jacobi => {}
    }

    report.violations = records
        .iter()
        .flat_map(|r| {
            let lower = (r.lower_satisfied == Some(false)).then(|| Violation {
                k: r.k,
                source: r.lower_source.expect("lower source set with lower bound"),
                side: Side::Lower,
                margin: r.lower_margin.unwrap_or(f64::NAN),
            });
            let upper = (r.upper_satisfied == Some(false)).then(|| Violation {
                k: r.k,
                source: r.upper_source.expect("upper source set with upper bound"),
                side: Side::Upper,
                margin: r.upper_margin.unwrap_or(f64::NAN),
            });
            lower.into_iter().chain(upper)
        })
        .collect();
    report.records = records;
    Ok(report)
}
