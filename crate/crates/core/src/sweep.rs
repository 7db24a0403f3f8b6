//! Parameter sweeps: zeros, empirical convexity, bounds and interlacing over
//! a grid of family members, merged into one summary.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{verify_with, BoundSource, BoundSuiteReport};
use crate::convexity::{classify_empirical, classify_theoretical, Label, Verdict, VerdictCounts};
use crate::error::{Error, Result};
use crate::family::{FamilyKind, FamilySpec, MAX_DEGREE};
use crate::normal_form::critical_points;
use crate::zeros::{compute_zeros, ZeroSet};

pub const DEFAULT_SWEEP_NAME: &str = "default-v1";

/// A product grid for one family. `betas` is ignored except for Jacobi.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyGrid {
    pub kind: FamilyKind,
    pub alphas: Vec<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub betas: Vec<f64>,
    pub degrees: Vec<usize>,
}

impl FamilyGrid {
    pub fn specs(&self) -> Vec<FamilySpec> {
        let mut out = Vec::new();
        for &a in &self.alphas {
            match self.kind {
                FamilyKind::Jacobi => {
                    for &b in &self.betas {
                        out.extend(self.degrees.iter().map(|&n| FamilySpec::jacobi(a, b, n)));
                    }
                }
                FamilyKind::Laguerre => {
                    out.extend(self.degrees.iter().map(|&n| FamilySpec::laguerre(a, n)))
                }
                FamilyKind::Ultraspherical => out.extend(
                    self.degrees
                        .iter()
                        .map(|&n| FamilySpec::ultraspherical(a, n)),
                ),
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepGrid {
    pub name: String,
    pub families: Vec<FamilyGrid>,
}

impl SweepGrid {
    pub fn specs(&self) -> Vec<FamilySpec> {
        self.families.iter().flat_map(FamilyGrid::specs).collect()
    }
}

/// The baked-in validation sweep.
pub fn default_sweep() -> SweepGrid {
    let grid = |kind, alphas: &[f64], betas: &[f64], degrees: &[usize]| FamilyGrid {
        kind,
        alphas: alphas.to_vec(),
        betas: betas.to_vec(),
        degrees: degrees.to_vec(),
    };
    SweepGrid {
        name: DEFAULT_SWEEP_NAME.to_string(),
        families: vec![
            grid(
                FamilyKind::Laguerre,
                &[-0.5, 0.0, 1.0, 2.0, 3.0, 3.5, 4.0, 6.0],
                &[],
                &[3, 5, 10, 20, 40],
            ),
            grid(
                FamilyKind::Ultraspherical,
                &[-0.5, 0.0, 0.5, 1.0],
                &[],
                &[4, 7, 15],
            ),
            grid(FamilyKind::Ultraspherical, &[7.0], &[], &[2]),
            grid(FamilyKind::Ultraspherical, &[2.0], &[], &[5, 12]),
            grid(
                FamilyKind::Jacobi,
                &[-0.5, 0.5, 2.0],
                &[-0.5, 0.5, 2.0],
                &[5, 20, 60],
            ),
            grid(FamilyKind::Jacobi, &[20.0], &[0.0], &[3]),
        ],
    }
}

/// Parses `lo:hi:step` into `lo, lo+step, ...` up to `hi` inclusive.
pub fn parse_range(text: &str) -> std::result::Result<Vec<f64>, String> {
    let parts: Vec<&str> = text.split(':').collect();
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| p.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| format!("bad range {text:?}: {e}"))?;
    match nums.as_slice() {
        [v] => Ok(vec![*v]),
        [lo, hi, step] => {
            if !(*step > 0.0) || !(lo <= hi) || !lo.is_finite() || !hi.is_finite() {
                return Err(format!("bad range {text:?}: need lo <= hi and step > 0"));
            }
            let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
            if count > 10_000 {
                return Err(format!("range {text:?} has too many points"));
            }
            Ok((0..count).map(|i| lo + i as f64 * step).collect())
        }
        _ => Err(format!("bad range {text:?}: expected lo:hi:step")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IssueKind {
    Disagrees,
    BoundViolation,
    LaguerreLiteralFailure,
    Interlacing,
    NumericalFailure,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepIssue {
    pub spec: FamilySpec,
    pub kind: IssueKind,
    pub k: Option<usize>,
    pub detail: String,
    pub margin: Option<f64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepTotals {
    pub specs_run: usize,
    pub specs_failed: usize,
    pub triples_classified: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub straddles: usize,
    pub below_tolerance: usize,
    pub bound_checks: usize,
    pub violations: usize,
    pub laguerre_literal_checks: usize,
    pub laguerre_literal_failures: usize,
    pub interlacing_checks: usize,
    pub interlacing_failures: usize,
    /// Laguerre triples lying inside a concave piece `(0, t0)`.
    pub laguerre_concave_triples: usize,
}

impl SweepTotals {
    pub fn is_clean(&self) -> bool {
        self.specs_failed == 0
            && self.disagreements == 0
            && self.violations == 0
            && self.interlacing_failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub grid: SweepGrid,
    pub tol_rel: f64,
    pub totals: SweepTotals,
    pub violation_details: Vec<SweepIssue>,
    /// Informational failures of the literal Laguerre global bound.
    pub laguerre_literal_details: Vec<SweepIssue>,
}

/// Everything computed for one spec of a sweep.
#[derive(Debug, Clone)]
pub struct SpecOutcome {
    pub spec: FamilySpec,
    pub zeros: ZeroSet,
    pub verdicts: VerdictCounts,
    pub disagreeing: Vec<usize>,
    pub concave_triples: usize,
    pub bounds: BoundSuiteReport,
    /// `None` when degree `n+1` is beyond the supported range.
    pub interlaces: Option<bool>,
}

/// Strict interlacing of the zeros of degree `n` (`inner`) and `n+1` (`outer`).
pub fn interlaces(inner: &[f64], outer: &[f64]) -> bool {
    outer.len() == inner.len() + 1
        && inner
            .iter()
            .enumerate()
            .all(|(i, x)| outer[i] < *x && *x < outer[i + 1])
}

pub fn analyze_spec(spec: &FamilySpec, tol_rel: f64) -> Result<SpecOutcome> {
    let zeros = compute_zeros(spec)?;
    let profile = critical_points(spec)?;
    let report = classify_theoretical(spec, &profile)?;
    let (verdicts, disagreeing, concave_triples) = if zeros.len() >= 3 {
        let emp = classify_empirical(&zeros, &report, tol_rel)?;
        let concave = if spec.kind == FamilyKind::Laguerre {
            emp.triples
                .iter()
                .filter(|t| {
                    t.piece
                        .is_some_and(|p| report.partition[p].label == Label::Concave)
                })
                .count()
        } else {
            0
        };
        let bad = emp
            .triples
            .iter()
            .filter(|t| t.verdict == Verdict::Disagrees)
            .map(|t| t.k)
            .collect();
        (emp.counts(), bad, concave)
    } else {
        (VerdictCounts::default(), Vec::new(), 0)
    };
    let bounds = verify_with(spec, &profile, &zeros)?;
    let interlaces = if spec.degree < MAX_DEGREE {
        let next = compute_zeros(&spec.with_degree(spec.degree + 1))?;
        Some(interlaces(&zeros.zeros, &next.zeros))
    } else {
        None
    };
    Ok(SpecOutcome {
        spec: *spec,
        zeros,
        verdicts,
        disagreeing,
        concave_triples,
        bounds,
        interlaces,
    })
}

/// Runs every spec of `grid`. Specs are evaluated in parallel; the summary
/// is assembled in grid order.
pub fn run_sweep(grid: &SweepGrid, tol_rel: f64) -> SweepSummary {
    let specs = grid.specs();
    let outcomes: Vec<(FamilySpec, Result<SpecOutcome>)> = specs
        .par_iter()
        .map(|s| (*s, analyze_spec(s, tol_rel)))
        .collect();

    let mut totals = SweepTotals::default();
    let mut details = Vec::new();
    let mut literal = Vec::new();
    for (spec, outcome) in outcomes {
        totals.specs_run += 1;
        let o = match outcome {
            Ok(o) => o,
            Err(e) => {
                totals.specs_failed += 1;
                details.push(issue_from_error(spec, &e));
                continue;
            }
        };
        let v = o.verdicts;
        totals.triples_classified += v.total();
        totals.agreements += v.agrees;
        totals.disagreements += v.disagrees;
        totals.straddles += v.straddles;
        totals.below_tolerance += v.below_tolerance;
        totals.laguerre_concave_triples += o.concave_triples;
        details.extend(o.disagreeing.iter().map(|&k| SweepIssue {
            spec,
            kind: IssueKind::Disagrees,
            k: Some(k),
            detail: "second-difference sign contradicts the piece label".into(),
            margin: None,
        }));

        let (lit_checks, lit_failures) = o.bounds.tally(BoundSource::LaguerreLiteral);
        totals.laguerre_literal_checks += lit_checks;
        totals.laguerre_literal_failures += lit_failures;
        totals.bound_checks +=
            o.bounds.records.iter().map(|r| r.checks()).sum::<usize>() - lit_checks;
        for viol in &o.bounds.violations {
            let entry = SweepIssue {
                spec,
                kind: if viol.source.is_informational() {
                    IssueKind::LaguerreLiteralFailure
                } else {
                    IssueKind::BoundViolation
                },
                k: Some(viol.k),
                detail: format!("{:?} {:?} bound", viol.source, viol.side),
                margin: Some(viol.margin),
            };
            if viol.source.is_informational() {
                literal.push(entry);
            } else {
                totals.violations += 1;
                details.push(entry);
            }
        }

        if let Some(ok) = o.interlaces {
            totals.interlacing_checks += 1;
            if !ok {
                totals.interlacing_failures += 1;
                details.push(SweepIssue {
                    spec,
                    kind: IssueKind::Interlacing,
                    k: None,
                    detail: format!(
                        "zeros of degree {} and {} do not interlace",
                        spec.degree,
                        spec.degree + 1
                    ),
                    margin: None,
                });
            }
        }
    }
    SweepSummary {
        grid: grid.clone(),
        tol_rel,
        totals,
        violation_details: details,
        laguerre_literal_details: literal,
    }
}

fn issue_from_error(spec: FamilySpec, e: &Error) -> SweepIssue {
    SweepIssue {
        spec,
        kind: IssueKind::NumericalFailure,
        k: match e {
            Error::ConvergenceFailure { index, .. } => Some(index + 1),
            _ => None,
        },
        detail: e.to_string(),
        margin: None,
    }
}
