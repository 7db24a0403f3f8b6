//! Convexity pattern of the zeros.
//!
//! Where `F` is strictly decreasing consecutive spacings grow (convex zeros);
//! where it is strictly increasing they shrink (concave zeros). The
//! theoretical partition comes either from a closed-form case split or from
//! the sign pattern of the cubic `j`; the empirical side reads the sign of
//! each second difference of the computed zeros.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{validate, FamilyKind, FamilySpec, Purpose};
use crate::interval::Interval;
use crate::normal_form::{j_eval_unchecked, j_roots_in, JacobiAux, NormalFormProfile};
use crate::zeros::ZeroSet;

/// Default tolerance for a second difference to count as zero, relative to
/// the local spacing.
pub const DEFAULT_TOL_REL: f64 = 1e-9;

/// `j` roots closer than this to `±1` are treated as the endpoint itself.
const EDGE_ROOT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Label {
    Convex,
    Concave,
}

impl Label {
    pub fn short(&self) -> &'static str {
        match self {
            Label::Convex => "CX",
            Label::Concave => "CC",
        }
    }
}

/// Which argument produced a piece of the partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Laguerre with `α ≤ 3`, or `α > 3` and `n < (α+1)/(α-3)`: the
    /// stationary point of `F` lies left of the first zero.
    LaguerreStationaryBeforeFirstZero,
    /// Laguerre with `α > 3` and `n ≥ (α+1)/(α-3)`: split at `t0`.
    LaguerreSplitAtStationaryPoint,
    /// Jacobi with `|α| > 1`, `|β| < 1`, `D < 0`: `F` decreasing on `(-1, 1)`.
    JacobiMonotoneDecreasing,
    /// Ultraspherical with `|α| < 1`.
    UltrasphericalSmallParameter,
    /// Ultraspherical with `|α| > 1` and `(n+α)(n+α+1) ≤ 2(α²-1)`.
    UltrasphericalNoOuterRoots,
    /// Ultraspherical with `|α| > 1` and `(n+α)(n+α+1) > 2(α²-1)`.
    UltrasphericalOuterRoots,
    /// Sign pattern of `j` between its real roots.
    JRootAnalysis,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Piece {
    pub interval: Interval,
    pub label: Label,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvexityReport {
    pub spec: FamilySpec,
    pub partition: Vec<Piece>,
    /// Interior breakpoints, ascending.
    pub boundaries: Vec<f64>,
}

impl ConvexityReport {
    fn from_breakpoints(
        spec: &FamilySpec,
        boundaries: Vec<f64>,
        labels: &[Label],
        provenance: Provenance,
    ) -> Self {
        debug_assert_eq!(boundaries.len() + 1, labels.len());
        let support = spec.support();
        let mut edges = Vec::with_capacity(boundaries.len() + 2);
        edges.push(support.lo);
        edges.extend(boundaries.iter().copied());
        edges.push(support.hi);
        let partition = edges
            .windows(2)
            .zip(labels)
            .map(|(w, &label)| Piece {
                interval: Interval::new(w[0], w[1]),
                label,
                provenance,
            })
            .collect();
        ConvexityReport {
            spec: *spec,
            partition,
            boundaries,
        }
    }

    pub fn labels(&self) -> Vec<Label> {
        self.partition.iter().map(|p| p.label).collect()
    }

    /// Index of the piece whose closure contains `[lo, hi]`.
    pub fn piece_containing(&self, lo: f64, hi: f64) -> Option<usize> {
        self.partition
            .iter()
            .position(|p| p.interval.lo <= lo && hi <= p.interval.hi)
    }
}

/// Partition from the closed-form case analysis, falling back to
/// [`classify_from_j_roots`] where no case applies.
pub fn classify_theoretical(
    spec: &FamilySpec,
    profile: &NormalFormProfile,
) -> Result<ConvexityReport> {
    validate(*spec, Purpose::Classification)?;
    use Label::{Concave, Convex};
    let a = spec.alpha;
    let n = spec.degree as f64;
    match spec.kind {
        FamilyKind::Laguerre => {
            let few_zeros = a <= 3.0 || n < (a + 1.0) / (a - 3.0);
            if few_zeros {
                Ok(ConvexityReport::from_breakpoints(
                    spec,
                    Vec::new(),
                    &[Convex],
                    Provenance::LaguerreStationaryBeforeFirstZero,
                ))
            } else {
                let t0 = profile.t0.unwrap_or((a * a - 1.0) / (a + 2.0 * n + 1.0));
                Ok(ConvexityReport::from_breakpoints(
                    spec,
                    vec![t0],
                    &[Concave, Convex],
                    Provenance::LaguerreSplitAtStationaryPoint,
                ))
            }
        }
        FamilyKind::Jacobi => {
            let b = spec.effective_beta().unwrap_or(a);
            let d = profile.discriminant.unwrap_or(f64::NAN);
            if a.abs() > 1.0 && b.abs() < 1.0 && d < 0.0 && !profile.discriminant_degenerate {
                Ok(ConvexityReport::from_breakpoints(
                    spec,
                    Vec::new(),
                    &[Convex],
                    Provenance::JacobiMonotoneDecreasing,
                ))
            } else {
                classify_from_j_roots(spec, profile)
            }
        }
        FamilyKind::Ultraspherical => {
            if a.abs() < 1.0 {
                Ok(ConvexityReport::from_breakpoints(
                    spec,
                    vec![0.0],
                    &[Convex, Concave],
                    Provenance::UltrasphericalSmallParameter,
                ))
            } else if a.abs() == 1.0 {
                classify_from_j_roots(spec, profile)
            } else if (n + a) * (n + a + 1.0) <= 2.0 * (a * a - 1.0) {
                Ok(ConvexityReport::from_breakpoints(
                    spec,
                    vec![0.0],
                    &[Concave, Convex],
                    Provenance::UltrasphericalNoOuterRoots,
                ))
            } else {
                let (t1, t2) = match profile.big_t12 {
                    Some(t) => t,
                    None => return classify_from_j_roots(spec, profile),
                };
                Ok(ConvexityReport::from_breakpoints(
                    spec,
                    vec![t1, 0.0, t2],
                    &[Concave, Convex, Concave, Convex],
                    Provenance::UltrasphericalOuterRoots,
                ))
            }
        }
    }
}

/// Partition of `(-1, 1)` into maximal pieces where `j` keeps one sign:
/// `j > 0` means `F` decreasing (convex), `j < 0` means `F` increasing
/// (concave).
pub fn classify_from_j_roots(
    spec: &FamilySpec,
    profile: &NormalFormProfile,
) -> Result<ConvexityReport> {
    if spec.kind == FamilyKind::Laguerre {
        return Err(Error::UnsupportedFamily {
            operation: "j-root classification",
            kind: spec.kind,
        });
    }
    let z = profile.z_aux.unwrap_or_else(|| JacobiAux::of(spec).z);
    if !(z > 0.0) {
        return Err(Error::DegenerateCubic { leading: z });
    }
    validate(*spec, Purpose::Classification)?;

    let inner = Interval::new(-1.0 + EDGE_ROOT_TOL, 1.0 - EDGE_ROOT_TOL);
    let roots = j_roots_in(spec, &inner);
    let mut edges = vec![-1.0];
    edges.extend(roots.iter().copied());
    edges.push(1.0);

    let mut boundaries = Vec::new();
    let mut labels: Vec<Label> = Vec::new();
    for w in edges.windows(2) {
        let mid = 0.5 * (w[0] + w[1]);
        let j = j_eval_unchecked(spec, mid);
        let label = if j > 0.0 {
            Label::Convex
        } else if j < 0.0 {
            Label::Concave
        } else {
            continue;
        };
        match labels.last() {
            Some(&last) if last == label => {}
            Some(_) => {
                boundaries.push(w[0]);
                labels.push(label);
            }
            None => labels.push(label),
        }
    }
    Ok(ConvexityReport::from_breakpoints(
        spec,
        boundaries,
        &labels,
        Provenance::JRootAnalysis,
    ))
}

/// Left-to-right label sequence of `F`'s monotonicity pieces for fixed
/// `(α, β)` and large degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    #[serde(rename = "CX-CC")]
    ConvexConcave,
    #[serde(rename = "CC-CX-CC")]
    ConcaveConvexConcave,
    #[serde(rename = "CX-CC-CX")]
    ConvexConcaveConvex,
    #[serde(rename = "CC-CX-CC-CX")]
    ConcaveConvexConcaveConvex,
}

impl Pattern {
    pub fn labels(&self) -> Vec<Label> {
        use Label::{Concave as CC, Convex as CX};
        match self {
            Pattern::ConvexConcave => vec![CX, CC],
            Pattern::ConcaveConvexConcave => vec![CC, CX, CC],
            Pattern::ConvexConcaveConvex => vec![CX, CC, CX],
            Pattern::ConcaveConvexConcaveConvex => vec![CC, CX, CC, CX],
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&label_string(&self.labels()))
    }
}

/// `"CX-CC-..."` rendering of a label sequence.
pub fn label_string(labels: &[Label]) -> String {
    labels
        .iter()
        .map(Label::short)
        .collect::<Vec<_>>()
        .join("-")
}

/// Large-degree pattern, decided by `|α|` and `|β|` against 1.
pub fn asymptotic_pattern(alpha: f64, beta: f64) -> Pattern {
    match (alpha.abs() <= 1.0, beta.abs() <= 1.0) {
        (true, true) => Pattern::ConvexConcave,
        (true, false) => Pattern::ConcaveConvexConcave,
        (false, true) => Pattern::ConvexConcaveConvex,
        (false, false) => Pattern::ConcaveConvexConcaveConvex,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Agrees,
    Disagrees,
    Straddles,
    BelowTolerance,
}

/// Verdict for the zero triple `(x_k, x_{k+1}, x_{k+2})`, `k` counted from 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TripleVerdict {
    pub k: usize,
    pub piece: Option<usize>,
    pub second_difference: f64,
    pub sign: i8,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalClassification {
    pub triples: Vec<TripleVerdict>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictCounts {
    pub agrees: usize,
    pub disagrees: usize,
    pub straddles: usize,
    pub below_tolerance: usize,
}

impl VerdictCounts {
    pub fn total(&self) -> usize {
        self.agrees + self.disagrees + self.straddles + self.below_tolerance
    }
}

impl EmpiricalClassification {
    pub fn counts(&self) -> VerdictCounts {
        let mut c = VerdictCounts::default();
        for t in &self.triples {
            match t.verdict {
                Verdict::Agrees => c.agrees += 1,
                Verdict::Disagrees => c.disagrees += 1,
                Verdict::Straddles => c.straddles += 1,
                Verdict::BelowTolerance => c.below_tolerance += 1,
            }
        }
        c
    }

    /// Collapsed sequence of second-difference signs over the triples that
    /// sit inside a single piece and clear the tolerance.
    pub fn label_sequence(&self) -> Vec<Label> {
        let mut seq: Vec<Label> = Vec::new();
        for t in &self.triples {
            if !matches!(t.verdict, Verdict::Agrees | Verdict::Disagrees) {
                continue;
            }
            let label = if t.sign > 0 {
                Label::Convex
            } else {
                Label::Concave
            };
            if seq.last() != Some(&label) {
                seq.push(label);
            }
        }
        seq
    }
}

/// Compares the sign of each second difference with the theoretical label of
/// the piece holding its triple.
pub fn classify_empirical(
    zs: &ZeroSet,
    report: &ConvexityReport,
    tol_rel: f64,
) -> Result<EmpiricalClassification> {
    let n = zs.zeros.len();
    if n < 3 {
        return Err(Error::DegreeTooSmall {
            operation: "empirical classification",
            needed: 3,
            got: n,
        });
    }
    let triples = zs
        .second_differences
        .iter()
        .enumerate()
        .map(|(i, &sd)| {
            let piece = report.piece_containing(zs.zeros[i], zs.zeros[i + 2]);
            let sign = if sd > 0.0 {
                1
            } else if sd < 0.0 {
                -1
            } else {
                0
            };
            let verdict = if sd.abs() <= tol_rel * zs.spacings[i] {
                Verdict::BelowTolerance
            } else {
                match piece {
                    None => Verdict::Straddles,
                    Some(p) => {
                        let expected = match report.partition[p].label {
                            Label::Convex => 1,
                            Label::Concave => -1,
                        };
                        if sign == expected {
                            Verdict::Agrees
                        } else {
                            Verdict::Disagrees
                        }
                    }
                }
            };
            TripleVerdict {
                k: i + 1,
                piece,
                second_difference: sd,
                sign,
                verdict,
            }
        })
        .collect();
    Ok(EmpiricalClassification { triples })
}
