//! JSON report envelope written to standard output.

use ortho_zeros::convexity::{EmpiricalClassification, VerdictCounts};
use ortho_zeros::sweep::SweepSummary;
use ortho_zeros::{BoundSuiteReport, ConvexityReport, FamilySpec, NormalFormProfile, ZeroSet};
use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub tool_version: String,
    /// The spec built from the command line; absent for sweeps.
    pub spec_echo: Option<FamilySpec>,
    pub payload: Payload,
}

impl ReportEnvelope {
    pub fn new(spec_echo: Option<FamilySpec>, payload: Payload) -> Self {
        ReportEnvelope {
            tool_version: TOOL_VERSION.to_string(),
            spec_echo,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Payload {
    Zeros(ZeroSet),
    NormalForm(NormalFormPayload),
    Classification(ClassificationPayload),
    Bounds(BoundSuiteReport),
    Sweep(SweepSummary),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalFormPoint {
    pub t: f64,
    pub f: f64,
    /// `None` for Laguerre, which has no cubic numerator.
    pub j: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalFormPayload {
    pub profile: NormalFormProfile,
    pub grid: Vec<NormalFormPoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationPayload {
    pub report: ConvexityReport,
    /// Needs at least three zeros.
    pub empirical: Option<EmpiricalClassification>,
    pub counts: Option<VerdictCounts>,
    /// Collapsed `CX-CC-...` sequence of the agreeing and disagreeing triples.
    pub empirical_labels: Option<String>,
}
