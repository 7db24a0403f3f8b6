use thiserror::Error;

use crate::family::FamilyKind;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter out of range: {condition} does not hold")]
    ParameterOutOfRange { condition: String },

    #[error("degree must be at least 1")]
    DegreeNonPositive,

    #[error("numerical overflow: {0}")]
    Overflow(String),

    #[error("t = {t} lies outside the open interval ({lo}, {hi})")]
    DomainViolation { t: f64, lo: f64, hi: f64 },

    #[error("{operation} is not defined for the {kind} family")]
    UnsupportedFamily {
        operation: &'static str,
        kind: FamilyKind,
    },

    #[error("zero {index} failed to converge: {reason}")]
    ConvergenceFailure { index: usize, reason: String },

    #[error("{operation} needs at least {needed} zeros, got {got}")]
    DegreeTooSmall {
        operation: &'static str,
        needed: usize,
        got: usize,
    },

    #[error("cubic j(t) is degenerate: leading coefficient {leading} is not positive")]
    DegenerateCubic { leading: f64 },
}

impl Error {
    /// True for failures of the numerics themselves rather than of the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Overflow(_) | Error::ConvergenceFailure { .. } | Error::DegenerateCubic { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
