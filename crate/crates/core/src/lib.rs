//! Zeros of Laguerre, Jacobi and ultraspherical polynomials, the Sturm normal
//! form of their differential equations, the convexity pattern of the zeros
//! and spacing bounds between consecutive zeros.

// `!(x > y)` is used on purpose so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod convexity;
pub mod cubic;
pub mod error;
pub mod family;
pub mod interval;
pub mod normal_form;
pub mod sweep;
pub mod tridiagonal;
pub mod zeros;

pub use bounds::{
    gap_bounds, laguerre_global_bound, ultraspherical_global_bounds, verify_suite, BoundSource,
    BoundSuiteReport, GapBoundRecord, LaguerreGlobalBound, UltrasphericalGlobalBounds,
};
pub use convexity::{
    asymptotic_pattern, classify_empirical, classify_from_j_roots, classify_theoretical,
    ConvexityReport, EmpiricalClassification, Label, Pattern, Verdict,
};
pub use error::{Error, Result};
pub use family::{
    evaluate, recurrence_coefficients, validate, EvalResult, FamilyKind, FamilySpec, Purpose,
    RecurrenceCoefficients,
};
pub use interval::Interval;
pub use normal_form::{
    critical_points, discriminant, f_eval, f_infimum, f_supremum, j_eval, normal_form_generic,
    NormalFormProfile, OdeCoefficients,
};
pub use zeros::{compute_zeros, first_zero_bounds, spacing_profile, FirstZeroBounds, ZeroSet};
