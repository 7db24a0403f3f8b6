// Reference values keep all the digits they were computed with.
#![allow(clippy::excessive_precision)]

use ortho_zeros::{evaluate, recurrence_coefficients, tridiagonal, FamilySpec};
use proptest::prelude::*;

fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs()
}

// Reference values from 50-digit arithmetic.
#[test]
fn jacobi_high_degree_reference_values() {
    let cases = [
        (
            200,
            0.0,
            0.0,
            0.3,
            -0.009_759_672_054_427_991_4,
            11.949_608_936_223_271,
        ),
        (
            200,
            30.0,
            -0.5,
            0.7,
            146_029_144_554.835_01,
            13_218_719_702_480.371,
        ),
        (
            150,
            2.5,
            7.0,
            -0.95,
            43_307.936_201_241_076,
            -10_061_863.691_546_867,
        ),
        (
            50,
            0.5,
            0.5,
            0.123,
            -0.158_821_286_608_333_29,
            0.027_020_433_773_084_048,
        ),
    ];
    for (n, a, b, t, value, derivative) in cases {
        let r = evaluate(&FamilySpec::jacobi(a, b, n), t).unwrap();
        assert!(
            rel_err(r.value, value) < 1e-12,
            "P_{n}^({a},{b})({t}) = {} vs {value}",
            r.value
        );
        assert!(
            rel_err(r.derivative, derivative) < 1e-12,
            "derivative {} vs {derivative}",
            r.derivative
        );
    }
}

#[test]
fn laguerre_high_degree_reference_values() {
    let cases = [
        (
            200,
            0.0,
            1.5,
            -0.224_361_082_124_431_31,
            -2.141_013_768_793_762_7,
        ),
        (
            200,
            30.0,
            400.0,
            2.258_279_619_502_371_4e81,
            3.846_151_168_106_258_2e80,
        ),
        (
            100,
            -0.5,
            37.25,
            4_300_667.115_935_964_3,
            -6_639_588.411_232_479_8,
        ),
        (
            10,
            3.0,
            2.0,
            -0.430_758_377_425_044_09,
            24.144_268_077_601_411,
        ),
    ];
    for (n, a, t, value, derivative) in cases {
        let r = evaluate(&FamilySpec::laguerre(a, n), t).unwrap();
        assert!(
            rel_err(r.value, value) < 1e-12,
            "L_{n}^{a}({t}) = {} vs {value}",
            r.value
        );
        assert!(
            rel_err(r.derivative, derivative) < 1e-12,
            "derivative {} vs {derivative}",
            r.derivative
        );
    }
}

/// Explicit sum `L_n^α(t) = Σ (-1)^i binom(n+α, n-i) t^i / i!`.
fn laguerre_explicit(n: usize, a: f64, t: f64) -> f64 {
    let mut sum = 0.0;
    for i in 0..=n {
        // binom(n+α, n-i) = Π_{m=1}^{n-i} (i+α+m)/m
        let mut c = 1.0;
        for m in 1..=(n - i) {
            c *= (i as f64 + a + m as f64) / m as f64;
        }
        let mut term = c;
        for m in 1..=i {
            term *= t / m as f64;
        }
        sum += if i % 2 == 0 { term } else { -term };
    }
    sum
}

#[test]
fn laguerre_matches_explicit_sum() {
    for n in 1..8 {
        for &a in &[-0.5, 0.0, 1.5, 4.0] {
            for &t in &[0.1, 0.9, 2.5] {
                let got = evaluate(&FamilySpec::laguerre(a, n), t).unwrap().value;
                let want = laguerre_explicit(n, a, t);
                assert!(
                    (got - want).abs() <= 1e-12 * want.abs().max(1.0),
                    "{n} {a} {t}"
                );
            }
        }
    }
}

#[test]
fn eigenvalue_count_matches_sign_changes() {
    let specs = [
        FamilySpec::laguerre(0.5, 12),
        FamilySpec::jacobi(-0.3, 1.7, 15),
        FamilySpec::ultraspherical(2.0, 9),
    ];
    for spec in specs {
        let rc = recurrence_coefficients(&spec).unwrap();
        let ev = tridiagonal::eigenvalues(&rc.diagonal, &rc.offdiagonal);
        let (lo, hi) = match spec.kind {
            ortho_zeros::FamilyKind::Laguerre => (1e-9, 80.0),
            _ => (-1.0 + 1e-12, 1.0 - 1e-12),
        };
        let steps = 20_000;
        let mut changes = 0;
        let mut prev = evaluate(&spec, lo).unwrap().value;
        for i in 1..=steps {
            let t = lo + (hi - lo) * i as f64 / steps as f64;
            let v = evaluate(&spec, t).unwrap().value;
            if v.signum() != prev.signum() {
                changes += 1;
            }
            prev = v;
        }
        assert_eq!(changes, ev.len(), "{spec}");
        assert_eq!(ev.len(), spec.degree);
    }
}

fn any_jacobi() -> impl Strategy<Value = FamilySpec> {
    (-0.95f64..10.0, -0.95f64..10.0, 1usize..60).prop_map(|(a, b, n)| FamilySpec::jacobi(a, b, n))
}

proptest! {
    #[test]
    fn symmetric_parity(a in -0.95f64..20.0, n in 1usize..80, t in -1.0f64..1.0) {
        let spec = FamilySpec::ultraspherical(a, n);
        let plus = evaluate(&spec, t).unwrap().value;
        let minus = evaluate(&spec, -t).unwrap().value;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((minus - sign * plus).abs() <= 1e-12 * plus.abs().max(1e-300) + 1e-300);
    }

    #[test]
    fn derivative_matches_central_difference(spec in any_jacobi(), t in -0.9f64..0.9) {
        let h = 1e-6 * t.abs().max(1.0);
        let r = evaluate(&spec, t).unwrap();
        let fd = (evaluate(&spec, t + h).unwrap().value - evaluate(&spec, t - h).unwrap().value) / (2.0 * h);
        // near a critical point of p compare against the curvature term instead
        let curvature = (evaluate(&spec, t + h).unwrap().derivative - r.derivative).abs() * 1e3;
        prop_assert!((fd - r.derivative).abs() <= 1e-6 * r.derivative.abs().max(curvature).max(1e-12),
            "fd {} vs {} for {}", fd, r.derivative, spec);
    }

    #[test]
    fn laguerre_derivative_matches_central_difference(a in -0.9f64..10.0, n in 1usize..40, t in 0.05f64..30.0) {
        let spec = FamilySpec::laguerre(a, n);
        let h = 1e-6 * t.max(1.0);
        let r = evaluate(&spec, t).unwrap();
        let fd = (evaluate(&spec, t + h).unwrap().value - evaluate(&spec, t - h).unwrap().value) / (2.0 * h);
        let curvature = (evaluate(&spec, t + h).unwrap().derivative - r.derivative).abs() * 1e3;
        prop_assert!((fd - r.derivative).abs() <= 1e-6 * r.derivative.abs().max(curvature).max(1e-12));
    }

    #[test]
    fn jacobi_with_equal_parameters_is_ultraspherical(a in -0.95f64..20.0, n in 1usize..100, t in -1.0f64..1.0) {
        let j = evaluate(&FamilySpec::jacobi(a, a, n), t).unwrap().value;
        let u = evaluate(&FamilySpec::ultraspherical(a, n), t).unwrap().value;
        prop_assert_eq!(j, u);
    }

    #[test]
    fn offdiagonal_positive(spec in any_jacobi(), a in -0.99f64..30.0, n in 1usize..200) {
        for s in [spec, FamilySpec::laguerre(a, n)] {
            let rc = recurrence_coefficients(&s).unwrap();
            prop_assert_eq!(rc.diagonal.len(), s.degree);
            prop_assert_eq!(rc.offdiagonal.len(), s.degree - 1);
            prop_assert!(rc.offdiagonal.iter().all(|b| *b > 0.0));
        }
    }
}
