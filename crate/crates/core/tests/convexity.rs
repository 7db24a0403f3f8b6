use ortho_zeros::convexity::{label_string, DEFAULT_TOL_REL};
use ortho_zeros::{
    asymptotic_pattern, classify_empirical, classify_from_j_roots, classify_theoretical,
    compute_zeros, critical_points, ConvexityReport, FamilySpec, Label, Verdict,
};
use proptest::prelude::*;

fn theoretical(spec: &FamilySpec) -> ConvexityReport {
    classify_theoretical(spec, &critical_points(spec).unwrap()).unwrap()
}

fn by_j_roots(spec: &FamilySpec) -> ConvexityReport {
    classify_from_j_roots(spec, &critical_points(spec).unwrap()).unwrap()
}

fn swapped(l: Label) -> Label {
    match l {
        Label::Convex => Label::Concave,
        Label::Concave => Label::Convex,
    }
}

fn assert_same_partition(a: &ConvexityReport, b: &ConvexityReport) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.labels(), b.labels(), "{}", a.spec);
    prop_assert_eq!(a.boundaries.len(), b.boundaries.len());
    for (x, y) in a.boundaries.iter().zip(&b.boundaries) {
        prop_assert!((x - y).abs() <= 1e-9, "{}: {} vs {}", a.spec, x, y);
    }
    Ok(())
}

fn assert_mirrored(a: &ConvexityReport, b: &ConvexityReport) -> Result<(), TestCaseError> {
    let mirrored: Vec<Label> = a.labels().into_iter().rev().map(swapped).collect();
    prop_assert_eq!(mirrored, b.labels(), "{} vs {}", a.spec, b.spec);
    for (x, y) in a.boundaries.iter().rev().zip(&b.boundaries) {
        prop_assert!((x + y).abs() <= 1e-9);
    }
    Ok(())
}

// Keeps the parameters clear of ±1, where the theoretical cases switch.
fn off_unit() -> impl Strategy<Value = f64> {
    prop_oneof![-0.95f64..0.95, 1.05f64..30.0]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ultraspherical_cases_match_j_roots(a in off_unit(), n in 2usize..200) {
        let spec = FamilySpec::ultraspherical(a, n);
        assert_same_partition(&theoretical(&spec), &by_j_roots(&spec))?;
    }

    #[test]
    fn jacobi_cases_match_j_roots(a in off_unit(), b in off_unit(), n in 2usize..200) {
        let spec = FamilySpec::jacobi(a, b, n);
        assert_same_partition(&theoretical(&spec), &by_j_roots(&spec))?;
    }

    #[test]
    fn at_most_four_pieces(a in -0.99f64..30.0, b in -0.99f64..30.0, n in 2usize..200) {
        for spec in [FamilySpec::jacobi(a, b, n), FamilySpec::ultraspherical(a, n), FamilySpec::laguerre(a, n)] {
            let r = theoretical(&spec);
            prop_assert!(!r.partition.is_empty() && r.partition.len() <= 4);
            prop_assert_eq!(r.boundaries.len() + 1, r.partition.len());
            prop_assert!(r.boundaries.windows(2).all(|w| w[0] < w[1]));
            for w in r.labels().windows(2) {
                prop_assert_ne!(w[0], w[1]);
            }
        }
    }

    #[test]
    fn ultraspherical_partition_is_mirror_symmetric(a in -0.99f64..30.0, n in 2usize..200) {
        let r = theoretical(&FamilySpec::ultraspherical(a, n));
        assert_mirrored(&r, &r)?;
    }

    #[test]
    fn swapping_jacobi_parameters_mirrors(a in -0.99f64..30.0, b in -0.99f64..30.0, n in 2usize..200) {
        let r = by_j_roots(&FamilySpec::jacobi(a, b, n));
        let s = by_j_roots(&FamilySpec::jacobi(b, a, n));
        assert_mirrored(&r, &s)?;
    }

    #[test]
    fn second_differences_never_contradict(a in -0.99f64..30.0, b in -0.99f64..30.0, n in 3usize..150) {
        for spec in [FamilySpec::jacobi(a, b, n), FamilySpec::ultraspherical(a, n), FamilySpec::laguerre(a, n)] {
            let zs = compute_zeros(&spec).unwrap();
            let emp = classify_empirical(&zs, &theoretical(&spec), DEFAULT_TOL_REL).unwrap();
            prop_assert_eq!(emp.triples.len(), n - 2);
            for t in &emp.triples {
                prop_assert_ne!(t.verdict, Verdict::Disagrees, "{} triple {}", spec, t.k);
            }
        }
    }
}

#[test]
fn large_degree_j_root_labels_follow_parameter_pattern() {
    for &(a, b) in &[
        (-0.5, 0.5),
        (0.3, 4.0),
        (2.0, -0.5),
        (2.0, 3.0),
        (7.5, 0.0),
        (-0.8, -0.8),
        (12.0, 12.0),
    ] {
        let spec = FamilySpec::jacobi(a, b, 200);
        let got = by_j_roots(&spec).labels();
        let want = asymptotic_pattern(a, b);
        assert_eq!(label_string(&got), want.to_string(), "({a}, {b})");
    }
}

#[test]
fn laguerre_concave_piece_holds_no_triples() {
    for a in [3.5, 4.0, 6.0, 10.0, 30.0] {
        for n in [3, 10, 40, 200] {
            let spec = FamilySpec::laguerre(a, n);
            let r = theoretical(&spec);
            let zs = compute_zeros(&spec).unwrap();
            let emp = classify_empirical(&zs, &r, DEFAULT_TOL_REL).unwrap();
            for t in &emp.triples {
                if let Some(p) = t.piece {
                    assert_eq!(r.partition[p].label, Label::Convex, "{spec} triple {}", t.k);
                }
            }
        }
    }
}
