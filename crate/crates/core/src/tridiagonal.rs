//! Eigenvalues of a symmetric tridiagonal matrix by bisection on Sturm
//! sequence counts.

/// Number of eigenvalues strictly less than `x`.
///
/// Counts negative pivots of the LDLᵀ factorization of `T - xI`.
pub fn sturm_count(diagonal: &[f64], offdiagonal: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for (i, &d) in diagonal.iter().enumerate() {
        let b2 = if i == 0 {
            0.0
        } else {
            offdiagonal[i - 1] * offdiagonal[i - 1]
        };
        q = if i == 0 { d - x } else { d - x - b2 / q };
        if q == 0.0 {
            q = -f64::EPSILON * (d.abs() + x.abs()).max(f64::MIN_POSITIVE);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval enclosing the whole spectrum.
pub fn gershgorin_bounds(diagonal: &[f64], offdiagonal: &[f64]) -> (f64, f64) {
    let n = diagonal.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { offdiagonal[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { offdiagonal[i].abs() } else { 0.0 };
        let r = left + right;
        lo = lo.min(diagonal[i] - r);
        hi = hi.max(diagonal[i] + r);
    }
    (lo, hi)
}

/// All eigenvalues in ascending order.
///
/// Each eigenvalue is isolated independently by bisection, so the result is
/// deterministic and does not depend on the others.
pub fn eigenvalues(diagonal: &[f64], offdiagonal: &[f64]) -> Vec<f64> {
    assert_eq!(
        offdiagonal.len() + 1,
        diagonal.len().max(1),
        "offdiagonal must have n-1 entries"
    );
    if diagonal.is_empty() {
        return Vec::new();
    }
    let (glo, ghi) = gershgorin_bounds(diagonal, offdiagonal);
    let pad = f64::EPSILON * glo.abs().max(ghi.abs()).max(1.0);
    let (glo, ghi) = (glo - pad, ghi + pad);
    (0..diagonal.len())
        .map(|k| kth_eigenvalue(diagonal, offdiagonal, k, glo, ghi))
        .collect()
}

fn kth_eigenvalue(diagonal: &[f64], offdiagonal: &[f64], k: usize, lo: f64, hi: f64) -> f64 {
    let (mut lo, mut hi) = (lo, hi);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if hi - lo <= 2.0 * f64::EPSILON * lo.abs().max(hi.abs()) {
            break;
        }
        if sturm_count(diagonal, offdiagonal, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}
