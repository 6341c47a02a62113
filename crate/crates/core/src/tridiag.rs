//! Sturm-sequence bisection for symmetric tridiagonal eigenvalue problems.
//!
//! Counts eigenvalues below a shift with the LDLᵀ pivot-sign recurrence and
//! brackets the lowest eigenvalues by bisection inside Gershgorin bounds.
//! Only eigenvalues are produced; no eigenvectors.

/// Pivots smaller than this in magnitude are nudged away from zero so the
/// LDLᵀ recurrence stays finite.
const PIVOT_GUARD: f64 = 1e-300;

const MAX_BISECTIONS: usize = 200;

/// Count eigenvalues of the symmetric tridiagonal matrix strictly below `shift`.
///
/// `diag` holds the main diagonal, `off` the sub/super-diagonal
/// (`off.len() == diag.len() - 1`). The count equals the number of negative
/// pivots in the LDLᵀ factorization of `A - shift·I`.
pub fn sturm_count(diag: &[f64], off: &[f64], shift: f64) -> usize {
    let n = diag.len();
    debug_assert_eq!(off.len() + 1, n.max(1));
    if n == 0 {
        return 0;
    }

    let mut count = 0;
    let mut pivot = diag[0] - shift;
    if pivot < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let safe = if pivot.abs() < PIVOT_GUARD {
            if pivot >= 0.0 {
                PIVOT_GUARD
            } else {
                -PIVOT_GUARD
            }
        } else {
            pivot
        };
        pivot = (diag[i] - shift) - off[i - 1] * off[i - 1] / safe;
        if pivot < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval guaranteed to contain the whole spectrum.
fn spectrum_bounds(diag: &[f64], off: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::MAX;
    let mut hi = f64::MIN;
    for i in 0..n {
        let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let right = if i < n - 1 { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    (lo - 1.0, hi + 1.0)
}

/// Lowest `m` eigenvalues in ascending order, each bisected until the
/// bracket collapses to a few ulps.
pub fn lowest_eigenvalues(diag: &[f64], off: &[f64], m: usize) -> Vec<f64> {
    let n = diag.len();
    assert!(m <= n, "asked for {m} eigenvalues of a {n}x{n} matrix");
    if n == 0 || m == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![diag[0]];
    }

    let (lo, hi) = spectrum_bounds(diag, off);
    let mut eigenvalues = Vec::with_capacity(m);
    for k in 0..m {
        // eigenvalues come out in ascending order, so the previous value is
        // a valid lower bracket for the next one
        let mut a = eigenvalues.last().copied().unwrap_or(lo);
        let mut b = hi;
        for _ in 0..MAX_BISECTIONS {
            let mid = 0.5 * (a + b);
            if (b - a) < 2.0 * f64::EPSILON * mid.abs().max(1e-300) {
                break;
            }
            if sturm_count(diag, off, mid) <= k {
                a = mid;
            } else {
                b = mid;
            }
        }
        eigenvalues.push(0.5 * (a + b));
    }
    eigenvalues
}
