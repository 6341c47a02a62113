//! Special-function substrate: log-gamma, generalized Laguerre polynomials of
//! real order, and Gauss-Laguerre quadrature with weight `s^τ e^{-s}`.

use thiserror::Error;

use crate::tridiag;

/// Default node count used for normalization and orthogonality checks. Far
/// exceeds the polynomial degrees in play, so those integrals are exact up
/// to rounding.
pub const DEFAULT_QUADRATURE_COUNT: usize = 200;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecialError {
    #[error("domain error: {name} = {value:e} violates {requirement}")]
    Domain {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },
    #[error("quadrature construction failed: {detail}")]
    Convergence { detail: &'static str },
}

impl SpecialError {
    pub fn code(&self) -> &'static str {
        match self {
            SpecialError::Domain { .. } => "DomainError",
            SpecialError::Convergence { .. } => "ConvergenceError",
        }
    }
}

/// Generalized Laguerre polynomial `L_n^{(τ)}(s)`.
///
/// Evaluated by the ascending three-term recurrence
/// `(k+1)·L_{k+1} = (2k+1+τ−s)·L_k − (k+τ)·L_{k−1}` seeded with `L₀ = 1`,
/// `L₁ = 1+τ−s`, which is stable for `s ≥ 0`. The order may be any real
/// `τ > −1`.
pub fn laguerre(n: u32, tau: f64, s: f64) -> Result<f64, SpecialError> {
    check_order(tau)?;
    if !s.is_finite() || s < 0.0 {
        return Err(SpecialError::Domain {
            name: "s",
            value: s,
            requirement: "s >= 0",
        });
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut curr = 1.0 + tau - s;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + tau - s) * curr - (kf + tau) * prev) / (kf + 1.0);
        prev = curr;
        curr = next;
    }
    Ok(curr)
}

fn check_order(tau: f64) -> Result<(), SpecialError> {
    if !tau.is_finite() || tau <= -1.0 {
        return Err(SpecialError::Domain {
            name: "tau",
            value: tau,
            requirement: "tau > -1",
        });
    }
    Ok(())
}

/// `(L_{n-1}, L_n)` scaled by a common power of two so the recurrence cannot
/// overflow for large degree or argument. Returns `(prev, curr, exp2)` with
/// the true values `prev·2^exp2` and `curr·2^exp2`.
fn laguerre_pair_scaled(n: u32, tau: f64, s: f64) -> (f64, f64, i64) {
    const THRESHOLD: f64 = 1e150;
    const RESCALE: f64 = 3.054936363499605e-151; // 2^-500
    const RESCALE_EXP: i64 = 500;

    if n == 0 {
        return (0.0, 1.0, 0);
    }
    let mut prev = 1.0_f64;
    let mut curr = 1.0 + tau - s;
    let mut exp2 = 0_i64;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + tau - s) * curr - (kf + tau) * prev) / (kf + 1.0);
        prev = curr;
        curr = next;
        if curr.abs() > THRESHOLD || prev.abs() > THRESHOLD {
            prev *= RESCALE;
            curr *= RESCALE;
            exp2 += RESCALE_EXP;
        }
    }
    (prev, curr, exp2)
}

// Stirling series coefficients B_{2k} / (2k(2k-1)) for ln Γ.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

fn log_gamma_stirling(x: f64) -> f64 {
    let mut series = 0.0;
    let x2 = x * x;
    let mut power = x;
    for &c in &STIRLING {
        series += c / power;
        power *= x2;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_TWO_PI + series
}

/// Natural logarithm of the gamma function for `x > 0`.
///
/// Uses the Stirling series directly for `x ≥ 10` and lifts smaller
/// arguments with `ln Γ(x) = ln Γ(x+1) − ln x`. Relative accuracy is a few
/// ulps across `[0.5, 200]`.
pub fn log_gamma(x: f64) -> Result<f64, SpecialError> {
    if !x.is_finite() || x <= 0.0 {
        return Err(SpecialError::Domain {
            name: "x",
            value: x,
            requirement: "x > 0",
        });
    }
    if x >= 10.0 {
        return Ok(log_gamma_stirling(x));
    }
    let mut shift = 0.0;
    let mut y = x;
    while y < 10.0 {
        shift += y.ln();
        y += 1.0;
    }
    Ok(log_gamma_stirling(y) - shift)
}

/// Sum of squares of the orthonormal Laguerre polynomials `p_0..p_{count-1}`
/// at `x` — the reciprocal of the Christoffel weight. Being a sum of
/// positive terms it stays well conditioned even where `L_{count-1}` nearly
/// vanishes (the first nodes, where consecutive-degree roots interlace
/// tightly). Overflows to infinity for far-tail nodes, where the weight
/// underflows to zero.
fn christoffel_inverse(count: usize, tau: f64, x: f64, mu0: f64) -> f64 {
    let mut p_prev = 0.0_f64;
    let mut p_curr = 1.0 / mu0.sqrt();
    let mut sum = p_curr * p_curr;
    let mut b_prev = 0.0_f64;
    for k in 0..count.saturating_sub(1) {
        let kf = k as f64;
        let a_k = 2.0 * kf + tau + 1.0;
        let b_k = ((kf + 1.0) * (kf + 1.0 + tau)).sqrt();
        let p_next = ((x - a_k) * p_curr - b_prev * p_prev) / b_k;
        p_prev = p_curr;
        p_curr = p_next;
        sum += p_curr * p_curr;
        if sum == f64::INFINITY {
            break;
        }
        b_prev = b_k;
    }
    sum
}

/// Nodes and weights of the `count`-point generalized Gauss-Laguerre rule
/// for the weight `s^τ e^{-s}` on `[0, ∞)`.
///
/// The rule integrates polynomials up to degree `2·count − 1` exactly;
/// the weights sum to `Γ(τ+1)`. Nodes are the eigenvalues of the symmetric
/// Jacobi matrix of the recurrence (found by Sturm bisection, then polished
/// with Newton steps on `L_count^{(τ)}`); weights come from the Christoffel
/// function `w_i = 1/Σ_k p_k(x_i)²`. Far-tail weights of large rules
/// underflow to zero, which is harmless for integrands of moderate degree.
pub fn gauss_laguerre_nodes(count: usize, tau: f64) -> Result<Vec<(f64, f64)>, SpecialError> {
    check_order(tau)?;
    if count == 0 {
        return Err(SpecialError::Domain {
            name: "count",
            value: 0.0,
            requirement: "count >= 1",
        });
    }

    // Symmetric Jacobi matrix: diag 2k+1+τ, off-diag sqrt(k(k+τ)).
    let diag: Vec<f64> = (0..count).map(|k| 2.0 * k as f64 + 1.0 + tau).collect();
    let off: Vec<f64> = (1..count)
        .map(|k| (k as f64 * (k as f64 + tau)).sqrt())
        .collect();
    let mut nodes = tridiag::lowest_eigenvalues(&diag, &off, count);

    let n = count as u32;
    let nf = count as f64;
    for x in nodes.iter_mut() {
        for _ in 0..3 {
            let (prev, curr, _) = laguerre_pair_scaled(n, tau, *x);
            let denom = nf * curr - (nf + tau) * prev;
            if denom == 0.0 {
                break;
            }
            let step = curr * *x / denom;
            *x -= step;
            if step.abs() <= 4.0 * f64::EPSILON * x.abs() {
                break;
            }
        }
        if !x.is_finite() || *x <= 0.0 {
            return Err(SpecialError::Convergence {
                detail: "node polishing left the positive axis",
            });
        }
    }

    let mu0 = log_gamma(tau + 1.0)?.exp();
    let mut pairs = Vec::with_capacity(count);
    let mut last = 0.0;
    for &x in &nodes {
        if x <= last {
            return Err(SpecialError::Convergence {
                detail: "nodes are not strictly ascending",
            });
        }
        last = x;
        let w = 1.0 / christoffel_inverse(count, tau, x, mu0);
        if !w.is_finite() || w < 0.0 {
            return Err(SpecialError::Convergence {
                detail: "invalid quadrature weight",
            });
        }
        pairs.push((x, w));
    }
    Ok(pairs)
}

/// Integrate `f` against the weight `s^τ e^{-s}` with a prebuilt rule.
pub fn integrate<F: FnMut(f64) -> f64>(pairs: &[(f64, f64)], mut f: F) -> f64 {
    pairs.iter().map(|&(x, w)| w * f(x)).sum()
}
