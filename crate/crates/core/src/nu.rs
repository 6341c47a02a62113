//! Parametric Nikiforov-Uvarov machinery: derived parameters, the general
//! quantization condition as a residual, and the α₃ = 0 eigenfunction branch
//! where the Jacobi polynomial degenerates to a generalized Laguerre one.

use thiserror::Error;

use crate::special::{self, SpecialError};

/// Discriminants whose square roots must be real.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Discriminant {
    Alpha8,
    Alpha9,
}

impl std::fmt::Display for Discriminant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Discriminant::Alpha8 => write!(f, "alpha8"),
            Discriminant::Alpha9 => write!(f, "alpha9"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NuError {
    #[error("negative discriminant: {which} = {value:e} < 0")]
    NegativeDiscriminant { which: Discriminant, value: f64 },
    #[error("eigenfunctions are implemented for alpha3 = 0 only, got {alpha3:e}")]
    Unsupported { alpha3: f64 },
    #[error("parameter {name} = {value:e} violates {requirement}")]
    InvalidInput {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },
    #[error("no sign change on [{lo:e}, {hi:e}] (f = {f_lo:e}, {f_hi:e})")]
    NoBracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
    #[error(transparent)]
    Special(#[from] SpecialError),
}

impl NuError {
    pub fn code(&self) -> &'static str {
        match self {
            NuError::NegativeDiscriminant { .. } => "NegativeDiscriminant",
            NuError::Unsupported { .. } => "Unsupported",
            NuError::InvalidInput { .. } => "InvalidInput",
            NuError::NoBracket { .. } => "NoBracket",
            NuError::Special(e) => e.code(),
        }
    }
}

/// The six inputs of the hypergeometric-type equation
/// `ψ'' + (α₁−α₂s)/(s(1−α₃s)) ψ' + (−ξ₁s² + ξ₂s − ξ₃)/(s²(1−α₃s)²) ψ = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuInput {
    pub alpha1: f64,
    pub alpha2: f64,
    pub alpha3: f64,
    pub xi1: f64,
    pub xi2: f64,
    pub xi3: f64,
}

impl NuInput {
    pub fn new(
        alpha1: f64,
        alpha2: f64,
        alpha3: f64,
        xi1: f64,
        xi2: f64,
        xi3: f64,
    ) -> Result<Self, NuError> {
        for (name, value) in [
            ("alpha1", alpha1),
            ("alpha2", alpha2),
            ("alpha3", alpha3),
            ("xi1", xi1),
            ("xi2", xi2),
            ("xi3", xi3),
        ] {
            if !value.is_finite() {
                return Err(NuError::InvalidInput {
                    name,
                    value,
                    requirement: "finite",
                });
            }
        }
        if xi1 <= 0.0 {
            return Err(NuError::InvalidInput {
                name: "xi1",
                value: xi1,
                requirement: "xi1 > 0 (bound-state branch)",
            });
        }
        Ok(Self {
            alpha1,
            alpha2,
            alpha3,
            xi1,
            xi2,
            xi3,
        })
    }
}

/// The ten derived parameters α₄..α₁₃.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuDerived {
    pub alpha4: f64,
    pub alpha5: f64,
    pub alpha6: f64,
    pub alpha7: f64,
    pub alpha8: f64,
    pub alpha9: f64,
    pub alpha10: f64,
    pub alpha11: f64,
    pub alpha12: f64,
    pub alpha13: f64,
}

/// Compute α₄..α₁₃ from the six inputs. Fails if α₈ or α₉ comes out
/// negative, which would put the square roots off the real axis.
pub fn derive_alphas(input: &NuInput) -> Result<NuDerived, NuError> {
    let alpha4 = 0.5 * (1.0 - input.alpha1);
    let alpha5 = 0.5 * (input.alpha2 - 2.0 * input.alpha3);
    let alpha6 = alpha5 * alpha5 + input.xi1;
    let alpha7 = 2.0 * alpha4 * alpha5 - input.xi2;
    let alpha8 = alpha4 * alpha4 + input.xi3;
    if alpha8 < 0.0 {
        return Err(NuError::NegativeDiscriminant {
            which: Discriminant::Alpha8,
            value: alpha8,
        });
    }
    let alpha9 = alpha6 + input.alpha3 * alpha7 + input.alpha3 * input.alpha3 * alpha8;
    if alpha9 < 0.0 {
        return Err(NuError::NegativeDiscriminant {
            which: Discriminant::Alpha9,
            value: alpha9,
        });
    }
    let sqrt8 = alpha8.sqrt();
    let sqrt9 = alpha9.sqrt();
    Ok(NuDerived {
        alpha4,
        alpha5,
        alpha6,
        alpha7,
        alpha8,
        alpha9,
        alpha10: input.alpha1 + 2.0 * alpha4 + 2.0 * sqrt8,
        alpha11: input.alpha2 - 2.0 * alpha5 + 2.0 * (sqrt9 + input.alpha3 * sqrt8),
        alpha12: alpha4 + sqrt8,
        alpha13: alpha5 - (sqrt9 + input.alpha3 * sqrt8),
    })
}

/// Left-hand side of the quantization condition
/// `α₂n − (2n+1)α₅ + (2n+1)(√α₉+α₃√α₈) + n(n−1)α₃ + α₇ + 2α₃α₈ + 2√(α₈α₉)`.
///
/// A root in the energy-like unknown embedded in the inputs (usually ξ₂)
/// selects the n-th level. For the α₃ = 0 family the residual is affine and
/// strictly decreasing in ξ₂, so each level's root is unique.
pub fn quantization_residual(input: &NuInput, derived: &NuDerived, n: u32) -> f64 {
    let nf = n as f64;
    let sqrt8 = derived.alpha8.sqrt();
    let sqrt9 = derived.alpha9.sqrt();
    input.alpha2 * nf - (2.0 * nf + 1.0) * derived.alpha5
        + (2.0 * nf + 1.0) * (sqrt9 + input.alpha3 * sqrt8)
        + nf * (nf - 1.0) * input.alpha3
        + derived.alpha7
        + 2.0 * input.alpha3 * derived.alpha8
        + 2.0 * (derived.alpha8 * derived.alpha9).sqrt()
}

/// Unnormalized eigenfunction of the α₃ = 0 branch:
/// `s^{α₁₂} · exp(α₁₃·s) · L_n^{(α₁₀−1)}(α₁₁·s)`.
///
/// The general α₃ ≠ 0 Jacobi branch is not supported.
pub fn eigenfunction_alpha3_zero(
    input: &NuInput,
    derived: &NuDerived,
    n: u32,
    s: f64,
) -> Result<f64, NuError> {
    if input.alpha3 != 0.0 {
        return Err(NuError::Unsupported {
            alpha3: input.alpha3,
        });
    }
    if !s.is_finite() || s < 0.0 {
        return Err(NuError::InvalidInput {
            name: "s",
            value: s,
            requirement: "s >= 0",
        });
    }
    let poly = special::laguerre(n, derived.alpha10 - 1.0, derived.alpha11 * s)?;
    Ok(s.powf(derived.alpha12) * (derived.alpha13 * s).exp() * poly)
}

/// Bisection to relative tolerance 1e-12 in the unknown, given a bracketing
/// interval with a sign change.
pub fn bisect_root<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64) -> Result<f64, NuError> {
    const REL_TOL: f64 = 1e-12;
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(NuError::NoBracket {
            lo: a,
            hi: b,
            f_lo: fa,
            f_hi: fb,
        });
    }
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if (b - a) <= REL_TOL * mid.abs().max(1.0) {
            return Ok(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}
