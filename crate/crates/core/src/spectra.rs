//! Closed-form energy eigenvalues and normalized radial wavefunctions for
//! both coupling functions, plus the limiting-behaviour checks.

use thiserror::Error;

use crate::model::{
    self, Coupling, FieldConfig, LorentzBackground, ModelError, OscillatorSpec, QuantumNumbers,
    RegimeClass,
};
use crate::special::{self, SpecialError};

/// χ sweep used by [`limit_checks`]: grid over `[0, CHI_SWEEP_MAX]`.
pub const CHI_SWEEP_MAX: f64 = 2.0;
pub const CHI_SWEEP_POINTS: usize = 21;

/// Probe used for the χ → 0⁺ continuity check. Small enough that the
/// first-order drift `(dε/dχ)·χ` stays far below [`CHI_CONTINUITY_TOL`].
pub const CHI_CONTINUITY_PROBE: f64 = 1e-12;
pub const CHI_CONTINUITY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("no bound states: Omega = 0, the radial equation is Bessel-type")]
    NoBoundStates,
    #[error("tachyonic level: epsilon^2 = {epsilon_squared:e} < 0")]
    TachyonicLevel { epsilon_squared: f64 },
    #[error(transparent)]
    Special(#[from] SpecialError),
}

impl SpectraError {
    pub fn code(&self) -> &'static str {
        match self {
            SpectraError::Model(e) => e.code(),
            SpectraError::NoBoundStates => "NoBoundStates",
            SpectraError::TachyonicLevel { .. } => "TachyonicLevel",
            SpectraError::Special(e) => e.code(),
        }
    }
}

/// One energy level with both signs of the square root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    pub n: u32,
    pub l: i32,
    pub k: f64,
    pub epsilon_plus: f64,
    pub epsilon_minus: f64,
    pub epsilon_squared: f64,
}

/// ε² assembled in one fixed operation order for both couplings, so the
/// Cornell expression at `a = 0` reproduces the Coulomb one bit for bit.
fn epsilon_squared(
    osc: &OscillatorSpec,
    qn: &QuantumNumbers,
    linear1: f64,
    linear2: f64,
    shift1: f64,
    shift2: f64,
    ladder: f64,
) -> f64 {
    osc.mass * osc.mass + qn.k * qn.k + linear1 + linear2 + shift1 + shift2 + ladder
}

fn level_from_squared(qn: &QuantumNumbers, eps_sq: f64) -> Result<EnergyLevel, SpectraError> {
    if eps_sq < 0.0 {
        return Err(SpectraError::TachyonicLevel {
            epsilon_squared: eps_sq,
        });
    }
    let eps = eps_sq.sqrt();
    Ok(EnergyLevel {
        n: qn.n,
        l: qn.l,
        k: qn.k,
        epsilon_plus: eps,
        epsilon_minus: -eps,
        epsilon_squared: eps_sq,
    })
}

fn validated_tau(
    bg: &LorentzBackground,
    fc: &FieldConfig,
    osc: &OscillatorSpec,
    qn: &QuantumNumbers,
) -> Result<f64, SpectraError> {
    let tau_sq = model::centrifugal_squared(bg, fc, osc, qn);
    if tau_sq < 0.0 {
        return Err(ModelError::ImaginaryCentrifugal {
            tau_squared: tau_sq,
        }
        .into());
    }
    Ok(tau_sq.sqrt())
}

/// Confinement strength of the coupling in use, with the bound-state
/// preconditions turned into errors.
fn validated_scale(
    bg: &LorentzBackground,
    fc: &FieldConfig,
    osc: &OscillatorSpec,
) -> Result<f64, SpectraError> {
    let omega_sq = model::frequency_squared(bg, fc);
    if omega_sq < 0.0 {
        return Err(ModelError::ImaginaryFrequency {
            omega_squared: omega_sq,
        }
        .into());
    }
    match osc.coupling {
        Coupling::Coulomb { .. } => {
            if omega_sq == 0.0 {
                return Err(SpectraError::NoBoundStates);
            }
            Ok(omega_sq.sqrt())
        }
        Coupling::Cornell { .. } => {
            let delta_sq = model::confinement_squared(bg, fc, osc);
            if delta_sq == 0.0 {
                return Err(ModelError::NoConfinement.into());
            }
            Ok(delta_sq.sqrt())
        }
    }
}

/// ε² = M² + k² + 2(2n+1+τ)Ω + gκ₁c₁c₂ + gκ₂χc₂ for the Coulomb-type
/// coupling; both ± branches are returned.
pub fn energy_coulomb(
    bg: &LorentzBackground,
    fc: &FieldConfig,
    osc: &OscillatorSpec,
    qn: &QuantumNumbers,
) -> Result<EnergyLevel, SpectraError> {
    if let Coupling::Cornell { .. } = osc.coupling {
        return Err(ModelError::CouplingMismatch {
            expected: "coulomb",
        }
        .into());
    }
    let scale = validated_scale(bg, fc, osc)?;
    let tau = validated_tau(bg, fc, osc, qn)?;
    let (shift1, shift2) = model::lsv_energy_shift(bg, fc);
    let ladder = 2.0 * (2.0 * qn.n as f64 + 1.0 + tau) * scale;
    let eps_sq = epsilon_squared(osc, qn, 0.0, 0.0, shift1, shift2, ladder);
    level_from_squared(qn, eps_sq)
}

/// ε² = M² + k² + 2Mωa + 2abM²ω² + gκ₁c₁c₂ + gκ₂χc₂ + 2(2n+1+τ)δ for the
/// Cornell-type coupling. At `a = 0` this equals [`energy_coulomb`] exactly.
pub fn energy_cornell(
    bg: &LorentzBackground,
    fc: &FieldConfig,
    osc: &OscillatorSpec,
    qn: &QuantumNumbers,
) -> Result<EnergyLevel, SpectraError> {
    let Coupling::Cornell { .. } = osc.coupling else {
        return Err(ModelError::CouplingMismatch {
            expected: "cornell",
        }
        .into());
    };
    let scale = validated_scale(bg, fc, osc)?;
    let tau = validated_tau(bg, fc, osc, qn)?;
    let (shift1, shift2) = model::lsv_energy_shift(bg, fc);
    let (linear1, linear2) = model::cornell_linear_terms(osc);
    let ladder = 2.0 * (2.0 * qn.n as f64 + 1.0 + tau) * scale;
    let eps_sq = epsilon_squared(osc, qn, linear1, linear2, shift1, shift2, ladder);
    level_from_squared(qn, eps_sq)
}

/// Energy level for whichever coupling the spec carries.
pub fn energy(
    bg: &LorentzBackground,
    fc: &FieldConfig,
    osc: &OscillatorSpec,
    qn: &QuantumNumbers,
) -> Result<EnergyLevel, SpectraError> {
    match osc.coupling {
        Coupling::Coulomb { .. } => energy_coulomb(bg, fc, osc, qn),
        Coupling::Cornell { .. } => energy_cornell(bg, fc, osc, qn),
    }
}

/// Normalized radial wavefunction
/// `ψ(r) = N · s^{τ/2} · e^{-s/2} · L_n^{(τ)}(s)` with `s = S·r²` and
/// `N² = 2S·n!/Γ(n+τ+1)`, so that `∫₀^∞ r·ψ² dr = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialWavefunction {
    /// Change-of-variable constant: Ω for Coulomb-type, δ for Cornell-type.
    pub scale: f64,
    /// Laguerre order.
    pub tau: f64,
    /// Degree (radial quantum number).
    pub n: u32,
    /// Normalization constant N.
    pub norm: f64,
}

impl RadialWavefunction {
    /// ψ(r); defined for all r ≥ 0 (and even in r, so negative inputs are
    /// accepted through r²).
    pub fn evaluate(&self, r: f64) -> f64 {
        let s = self.scale * r * r;
        let poly = special::laguerre(self.n, self.tau, s)
            .expect("tau >= 0 and s >= 0 hold by construction");
        self.norm * s.powf(self.tau / 2.0) * (-s / 2.0).exp() * poly
    }

    /// `(ψ, ψ', ψ'')` at `r > 0` from the analytic derivatives of the
    /// closed form, using `d/ds L_n^{(τ)} = −L_{n−1}^{(τ+1)}`.
    pub fn derivatives(&self, r: f64) -> (f64, f64, f64) {
        assert!(r > 0.0, "derivatives require r > 0");
        let s = self.scale * r * r;
        let l0 = special::laguerre(self.n, self.tau, s).expect("valid order and argument");
        let l1 = if self.n >= 1 {
            -special::laguerre(self.n - 1, self.tau + 1.0, s).expect("valid order and argument")
        } else {
            0.0
        };
        let l2 = if self.n >= 2 {
            special::laguerre(self.n - 2, self.tau + 2.0, s).expect("valid order and argument")
        } else {
            0.0
        };

        let amplitude = self.norm * self.scale.powf(self.tau / 2.0);
        let envelope = (-s / 2.0).exp();
        let tau = self.tau;

        // ψ  = A r^τ e^{-s/2} L
        // ψ' = A r^{τ-1} e^{-s/2} G,          G = τL + 2sL' − sL
        // ψ'' = A r^{τ-2} e^{-s/2} [(τ−1)G − sG + 2sG']
        let g = tau * l0 + 2.0 * s * l1 - s * l0;
        let g_prime = (tau + 2.0) * l1 + 2.0 * s * l2 - l0 - s * l1;

        let psi = amplitude * r.powf(tau) * envelope * l0;
        let psi_d1 = amplitude * r.powf(tau - 1.0) * envelope * g;
        let psi_d2 = amplitude
            * r.powf(tau - 2.0)
            * envelope
            * ((tau - 1.0) * g - s * g + 2.0 * s * g_prime);
        (psi, psi_d1, psi_d2)
    }
}

/// Build the normalized radial wavefunction for the bound-state regime.
pub fn wavefunction(
    bg: &LorentzBackground,
    fc: &FieldConfig,
    osc: &OscillatorSpec,
    qn: &QuantumNumbers,
) -> Result<RadialWavefunction, SpectraError> {
    let scale = validated_scale(bg, fc, osc)?;
    let tau = validated_tau(bg, fc, osc, qn)?;
    let n = qn.n;
    // N² = 2S·Γ(n+1)/Γ(n+τ+1)
    let ln_ratio = special::log_gamma(n as f64 + 1.0)? - special::log_gamma(n as f64 + tau + 1.0)?;
    let norm = (2.0 * scale * ln_ratio.exp()).sqrt();
    Ok(RadialWavefunction {
        scale,
        tau,
        n,
        norm,
    })
}

/// Residual of the radial equation `ψ'' + ψ'/r + (C − τ²/r² − S²r²)ψ` at
/// `r > 0`, with the constant term evaluated at the supplied trial energy.
///
/// At a quantized energy the analytic wavefunction annihilates the operator
/// and the residual is zero up to round-off; detuning ε² shifts the residual
/// by `ΔC·ψ(r)` because the constant term enters linearly.
pub fn ode_residual(
    bg: &LorentzBackground,
    fc: &FieldConfig,
    osc: &OscillatorSpec,
    qn: &QuantumNumbers,
    energy: f64,
    r: f64,
) -> Result<f64, SpectraError> {
    assert!(r > 0.0, "ode_residual requires r > 0");
    let coefficients = match osc.coupling {
        Coupling::Coulomb { .. } => model::derive_coulomb_coefficients(bg, fc, osc, qn, energy)?,
        Coupling::Cornell { .. } => model::derive_cornell_coefficients(bg, fc, osc, qn, energy)?,
    };
    let problem = coefficients.problem();
    let wf = wavefunction(bg, fc, osc, qn)?;
    let (psi, psi_d1, psi_d2) = wf.derivatives(r);
    let potential = problem.constant
        - problem.tau * problem.tau / (r * r)
        - problem.scale * problem.scale * r * r;
    Ok(psi_d2 + psi_d1 / r + potential * psi)
}

/// One point of the χ sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct ChiSample {
    pub chi: f64,
    pub outcome: Result<f64, SpectraError>,
}

/// Limiting behaviour of the spectrum claimed by the model: χ-monotonicity
/// under sign conditions, continuity at χ → 0, and the κ₁ = κ₂ = 0
/// classification.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitReport {
    /// ε₊(χ) on a uniform grid over `[0, CHI_SWEEP_MAX]`.
    pub chi_samples: Vec<ChiSample>,
    /// Whether g, c₁, κ₂, c₂ ≥ 0, the sign conditions under which
    /// monotonic non-decrease in χ is claimed.
    pub monotonicity_applies: bool,
    /// ε₊ non-decreasing across all valid consecutive grid points.
    pub chi_monotone: bool,
    /// |ε₊(probe) − ε₊(0)| with probe = [`CHI_CONTINUITY_PROBE`], when both
    /// endpoints are in the bound-state regime.
    pub continuity_gap: Option<f64>,
    /// Gap within [`CHI_CONTINUITY_TOL`] (scaled by max(1, ε(0))).
    pub continuous_at_zero: Option<bool>,
    /// Classification of the same scenario with κ₁ = κ₂ = 0.
    pub zero_lsv: RegimeClass,
}

fn energy_at_chi(
    bg: &LorentzBackground,
    fc: &FieldConfig,
    osc: &OscillatorSpec,
    qn: &QuantumNumbers,
    chi: f64,
) -> Result<f64, SpectraError> {
    let fc_chi = FieldConfig { chi, ..*fc };
    energy(bg, &fc_chi, osc, qn).map(|level| level.epsilon_plus)
}

/// Evaluate the limiting-behaviour report for one quantum-number choice.
pub fn limit_checks(
    bg: &LorentzBackground,
    fc: &FieldConfig,
    osc: &OscillatorSpec,
    qn: &QuantumNumbers,
) -> LimitReport {
    let mut chi_samples = Vec::with_capacity(CHI_SWEEP_POINTS);
    for i in 0..CHI_SWEEP_POINTS {
        let chi = CHI_SWEEP_MAX * i as f64 / (CHI_SWEEP_POINTS - 1) as f64;
        chi_samples.push(ChiSample {
            chi,
            outcome: energy_at_chi(bg, fc, osc, qn, chi),
        });
    }

    let monotonicity_applies = bg.g >= 0.0 && fc.c1 >= 0.0 && bg.kappa2 >= 0.0 && fc.c2 >= 0.0;
    let valid: Vec<f64> = chi_samples
        .iter()
        .filter_map(|s| s.outcome.as_ref().ok().copied())
        .collect();
    let slack = |x: f64| 4.0 * f64::EPSILON * x.abs().max(1.0);
    let chi_monotone = valid.windows(2).all(|w| w[1] >= w[0] - slack(w[0]));

    let at_zero = energy_at_chi(bg, fc, osc, qn, 0.0);
    let at_probe = energy_at_chi(bg, fc, osc, qn, CHI_CONTINUITY_PROBE);
    let (continuity_gap, continuous_at_zero) = match (at_zero, at_probe) {
        (Ok(e0), Ok(ep)) => {
            let gap = (ep - e0).abs();
            (
                Some(gap),
                Some(gap <= CHI_CONTINUITY_TOL * e0.abs().max(1.0)),
            )
        }
        _ => (None, None),
    };

    let zero_bg = LorentzBackground {
        kappa1: 0.0,
        kappa2: 0.0,
        ..*bg
    };
    let zero_lsv = model::validate_scenario(&zero_bg, fc, osc, qn).classification;

    LimitReport {
        chi_samples,
        monotonicity_applies,
        chi_monotone,
        continuity_gap,
        continuous_at_zero,
        zero_lsv,
    }
}
