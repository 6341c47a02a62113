//! Physical parameters of the oscillator problem and the composite
//! quantities (Π, Ω, τ, Λ, δ) that define the reduced radial equation.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("imaginary oscillator frequency: Ω² = {omega_squared:e} < 0")]
    ImaginaryFrequency { omega_squared: f64 },
    #[error("imaginary centrifugal index: τ² = {tau_squared:e} < 0")]
    ImaginaryCentrifugal { tau_squared: f64 },
    #[error("no confinement: δ = 0 (both Ω and M·ω·a vanish)")]
    NoConfinement,
    #[error("operation requires a {expected}-type coupling function")]
    CouplingMismatch { expected: &'static str },
    #[error("parameter {name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },
    #[error("mass must be positive, got {value}")]
    NonPositiveMass { value: f64 },
    #[error("oscillator frequency must be non-negative, got {value}")]
    NegativeFrequency { value: f64 },
}

impl ModelError {
    pub fn code(&self) -> &'static str {
        match self {
            ModelError::ImaginaryFrequency { .. } => "ImaginaryFrequency",
            ModelError::ImaginaryCentrifugal { .. } => "ImaginaryCentrifugal",
            ModelError::NoConfinement => "NoConfinement",
            ModelError::CouplingMismatch { .. } => "CouplingMismatch",
            ModelError::NonFinite { .. } => "NonFinite",
            ModelError::NonPositiveMass { .. } => "NonPositiveMass",
            ModelError::NegativeFrequency { .. } => "NegativeFrequency",
        }
    }
}

fn require_finite(name: &'static str, value: f64) -> Result<(), ModelError> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(ModelError::NonFinite { name, value })
    }
}

/// Lorentz-symmetry-violating background: coupling magnitude `g`, the
/// parity-even coefficient `κ₁ = (κ_DE)₁₁` and the parity-odd coefficient
/// `κ₂ = (κ_DB)₁₃`. The `(κ_HB)` sector is identically zero in this
/// scenario and is not a parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzBackground {
    pub g: f64,
    pub kappa1: f64,
    pub kappa2: f64,
}

impl LorentzBackground {
    pub fn new(g: f64, kappa1: f64, kappa2: f64) -> Result<Self, ModelError> {
        require_finite("g", g)?;
        require_finite("kappa1", kappa1)?;
        require_finite("kappa2", kappa2)?;
        Ok(Self { g, kappa1, kappa2 })
    }
}

/// Electromagnetic configuration: radial electric field `E(r) = c₁·r + c₂/r`
/// and axial magnetic field `B(r) = χ·r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldConfig {
    pub c1: f64,
    pub c2: f64,
    pub chi: f64,
}

impl FieldConfig {
    pub fn new(c1: f64, c2: f64, chi: f64) -> Result<Self, ModelError> {
        require_finite("c1", c1)?;
        require_finite("c2", c2)?;
        require_finite("chi", chi)?;
        Ok(Self { c1, c2, chi })
    }
}

/// Oscillator coupling function `f(r)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coupling {
    /// `f(r) = b/r`
    Coulomb { b: f64 },
    /// `f(r) = a·r + b/r`
    Cornell { a: f64, b: f64 },
}

impl Coupling {
    pub fn b(&self) -> f64 {
        match *self {
            Coupling::Coulomb { b } | Coupling::Cornell { b, .. } => b,
        }
    }

    /// Linear coefficient; zero for the Coulomb-type function.
    pub fn a(&self) -> f64 {
        match *self {
            Coupling::Coulomb { .. } => 0.0,
            Coupling::Cornell { a, .. } => a,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Coupling::Coulomb { .. } => "coulomb",
            Coupling::Cornell { .. } => "cornell",
        }
    }
}

/// Particle and oscillator data in natural units: mass `M > 0`, frequency
/// `ω ≥ 0` and the coupling function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorSpec {
    pub mass: f64,
    pub omega: f64,
    pub coupling: Coupling,
}

impl OscillatorSpec {
    pub fn new(mass: f64, omega: f64, coupling: Coupling) -> Result<Self, ModelError> {
        require_finite("mass", mass)?;
        require_finite("omega", omega)?;
        match coupling {
            Coupling::Coulomb { b } => require_finite("b", b)?,
            Coupling::Cornell { a, b } => {
                require_finite("a", a)?;
                require_finite("b", b)?;
            }
        }
        if mass <= 0.0 {
            return Err(ModelError::NonPositiveMass { value: mass });
        }
        if omega < 0.0 {
            return Err(ModelError::NegativeFrequency { value: omega });
        }
        Ok(Self {
            mass,
            omega,
            coupling,
        })
    }
}

/// Quantum numbers of the separated wave: radial `n ≥ 0`, angular momentum
/// eigenvalue `l ∈ ℤ` and axial wavenumber `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumNumbers {
    pub n: u32,
    pub l: i32,
    pub k: f64,
}

impl QuantumNumbers {
    pub fn new(n: u32, l: i32, k: f64) -> Result<Self, ModelError> {
        require_finite("k", k)?;
        Ok(Self { n, l, k })
    }
}

/// Cornell-only composite quantities of the radial equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornellTerms {
    /// Constant term Λ = Π − 2Mωa − 2abM²ω².
    pub lambda: f64,
    /// Confinement strength δ = √(M²ω²a² + Ω²).
    pub delta: f64,
}

/// Composite coefficients of the reduced radial equation
/// `ψ'' + ψ'/r + (C − τ²/r² − S²r²)ψ = 0`.
///
/// For the Coulomb-type coupling `C = Π` and `S = Ω`; the Cornell-type
/// coupling shifts the constant term to Λ and strengthens confinement to δ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialCoefficients {
    pub pi: f64,
    pub omega: f64,
    pub tau: f64,
    pub cornell: Option<CornellTerms>,
}

impl RadialCoefficients {
    /// Constant term of the radial equation: Λ when present, Π otherwise.
    pub fn constant_term(&self) -> f64 {
        match self.cornell {
            Some(terms) => terms.lambda,
            None => self.pi,
        }
    }

    /// Confinement strength multiplying `r²`: δ when present, Ω otherwise.
    pub fn confinement(&self) -> f64 {
        match self.cornell {
            Some(terms) => terms.delta,
            None => self.omega,
        }
    }

    /// The reduced one-dimensional eigenproblem this set of coefficients
    /// defines.
    pub fn problem(&self) -> RadialProblem {
        RadialProblem {
            constant: self.constant_term(),
            tau: self.tau,
            scale: self.confinement(),
        }
    }
}

/// Reduced radial eigenproblem: constant term `C`, centrifugal index `τ`
/// and confinement strength `S` of `ψ'' + ψ'/r + (C − τ²/r² − S²r²)ψ = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialProblem {
    pub constant: f64,
    pub tau: f64,
    pub scale: f64,
}

/// Ω² = (g/2)·c₁²·κ₁ + g·c₁·χ·κ₂. May be negative for unphysical scenarios.
pub fn frequency_squared(bg: &LorentzBackground, fc: &FieldConfig) -> f64 {
    0.5 * bg.g * fc.c1 * fc.c1 * bg.kappa1 + bg.g * fc.c1 * fc.chi * bg.kappa2
}

/// τ² = l² + M²ω²b² + (g/2)·c₂²·κ₁. May be negative for unphysical scenarios.
pub fn centrifugal_squared(
    bg: &LorentzBackground,
    fc: &FieldConfig,
    osc: &OscillatorSpec,
    qn: &QuantumNumbers,
) -> f64 {
    let l = qn.l as f64;
    let mwb = osc.mass * osc.omega * osc.coupling.b();
    l * l + mwb * mwb + 0.5 * bg.g * fc.c2 * fc.c2 * bg.kappa1
}

/// Squared confinement strength of the coupling in use: Ω² for Coulomb-type,
/// δ² = M²ω²a² + Ω² for Cornell-type.
///
/// The Cornell value is assembled from Ω² before any square root is taken,
/// so `a = 0` reproduces the Coulomb value bit for bit.
pub fn confinement_squared(bg: &LorentzBackground, fc: &FieldConfig, osc: &OscillatorSpec) -> f64 {
    let omega_sq = frequency_squared(bg, fc);
    match osc.coupling {
        Coupling::Coulomb { .. } => omega_sq,
        Coupling::Cornell { a, .. } => {
            let mwa = osc.mass * osc.omega * a;
            mwa * mwa + omega_sq
        }
    }
}

/// Energy-independent shift g·κ₁·c₁·c₂ + g·κ₂·χ·c₂ entering both Π and ε².
pub(crate) fn lsv_energy_shift(bg: &LorentzBackground, fc: &FieldConfig) -> (f64, f64) {
    (
        bg.g * bg.kappa1 * fc.c1 * fc.c2,
        bg.g * bg.kappa2 * fc.chi * fc.c2,
    )
}

fn validated_omega_tau(
    bg: &LorentzBackground,
    fc: &FieldConfig,
    osc: &OscillatorSpec,
    qn: &QuantumNumbers,
) -> Result<(f64, f64), ModelError> {
    let omega_sq = frequency_squared(bg, fc);
    if omega_sq < 0.0 {
        return Err(ModelError::ImaginaryFrequency {
            omega_squared: omega_sq,
        });
    }
    let tau_sq = centrifugal_squared(bg, fc, osc, qn);
    if tau_sq < 0.0 {
        return Err(ModelError::ImaginaryCentrifugal {
            tau_squared: tau_sq,
        });
    }
    Ok((omega_sq, tau_sq))
}

fn constant_pi(
    bg: &LorentzBackground,
    fc: &FieldConfig,
    osc: &OscillatorSpec,
    qn: &QuantumNumbers,
    energy: f64,
) -> f64 {
    let (shift1, shift2) = lsv_energy_shift(bg, fc);
    energy * energy - osc.mass * osc.mass - qn.k * qn.k - shift1 - shift2
}

/// Radial coefficients for the Coulomb-type coupling at a caller-supplied
/// trial energy ε: Π = ε² − M² − k² − gκ₁c₁c₂ − gκ₂χc₂, Ω and τ.
pub fn derive_coulomb_coefficients(
    bg: &LorentzBackground,
    fc: &FieldConfig,
    osc: &OscillatorSpec,
    qn: &QuantumNumbers,
    energy: f64,
) -> Result<RadialCoefficients, ModelError> {
    if let Coupling::Cornell { .. } = osc.coupling {
        return Err(ModelError::CouplingMismatch {
            expected: "coulomb",
        });
    }
    require_finite("energy", energy)?;
    let (omega_sq, tau_sq) = validated_omega_tau(bg, fc, osc, qn)?;
    Ok(RadialCoefficients {
        pi: constant_pi(bg, fc, osc, qn, energy),
        omega: omega_sq.sqrt(),
        tau: tau_sq.sqrt(),
        cornell: None,
    })
}

/// Radial coefficients for the Cornell-type coupling: everything from the
/// Coulomb case plus Λ = Π − 2Mωa − 2abM²ω² and δ = √(M²ω²a² + Ω²).
pub fn derive_cornell_coefficients(
    bg: &LorentzBackground,
    fc: &FieldConfig,
    osc: &OscillatorSpec,
    qn: &QuantumNumbers,
    energy: f64,
) -> Result<RadialCoefficients, ModelError> {
    let Coupling::Cornell { a, b: _ } = osc.coupling else {
        return Err(ModelError::CouplingMismatch {
            expected: "cornell",
        });
    };
    require_finite("energy", energy)?;
    let (omega_sq, tau_sq) = validated_omega_tau(bg, fc, osc, qn)?;

    let mwa = osc.mass * osc.omega * a;
    let delta_sq = mwa * mwa + omega_sq;
    if delta_sq == 0.0 {
        return Err(ModelError::NoConfinement);
    }

    let pi = constant_pi(bg, fc, osc, qn, energy);
    let (lin1, lin2) = cornell_linear_terms(osc);
    Ok(RadialCoefficients {
        pi,
        omega: omega_sq.sqrt(),
        tau: tau_sq.sqrt(),
        cornell: Some(CornellTerms {
            lambda: pi - lin1 - lin2,
            delta: delta_sq.sqrt(),
        }),
    })
}

/// `(2Mωa, 2abM²ω²)` — the energy-independent Cornell shifts.
pub(crate) fn cornell_linear_terms(osc: &OscillatorSpec) -> (f64, f64) {
    let a = osc.coupling.a();
    let b = osc.coupling.b();
    let mw = osc.mass * osc.omega;
    (2.0 * mw * a, 2.0 * a * b * mw * mw)
}

/// Bound-state classification of a parameter set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegimeClass {
    /// Confinement present: a discrete spectrum exists.
    BoundStates,
    /// Ω = 0 with a Coulomb-type coupling: the radial equation is
    /// Bessel-type and supports no bound states.
    NoBoundStates,
    /// δ = 0 with a Cornell-type coupling: no confining term survives.
    NoConfinement,
    /// Ω² < 0.
    ImaginaryFrequency,
    /// τ² < 0.
    ImaginaryCentrifugal,
}

impl RegimeClass {
    pub fn code(&self) -> &'static str {
        match self {
            RegimeClass::BoundStates => "BoundStates",
            RegimeClass::NoBoundStates => "NoBoundStates",
            RegimeClass::NoConfinement => "NoConfinement",
            RegimeClass::ImaginaryFrequency => "ImaginaryFrequency",
            RegimeClass::ImaginaryCentrifugal => "ImaginaryCentrifugal",
        }
    }
}

/// Structured validity report for a parameter set; never fails, records which
/// constraints hold and the offending values when they do not.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub omega_squared: f64,
    pub tau_squared: f64,
    pub confinement_squared: f64,
    pub coupling_kind: &'static str,
    pub omega_real: bool,
    pub tau_real: bool,
    pub confining: bool,
    pub bound_states: bool,
    pub classification: RegimeClass,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scenario check ({} coupling):", self.coupling_kind)?;
        writeln!(
            f,
            "  Omega^2 >= 0: {} (Omega^2 = {:e})",
            self.omega_real, self.omega_squared
        )?;
        writeln!(
            f,
            "  tau^2   >= 0: {} (tau^2 = {:e})",
            self.tau_real, self.tau_squared
        )?;
        writeln!(
            f,
            "  confinement > 0: {} (S^2 = {:e})",
            self.confining, self.confinement_squared
        )?;
        let label = match self.classification {
            RegimeClass::BoundStates => "bound states exist".to_string(),
            RegimeClass::NoBoundStates => {
                "no bound states: Omega = 0, the radial equation is Bessel-type".to_string()
            }
            RegimeClass::NoConfinement => "no confinement: delta = 0".to_string(),
            RegimeClass::ImaginaryFrequency => format!(
                "imaginary frequency: Omega^2 = {:e} < 0",
                self.omega_squared
            ),
            RegimeClass::ImaginaryCentrifugal => {
                format!(
                    "imaginary centrifugal index: tau^2 = {:e} < 0",
                    self.tau_squared
                )
            }
        };
        write!(f, "  classification: {label}")
    }
}

/// Classify a parameter set without failing: which of Ω² ≥ 0, τ² ≥ 0 and
/// confinement > 0 hold, and whether bound states exist.
pub fn validate_scenario(
    bg: &LorentzBackground,
    fc: &FieldConfig,
    osc: &OscillatorSpec,
    qn: &QuantumNumbers,
) -> ValidationReport {
    let omega_squared = frequency_squared(bg, fc);
    let tau_squared = centrifugal_squared(bg, fc, osc, qn);
    let confinement_sq = confinement_squared(bg, fc, osc);

    let omega_real = omega_squared >= 0.0;
    let tau_real = tau_squared >= 0.0;
    let confining = confinement_sq > 0.0;

    let classification = if !omega_real {
        RegimeClass::ImaginaryFrequency
    } else if !tau_real {
        RegimeClass::ImaginaryCentrifugal
    } else if !confining {
        match osc.coupling {
            Coupling::Coulomb { .. } => RegimeClass::NoBoundStates,
            Coupling::Cornell { .. } => RegimeClass::NoConfinement,
        }
    } else {
        RegimeClass::BoundStates
    };

    ValidationReport {
        omega_squared,
        tau_squared,
        confinement_squared: confinement_sq,
        coupling_kind: osc.coupling.kind(),
        omega_real,
        tau_real,
        confining,
        bound_states: classification == RegimeClass::BoundStates,
        classification,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coulomb_osc(b: f64) -> OscillatorSpec {
        OscillatorSpec::new(1.0, 1.0, Coupling::Coulomb { b }).unwrap()
    }

    fn cornell_osc(a: f64, b: f64) -> OscillatorSpec {
        OscillatorSpec::new(1.0, 1.0, Coupling::Cornell { a, b }).unwrap()
    }

    #[test]
    fn coulomb_coefficients_direct_substitution() {
        // g=1, κ₁=2, κ₂=0, c₁=1, c₂=0, χ=0, M=ω=b=1, l=k=0, ε=√5
        let bg = LorentzBackground::new(1.0, 2.0, 0.0).unwrap();
        let fc = FieldConfig::new(1.0, 0.0, 0.0).unwrap();
        let qn = QuantumNumbers::new(0, 0, 0.0).unwrap();
        let c =
            derive_coulomb_coefficients(&bg, &fc, &coulomb_osc(1.0), &qn, 5.0_f64.sqrt()).unwrap();
        assert!((c.pi - 4.0).abs() < 1e-12);
        assert!((c.omega - 1.0).abs() < 1e-15);
        assert!((c.tau - 1.0).abs() < 1e-15);
        assert!(c.cornell.is_none());
    }

    #[test]
    fn lsv_switched_off() {
        let bg = LorentzBackground::new(0.0, 3.0, -2.0).unwrap();
        let fc = FieldConfig::new(0.7, 1.3, 0.4).unwrap();
        let qn = QuantumNumbers::new(0, 2, 0.5).unwrap();
        let osc = coulomb_osc(1.5);
        let eps = 2.0;
        let c = derive_coulomb_coefficients(&bg, &fc, &osc, &qn, eps).unwrap();
        assert_eq!(c.omega, 0.0);
        let expected_tau = (4.0_f64 + 1.5 * 1.5).sqrt();
        assert!((c.tau - expected_tau).abs() < 1e-15);
        assert!((c.pi - (eps * eps - 1.0 - 0.25)).abs() < 1e-15);
    }

    #[test]
    fn imaginary_frequency_is_an_error() {
        let bg = LorentzBackground::new(1.0, -1.0, 0.0).unwrap();
        let fc = FieldConfig::new(1.0, 0.0, 0.0).unwrap();
        let qn = QuantumNumbers::new(0, 0, 0.0).unwrap();
        let err = derive_coulomb_coefficients(&bg, &fc, &coulomb_osc(1.0), &qn, 1.0).unwrap_err();
        match err {
            ModelError::ImaginaryFrequency { omega_squared } => {
                assert!((omega_squared + 0.5).abs() < 1e-15);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn imaginary_centrifugal_is_an_error() {
        // l = 0, b = 0, strongly negative κ₁ contribution through c₂
        let bg = LorentzBackground::new(1.0, -4.0, 2.0).unwrap();
        let fc = FieldConfig::new(1.0, 1.0, 1.0).unwrap();
        let qn = QuantumNumbers::new(0, 0, 0.0).unwrap();
        let err = derive_coulomb_coefficients(&bg, &fc, &coulomb_osc(0.0), &qn, 1.0).unwrap_err();
        assert!(matches!(err, ModelError::ImaginaryCentrifugal { .. }));
    }

    #[test]
    fn cornell_pure_oscillator_limit() {
        // a=1, b=0, g=0, M=ω=1, l=k=0, ε=√5 → Λ=2, δ=1, τ=0
        let bg = LorentzBackground::new(0.0, 0.0, 0.0).unwrap();
        let fc = FieldConfig::new(0.0, 0.0, 0.0).unwrap();
        let qn = QuantumNumbers::new(0, 0, 0.0).unwrap();
        let c = derive_cornell_coefficients(&bg, &fc, &cornell_osc(1.0, 0.0), &qn, 5.0_f64.sqrt())
            .unwrap();
        let terms = c.cornell.unwrap();
        assert!((terms.lambda - 2.0).abs() < 1e-12);
        assert!((terms.delta - 1.0).abs() < 1e-15);
        assert_eq!(c.tau, 0.0);
    }

    #[test]
    fn cornell_full_lsv_hand_derived() {
        // g=1, κ₁=2, κ₂=1, c₁=1, c₂=1, χ=1, M=ω=a=b=1, l=1, k=0, ε=3:
        // Ω²=2, τ²=3, Π=5, Λ=1, δ=√3
        let bg = LorentzBackground::new(1.0, 2.0, 1.0).unwrap();
        let fc = FieldConfig::new(1.0, 1.0, 1.0).unwrap();
        let qn = QuantumNumbers::new(0, 1, 0.0).unwrap();
        let c = derive_cornell_coefficients(&bg, &fc, &cornell_osc(1.0, 1.0), &qn, 3.0).unwrap();
        assert!((c.pi - 5.0).abs() < 1e-12);
        assert!((c.omega - 2.0_f64.sqrt()).abs() < 1e-15);
        assert!((c.tau - 3.0_f64.sqrt()).abs() < 1e-15);
        let terms = c.cornell.unwrap();
        assert!((terms.lambda - 1.0).abs() < 1e-12);
        assert!((terms.delta - 3.0_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn cornell_a_zero_collapses_to_coulomb() {
        let bg = LorentzBackground::new(1.0, 2.0, 1.0).unwrap();
        let fc = FieldConfig::new(1.0, 0.5, 0.3).unwrap();
        let qn = QuantumNumbers::new(2, -3, 0.7).unwrap();
        let eps = 2.9;
        let coulomb = derive_coulomb_coefficients(&bg, &fc, &coulomb_osc(0.8), &qn, eps).unwrap();
        let cornell =
            derive_cornell_coefficients(&bg, &fc, &cornell_osc(0.0, 0.8), &qn, eps).unwrap();
        assert_eq!(coulomb.pi, cornell.pi);
        assert_eq!(coulomb.omega, cornell.omega);
        assert_eq!(coulomb.tau, cornell.tau);
        let terms = cornell.cornell.unwrap();
        assert_eq!(terms.lambda, coulomb.pi);
        assert_eq!(terms.delta, coulomb.omega);
        assert_eq!(cornell.constant_term(), coulomb.constant_term());
        assert_eq!(cornell.confinement(), coulomb.confinement());
    }

    #[test]
    fn cornell_without_confinement_is_an_error() {
        let bg = LorentzBackground::new(0.0, 0.0, 0.0).unwrap();
        let fc = FieldConfig::new(0.0, 0.0, 0.0).unwrap();
        let qn = QuantumNumbers::new(0, 0, 0.0).unwrap();
        let err =
            derive_cornell_coefficients(&bg, &fc, &cornell_osc(0.0, 1.0), &qn, 1.0).unwrap_err();
        assert_eq!(err, ModelError::NoConfinement);
    }

    #[test]
    fn coupling_mismatch_is_rejected() {
        let bg = LorentzBackground::new(1.0, 2.0, 0.0).unwrap();
        let fc = FieldConfig::new(1.0, 0.0, 0.0).unwrap();
        let qn = QuantumNumbers::new(0, 0, 0.0).unwrap();
        assert!(matches!(
            derive_coulomb_coefficients(&bg, &fc, &cornell_osc(1.0, 1.0), &qn, 1.0),
            Err(ModelError::CouplingMismatch { .. })
        ));
        assert!(matches!(
            derive_cornell_coefficients(&bg, &fc, &coulomb_osc(1.0), &qn, 1.0),
            Err(ModelError::CouplingMismatch { .. })
        ));
    }

    #[test]
    fn zero_lsv_coulomb_classified_as_bessel() {
        let bg = LorentzBackground::new(0.0, 0.0, 0.0).unwrap();
        let fc = FieldConfig::new(1.0, 1.0, 1.0).unwrap();
        let qn = QuantumNumbers::new(0, 1, 0.0).unwrap();
        let report = validate_scenario(&bg, &fc, &coulomb_osc(1.0), &qn);
        assert_eq!(report.classification, RegimeClass::NoBoundStates);
        assert!(!report.bound_states);
        assert!(report.omega_real && report.tau_real && !report.confining);
        let text = report.to_string();
        assert!(
            text.contains("Bessel"),
            "report should name the regime: {text}"
        );
    }

    #[test]
    fn zero_lsv_cornell_still_binds() {
        let bg = LorentzBackground::new(0.0, 0.0, 0.0).unwrap();
        let fc = FieldConfig::new(1.0, 1.0, 1.0).unwrap();
        let qn = QuantumNumbers::new(0, 1, 0.0).unwrap();
        let report = validate_scenario(&bg, &fc, &cornell_osc(2.0, 1.0), &qn);
        assert_eq!(report.classification, RegimeClass::BoundStates);
        assert!(report.bound_states);
        // δ = M·ω·a
        assert!((report.confinement_squared - 4.0).abs() < 1e-15);
    }

    #[test]
    fn dominating_negative_kappa1_flags_imaginary_frequency() {
        let bg = LorentzBackground::new(1.0, -5.0, 0.1).unwrap();
        let fc = FieldConfig::new(1.0, 0.0, 0.2).unwrap();
        let qn = QuantumNumbers::new(0, 0, 0.0).unwrap();
        let report = validate_scenario(&bg, &fc, &coulomb_osc(1.0), &qn);
        assert_eq!(report.classification, RegimeClass::ImaginaryFrequency);
        assert!(!report.omega_real);
    }

    #[test]
    fn constructors_reject_bad_values() {
        assert!(LorentzBackground::new(f64::NAN, 0.0, 0.0).is_err());
        assert!(FieldConfig::new(0.0, f64::INFINITY, 0.0).is_err());
        assert!(OscillatorSpec::new(0.0, 1.0, Coupling::Coulomb { b: 1.0 }).is_err());
        assert!(OscillatorSpec::new(1.0, -0.5, Coupling::Coulomb { b: 1.0 }).is_err());
        assert!(QuantumNumbers::new(0, 0, f64::NAN).is_err());
    }

    #[test]
    fn tau_reduces_to_abs_l_without_couplings() {
        let bg = LorentzBackground::new(1.0, 2.0, 0.5).unwrap();
        let fc = FieldConfig::new(1.0, 0.0, 0.2).unwrap();
        let osc = coulomb_osc(0.0);
        for l in [-5i32, -1, 0, 3, 7] {
            let qn = QuantumNumbers::new(0, l, 0.0).unwrap();
            let tau_sq = centrifugal_squared(&bg, &fc, &osc, &qn);
            assert_eq!(tau_sq.sqrt(), l.unsigned_abs() as f64);
        }
    }
}
