//! Bound-state spectroscopy of the generalized Klein-Gordon oscillator in a
//! CPT-even Lorentz-symmetry-violating background.
//!
//! The background is fixed by three symmetry-breaking coefficients
//! `{g, κ₁, κ₂}` together with a Cornell-type radial electric field
//! `E(r) = c₁·r + c₂/r` and a linear axial magnetic field `B(r) = χ·r`.
//! The oscillator couples through a radial function `f(r)`, either
//! Coulomb-type `b/r` or Cornell-type `a·r + b/r`. After separation the
//! problem reduces to a one-dimensional radial equation
//!
//! ```text
//! ψ'' + ψ'/r + (C − τ²/r² − S²·r²) ψ = 0
//! ```
//!
//! whose discrete spectrum and Laguerre-type eigenfunctions this crate
//! computes three independent ways: closed forms ([`spectra`]), the
//! parametric Nikiforov-Uvarov quantization condition ([`nu`]), and a
//! finite-difference eigensolver that knows nothing about the closed
//! forms ([`oracle`]).
//!
//! Everything works in natural units (`c = ħ = 1`). All operations are
//! pure functions of immutable inputs and safe to run in parallel.

pub mod model;
pub mod nu;
pub mod oracle;
pub mod special;
pub mod spectra;
pub mod tridiag;

pub use model::{
    derive_cornell_coefficients, derive_coulomb_coefficients, validate_scenario, CornellTerms,
    Coupling, FieldConfig, LorentzBackground, ModelError, OscillatorSpec, QuantumNumbers,
    RadialCoefficients, RadialProblem, RegimeClass, ValidationReport,
};
pub use nu::{
    bisect_root, derive_alphas, eigenfunction_alpha3_zero, quantization_residual, NuDerived,
    NuError, NuInput,
};
pub use oracle::{
    compare_with_analytic, solve_radial, ComparisonReport, LevelComparison, OracleError,
    OracleResult, RadialGrid,
};
pub use special::{gauss_laguerre_nodes, laguerre, log_gamma, SpecialError};
pub use spectra::{
    energy_cornell, energy_coulomb, limit_checks, ode_residual, wavefunction, ChiSample,
    EnergyLevel, LimitReport, RadialWavefunction, SpectraError,
};
