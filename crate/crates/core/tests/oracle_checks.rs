//! Finite-difference oracle against the closed-form spectra: the two routes
//! are developed independently, so agreement here validates both.

use lvosc::model::{Coupling, FieldConfig, LorentzBackground, OscillatorSpec, QuantumNumbers};
use lvosc::oracle::{self, OracleError, RadialGrid};
use lvosc::spectra;

fn max_relative_error(eigenvalues: &[f64], exact: &[f64]) -> f64 {
    eigenvalues
        .iter()
        .zip(exact)
        .map(|(got, want)| ((got - want) / want).abs())
        .fold(0.0, f64::max)
}

#[test]
fn unit_tau_levels_match_ladder() {
    // τ = 1, S = 1: C_n = 2(2n+2) = {4, 8, 12, 16}
    let grid = RadialGrid::new(1e-4, 9.0, 4000).unwrap();
    let result = oracle::solve_radial(1.0, 1.0, &grid, 4, None).unwrap();
    assert!(!result.reduced_confidence);
    let exact = [4.0, 8.0, 12.0, 16.0];
    let err = max_relative_error(&result.eigenvalues, &exact);
    assert!(err < 1e-4, "worst relative error {err:e}");
}

#[test]
fn tau_zero_line_is_reduced_confidence() {
    // τ = 0 puts the attractive -1/(4r²) term on the grid; the discretization
    // only localizes the ladder {2, 6, 10, 14} coarsely and must say so
    let grid = RadialGrid::new(1e-4, 9.0, 4000).unwrap();
    let result = oracle::solve_radial(0.0, 1.0, &grid, 4, None).unwrap();
    assert!(result.reduced_confidence);
    let exact = [2.0, 6.0, 10.0, 14.0];
    for (got, want) in result.eigenvalues.iter().zip(&exact) {
        let rel = ((got - want) / want).abs();
        assert!(rel < 0.15, "C = {got} vs {want} (rel {rel:e})");
    }
}

#[test]
fn halving_spacing_divides_error_by_four() {
    let grid = RadialGrid::new(1e-4, 9.0, 2000).unwrap();
    let exact = [4.0, 8.0, 12.0, 16.0];
    let coarse = oracle::solve_radial(1.0, 1.0, &grid, 4, None).unwrap();
    let fine = oracle::solve_radial(1.0, 1.0, &grid.refined(), 4, None).unwrap();
    for ((c, f), want) in coarse.eigenvalues.iter().zip(&fine.eigenvalues).zip(&exact) {
        let ratio = (c - want).abs() / (f - want).abs();
        assert!(
            (3.5..=4.5).contains(&ratio),
            "error ratio {ratio} outside the second-order window"
        );
    }
}

#[test]
fn dirichlet_wall_position_is_irrelevant() {
    // same spacing, wall pushed from √40 to √60: the Gaussian tail makes the
    // low levels insensitive; the n = 3 level moves by the WKB tail estimate
    // ~2e-8 relative, the lower ones far less
    let r_min = 1e-3;
    let near = RadialGrid::new(r_min, 40.0_f64.sqrt(), 3000).unwrap();
    let h = near.spacing();
    let far_count = ((60.0_f64.sqrt() - r_min) / h).round() as usize - 1;
    let far = RadialGrid::new(r_min, r_min + h * (far_count + 1) as f64, far_count).unwrap();

    let near_result = oracle::solve_radial(1.0, 1.0, &near, 4, None).unwrap();
    let far_result = oracle::solve_radial(1.0, 1.0, &far, 4, None).unwrap();
    for (i, (a, b)) in near_result
        .eigenvalues
        .iter()
        .zip(&far_result.eigenvalues)
        .enumerate()
    {
        let rel = ((a - b) / a).abs();
        let bound = if i < 3 { 1e-8 } else { 5e-8 };
        assert!(rel < bound, "level {i}: wall shift moved C by {rel:e}");
    }
}

#[test]
fn coulomb_full_lsv_levels_verified() {
    // g=1, κ₁=1, κ₂=1, c₁=1, c₂=1, χ=2, M=ω=b=1, l=2, k=0.5:
    // Π_n = 2Ω(2n+1+τ) with Ω² = 2.5, τ² = 5.5
    let bg = LorentzBackground::new(1.0, 1.0, 1.0).unwrap();
    let fc = FieldConfig::new(1.0, 1.0, 2.0).unwrap();
    let osc = OscillatorSpec::new(1.0, 1.0, Coupling::Coulomb { b: 1.0 }).unwrap();
    let qn = QuantumNumbers::new(0, 2, 0.5).unwrap();
    let grid = RadialGrid::for_scale(2.5_f64.sqrt(), 4000).unwrap();
    let report = oracle::compare_with_analytic(&bg, &fc, &osc, &qn, 4, &grid, 1e-4).unwrap();
    assert!(report.all_pass(), "{report:#?}");
    assert!(!report.reduced_confidence);

    // cross-check the analytic constants against the ladder form
    let omega = 2.5_f64.sqrt();
    let tau = 5.5_f64.sqrt();
    for level in &report.levels {
        let ladder = 2.0 * omega * (2.0 * level.n as f64 + 1.0 + tau);
        assert!(((level.analytic - ladder) / ladder).abs() < 1e-12);
    }
}

#[test]
fn cornell_full_lsv_levels_verified() {
    // g=1, κ₁=2, κ₂=1, c₁=c₂=χ=1, M=ω=a=b=1, l=1: Λ_n = 2δ(2n+1+τ),
    // δ = τ = √3
    let bg = LorentzBackground::new(1.0, 2.0, 1.0).unwrap();
    let fc = FieldConfig::new(1.0, 1.0, 1.0).unwrap();
    let osc = OscillatorSpec::new(1.0, 1.0, Coupling::Cornell { a: 1.0, b: 1.0 }).unwrap();
    let qn = QuantumNumbers::new(0, 1, 0.0).unwrap();
    let grid = RadialGrid::for_scale(3.0_f64.sqrt(), 4000).unwrap();
    let report = oracle::compare_with_analytic(&bg, &fc, &osc, &qn, 4, &grid, 1e-4).unwrap();
    assert!(report.all_pass(), "{report:#?}");
}

#[test]
fn perturbed_tau_fails_the_comparison() {
    // +1% on τ shifts every level by ~2Ω·Δτ, far beyond 1e-4
    let grid = RadialGrid::new(1e-4, 9.0, 4000).unwrap();
    let numeric = oracle::solve_radial(1.0 * 1.01, 1.0, &grid, 4, None).unwrap();
    let exact = [4.0, 8.0, 12.0, 16.0];
    let err = max_relative_error(&numeric.eigenvalues, &exact);
    assert!(err > 1e-3, "perturbation must be detectable, err = {err:e}");
}

#[test]
fn bessel_regime_propagates_through_comparison() {
    let bg = LorentzBackground::new(0.0, 0.0, 0.0).unwrap();
    let fc = FieldConfig::new(1.0, 1.0, 1.0).unwrap();
    let osc = OscillatorSpec::new(1.0, 1.0, Coupling::Coulomb { b: 1.0 }).unwrap();
    let qn = QuantumNumbers::new(0, 0, 0.0).unwrap();
    let grid = RadialGrid::new(1e-4, 9.0, 1000).unwrap();
    let err = oracle::compare_with_analytic(&bg, &fc, &osc, &qn, 4, &grid, 1e-4).unwrap_err();
    assert!(matches!(
        err,
        OracleError::Analytic(spectra::SpectraError::NoBoundStates)
    ));
}
