//! Subcommand implementations. Every function is pure table/report
//! construction; process concerns (printing, exit codes) stay in `main`.

use rayon::prelude::*;

use lvosc::model::{
    self, FieldConfig, LorentzBackground, OscillatorSpec, QuantumNumbers, RegimeClass,
    ValidationReport,
};
use lvosc::oracle::{self, OracleError, RadialGrid};
use lvosc::special;
use lvosc::spectra::{self, SpectraError};

use crate::config::{OutputFormat, RunConfig};
use crate::output::{fmt_num, Cell, Table};

/// Exit code 1: a numeric tolerance or runtime failure.
pub const EXIT_TOLERANCE: i32 = 1;
/// Exit code 2: invalid configuration or parameter regime.
pub const EXIT_VALIDATION: i32 = 2;

#[derive(Debug)]
pub struct CliError {
    pub exit_code: i32,
    pub code: String,
    pub message: String,
    pub report: Option<ValidationReport>,
}

impl CliError {
    pub fn validation(code: &str, message: impl Into<String>) -> Self {
        Self {
            exit_code: EXIT_VALIDATION,
            code: code.to_string(),
            message: message.into(),
            report: None,
        }
    }

    pub fn tolerance(code: &str, message: impl Into<String>) -> Self {
        Self {
            exit_code: EXIT_TOLERANCE,
            code: code.to_string(),
            message: message.into(),
            report: None,
        }
    }

    fn with_report(mut self, report: ValidationReport) -> Self {
        self.report = Some(report);
        self
    }
}

impl From<SpectraError> for CliError {
    fn from(err: SpectraError) -> Self {
        CliError::validation(err.code(), err.to_string())
    }
}

struct Physics {
    bg: LorentzBackground,
    fc: FieldConfig,
    osc: OscillatorSpec,
}

fn physics(cfg: &RunConfig) -> Result<Physics, CliError> {
    let bg = cfg
        .background()
        .map_err(|e| CliError::validation(e.code(), e.to_string()))?;
    let fc = cfg
        .field_config()
        .map_err(|e| CliError::validation(e.code(), e.to_string()))?;
    let osc = cfg
        .oscillator()
        .map_err(|e| CliError::validation(e.code(), e.to_string()))?;
    Ok(Physics { bg, fc, osc })
}

/// Fail with the scenario report when the parameter set has no bound states.
fn ensure_bound_states(ph: &Physics, qn: &QuantumNumbers) -> Result<(), CliError> {
    let report = model::validate_scenario(&ph.bg, &ph.fc, &ph.osc, qn);
    if report.classification == RegimeClass::BoundStates {
        Ok(())
    } else {
        Err(CliError::validation(
            report.classification.code(),
            "parameter set has no bound states",
        )
        .with_report(report))
    }
}

const SPECTRUM_COLUMNS: [&str; 8] = [
    "n",
    "l",
    "k",
    "branch",
    "epsilon",
    "epsilon_squared",
    "tau",
    "scale",
];

fn spectrum_rows(ph: &Physics, cfg: &RunConfig, rows: &mut Vec<Vec<Cell>>) -> Result<(), CliError> {
    let scale = model::confinement_squared(&ph.bg, &ph.fc, &ph.osc).sqrt();
    for n in 0..=cfg.n_max {
        for &l in &cfg.l_list {
            let qn = cfg
                .quantum(n, l)
                .map_err(|e| CliError::validation(e.code(), e.to_string()))?;
            let level = spectra::energy(&ph.bg, &ph.fc, &ph.osc, &qn)?;
            let tau = model::centrifugal_squared(&ph.bg, &ph.fc, &ph.osc, &qn).sqrt();
            for (branch, eps) in [("+", level.epsilon_plus), ("-", level.epsilon_minus)] {
                rows.push(vec![
                    Cell::Int(n as i64),
                    Cell::Int(l as i64),
                    Cell::Num(qn.k),
                    Cell::Str(branch),
                    Cell::Num(eps),
                    Cell::Num(level.epsilon_squared),
                    Cell::Num(tau),
                    Cell::Num(scale),
                ]);
            }
        }
    }
    Ok(())
}

/// `spectrum`: one row per (n, l, branch), n major, l minor, branch +/-.
pub fn spectrum(cfg: &RunConfig) -> Result<Table, CliError> {
    let ph = physics(cfg)?;
    for &l in &cfg.l_list {
        let qn = cfg
            .quantum(0, l)
            .map_err(|e| CliError::validation(e.code(), e.to_string()))?;
        ensure_bound_states(&ph, &qn)?;
    }
    let mut rows = Vec::new();
    spectrum_rows(&ph, cfg, &mut rows)?;
    Ok(Table {
        meta: vec![("coupling", cfg.coupling.as_str().to_string())],
        columns: SPECTRUM_COLUMNS.to_vec(),
        rows,
        trailing: vec![],
    })
}

/// `wavefunction`: (r, ψ, r·ψ²) rows plus a trailing quadrature check of
/// ∫ r ψ² dr.
pub fn wavefunction(
    cfg: &RunConfig,
    n: u32,
    r_min: f64,
    r_max: f64,
    r_points: usize,
) -> Result<Table, CliError> {
    if cfg.l_list.len() != 1 {
        return Err(CliError::validation(
            "ConfigError",
            "wavefunction needs exactly one l value",
        ));
    }
    if !r_min.is_finite() || r_min < 0.0 || !r_max.is_finite() || r_max <= r_min || r_points < 2 {
        return Err(CliError::validation(
            "ConfigError",
            "radial grid needs 0 <= r-min < r-max and at least two points",
        ));
    }
    let l = cfg.l_list[0];
    let ph = physics(cfg)?;
    let qn = cfg
        .quantum(n, l)
        .map_err(|e| CliError::validation(e.code(), e.to_string()))?;
    ensure_bound_states(&ph, &qn)?;
    let wf = spectra::wavefunction(&ph.bg, &ph.fc, &ph.osc, &qn)?;

    let mut rows = Vec::with_capacity(r_points);
    for i in 0..r_points {
        let r = r_min + (r_max - r_min) * i as f64 / (r_points - 1) as f64;
        let psi = wf.evaluate(r);
        rows.push(vec![Cell::Num(r), Cell::Num(psi), Cell::Num(r * psi * psi)]);
    }

    // ∫ r ψ² dr = N²/(2S) Σ w_i L_n^{(τ)}(s_i)², exact at this node count
    let pairs = special::gauss_laguerre_nodes(special::DEFAULT_QUADRATURE_COUNT, wf.tau)
        .map_err(|e| CliError::tolerance(e.code(), e.to_string()))?;
    let integral = special::integrate(&pairs, |s| {
        let value = special::laguerre(wf.n, wf.tau, s).expect("valid order and argument");
        value * value
    }) * wf.norm
        * wf.norm
        / (2.0 * wf.scale);

    Ok(Table {
        meta: vec![
            ("coupling", cfg.coupling.as_str().to_string()),
            ("n", n.to_string()),
            ("l", l.to_string()),
            ("k", fmt_num(cfg.k)),
        ],
        columns: vec!["r", "psi", "r_psi2"],
        rows,
        trailing: vec![("normalization", fmt_num(integral))],
    })
}

/// Variables a sweep may scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SweepVar {
    G,
    Kappa1,
    Kappa2,
    C1,
    C2,
    Chi,
    A,
    B,
    Omega,
}

impl SweepVar {
    pub fn as_str(&self) -> &'static str {
        match self {
            SweepVar::G => "g",
            SweepVar::Kappa1 => "kappa1",
            SweepVar::Kappa2 => "kappa2",
            SweepVar::C1 => "c1",
            SweepVar::C2 => "c2",
            SweepVar::Chi => "chi",
            SweepVar::A => "a",
            SweepVar::B => "b",
            SweepVar::Omega => "omega",
        }
    }

    fn apply(&self, cfg: &mut RunConfig, value: f64) {
        match self {
            SweepVar::G => cfg.g = value,
            SweepVar::Kappa1 => cfg.kappa1 = value,
            SweepVar::Kappa2 => cfg.kappa2 = value,
            SweepVar::C1 => cfg.c1 = value,
            SweepVar::C2 => cfg.c2 = value,
            SweepVar::Chi => cfg.chi = value,
            SweepVar::A => cfg.a = value,
            SweepVar::B => cfg.b = value,
            SweepVar::Omega => cfg.omega = value,
        }
    }
}

const SWEEP_COLUMNS: [&str; 10] = [
    "value",
    "n",
    "l",
    "k",
    "branch",
    "epsilon",
    "epsilon_squared",
    "tau",
    "scale",
    "status",
];

fn status_row(
    value: f64,
    n: u32,
    l: i32,
    k: f64,
    branch: &'static str,
    status: &'static str,
) -> Vec<Cell> {
    vec![
        Cell::Num(value),
        Cell::Int(n as i64),
        Cell::Int(l as i64),
        Cell::Num(k),
        Cell::Str(branch),
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
        Cell::Str(status),
    ]
}

fn sweep_point_rows(cfg: &RunConfig, value: f64) -> Vec<Vec<Cell>> {
    let mut rows = Vec::new();
    let ph = physics(cfg).ok();
    for n in 0..=cfg.n_max {
        for &l in &cfg.l_list {
            let Some(ph) = ph.as_ref() else {
                for branch in ["+", "-"] {
                    rows.push(status_row(value, n, l, cfg.k, branch, "InvalidParameters"));
                }
                continue;
            };
            match spectra::energy(&ph.bg, &ph.fc, &ph.osc, &QuantumNumbers { n, l, k: cfg.k }) {
                Ok(level) => {
                    let qn = QuantumNumbers { n, l, k: cfg.k };
                    let tau = model::centrifugal_squared(&ph.bg, &ph.fc, &ph.osc, &qn).sqrt();
                    let scale = model::confinement_squared(&ph.bg, &ph.fc, &ph.osc).sqrt();
                    for (branch, eps) in [("+", level.epsilon_plus), ("-", level.epsilon_minus)] {
                        rows.push(vec![
                            Cell::Num(value),
                            Cell::Int(n as i64),
                            Cell::Int(l as i64),
                            Cell::Num(qn.k),
                            Cell::Str(branch),
                            Cell::Num(eps),
                            Cell::Num(level.epsilon_squared),
                            Cell::Num(tau),
                            Cell::Num(scale),
                            Cell::Str("ok"),
                        ]);
                    }
                }
                Err(err) => {
                    for branch in ["+", "-"] {
                        rows.push(status_row(
                            value,
                            n,
                            l,
                            cfg.k,
                            branch,
                            leak_code(err.code()),
                        ));
                    }
                }
            }
        }
    }
    rows
}

// status strings are a small closed set of error codes; interning them keeps
// Cell::Str borrow-free
fn leak_code(code: &str) -> &'static str {
    match code {
        "ImaginaryFrequency" => "ImaginaryFrequency",
        "ImaginaryCentrifugal" => "ImaginaryCentrifugal",
        "NoBoundStates" => "NoBoundStates",
        "NoConfinement" => "NoConfinement",
        "TachyonicLevel" => "TachyonicLevel",
        "NegativeFrequency" => "NegativeFrequency",
        "NonPositiveMass" => "NonPositiveMass",
        "NonFinite" => "NonFinite",
        _ => "Error",
    }
}

/// `sweep`: the spectrum tabulated at each grid point of one variable.
/// Points run in parallel; rows are emitted in grid order.
pub fn sweep(
    cfg: &RunConfig,
    var: SweepVar,
    from: f64,
    to: f64,
    points: usize,
) -> Result<Table, CliError> {
    if points == 0 || !from.is_finite() || !to.is_finite() {
        return Err(CliError::validation(
            "ConfigError",
            "sweep needs a finite range and at least one point",
        ));
    }
    if !cfg.k.is_finite() {
        return Err(CliError::validation("NonFinite", "k must be finite"));
    }
    let values: Vec<f64> = (0..points)
        .map(|i| {
            if points == 1 {
                from
            } else {
                from + (to - from) * i as f64 / (points - 1) as f64
            }
        })
        .collect();

    let mut blocks: Vec<(usize, Vec<Vec<Cell>>)> = values
        .par_iter()
        .enumerate()
        .map(|(idx, &value)| {
            let mut point_cfg = cfg.clone();
            var.apply(&mut point_cfg, value);
            (idx, sweep_point_rows(&point_cfg, value))
        })
        .collect();
    blocks.sort_by_key(|(idx, _)| *idx);

    Ok(Table {
        meta: vec![
            ("coupling", cfg.coupling.as_str().to_string()),
            ("sweep", var.as_str().to_string()),
        ],
        columns: SWEEP_COLUMNS.to_vec(),
        rows: blocks.into_iter().flat_map(|(_, rows)| rows).collect(),
        trailing: vec![],
    })
}

/// Gnuplot script that renders ε against the swept variable from the CSV.
pub fn sweep_plot_script(csv_file: &str, var: SweepVar, cfg: &RunConfig) -> String {
    let mut script = String::new();
    script.push_str("# gnuplot script generated by lvosc sweep\n");
    script.push_str("set datafile separator ','\n");
    script.push_str("set datafile missing ''\n");
    script.push_str(&format!("set xlabel '{}'\n", var.as_str()));
    script.push_str("set ylabel 'epsilon'\n");
    script.push_str("set key outside\n");
    let mut plots = Vec::new();
    for n in 0..=cfg.n_max {
        for &l in &cfg.l_list {
            for branch in ["+", "-"] {
                plots.push(format!(
                    "  '{csv_file}' every ::1 using 1:(strcol(5) eq '{branch}' && $2 == {n} && $3 == {l} ? $6 : 1/0) \
                     with lines title 'n={n} l={l} {branch}'"
                ));
            }
        }
    }
    script.push_str("plot \\\n");
    script.push_str(&plots.join(", \\\n"));
    script.push('\n');
    script
}

/// `validate`: closed forms against the finite-difference oracle.
/// Returns the printable report and whether every level passed.
pub fn validate(cfg: &RunConfig) -> Result<(String, bool), CliError> {
    let ph = physics(cfg)?;
    let l = cfg.l_list[0];
    let qn = cfg
        .quantum(0, l)
        .map_err(|e| CliError::validation(e.code(), e.to_string()))?;
    ensure_bound_states(&ph, &qn)?;

    let scale = model::confinement_squared(&ph.bg, &ph.fc, &ph.osc).sqrt();
    let grid = RadialGrid::with_r_max_factor(scale, cfg.count, cfg.r_max_factor)
        .map_err(|e| CliError::validation(e.code(), e.to_string()))?;
    let levels = cfg.n_max + 1;

    let report =
        oracle::compare_with_analytic(&ph.bg, &ph.fc, &ph.osc, &qn, levels, &grid, cfg.tolerance)
            .map_err(|e| match e {
            OracleError::GridTooCoarse { .. } | OracleError::NumericalFailure { .. } => {
                CliError::tolerance(e.code(), e.to_string())
            }
            other => CliError::validation(other.code(), other.to_string()),
        })?;

    let mut text = String::new();
    text.push_str(&format!(
        "oracle grid: count = {}, r = [{}, {}], substitution: {}\n",
        report.grid.count,
        fmt_num(report.grid.r_min),
        fmt_num(report.grid.r_max),
        oracle::SUBSTITUTION,
    ));
    if report.reduced_confidence {
        text.push_str("note: tau < 1/2, reduced-confidence regime for the discretization\n");
    }
    for level in &report.levels {
        text.push_str(&format!(
            "n={}: analytic C = {}, oracle C = {}, relative error = {} [{}]\n",
            level.n,
            fmt_num(level.analytic),
            fmt_num(level.numeric),
            fmt_num(level.relative_error),
            if level.pass { "pass" } else { "FAIL" },
        ));
    }
    let pass = report.all_pass();
    text.push_str(&format!(
        "validate: {} ({}/{} levels within {})\n",
        if pass { "PASS" } else { "FAIL" },
        report.levels.iter().filter(|c| c.pass).count(),
        report.levels.len(),
        fmt_num(report.tolerance),
    ));
    Ok((text, pass))
}

/// `limits`: χ monotonicity/continuity and the zero-LSV classification.
pub fn limits(cfg: &RunConfig) -> Result<String, CliError> {
    let ph = physics(cfg)?;
    let l = cfg.l_list[0];
    let qn = cfg
        .quantum(0, l)
        .map_err(|e| CliError::validation(e.code(), e.to_string()))?;
    let report = spectra::limit_checks(&ph.bg, &ph.fc, &ph.osc, &qn);

    let mut text = String::new();
    text.push_str(&format!(
        "limit checks ({} coupling, n = {}, l = {}, k = {}):\n",
        cfg.coupling.as_str(),
        qn.n,
        qn.l,
        fmt_num(qn.k),
    ));
    text.push_str(&format!(
        "  chi grid: {} points on [0, {}]\n",
        report.chi_samples.len(),
        fmt_num(spectra::CHI_SWEEP_MAX),
    ));
    text.push_str(&format!(
        "  monotonicity conditions (g, c1, kappa2, c2 >= 0): {}\n",
        report.monotonicity_applies,
    ));
    text.push_str(&format!(
        "  epsilon non-decreasing in chi: {}\n",
        report.chi_monotone,
    ));
    match (report.continuity_gap, report.continuous_at_zero) {
        (Some(gap), Some(ok)) => text.push_str(&format!(
            "  continuity gap at chi -> 0+: {} (within {}: {})\n",
            fmt_num(gap),
            fmt_num(spectra::CHI_CONTINUITY_TOL),
            ok,
        )),
        _ => text.push_str("  continuity gap at chi -> 0+: not defined (endpoint invalid)\n"),
    }
    text.push_str(&format!(
        "  kappa1 = kappa2 = 0 classification: {}\n",
        report.zero_lsv.code(),
    ));
    for sample in &report.chi_samples {
        match &sample.outcome {
            Ok(eps) => text.push_str(&format!(
                "  chi = {}: epsilon = {}\n",
                fmt_num(sample.chi),
                fmt_num(*eps),
            )),
            Err(err) => text.push_str(&format!(
                "  chi = {}: {}\n",
                fmt_num(sample.chi),
                err.code(),
            )),
        }
    }
    Ok(text)
}

/// Render a table in the configured format.
pub fn render(table: &Table, cfg: &RunConfig, command: &str) -> String {
    match cfg.format {
        OutputFormat::Csv => table.render_csv(),
        OutputFormat::Json => table.render_json(command),
    }
}
