//! `lvosc` — bound-state spectroscopy of a generalized relativistic
//! oscillator in a Lorentz-symmetry-violating electromagnetic background.
//!
//! Subcommands: `spectrum`, `wavefunction`, `sweep`, `validate`, `limits`.
//! Configuration precedence: built-in defaults < config file (`--config` or
//! `LVOSC_CONFIG`) < flags. Exit codes: 0 success, 1 tolerance/runtime
//! failure, 2 invalid configuration or parameter regime.

mod commands;
mod config;
mod output;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use commands::{CliError, SweepVar};
use config::{CouplingKind, OutputFormat, RunConfig, ENV_CONFIG};

#[derive(Parser)]
#[command(
    name = "lvosc",
    version,
    about = "Bound-state spectra of a generalized relativistic oscillator \
             under Lorentz symmetry violation",
    after_help = "Config files are flat `key = value` lines using the long \
                  flag names (l takes a comma-separated list). Precedence: \
                  defaults < config file < flags."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form energy spectrum, one row per (n, l, branch)
    Spectrum {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Tabulate one normalized radial wavefunction with a quadrature check
    Wavefunction {
        #[command(flatten)]
        common: CommonArgs,
        /// Radial quantum number [default: 0]
        #[arg(long)]
        n: Option<u32>,
        /// Lower end of the radial grid [default: 0]
        #[arg(long, allow_negative_numbers = true)]
        r_min: Option<f64>,
        /// Upper end of the radial grid [default: 5]
        #[arg(long, allow_negative_numbers = true)]
        r_max: Option<f64>,
        /// Number of radial samples [default: 200]
        #[arg(long)]
        r_points: Option<usize>,
    },
    /// Sweep one parameter, tabulating the spectrum at each grid point
    Sweep {
        #[command(flatten)]
        common: CommonArgs,
        /// Variable to sweep
        #[arg(long, value_enum)]
        var: SweepVar,
        /// First grid value
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        /// Last grid value
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        /// Number of grid points [default: 21]
        #[arg(long)]
        points: Option<usize>,
        /// Write a gnuplot script here (requires --out and csv format)
        #[arg(long)]
        plot: Option<PathBuf>,
    },
    /// Check the closed-form levels against the finite-difference oracle
    Validate {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Report limiting behaviour: chi monotonicity, chi -> 0 continuity,
    /// and the kappa1 = kappa2 = 0 classification
    Limits {
        #[command(flatten)]
        common: CommonArgs,
    },
}

/// Flags mirroring the run configuration; unset flags fall back to the
/// config file and then to the defaults listed here.
#[derive(Args)]
struct CommonArgs {
    /// Lorentz-violating coupling magnitude g [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    g: Option<f64>,
    /// Parity-even coefficient kappa1 [default: 2]
    #[arg(long, allow_negative_numbers = true)]
    kappa1: Option<f64>,
    /// Parity-odd coefficient kappa2 [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    kappa2: Option<f64>,
    /// Linear electric-field coefficient c1 [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    c1: Option<f64>,
    /// Coulomb electric-field coefficient c2 [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    c2: Option<f64>,
    /// Magnetic-field slope chi [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    chi: Option<f64>,
    /// Particle mass M > 0 [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    mass: Option<f64>,
    /// Oscillator frequency omega >= 0 [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    omega: Option<f64>,
    /// Coupling function kind [default: coulomb]
    #[arg(long, value_enum)]
    coupling: Option<CouplingKind>,
    /// Cornell linear coefficient a [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    /// Coulomb coefficient b of the coupling function [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    /// Highest radial quantum number [default: 3]
    #[arg(long = "n-max")]
    n_max: Option<u32>,
    /// Angular momentum values, comma separated [default: 0]
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    l: Option<Vec<i32>>,
    /// Axial wavenumber k [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    k: Option<f64>,
    /// Output format [default: csv]
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Write output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Config file of key = value lines (fallback: $LVOSC_CONFIG)
    #[arg(long)]
    config: Option<PathBuf>,
    /// Oracle grid point count [default: 4000]
    #[arg(long)]
    count: Option<usize>,
    /// Oracle wall position factor: r_max = sqrt(factor/scale) [default: 40]
    #[arg(long = "r-max-factor")]
    r_max_factor: Option<f64>,
    /// Oracle comparison tolerance (relative) [default: 1e-4]
    #[arg(long, allow_negative_numbers = true)]
    tolerance: Option<f64>,
}

impl CommonArgs {
    fn resolve(&self) -> Result<RunConfig, CliError> {
        let mut cfg = RunConfig::default();
        let file = self
            .config
            .clone()
            .or_else(|| std::env::var_os(ENV_CONFIG).map(PathBuf::from));
        if let Some(path) = file {
            cfg.apply_file(&path)
                .map_err(|e| CliError::validation("ConfigError", e.to_string()))?;
        }
        macro_rules! apply {
            ($($field:ident),*) => {
                $(if let Some(value) = self.$field { cfg.$field = value; })*
            };
        }
        apply!(
            g,
            kappa1,
            kappa2,
            c1,
            c2,
            chi,
            mass,
            omega,
            a,
            b,
            n_max,
            k,
            count,
            r_max_factor,
            tolerance
        );
        if let Some(kind) = self.coupling {
            cfg.coupling = kind;
        }
        if let Some(list) = &self.l {
            cfg.l_list = list.clone();
        }
        if let Some(format) = self.format {
            cfg.format = format;
        }
        cfg.validate()
            .map_err(|e| CliError::validation("ConfigError", e.to_string()))?;
        Ok(cfg)
    }
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(|e| {
            CliError::tolerance("IoError", format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run() -> Result<i32, CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Spectrum { common } => {
            let cfg = common.resolve()?;
            let table = commands::spectrum(&cfg)?;
            emit(
                common.out.as_deref(),
                &commands::render(&table, &cfg, "spectrum"),
            )?;
            Ok(0)
        }
        Command::Wavefunction {
            common,
            n,
            r_min,
            r_max,
            r_points,
        } => {
            let cfg = common.resolve()?;
            let table = commands::wavefunction(
                &cfg,
                n.unwrap_or(0),
                r_min.unwrap_or(0.0),
                r_max.unwrap_or(5.0),
                r_points.unwrap_or(200),
            )?;
            emit(
                common.out.as_deref(),
                &commands::render(&table, &cfg, "wavefunction"),
            )?;
            Ok(0)
        }
        Command::Sweep {
            common,
            var,
            from,
            to,
            points,
            plot,
        } => {
            let cfg = common.resolve()?;
            let table = commands::sweep(&cfg, var, from, to, points.unwrap_or(21))?;
            emit(
                common.out.as_deref(),
                &commands::render(&table, &cfg, "sweep"),
            )?;
            let plot_path =
                plot.or_else(|| common.out.as_ref().map(|path| path.with_extension("gp")));
            if let Some(path) = plot_path {
                if common.out.is_none() {
                    return Err(CliError::validation(
                        "ConfigError",
                        "--plot needs --out so the script has a data file to read",
                    ));
                }
                if cfg.format != OutputFormat::Csv {
                    return Err(CliError::validation(
                        "ConfigError",
                        "the plot script reads csv; use --format csv",
                    ));
                }
                let csv_name = common
                    .out
                    .as_ref()
                    .and_then(|p| p.file_name())
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_default();
                let script = commands::sweep_plot_script(&csv_name, var, &cfg);
                std::fs::write(&path, script).map_err(|e| {
                    CliError::tolerance("IoError", format!("cannot write {}: {e}", path.display()))
                })?;
            }
            Ok(0)
        }
        Command::Validate { common } => {
            let cfg = common.resolve()?;
            let (text, pass) = commands::validate(&cfg)?;
            emit(common.out.as_deref(), &text)?;
            if pass {
                Ok(0)
            } else {
                Err(CliError::tolerance(
                    "ToleranceFailure",
                    "oracle disagreement above tolerance",
                ))
            }
        }
        Command::Limits { common } => {
            let cfg = common.resolve()?;
            let text = commands::limits(&cfg)?;
            emit(common.out.as_deref(), &text)?;
            Ok(0)
        }
    }
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error[{}]: {}", err.code, err.message);
            if let Some(report) = &err.report {
                eprintln!("{report}");
            }
            std::process::exit(err.exit_code);
        }
    }
}
