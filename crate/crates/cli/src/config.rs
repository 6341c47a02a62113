//! Run configuration: defaults, flat key=value config files, and flag
//! overrides, applied in that order.

use std::fmt;
use std::path::Path;

use lvosc::model::{
    Coupling, FieldConfig, LorentzBackground, ModelError, OscillatorSpec, QuantumNumbers,
};

/// Environment variable consulted for a config file when `--config` is absent.
pub const ENV_CONFIG: &str = "LVOSC_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CouplingKind {
    Coulomb,
    Cornell,
}

impl CouplingKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CouplingKind::Coulomb => "coulomb",
            CouplingKind::Cornell => "cornell",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug)]
pub struct ConfigError {
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for ConfigError {}

fn config_err(message: impl Into<String>) -> ConfigError {
    ConfigError {
        message: message.into(),
    }
}

/// Fully resolved run configuration. Defaults describe a bound-state
/// Coulomb-type scenario so every subcommand works out of the box.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub g: f64,
    pub kappa1: f64,
    pub kappa2: f64,
    pub c1: f64,
    pub c2: f64,
    pub chi: f64,
    pub mass: f64,
    pub omega: f64,
    pub coupling: CouplingKind,
    pub a: f64,
    pub b: f64,
    pub n_max: u32,
    pub l_list: Vec<i32>,
    pub k: f64,
    pub format: OutputFormat,
    pub count: usize,
    pub r_max_factor: f64,
    pub tolerance: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            g: 1.0,
            kappa1: 2.0,
            kappa2: 0.0,
            c1: 1.0,
            c2: 0.0,
            chi: 0.0,
            mass: 1.0,
            omega: 1.0,
            coupling: CouplingKind::Coulomb,
            a: 1.0,
            b: 1.0,
            n_max: 3,
            l_list: vec![0],
            k: 0.0,
            format: OutputFormat::Csv,
            count: 4000,
            r_max_factor: 40.0,
            tolerance: 1e-4,
        }
    }
}

impl RunConfig {
    pub fn background(&self) -> Result<LorentzBackground, ModelError> {
        LorentzBackground::new(self.g, self.kappa1, self.kappa2)
    }

    pub fn field_config(&self) -> Result<FieldConfig, ModelError> {
        FieldConfig::new(self.c1, self.c2, self.chi)
    }

    pub fn oscillator(&self) -> Result<OscillatorSpec, ModelError> {
        let coupling = match self.coupling {
            CouplingKind::Coulomb => Coupling::Coulomb { b: self.b },
            CouplingKind::Cornell => Coupling::Cornell {
                a: self.a,
                b: self.b,
            },
        };
        OscillatorSpec::new(self.mass, self.omega, coupling)
    }

    pub fn quantum(&self, n: u32, l: i32) -> Result<QuantumNumbers, ModelError> {
        QuantumNumbers::new(n, l, self.k)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.l_list.is_empty() {
            return Err(config_err("l list must not be empty"));
        }
        if self.count < 100 {
            return Err(config_err("oracle grid count must be at least 100"));
        }
        if !self.tolerance.is_finite() || self.tolerance <= 0.0 {
            return Err(config_err("tolerance must be positive"));
        }
        if !self.r_max_factor.is_finite() || self.r_max_factor <= 0.0 {
            return Err(config_err("r_max_factor must be positive"));
        }
        Ok(())
    }

    /// Apply `key = value` lines from a config file. Keys match the long
    /// CLI flags; `l` takes a comma-separated list.
    pub fn apply_file(&mut self, path: &Path) -> Result<(), ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| config_err(format!("cannot read {}: {e}", path.display())))?;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                config_err(format!(
                    "{}:{}: expected key = value",
                    path.display(),
                    idx + 1
                ))
            })?;
            self.apply_pair(key.trim(), value.trim()).map_err(|e| {
                config_err(format!("{}:{}: {}", path.display(), idx + 1, e.message))
            })?;
        }
        Ok(())
    }

    fn apply_pair(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        fn num(key: &str, value: &str) -> Result<f64, ConfigError> {
            value
                .parse::<f64>()
                .map_err(|_| config_err(format!("{key}: invalid number {value:?}")))
        }
        match key {
            "g" => self.g = num(key, value)?,
            "kappa1" => self.kappa1 = num(key, value)?,
            "kappa2" => self.kappa2 = num(key, value)?,
            "c1" => self.c1 = num(key, value)?,
            "c2" => self.c2 = num(key, value)?,
            "chi" => self.chi = num(key, value)?,
            "mass" => self.mass = num(key, value)?,
            "omega" => self.omega = num(key, value)?,
            "a" => self.a = num(key, value)?,
            "b" => self.b = num(key, value)?,
            "k" => self.k = num(key, value)?,
            "tolerance" => self.tolerance = num(key, value)?,
            "r_max_factor" => self.r_max_factor = num(key, value)?,
            "n_max" => {
                self.n_max = value
                    .parse()
                    .map_err(|_| config_err(format!("n_max: invalid integer {value:?}")))?;
            }
            "count" => {
                self.count = value
                    .parse()
                    .map_err(|_| config_err(format!("count: invalid integer {value:?}")))?;
            }
            "coupling" => {
                self.coupling = match value {
                    "coulomb" => CouplingKind::Coulomb,
                    "cornell" => CouplingKind::Cornell,
                    other => {
                        return Err(config_err(format!(
                            "coupling: expected coulomb or cornell, got {other:?}"
                        )))
                    }
                };
            }
            "format" => {
                self.format = match value {
                    "csv" => OutputFormat::Csv,
                    "json" => OutputFormat::Json,
                    other => {
                        return Err(config_err(format!(
                            "format: expected csv or json, got {other:?}"
                        )))
                    }
                };
            }
            "l" => {
                let mut list = Vec::new();
                for part in value.split(',') {
                    let part = part.trim();
                    if part.is_empty() {
                        continue;
                    }
                    list.push(
                        part.parse::<i32>()
                            .map_err(|_| config_err(format!("l: invalid integer {part:?}")))?,
                    );
                }
                self.l_list = list;
            }
            other => return Err(config_err(format!("unknown key {other:?}"))),
        }
        Ok(())
    }
}
