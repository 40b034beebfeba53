//! Flag/file configuration merge and validation.
//!
//! Every option can come from the command line or from a plain `key = value`
//! text file (`--config`); explicit flags win on conflict. All module-level
//! preconditions are re-validated here so bad input dies with an actionable
//! message and exit code 2 before any numerics run.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::Args;
use qosc_core::assembly::{BFieldSystem, EFieldSystem, PhysicalSystem};

use crate::CliError;

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Physical system: efield | bfield
    #[arg(long)]
    pub system: Option<String>,
    /// Oscillator parameter omega (potential ~ omega^4 r^2 / 2)
    #[arg(long)]
    pub omega: Option<f64>,
    /// Particle charge q
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<f64>,
    /// Electric field strength zeta (efield system)
    #[arg(long)]
    pub zeta: Option<f64>,
    /// Magnetic field strength B (bfield system)
    #[arg(long)]
    pub bfield: Option<f64>,
    /// Speed of light c (unit parameter, default 1)
    #[arg(long)]
    pub c: Option<f64>,
    /// Orbital quantum number ell
    #[arg(long)]
    pub ell: Option<u32>,
    /// Azimuthal quantum number mu (|mu| <= ell, bfield system)
    #[arg(long = "mu-az", allow_hyphen_values = true)]
    pub mu_az: Option<i32>,
    /// Basis scale: a positive number, or "auto" for the diagonalizing scale
    #[arg(long)]
    pub lambda: Option<String>,
    /// Matrix truncation size N
    #[arg(long = "basis-size")]
    pub basis_size: Option<usize>,
    /// Number of levels k to report
    #[arg(long)]
    pub levels: Option<usize>,
    /// Output file (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format: csv | json
    #[arg(long)]
    pub format: Option<String>,
    /// Tolerance for the matrix/closed-form comparison at lambda = auto
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Plain key=value file supplying any of the options above
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub struct Resolved {
    pub system: PhysicalSystem,
    /// Basis scale in use (auto already substituted).
    pub lambda: f64,
    /// How the scale was requested, for metadata ("auto" or the number).
    pub lambda_request: String,
    pub basis_size: usize,
    pub levels: usize,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub tolerance: f64,
}

fn parse_config_file(path: &Path) -> Result<BTreeMap<String, String>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read config file {}: {e}", path.display())))?;
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::Config(format!(
                "{}:{}: expected 'key = value', got '{raw}'",
                path.display(),
                lineno + 1
            )));
        };
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    const KNOWN: [&str; 14] = [
        "system", "omega", "q", "zeta", "bfield", "c", "ell", "mu-az", "lambda", "basis-size",
        "levels", "out", "format", "tolerance",
    ];
    if let Some(bad) = map.keys().find(|k| !KNOWN.contains(&k.as_str())) {
        return Err(CliError::Config(format!(
            "unknown config key '{bad}' in {} (known keys: {})",
            path.display(),
            KNOWN.join(", ")
        )));
    }
    Ok(map)
}

fn parsed<T: std::str::FromStr>(
    map: &BTreeMap<String, String>,
    key: &str,
) -> Result<Option<T>, CliError>
where
    T::Err: std::fmt::Display,
{
    match map.get(key) {
        None => Ok(None),
        Some(raw) => raw
            .parse::<T>()
            .map(Some)
            .map_err(|e| CliError::Config(format!("config key '{key}': cannot parse '{raw}': {e}"))),
    }
}

impl CommonArgs {
    /// Merge flags over the optional config file and validate everything.
    pub fn resolve(&self) -> Result<Resolved, CliError> {
        let file = match &self.config {
            Some(path) => parse_config_file(path)?,
            None => BTreeMap::new(),
        };

        let system_name = self
            .system
            .clone()
            .or_else(|| file.get("system").cloned())
            .ok_or_else(|| CliError::Config("missing required option --system (efield | bfield)".into()))?;
        let omega = self
            .omega
            .or(parsed(&file, "omega")?)
            .ok_or_else(|| CliError::Config("missing required option --omega".into()))?;
        let q = self.q.or(parsed(&file, "q")?).unwrap_or(1.0);
        let zeta = self.zeta.or(parsed(&file, "zeta")?).unwrap_or(0.0);
        let b = self.bfield.or(parsed(&file, "bfield")?).unwrap_or(0.0);
        let c = self.c.or(parsed(&file, "c")?).unwrap_or(1.0);
        let ell = self.ell.or(parsed(&file, "ell")?).unwrap_or(0);
        let mu_az = self.mu_az.or(parsed(&file, "mu-az")?).unwrap_or(0);
        let lambda_request = self
            .lambda
            .clone()
            .or_else(|| file.get("lambda").cloned())
            .unwrap_or_else(|| "auto".into());
        let basis_size = self.basis_size.or(parsed(&file, "basis-size")?).unwrap_or(100);
        let levels = self.levels.or(parsed(&file, "levels")?).unwrap_or(5);
        let out = self.out.clone().or_else(|| file.get("out").map(PathBuf::from));
        let format_name = self
            .format
            .clone()
            .or_else(|| file.get("format").cloned())
            .unwrap_or_else(|| "csv".into());
        let tolerance = self.tolerance.or(parsed(&file, "tolerance")?).unwrap_or(1e-10);

        let system: PhysicalSystem = match system_name.as_str() {
            "efield" => EFieldSystem::new(omega, q, zeta, ell)?.into(),
            "bfield" => BFieldSystem::new(omega, q, b, c, ell, mu_az)?.into(),
            other => {
                return Err(CliError::Config(format!(
                    "unknown system '{other}' (expected efield or bfield)"
                )))
            }
        };

        let lambda = match lambda_request.as_str() {
            "auto" => system.lambda_star(),
            number => number.parse::<f64>().map_err(|_| {
                CliError::Config(format!(
                    "lambda must be a positive number or 'auto', got '{number}'"
                ))
            })?,
        };
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(CliError::Config(format!(
                "lambda must be positive and finite, got {lambda}"
            )));
        }

        let format = match format_name.as_str() {
            "csv" => OutputFormat::Csv,
            "json" => OutputFormat::Json,
            other => {
                return Err(CliError::Config(format!(
                    "unknown format '{other}' (expected csv or json)"
                )))
            }
        };

        if basis_size == 0 {
            return Err(CliError::Config("basis-size must be at least 1".into()));
        }
        if levels == 0 || levels > basis_size {
            return Err(CliError::Config(format!(
                "levels must satisfy 1 <= levels <= basis-size, got {levels} with basis-size {basis_size}"
            )));
        }
        if !(tolerance > 0.0) {
            return Err(CliError::Config(format!(
                "tolerance must be positive, got {tolerance}"
            )));
        }

        Ok(Resolved {
            system,
            lambda,
            lambda_request,
            basis_size,
            levels,
            out,
            format,
            tolerance,
        })
    }
}
