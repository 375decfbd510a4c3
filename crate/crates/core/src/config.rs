//! Run configuration: a TOML file with `[field]`, `[extension]`, and `[run]`
//! sections. Angles may be written as plain radians or as multiples of pi
//! with a `"pi:"` prefix (e.g. `"pi:0.5"`), which keeps the branch values
//! `{0, pi/2, pi, 3pi/2}` exact.

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::extension::ExtensionSpec;
use crate::field::{FieldConfig, RadialBump, Solenoid};

/// Options of the `[run]` section, all optional in the file.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOptions {
    /// `[xmin, xmax, ymin, ymax]` for the grid command
    pub grid_bounds: [f64; 4],
    pub grid_resolution: usize,
    /// which mode the grid command evaluates
    pub mode_index: usize,
    pub seed: u64,
    pub annihilation_tolerance: f64,
    pub step: f64,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            grid_bounds: [-4.0, 4.0, -4.0, 4.0],
            grid_resolution: 64,
            mode_index: 0,
            seed: 0,
            annihilation_tolerance: 1e-6,
            step: 1e-4,
        }
    }
}

/// A fully validated run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub field: FieldConfig,
    pub extension: ExtensionSpec,
    /// second extension vector, used by the spin-flip command
    pub extension_prime: Option<ExtensionSpec>,
    pub run: RunOptions,
}

impl RunConfig {
    /// The common tau if the extension vector is uniform.
    pub fn uniform_tau(&self) -> Result<f64> {
        self.extension
            .uniform_tau()
            .ok_or_else(|| Error::Config("this command requires a uniform tau".into()))
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Angle {
    Number(f64),
    Text(String),
}

impl Angle {
    fn resolve(&self) -> Result<f64> {
        match self {
            Angle::Number(x) => Ok(*x),
            Angle::Text(s) => {
                let body = s.strip_prefix("pi:").ok_or_else(|| {
                    Error::Config(format!("angle string {s:?} must be \"pi:<x>\""))
                })?;
                let factor: f64 = body
                    .trim()
                    .parse()
                    .map_err(|_| Error::Config(format!("bad angle multiplier in {s:?}")))?;
                Ok(factor * std::f64::consts::PI)
            }
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BumpEntry {
    center: [f64; 2],
    radius: f64,
    flux: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SolenoidEntry {
    center: [f64; 2],
    alpha: f64,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldSection {
    #[serde(default)]
    bumps: Vec<BumpEntry>,
    #[serde(default)]
    solenoids: Vec<SolenoidEntry>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExtensionSection {
    tau: Option<Angle>,
    taus: Option<Vec<Angle>>,
    taus_prime: Option<Vec<Angle>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RunSection {
    grid_bounds: Option<[f64; 4]>,
    grid_resolution: Option<usize>,
    mode_index: Option<usize>,
    seed: Option<u64>,
    annihilation_tolerance: Option<f64>,
    step: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    #[serde(default)]
    field: FieldSection,
    #[serde(default)]
    extension: ExtensionSection,
    #[serde(default)]
    run: RunSection,
}

/// Parses and validates a configuration from TOML text.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let file: ConfigFile =
        toml::from_str(text).map_err(|e| Error::Config(format!("schema: {e}")))?;

    let bumps: Vec<RadialBump> = file
        .field
        .bumps
        .iter()
        .map(|b| RadialBump {
            center: Complex64::new(b.center[0], b.center[1]),
            radius: b.radius,
            flux: b.flux,
        })
        .collect();
    let solenoids: Vec<Solenoid> = file
        .field
        .solenoids
        .iter()
        .map(|s| Solenoid {
            center: Complex64::new(s.center[0], s.center[1]),
            alpha: s.alpha,
        })
        .collect();
    let field =
        FieldConfig::new(bumps, solenoids).map_err(|e| Error::Config(format!("field: {e}")))?;

    let n = field.num_solenoids();
    let extension = match (&file.extension.tau, &file.extension.taus) {
        (Some(_), Some(_)) => {
            return Err(Error::Config("give either tau or taus, not both".into()))
        }
        (Some(a), None) => ExtensionSpec::uniform(a.resolve()?, n),
        (None, Some(list)) => {
            let taus = list
                .iter()
                .map(|a| a.resolve())
                .collect::<Result<Vec<_>>>()?;
            if taus.len() != n {
                return Err(Error::Config(format!(
                    "{} extension angles for {n} solenoids",
                    taus.len()
                )));
            }
            ExtensionSpec::new(taus)
        }
        (None, None) => ExtensionSpec::uniform(0.0, n),
    }
    .map_err(|e| Error::Config(e.to_string()))?;

    let extension_prime = match &file.extension.taus_prime {
        None => None,
        Some(list) => {
            let taus = list
                .iter()
                .map(|a| a.resolve())
                .collect::<Result<Vec<_>>>()?;
            if taus.len() != n {
                return Err(Error::Config(format!(
                    "{} primed angles for {n} solenoids",
                    taus.len()
                )));
            }
            Some(ExtensionSpec::new(taus).map_err(|e| Error::Config(e.to_string()))?)
        }
    };

    let defaults = RunOptions::default();
    let run = RunOptions {
        grid_bounds: file.run.grid_bounds.unwrap_or(defaults.grid_bounds),
        grid_resolution: file.run.grid_resolution.unwrap_or(defaults.grid_resolution),
        mode_index: file.run.mode_index.unwrap_or(defaults.mode_index),
        seed: file.run.seed.unwrap_or(defaults.seed),
        annihilation_tolerance: file
            .run
            .annihilation_tolerance
            .unwrap_or(defaults.annihilation_tolerance),
        step: file.run.step.unwrap_or(defaults.step),
    };
    if !(run.annihilation_tolerance > 0.0) || !(run.step > 0.0) {
        return Err(Error::Config("tolerances must be positive".into()));
    }
    if run.grid_resolution < 2 {
        return Err(Error::Config("grid_resolution must be at least 2".into()));
    }
    if run.grid_bounds[0] >= run.grid_bounds[1] || run.grid_bounds[2] >= run.grid_bounds[3] {
        return Err(Error::Config("grid_bounds must be ordered".into()));
    }

    Ok(RunConfig {
        field,
        extension,
        extension_prime,
        run,
    })
}

/// Reads and parses a configuration file.
pub fn load_config(path: &std::path::Path) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    parse_config(&text)
}
