//! TOML experiment specification.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::fitness::{FitnessScheme, IndicatorKind};

/// Population size of the benchmark protocol, by objective count. The sizes
/// are chosen so a simplex-lattice weight layout exists for each `M`.
pub fn mu_for_objectives(m: usize) -> usize {
    match m {
        2 => 200,
        3 | 5 | 9 => 210,
        8 => 156,
        10 => 230,
        15 => 135,
        _ => 200,
    }
}

fn default_runs() -> usize {
    31
}

fn default_budget() -> usize {
    10_000
}

fn default_reference_size() -> usize {
    5_000
}

/// One algorithm setting of the batch. The neighborhood is given either as
/// an absolute size `t` or as a fraction of the population; leaving both out
/// selects the protocol default `T = floor(0.1 mu)`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgorithmSpec {
    pub name: String,
    #[serde(default)]
    pub t: Option<usize>,
    #[serde(default)]
    pub t_fraction: Option<f64>,
    #[serde(default)]
    pub indicator: Option<IndicatorKind>,
    #[serde(default)]
    pub kappa: Option<f64>,
}

impl AlgorithmSpec {
    /// Neighborhood size for a given population size.
    pub fn neighborhood(&self, mu: usize) -> Result<usize> {
        match (self.t, self.t_fraction) {
            (Some(_), Some(_)) => Err(Error::config(format!(
                "algorithm `{}` sets both t and t_fraction",
                self.name
            ))),
            (Some(t), None) => Ok(t),
            (None, Some(f)) => Ok(((f * mu as f64).floor() as usize).max(1)),
            (None, None) => Ok((mu / 10).max(1)),
        }
    }

    pub fn scheme(&self) -> FitnessScheme {
        let mut scheme = FitnessScheme::default();
        if let Some(kind) = self.indicator {
            scheme.kind = kind;
        }
        if let Some(kappa) = self.kappa {
            scheme.kappa = kappa;
        }
        scheme
    }

    fn validate(&self) -> Result<()> {
        if self.name.is_empty() {
            return Err(Error::config("algorithm name must be nonempty"));
        }
        if let Some(f) = self.t_fraction {
            if !(f > 0.0 && f <= 1.0) {
                return Err(Error::config(format!(
                    "algorithm `{}`: t_fraction must lie in (0, 1], got {f}",
                    self.name
                )));
            }
        }
        if self.t == Some(0) {
            return Err(Error::config(format!("algorithm `{}`: t must be positive", self.name)));
        }
        self.neighborhood(100)?;
        self.scheme().validate()
    }
}

/// A full batch description, loadable from TOML.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    pub problems: Vec<String>,
    #[serde(rename = "algorithm")]
    pub algorithms: Vec<AlgorithmSpec>,
    #[serde(default = "default_runs")]
    pub runs: usize,
    #[serde(default = "default_budget")]
    pub budget: usize,
    #[serde(default)]
    pub seed: u64,
    /// Size of the generated reference sets.
    #[serde(default = "default_reference_size")]
    pub reference_size: usize,
    /// Population size override; the default follows [`mu_for_objectives`].
    #[serde(default)]
    pub mu: Option<usize>,
    /// If set, archives larger than this are thinned by max-min subset
    /// selection in normalized solution space before scoring.
    #[serde(default)]
    pub subset_size: Option<usize>,
}

impl ExperimentSpec {
    pub fn validate(&self) -> Result<()> {
        if self.problems.is_empty() {
            return Err(Error::config("spec lists no problems"));
        }
        if self.algorithms.is_empty() {
            return Err(Error::config("spec lists no algorithms"));
        }
        let mut names: Vec<&str> = self.algorithms.iter().map(|a| a.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        if names.len() != self.algorithms.len() {
            return Err(Error::config("algorithm names must be unique"));
        }
        for a in &self.algorithms {
            a.validate()?;
        }
        if self.runs == 0 {
            return Err(Error::config("runs must be positive"));
        }
        if self.reference_size == 0 {
            return Err(Error::config("reference_size must be positive"));
        }
        if self.subset_size == Some(0) {
            return Err(Error::config("subset_size must be positive when set"));
        }
        if let Some(mu) = self.mu {
            if mu < 2 {
                return Err(Error::config("mu override must be at least 2"));
            }
        }
        Ok(())
    }
}

/// Parses a spec from TOML text.
pub fn parse_spec(text: &str) -> Result<ExperimentSpec> {
    let spec: ExperimentSpec = toml::from_str(text)
        .map_err(|e| Error::config(format!("bad experiment spec: {e}")))?;
    spec.validate()?;
    Ok(spec)
}

/// Loads and validates a spec file.
pub fn load_spec(path: &Path) -> Result<ExperimentSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_spec(&text).map_err(|e| match e {
        Error::Config(msg) => Error::parse(path, msg),
        other => other,
    })
}
