//! Experiment configuration, read from TOML.

use std::path::{Path, PathBuf};

use qtanner_core::decoder::DecoderConfig;
use qtanner_core::gf2::BitMatrix;
use qtanner_core::group::GroupSpec;
use qtanner_core::local_codes::LinearCode;
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub seed: u64,
    #[serde(default)]
    pub trials: u64,
    /// Record wall time per trial. Off by default so reports are reproducible.
    #[serde(default)]
    pub timing: bool,
    #[serde(default)]
    pub threads: Option<usize>,
    pub instance: InstanceSpec,
    #[serde(default)]
    pub decoder: DecoderConfig,
    pub error_model: ErrorModel,
    #[serde(default)]
    pub output: OutputPaths,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    pub group: GroupSpec,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub codes: CodeSource,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CodeSource {
    /// Short code descriptions, see [`parse_code`].
    Named { ca: String, cb: String },
    /// Random pair with `dim C_A = ⌊ρΔ⌋` and all four distances at least `⌈δΔ⌉`.
    Sampled {
        rho: f64,
        delta_target: f64,
        seed: u64,
        #[serde(default = "default_budget")]
        budget: usize,
    },
    /// Code files in the text format of `LinearCode::to_text`, relative to
    /// the config file.
    Files { ca: PathBuf, cb: PathBuf },
}

fn default_budget() -> usize {
    10_000
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ErrorModel {
    /// Uniformly random support of the given weight.
    Uniform { weight: usize },
    /// Support drawn inside the local views of `vertices` random vertices.
    Clustered { vertices: usize, weight: usize },
    /// Half the support of a random Z-type generator.
    HalfGenerator,
    /// Every error of weight at most `max_weight`; `trials` is ignored.
    Exhaustive { max_weight: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputPaths {
    pub records: String,
    pub summary: String,
}

impl Default for OutputPaths {
    fn default() -> Self {
        Self {
            records: "records.jsonl".into(),
            summary: "summary.csv".into(),
        }
    }
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        Ok(toml::from_str(text)?)
    }

    /// Loads and validates a config; returns it with the directory that
    /// relative paths resolve against.
    pub fn load(path: &Path) -> Result<(Self, PathBuf)> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
        let cfg = Self::from_toml(&text)?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        cfg.validate(&base)?;
        Ok((cfg, base))
    }

    pub fn validate(&self, base: &Path) -> Result<()> {
        self.decoder.validate().map_err(HarnessError::Config)?;
        if self.instance.a.len() != self.instance.b.len() {
            return Err(HarnessError::Config(format!(
                "generator sets have sizes {} and {}",
                self.instance.a.len(),
                self.instance.b.len()
            )));
        }
        if self.threads == Some(0) {
            return Err(HarnessError::Config("threads must be positive".into()));
        }
        match &self.instance.codes {
            CodeSource::Files { ca, cb } => {
                for p in [ca, cb] {
                    let full = base.join(p);
                    if !full.is_file() {
                        return Err(HarnessError::Config(format!("code file {} not found", full.display())));
                    }
                }
            }
            CodeSource::Named { ca, cb } => {
                parse_code(ca)?;
                parse_code(cb)?;
            }
            CodeSource::Sampled { rho, delta_target, .. } => {
                if !(0.0..=1.0).contains(rho) || !(0.0..=1.0).contains(delta_target) {
                    return Err(HarnessError::Config("rho and delta_target must lie in [0, 1]".into()));
                }
            }
        }
        if let ErrorModel::Clustered { vertices: 0, weight } = self.error_model {
            if weight > 0 {
                return Err(HarnessError::Config("clustered errors need at least one vertex".into()));
            }
        }
        Ok(())
    }
}

/// Parses `repetition:N`, `parity:N`, `full:N`, `zero:N`, `gen:ROWS` or
/// `check:ROWS`, where `ROWS` is a comma-separated list of 0/1 strings.
pub fn parse_code(spec: &str) -> Result<LinearCode> {
    let (kind, arg) = spec
        .split_once(':')
        .ok_or_else(|| HarnessError::Config(format!("code spec `{spec}` needs the form kind:argument")))?;
    let length = || {
        arg.trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| HarnessError::Config(format!("bad code length in `{spec}`")))
    };
    let rows = || -> Result<BitMatrix> {
        let rows: Vec<&str> = arg.split(',').map(str::trim).collect();
        BitMatrix::from_strs(&rows).map_err(|e| HarnessError::Config(format!("`{spec}`: {e}")))
    };
    Ok(match kind.trim() {
        "repetition" | "rep" => LinearCode::repetition(length()?),
        "parity" => LinearCode::single_parity(length()?),
        "full" => LinearCode::full(length()?),
        "zero" => LinearCode::zero(length()?),
        "gen" => LinearCode::from_generator(&rows()?),
        "check" => LinearCode::from_parity_check(&rows()?),
        other => return Err(HarnessError::Config(format!("unknown code kind `{other}`"))),
    })
}
