use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::sweep::{am_sweep, segmented_sweep, SweepConfig, SweepResult};
use crate::error::{PvgError, Result};
use crate::series::{generate_surrogate, io, AmSignalParams, PreprocessConfig, SurrogateParams, TimeSeries};

/// Where a multi-segment recording comes from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum RecordingSource {
    /// CSV file; `dt` applies to single-column files.
    Csv {
        path: PathBuf,
        #[serde(default = "unit_dt")]
        dt: f64,
    },
    Surrogate(SurrogateParams),
}

fn unit_dt() -> f64 {
    1.0
}

impl RecordingSource {
    pub fn load(&self) -> Result<TimeSeries> {
        match self {
            RecordingSource::Csv { path, dt } => io::load_series(path, *dt),
            RecordingSource::Surrogate(p) => generate_surrogate(p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Experiment {
    /// Sweep on one synthetic AM signal.
    Am {
        #[serde(default)]
        signal: AmSignalParams,
    },
    /// Preprocess a long recording into segments and sweep every segment.
    Segments {
        source: RecordingSource,
        #[serde(default)]
        preprocess: PreprocessConfig,
    },
}

/// Everything needed to re-run a sweep bit-identically, seeds included.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    /// Omitted: [`SweepConfig::am_default`] for AM runs, [`SweepConfig::default`]
    /// for segmented runs.
    #[serde(default)]
    pub sweep: Option<SweepConfig>,
}

impl ExperimentConfig {
    /// The sweep axes in effect.
    pub fn sweep(&self) -> SweepConfig {
        self.sweep.clone().unwrap_or_else(|| match self.experiment {
            Experiment::Am { .. } => SweepConfig::am_default(),
            Experiment::Segments { .. } => SweepConfig::default(),
        })
    }

    /// Copy with every default filled in, as recorded in manifests.
    pub fn resolved(&self) -> Self {
        Self { experiment: self.experiment.clone(), sweep: Some(self.sweep()) }
    }

    pub fn validate(&self) -> Result<()> {
        match &self.experiment {
            Experiment::Am { signal } => signal.validate()?,
            Experiment::Segments { preprocess, .. } => preprocess.validate()?,
        }
        self.sweep().validate()
    }

    pub fn run(&self) -> Result<SweepResult> {
        self.validate()?;
        let sweep = self.sweep();
        match &self.experiment {
            Experiment::Am { signal } => am_sweep(signal, &sweep),
            Experiment::Segments { source, preprocess } => segmented_sweep(&source.load()?, preprocess, &sweep),
        }
    }

    /// Overrides every seed in the document.
    pub fn set_seed(&mut self, seed: u64) {
        match &mut self.experiment {
            Experiment::Am { signal } => signal.rng_seed = seed,
            Experiment::Segments { source: RecordingSource::Surrogate(p), .. } => p.rng_seed = seed,
            Experiment::Segments { .. } => {}
        }
        let mut sweep = self.sweep();
        if let Some(b) = &mut sweep.baseline {
            b.rng_seed = seed;
        }
        self.sweep = Some(sweep);
    }

    /// Makes a relative CSV path absolute against `base`.
    pub fn resolve_paths(&mut self, base: &Path) {
        if let Experiment::Segments { source: RecordingSource::Csv { path, .. }, .. } = &mut self.experiment {
            if path.is_relative() {
                *path = base.join(&*path);
            }
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| PvgError::Config(e.to_string()))
    }

    /// Reads a TOML or JSON config (by extension), or the `config` section of
    /// a run manifest. Relative CSV paths resolve against the file's folder.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let is_json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
        let mut cfg = if is_json {
            match Self::from_json(&text) {
                Ok(c) => c,
                Err(first) => serde_json::from_str::<Manifest>(&text)
                    .map(|m| m.config)
                    .map_err(|_| PvgError::Config(first.to_string()))?,
            }
        } else {
            Self::from_toml(&text)?
        };
        if let Some(dir) = path.parent() {
            cfg.resolve_paths(dir);
        }
        Ok(cfg)
    }
}

/// Written next to sweep outputs; its `config` reproduces them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub tool: String,
    pub version: String,
    pub config: ExperimentConfig,
    pub outputs: Vec<String>,
}

impl Manifest {
    pub fn new(config: ExperimentConfig, outputs: &[&str]) -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME").to_owned(),
            version: env!("CARGO_PKG_VERSION").to_owned(),
            config,
            outputs: outputs.iter().map(|s| (*s).to_owned()).collect(),
        }
    }
}
