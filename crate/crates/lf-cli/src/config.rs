use std::path::{Path, PathBuf};

use mempool_data::UnitScale;
use serde::Deserialize;
use stochastic_sim::Seed;

use crate::cli::{GlobalArgs, OutputFormat};
use crate::failure::Failure;

/// Environment variable naming a default config file.
pub const CONFIG_ENV: &str = "LF_CONFIG";

const DEFAULT_DELTA: f64 = 0.05;
const DEFAULT_CONFIDENCE: f64 = 0.95;

/// Optional defaults read from a TOML file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub seed: Option<u64>,
    pub format: Option<OutputFormat>,
    pub delta: Option<f64>,
    pub confidence: Option<f64>,
    pub units: Option<UnitsSection>,
}

#[derive(Debug, Default, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitsSection {
    pub minutes_per_block: Option<f64>,
    pub vmb_per_block: Option<f64>,
}

fn load_file(path: &Path) -> Result<FileConfig, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::invalid(format!("cannot read config {}: {e}", path.display())))?;
    toml::from_str(&text)
        .map_err(|e| Failure::invalid(format!("invalid config {}: {e}", path.display())))
}

/// Settings resolved from flags, the config file, and built-in
/// defaults, in that precedence order.
#[derive(Debug, Clone)]
pub struct Settings {
    pub seed: Seed,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub delta: f64,
    pub confidence: f64,
    pub scale: UnitScale,
}

impl Settings {
    pub fn resolve(global: &GlobalArgs) -> Result<Self, Failure> {
        let file = match &global.config {
            Some(path) => load_file(path)?,
            None => match std::env::var_os(CONFIG_ENV) {
                Some(path) => load_file(Path::new(&path))?,
                None => FileConfig::default(),
            },
        };
        let units = file.units.unwrap_or_default();
        let default_scale = UnitScale::default();
        let scale = UnitScale::new(
            units
                .minutes_per_block
                .unwrap_or(default_scale.minutes_per_block),
            units.vmb_per_block.unwrap_or(default_scale.vmb_per_block),
        )?;
        Ok(Self {
            seed: Seed::new(global.seed.or(file.seed).unwrap_or(0), 0),
            format: global.format.or(file.format).unwrap_or(OutputFormat::Csv),
            out: global.out.clone(),
            delta: file.delta.unwrap_or(DEFAULT_DELTA),
            confidence: file.confidence.unwrap_or(DEFAULT_CONFIDENCE),
            scale,
        })
    }

    /// Unit scale with per-command flag overrides applied.
    pub fn scale_with(
        &self,
        minutes_per_block: Option<f64>,
        vmb_per_block: Option<f64>,
    ) -> Result<UnitScale, Failure> {
        Ok(UnitScale::new(
            minutes_per_block.unwrap_or(self.scale.minutes_per_block),
            vmb_per_block.unwrap_or(self.scale.vmb_per_block),
        )?)
    }
}
