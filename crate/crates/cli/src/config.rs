use std::path::Path;

use clap::ValueEnum;
use satake::vinberg::CSign;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

/// Everything that determines a run. Flags override the config file, which overrides defaults.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub subcommand: String,
    pub case: Option<String>,
    pub n: Option<usize>,
    pub n_max: usize,
    pub degree: u32,
    pub format: Format,
    pub c_sign: CSign,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { subcommand: String::new(), case: None, n: None, n_max: 8, degree: 10, format: Format::Json, c_sign: CSign::default() }
    }
}

/// Optional overrides read from a TOML file.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub n_max: Option<usize>,
    pub degree: Option<u32>,
    pub format: Option<Format>,
    pub c_sign: Option<CSign>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
    }
}

impl RunConfig {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, CliError> {
        serde_json::from_str(s).map_err(|e| CliError::Parse(e.to_string()))
    }
}
