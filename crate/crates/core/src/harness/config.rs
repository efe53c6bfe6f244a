use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{CoxeterError, Result};
use crate::preprojective::DEFAULT_MU_MAX;
use crate::roots::depth::DEFAULT_DEPTH;
use crate::roots::length::DEFAULT_RADIUS;
use crate::system::SystemDocument;
use crate::ExactSystem;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(CoxeterError::Parse(format!("unknown format {other:?}, expected json or csv"))),
        }
    }
}

/// Parameters shared by all commands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub input: Option<PathBuf>,
    pub depth_bound: u32,
    pub mu_max: usize,
    pub radius: u32,
    pub format: Format,
    pub seed: u64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            input: None,
            depth_bound: DEFAULT_DEPTH,
            mu_max: DEFAULT_MU_MAX,
            radius: DEFAULT_RADIUS,
            format: Format::Json,
            seed: 0,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.depth_bound == 0 || self.mu_max == 0 || self.radius == 0 {
            return Err(CoxeterError::Parse("depth, mu-max and radius must be positive".into()));
        }
        Ok(())
    }

    pub fn require_input(&self) -> Result<&Path> {
        self.input
            .as_deref()
            .ok_or_else(|| CoxeterError::Parse("this command needs --input".into()))
    }
}

/// Reads and validates a system document.
pub fn load_system(path: &Path) -> Result<(SystemDocument, ExactSystem)> {
    let text = fs::read_to_string(path).map_err(|e| CoxeterError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let doc = SystemDocument::parse(&text)?;
    let sys = ExactSystem::new(doc.to_matrix()?)?;
    Ok((doc, sys))
}
