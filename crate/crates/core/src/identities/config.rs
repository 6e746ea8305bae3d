use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::registry;
use crate::error::{Error, Result};

const DEFAULT_CONFIG: &str = include_str!("../../config/verify.toml");

/// Upper ends of the parameter grid. Each identity consults only the
/// bounds for the parameters it declares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridBounds {
    pub n_max: usize,
    pub p_max: usize,
    pub m_max: usize,
}

impl GridBounds {
    pub fn new(n_max: usize, p_max: usize, m_max: usize) -> Self {
        GridBounds {
            n_max,
            p_max,
            m_max,
        }
    }
}

impl Default for GridBounds {
    fn default() -> Self {
        VerifyConfig::default().bounds
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyConfig {
    pub bounds: GridBounds,
    pub expected_fail: BTreeSet<String>,
    pub counterexample_cap: usize,
}

impl VerifyConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let config: VerifyConfig =
            toml::from_str(text).map_err(|e| Error::Config(e.message().to_string()))?;
        for id in &config.expected_fail {
            if registry::find(id).is_none() {
                return Err(Error::UnknownIdentity(id.clone()));
            }
        }
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self::from_toml_str(DEFAULT_CONFIG).expect("bundled verify.toml is valid")
    }
}
