//! Run configuration: resource caps, cache location, output format and
//! thread budget.

use std::path::{Path, PathBuf};

use packsyz_core::complex::DEFAULT_MAX_SIMPLICES;
use packsyz_core::syzygy::DEFAULT_MAX_ORACLE_ENTRIES;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "PACKSYZ_CACHE_DIR";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Config {
    /// Largest complex, in simplices, that may be built.
    pub max_simplices: u64,
    /// Largest Koszul matrix, in nonzero entries, that may be assembled.
    pub max_oracle_entries: u64,
    /// Homology cache; `None` disables caching.
    pub cache_dir: Option<PathBuf>,
    pub format: Format,
    /// Worker threads; 0 uses every available core.
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_simplices: DEFAULT_MAX_SIMPLICES,
            max_oracle_entries: DEFAULT_MAX_ORACLE_ENTRIES,
            cache_dir: None,
            format: Format::Text,
            threads: 0,
        }
    }
}

impl Config {
    /// Parses a TOML document; unknown keys are rejected.
    pub fn from_toml(text: &str) -> CliResult<Self> {
        let cfg: Config = toml::from_str(text).map_err(|e| CliError::Usage(format!("invalid config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn validate(&self) -> CliResult<()> {
        if self.max_simplices == 0 || self.max_oracle_entries == 0 {
            return Err(CliError::Usage("resource caps must be positive".into()));
        }
        Ok(())
    }

    /// Applies the cache-directory environment override.
    pub fn with_env(mut self) -> Self {
        if let Some(dir) = std::env::var_os(CACHE_DIR_ENV).filter(|v| !v.is_empty()) {
            self.cache_dir = Some(PathBuf::from(dir));
        }
        self
    }
}

/// `$XDG_CACHE_HOME/packsyz`, else `$HOME/.cache/packsyz`.
pub fn default_cache_dir() -> Option<PathBuf> {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("packsyz"))
}
