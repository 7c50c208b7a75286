//! Optional run configuration file.
//!
//! A TOML file of top-level `key = value` pairs. Every key is optional and
//! command-line flags take precedence:
//!
//! ```toml
//! lexicon = "unified.tsv"
//! stopwords = "stopwords.txt"
//! affect = "nrc_affect.tsv"
//! depechemood = "depechemood.tsv"
//! vad = "nrc_vad.tsv"
//! recenter = true
//! fuzzy_threshold = 0.9
//! out = "report"
//! threads = 4
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Deserialize;

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub lexicon: Option<PathBuf>,
    pub stopwords: Option<PathBuf>,
    pub affect: Option<PathBuf>,
    pub depechemood: Option<PathBuf>,
    pub vad: Option<PathBuf>,
    pub recenter: Option<bool>,
    pub fuzzy_threshold: Option<f64>,
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }
}

/// Settings shared by all subcommands after flags and file are combined.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub lexicon: Option<PathBuf>,
    pub stopwords: Option<PathBuf>,
    pub affect: Option<PathBuf>,
    pub depechemood: Option<PathBuf>,
    pub vad: Option<PathBuf>,
    pub recenter: bool,
    pub fuzzy_threshold: f64,
    pub out: Option<PathBuf>,
    /// `None` uses every available core.
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn from_file(file: ConfigFile) -> Self {
        Self {
            lexicon: file.lexicon,
            stopwords: file.stopwords,
            affect: file.affect,
            depechemood: file.depechemood,
            vad: file.vad,
            recenter: file.recenter.unwrap_or(true),
            fuzzy_threshold: file.fuzzy_threshold.unwrap_or(emofuse::fuzzy::DEFAULT_THRESHOLD),
            out: file.out,
            threads: file.threads,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.fuzzy_threshold > 0.0 && self.fuzzy_threshold < 1.0) {
            bail!(
                "fuzzy threshold must lie strictly between 0 and 1, got {}",
                self.fuzzy_threshold
            );
        }
        if self.threads == Some(0) {
            bail!("threads must be at least 1");
        }
        Ok(())
    }
}

/// Fail early when an input file is missing.
pub fn require_file(path: &Path, what: &str) -> Result<()> {
    if !path.is_file() {
        bail!("{what} file {} does not exist", path.display());
    }
    Ok(())
}
