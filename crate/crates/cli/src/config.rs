//! Signature configuration files.
//!
//! ```json
//! {"letters": ["x", "y"], "operators": [{"name": "a", "weight": "1"}, {"name": "b", "weight": "-1/2"}]}
//! ```
//! List order fixes the orders on letters and operators.

use std::path::Path;

use mrb_core::signature::SignatureError;
use mrb_core::{q, Coefficient, Signature};
use serde::Deserialize;

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default)]
    pub letters: Vec<String>,
    pub operators: Vec<OperatorEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorEntry {
    pub name: String,
    pub weight: String,
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid config: {0}")]
    Json(#[from] serde_json::Error),
    #[error("weight `{weight}` of operator `{name}` is not a rational p/q")]
    Weight { name: String, weight: String },
    #[error("name `{0}` is not an identifier [A-Za-z][A-Za-z0-9]*")]
    Name(String),
    #[error(transparent)]
    Signature(#[from] SignatureError),
}

impl ConfigFile {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        ConfigFile::from_json(&text)
    }

    pub fn signature(&self) -> Result<Signature, ConfigError> {
        let names = self
            .letters
            .iter()
            .chain(self.operators.iter().map(|o| &o.name));
        if let Some(bad) = names.into_iter().find(|n| !is_identifier(n)) {
            return Err(ConfigError::Name(bad.clone()));
        }
        let mut ops = Vec::with_capacity(self.operators.len());
        for entry in &self.operators {
            let weight = parse_weight(&entry.weight).ok_or_else(|| ConfigError::Weight {
                name: entry.name.clone(),
                weight: entry.weight.clone(),
            })?;
            ops.push((entry.name.clone(), weight));
        }
        Ok(Signature::new(self.letters.clone(), ops)?)
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
}

fn parse_weight(text: &str) -> Option<Coefficient> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: Coefficient = n.trim().parse().ok()?;
            let d: Coefficient = d.trim().parse().ok()?;
            (d != q(0)).then(|| n / d)
        }
        None => text.parse().ok(),
    }
}

/// Letters `x, y, z`; operators `a` with weight 1 and `b` with weight -1.
pub fn default_signature() -> Signature {
    Signature::new(["x", "y", "z"], vec![("a", q(1)), ("b", q(-1))])
        .expect("built-in signature is valid")
}
