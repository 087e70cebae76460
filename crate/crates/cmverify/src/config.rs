//! Run configuration: an optional top-level `seed` and one table of
//! parameter overrides per scenario.
//!
//! ```toml
//! seed = 7
//!
//! [hilbert-axioms]
//! triples = 500
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::VerifyError;
use crate::registry;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Config {
    pub seed: Option<u64>,
    pub sections: BTreeMap<String, toml::Table>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, VerifyError> {
        let table: toml::Table = text.parse().map_err(|e: toml::de::Error| VerifyError::Config(e.message().to_string()))?;
        let mut config = Config::default();
        for (key, value) in table {
            match (key.as_str(), value) {
                ("seed", toml::Value::Integer(n)) if n >= 0 => config.seed = Some(n as u64),
                ("seed", _) => return Err(VerifyError::Config("`seed` must be a non-negative integer".into())),
                (id, toml::Value::Table(t)) => {
                    if registry::find(id).is_err() {
                        return Err(VerifyError::Config(format!("section [{id}] names no scenario")));
                    }
                    config.sections.insert(key, t);
                }
                (other, _) => return Err(VerifyError::Config(format!("unknown top-level key `{other}`"))),
            }
        }
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self, VerifyError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| VerifyError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn section(&self, id: &str) -> Option<&toml::Table> {
        self.sections.get(id)
    }
}
