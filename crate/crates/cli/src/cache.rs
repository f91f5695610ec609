//! Optional on-disk generator cache. Entries are advisory: every one is
//! revalidated by [`conicgroup::Conic::with_generators`] before use.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::generators::GeneratorsDoc;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub d: u64,
    pub p: u64,
    pub a: i128,
    pub b: i128,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorCache {
    pub generators: Vec<CacheEntry>,
}

impl GeneratorCache {
    /// A missing file is an empty cache.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        if !path.exists() {
            return Ok(Self::default());
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Data(format!("{}: malformed cache: {e}", path.display())))
    }

    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        let mut text = serde_json::to_string_pretty(self)
            .map_err(|e| CliError::Data(e.to_string()))?;
        text.push('\n');
        std::fs::write(path, text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
    }

    pub fn entries_for(&self, d: u64) -> Vec<(u64, i128, i128)> {
        self.generators
            .iter()
            .filter(|e| e.d == d)
            .map(|e| (e.p, e.a, e.b))
            .collect()
    }

    /// Adds every successfully computed generator of `doc`, keeping entries
    /// sorted by `(D, p)`.
    pub fn merge(&mut self, doc: &GeneratorsDoc) {
        let mut all: BTreeMap<(u64, u64), CacheEntry> =
            self.generators.iter().map(|e| ((e.d, e.p), *e)).collect();
        for row in &doc.rows {
            if let (Some(a), Some(b)) = (row.a, row.b) {
                all.insert((doc.d, row.p), CacheEntry { d: doc.d, p: row.p, a, b });
            }
        }
        self.generators = all.into_values().collect();
    }
}
