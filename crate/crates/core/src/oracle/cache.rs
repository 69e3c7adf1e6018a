//! On-disk cache of sector rank computations.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::RankTriple;
use crate::combinatorics::{Setup, WeightVector};
use crate::error::{Error, Result};

const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SectorKey {
    pub rank: usize,
    pub module: usize,
    pub weight: WeightVector,
    pub degree: u32,
}

impl SectorKey {
    pub fn new(setup: &Setup, weight: &WeightVector, degree: u32) -> Self {
        Self {
            rank: setup.rank(),
            module: setup.module(),
            weight: weight.clone(),
            degree,
        }
    }

    fn label(&self) -> String {
        format!("l{}/r{}/w{}/d{}", self.rank, self.module, self.weight, self.degree)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorRecord {
    pub key: SectorKey,
    pub triple: RankTriple,
    /// Sorted Fock states spanned by the PBW images.
    pub states: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorCache {
    version: u32,
    entries: BTreeMap<String, SectorRecord>,
}

impl SectorCache {
    pub fn new() -> Self {
        Self {
            version: VERSION,
            entries: BTreeMap::new(),
        }
    }

    /// Loads a cache file; a missing file gives an empty cache.
    pub fn load(path: &Path) -> Result<Self> {
        if !path.exists() {
            return Ok(Self::new());
        }
        let cache: SectorCache = serde_json::from_str(&fs::read_to_string(path)?)?;
        if cache.version != VERSION {
            return Err(Error::Cache(format!(
                "{}: version {} (expected {VERSION})",
                path.display(),
                cache.version
            )));
        }
        for (label, rec) in &cache.entries {
            if *label != rec.key.label() {
                return Err(Error::Cache(format!("entry {label} holds {}", rec.key.label())));
            }
        }
        Ok(cache)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, serde_json::to_string_pretty(self)? + "\n")?;
        Ok(())
    }

    pub fn get(&self, key: &SectorKey) -> Option<&SectorRecord> {
        self.entries.get(&key.label())
    }

    pub fn insert(&mut self, record: SectorRecord) {
        self.entries.insert(record.key.label(), record);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{graded_rank, graded_rank_with_cache, sector_rank, Oracle};

    #[test]
    fn hits_match_recomputation() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ranks.json");
        let o = Oracle::new(2);
        let setup = Setup::new(2, 2).unwrap();
        let mut cache = SectorCache::load(&path).unwrap();
        assert!(cache.is_empty());
        let first = graded_rank_with_cache(&o, &setup, 4, None, &mut cache).unwrap();
        cache.save(&path).unwrap();

        let mut reloaded = SectorCache::load(&path).unwrap();
        assert_eq!(reloaded, cache);
        let again = graded_rank_with_cache(&o, &setup, 4, None, &mut reloaded).unwrap();
        assert_eq!(first, again);
        assert_eq!(first, graded_rank(&o, &setup, 4, None).unwrap());

        let w = WeightVector(vec![1, 1]);
        let fresh = sector_rank(&o, &setup, &w, 4).unwrap();
        assert_eq!(reloaded.get(&SectorKey::new(&setup, &w, 4)), Some(&fresh));
    }

    #[test]
    fn rejects_other_versions() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("old.json");
        fs::write(&path, r#"{"version":0,"entries":{}}"#).unwrap();
        assert!(matches!(SectorCache::load(&path), Err(Error::Cache(_))));
    }
}
