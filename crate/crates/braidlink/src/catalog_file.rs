//! The on-disk catalog format: a JSON object
//! `{"records":[{"name","n","m","base_word","extension_word","base_strands",
//! "expected_lk","source"}]}` with braid words in the shared signed-integer
//! text form. Loading validates every record; invalid records are returned
//! separately with the failing invariant named.

use std::path::Path;

use braidlink_core::braid::StrandSet;
use braidlink_core::catalog::{validate_record, CatalogError, ExtensionRecord};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum CatalogIoError {
    #[error("cannot read catalog: {0}")]
    Read(#[from] std::io::Error),
    #[error("cannot parse catalog JSON: {0}")]
    Parse(#[from] serde_json::Error),
}

#[derive(Debug, Serialize, Deserialize)]
struct CatalogJson {
    records: Vec<RecordJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct RecordJson {
    name: String,
    n: usize,
    m: usize,
    base_word: String,
    extension_word: String,
    base_strands: Vec<usize>,
    expected_lk: Option<i64>,
    source: String,
}

impl From<&ExtensionRecord> for RecordJson {
    fn from(r: &ExtensionRecord) -> Self {
        RecordJson {
            name: r.name.clone(),
            n: r.n,
            m: r.m,
            base_word: r.base_word.clone(),
            extension_word: r.extension_word.clone(),
            base_strands: r.base_strands.to_vec(),
            expected_lk: r.expected_lk,
            source: r.source.clone(),
        }
    }
}

impl From<RecordJson> for ExtensionRecord {
    fn from(r: RecordJson) -> Self {
        ExtensionRecord {
            name: r.name,
            n: r.n,
            m: r.m,
            base_word: r.base_word,
            extension_word: r.extension_word,
            base_strands: r.base_strands.into_iter().collect::<StrandSet>(),
            expected_lk: r.expected_lk,
            source: r.source,
        }
    }
}

/// Result of loading a catalog: the records that passed validation and the
/// ones that failed, with reasons.
#[derive(Debug)]
pub struct LoadOutcome {
    pub valid: Vec<ExtensionRecord>,
    pub rejected: Vec<(String, CatalogError)>,
}

pub fn load_catalog(path: &Path) -> Result<LoadOutcome, CatalogIoError> {
    let text = std::fs::read_to_string(path)?;
    let parsed: CatalogJson = serde_json::from_str(&text)?;
    let mut valid = Vec::new();
    let mut rejected = Vec::new();
    for rec in parsed.records {
        let rec: ExtensionRecord = rec.into();
        match validate_record(&rec) {
            Ok(_) => valid.push(rec),
            Err(e) => rejected.push((rec.name.clone(), e)),
        }
    }
    Ok(LoadOutcome { valid, rejected })
}

pub fn save_catalog(path: &Path, records: &[ExtensionRecord]) -> Result<(), CatalogIoError> {
    let json = CatalogJson { records: records.iter().map(RecordJson::from).collect() };
    let mut text = serde_json::to_string_pretty(&json)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use braidlink_core::catalog::builtin_records;

    #[test]
    fn save_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("catalog.json");
        let records = builtin_records();
        save_catalog(&path, &records).unwrap();
        let outcome = load_catalog(&path).unwrap();
        assert!(outcome.rejected.is_empty());
        assert_eq!(outcome.valid, records);
    }

    #[test]
    fn invalid_record_reported_with_reason() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("catalog.json");
        let mut records = builtin_records();
        // base strands that are not a permutation cycle of the extension
        records[0].base_strands = [1, 2, 4].into_iter().collect();
        save_catalog(&path, &records).unwrap();
        let outcome = load_catalog(&path).unwrap();
        assert_eq!(outcome.valid.len(), records.len() - 1);
        assert_eq!(outcome.rejected.len(), 1);
        assert_eq!(outcome.rejected[0].0, "alpha1");
        assert!(matches!(outcome.rejected[0].1, CatalogError::BadSplit { .. }));
    }

    #[test]
    fn tampered_expected_lk_still_loads() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("catalog.json");
        let mut records = builtin_records();
        records[2].expected_lk = Some(99);
        save_catalog(&path, &records).unwrap();
        let outcome = load_catalog(&path).unwrap();
        assert!(outcome.rejected.is_empty());
        assert_eq!(outcome.valid[2].expected_lk, Some(99));
    }

    #[test]
    fn parse_failure_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("broken.json");
        std::fs::write(&path, "{\"records\": [oops]}").unwrap();
        assert!(matches!(load_catalog(&path), Err(CatalogIoError::Parse(_))));
    }
}
