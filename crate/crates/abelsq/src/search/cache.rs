//! Append-only JSONL store for minimization results, keyed by
//! `(n, x, counter version)`. Sweeps resume by skipping keys already present
//! with a matching version; corrupt lines are reported and skipped, never
//! silently dropped.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::MinimizationResult;
use crate::word::Word;

pub const CACHE_SCHEMA: u32 = 1;

/// Bumped whenever counting semantics change, so stale cache entries are
/// ignored rather than trusted.
pub const COUNTER_VERSION: &str = "theta-v1";

/// One persisted minimization record. This is also the JSON payload the
/// `minimize` command emits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub schema: u32,
    pub version: String,
    pub n: usize,
    pub x: usize,
    pub min_theta: usize,
    pub minimizers: Vec<Word>,
    pub words_examined: u64,
    pub elapsed_ms: u64,
}

impl CacheRecord {
    pub fn from_result(result: &MinimizationResult) -> Self {
        CacheRecord {
            schema: CACHE_SCHEMA,
            version: COUNTER_VERSION.to_string(),
            n: result.n,
            x: result.x,
            min_theta: result.min_theta,
            minimizers: result.minimizers.clone(),
            words_examined: result.words_examined,
            elapsed_ms: result.elapsed.as_millis() as u64,
        }
    }

    pub fn into_result(self) -> MinimizationResult {
        MinimizationResult {
            n: self.n,
            x: self.x,
            min_theta: self.min_theta,
            minimizers: self.minimizers,
            words_examined: self.words_examined,
            elapsed: Duration::from_millis(self.elapsed_ms),
        }
    }
}

/// A result cache bound to one JSONL file.
#[derive(Debug)]
pub struct ResultCache {
    path: PathBuf,
    records: BTreeMap<(usize, usize), CacheRecord>,
    warnings: Vec<String>,
    needs_newline: bool,
}

impl ResultCache {
    /// Open (or create lazily on first store) the cache at `path` and load
    /// every complete record with a matching schema and counter version.
    pub fn open(path: impl AsRef<Path>) -> io::Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut records = BTreeMap::new();
        let mut warnings = Vec::new();
        let mut needs_newline = false;

        match File::open(&path) {
            Ok(mut file) => {
                let mut contents = String::new();
                file.read_to_string(&mut contents)?;
                needs_newline = !contents.is_empty() && !contents.ends_with('\n');
                for (index, line) in contents.lines().enumerate() {
                    if line.trim().is_empty() {
                        continue;
                    }
                    match serde_json::from_str::<CacheRecord>(line) {
                        Ok(record) => {
                            if record.schema != CACHE_SCHEMA {
                                warnings.push(format!(
                                    "{}:{}: unknown schema {}; record ignored",
                                    path.display(),
                                    index + 1,
                                    record.schema
                                ));
                            } else if record.version == COUNTER_VERSION {
                                records.insert((record.n, record.x), record);
                            }
                        }
                        Err(err) => {
                            warnings.push(format!(
                                "{}:{}: corrupt record skipped ({err}); resuming from last complete record",
                                path.display(),
                                index + 1
                            ));
                        }
                    }
                }
            }
            Err(err) if err.kind() == io::ErrorKind::NotFound => {}
            Err(err) => return Err(err),
        }

        Ok(ResultCache { path, records, warnings, needs_newline })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Problems encountered while loading (corrupt or stale lines).
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Look up a stored result for `(n, x)` under the current counter
    /// version. A missing key is not an error.
    pub fn get(&self, n: usize, x: usize) -> Option<&CacheRecord> {
        self.records.get(&(n, x))
    }

    /// Append a record to the file and index it.
    pub fn store(&mut self, record: CacheRecord) -> io::Result<()> {
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        let mut line = serde_json::to_string(&record)?;
        line.push('\n');
        if self.needs_newline {
            // The file ends mid-record (e.g. a crashed writer); start clean.
            file.write_all(b"\n")?;
            self.needs_newline = false;
        }
        file.write_all(line.as_bytes())?;
        self.records.insert((record.n, record.x), record);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn record(n: usize, x: usize) -> CacheRecord {
        CacheRecord {
            schema: CACHE_SCHEMA,
            version: COUNTER_VERSION.to_string(),
            n,
            x,
            min_theta: 4,
            minimizers: vec![parse_word("b^9ab^8").unwrap()],
            words_examined: 18,
            elapsed_ms: 3,
        }
    }

    #[test]
    fn store_then_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("results.jsonl");
        let mut cache = ResultCache::open(&path).unwrap();
        cache.store(record(18, 5)).unwrap();

        let reopened = ResultCache::open(&path).unwrap();
        assert!(reopened.warnings().is_empty());
        assert_eq!(reopened.get(18, 5), Some(&record(18, 5)));
        assert_eq!(reopened.get(18, 6), None);
    }

    #[test]
    fn corrupt_line_is_reported_and_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("results.jsonl");
        let mut cache = ResultCache::open(&path).unwrap();
        cache.store(record(10, 2)).unwrap();
        std::fs::OpenOptions::new()
            .append(true)
            .open(&path)
            .unwrap()
            .write_all(b"{not json}\n")
            .unwrap();
        let mut cache = ResultCache::open(&path).unwrap();
        cache.store(record(11, 2)).unwrap();

        let reopened = ResultCache::open(&path).unwrap();
        assert_eq!(reopened.len(), 2);
        assert!(reopened.get(10, 2).is_some());
        assert!(reopened.get(11, 2).is_some());
        let cache = ResultCache::open(&path).unwrap();
        assert_eq!(cache.warnings().len(), 1);
        assert!(cache.warnings()[0].contains("corrupt record"));
    }

    #[test]
    fn truncated_final_line_resumes_cleanly() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("results.jsonl");
        let mut cache = ResultCache::open(&path).unwrap();
        cache.store(record(10, 2)).unwrap();
        std::fs::OpenOptions::new()
            .append(true)
            .open(&path)
            .unwrap()
            .write_all(b"{\"schema\":1,\"version\":\"theta-")
            .unwrap();

        let mut cache = ResultCache::open(&path).unwrap();
        assert_eq!(cache.warnings().len(), 1);
        assert_eq!(cache.len(), 1);
        cache.store(record(12, 3)).unwrap();

        let reopened = ResultCache::open(&path).unwrap();
        assert!(reopened.warnings().len() <= 1);
        assert_eq!(reopened.get(10, 2), Some(&record(10, 2)));
        assert_eq!(reopened.get(12, 3), Some(&record(12, 3)));
    }

    #[test]
    fn cached_minimization_replays_and_persists() {
        use super::super::{min_over_parikh_cached, SearchOptions};

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("minima.jsonl");
        let options = SearchOptions { threads: 1, ..SearchOptions::default() };

        let mut cache = ResultCache::open(&path).unwrap();
        let computed = min_over_parikh_cached(5, 18, &options, Some(&mut cache)).unwrap();
        assert_eq!(cache.len(), 1);

        let mut cache = ResultCache::open(&path).unwrap();
        let replayed = min_over_parikh_cached(5, 18, &options, Some(&mut cache)).unwrap();
        assert_eq!(replayed.min_theta, computed.min_theta);
        assert_eq!(replayed.minimizers, computed.minimizers);
        assert_eq!(replayed.words_examined, computed.words_examined);
        assert_eq!(cache.len(), 1);
    }

    #[test]
    fn stale_version_is_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("results.jsonl");
        let mut stale = record(9, 3);
        stale.version = "theta-v0".to_string();
        std::fs::write(&path, format!("{}\n", serde_json::to_string(&stale).unwrap())).unwrap();

        let cache = ResultCache::open(&path).unwrap();
        assert_eq!(cache.get(9, 3), None);
    }
}
