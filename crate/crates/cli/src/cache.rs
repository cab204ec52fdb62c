//! On-disk cache of avoider counts.
//!
//! The file is a JSON object:
//!
//! ```json
//! {
//!   "version": 1,
//!   "created_by": "partpat 0.1.0",
//!   "created_unix": 1760000000,
//!   "counts": { "12345": [1, 1, 2, 5, 15, 51, 187] },
//!   "by_blocks": { "1212": [[1], [0, 1], [0, 1, 1]] }
//! }
//! ```
//!
//! `counts[pattern][n]` is the number of avoiders of `[n]`, and
//! `by_blocks[pattern][n][m]` the number with exactly `m` blocks. Every list
//! starts at `n = 0` and has no gaps. Files with another version are refused.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use partpat::enumeration::count_table;
use partpat::seqcore::{format_symbols, parse_symbols};
use serde::{Deserialize, Serialize};

/// Format version written and accepted.
pub const VERSION: u32 = 1;

// entries up to this n are recomputed when a file is loaded
const SPOT_CHECK_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub version: u32,
    pub created_by: String,
    pub created_unix: u64,
    #[serde(default)]
    pub counts: BTreeMap<String, Vec<u64>>,
    #[serde(default)]
    pub by_blocks: BTreeMap<String, Vec<Vec<u64>>>,
}

impl Default for CacheFile {
    fn default() -> Self {
        let now = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
        CacheFile {
            version: VERSION,
            created_by: format!("partpat {}", env!("CARGO_PKG_VERSION")),
            created_unix: now,
            counts: BTreeMap::new(),
            by_blocks: BTreeMap::new(),
        }
    }
}

fn key(pattern: &[u8]) -> String {
    format_symbols(pattern)
}

impl CacheFile {
    /// Counts for `n = 0..=max_n`, if cached.
    pub fn counts(&self, pattern: &[u8], max_n: usize) -> Option<&[u64]> {
        self.counts.get(&key(pattern)).filter(|v| v.len() > max_n).map(|v| &v[..=max_n])
    }

    pub fn by_blocks(&self, pattern: &[u8], max_n: usize) -> Option<&[Vec<u64>]> {
        self.by_blocks.get(&key(pattern)).filter(|v| v.len() > max_n).map(|v| &v[..=max_n])
    }

    pub fn store(&mut self, pattern: &[u8], counts: &[u64], by_blocks: Option<&[Vec<u64>]>) {
        let k = key(pattern);
        if self.counts.get(&k).map_or(true, |old| old.len() < counts.len()) {
            self.counts.insert(k.clone(), counts.to_vec());
        }
        if let Some(b) = by_blocks {
            // row n has n + 1 entries, whatever table it came from
            let b: Vec<Vec<u64>> = b.iter().enumerate().map(|(n, r)| r[..=n].to_vec()).collect();
            if self.by_blocks.get(&k).map_or(true, |old| old.len() < b.len()) {
                self.by_blocks.insert(k, b);
            }
        }
    }

    /// Recompute the small entries and compare.
    pub fn spot_check(&self) -> Result<(), String> {
        let mut keys: Vec<&String> = self.counts.keys().chain(self.by_blocks.keys()).collect();
        keys.dedup();
        for k in keys {
            let pat = parse_symbols(k).map_err(|e| format!("cache key `{k}`: {e}"))?;
            let t = count_table(&pat, SPOT_CHECK_N, true).map_err(|e| format!("cache key `{k}`: {e}"))?;
            if let Some(v) = self.counts.get(k) {
                let n = v.len().min(SPOT_CHECK_N + 1);
                if v[..n] != t.counts[..n] {
                    return Err(format!("cached counts of {k} disagree with a fresh count"));
                }
            }
            if let Some(v) = self.by_blocks.get(k) {
                let fresh = t.by_blocks.as_ref().expect("requested");
                let n = v.len().min(SPOT_CHECK_N + 1);
                if (0..n).any(|i| v[i][..] != fresh[i][..=i]) {
                    return Err(format!("cached block counts of {k} disagree with a fresh count"));
                }
            }
        }
        Ok(())
    }
}

/// `$PARTPAT_CACHE`, else `$XDG_CACHE_HOME/partpat/counts.json`, else
/// `$HOME/.cache/partpat/counts.json`.
pub fn default_path() -> Option<PathBuf> {
    if let Some(p) = std::env::var_os("PARTPAT_CACHE") {
        return Some(PathBuf::from(p));
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("partpat").join("counts.json"))
}

/// A missing file is an empty cache.
pub fn load(path: &Path) -> Result<CacheFile, String> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(CacheFile::default()),
        Err(e) => return Err(format!("{}: {e}", path.display())),
    };
    let raw: serde_json::Value = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    match raw.get("version").and_then(|v| v.as_u64()) {
        Some(v) if v == u64::from(VERSION) => {}
        Some(v) => return Err(format!("{}: unsupported cache version {v}", path.display())),
        None => return Err(format!("{}: no cache version", path.display())),
    }
    let file: CacheFile = serde_json::from_value(raw).map_err(|e| format!("{}: {e}", path.display()))?;
    file.spot_check().map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(file)
}

pub fn save(path: &Path, file: &CacheFile) -> Result<(), String> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    let tmp = path.with_extension("json.tmp");
    let text = serde_json::to_string_pretty(file).map_err(|e| e.to_string())?;
    fs::write(&tmp, text).map_err(|e| format!("{}: {e}", tmp.display()))?;
    fs::rename(&tmp, path).map_err(|e| format!("{}: {e}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use partpat::enumeration::count_avoiders;
    use partpat::seqcore::iterate_partitions;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        let pats: Vec<Vec<u8>> = (1..=5).flat_map(iterate_partitions).map(|p| p.into_vec()).collect();
        let mut cache = CacheFile::default();
        for p in &pats {
            let t = count_table(p, 9, true).unwrap();
            cache.store(p, &t.counts, t.by_blocks.as_deref());
        }
        save(&path, &cache).unwrap();
        let back = load(&path).unwrap();
        assert_eq!(back, cache);
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..100 {
            let p = pats.choose(&mut rng).unwrap();
            let n = rng.gen_range(0..=9);
            assert_eq!(back.counts(p, 9).unwrap()[n], count_avoiders(p, n).unwrap());
        }
    }

    #[test]
    fn refuses_other_versions_and_bad_entries() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        fs::write(&path, r#"{"version": 2, "created_by": "x", "created_unix": 0}"#).unwrap();
        assert!(load(&path).unwrap_err().contains("version 2"));
        let mut bad = CacheFile::default();
        bad.store(&[1, 2], &[1, 1, 1, 2], None);
        save(&path, &bad).unwrap();
        assert!(load(&path).is_err());
        assert_eq!(load(&dir.path().join("missing.json")).unwrap().counts.len(), 0);
    }
}
