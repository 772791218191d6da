//! Content-addressed cache for enumerated structures.
//!
//! Keys hash the canonical JSON of the inputs (system, structure kind,
//! congruence). Entries embed a checksum of their payload so corrupt or
//! truncated files are detected, discarded with a warning, and recomputed;
//! writes go through a temp file and rename so readers never observe a
//! partial entry.

use sha2::{Digest, Sha256};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

pub struct Cache {
    dir: PathBuf,
}

/// Hash of the canonical JSON array of the labeled inputs.
pub fn cache_key(parts: &[(&str, &str)]) -> String {
    let canonical = serde_json::to_string(
        &parts.iter().map(|(k, v)| vec![k.to_string(), v.to_string()]).collect::<Vec<_>>(),
    )
    .expect("key parts serialize");
    hex_digest(canonical.as_bytes())
}

fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> std::io::Result<Cache> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    fn entry_path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.entry"))
    }

    /// Stores the payload under the key, atomically.
    pub fn store(&self, key: &str, payload: &str) -> std::io::Result<()> {
        let path = self.entry_path(key);
        let tmp = path.with_extension("tmp");
        let mut file = fs::File::create(&tmp)?;
        // First line is the payload checksum; the rest is the payload.
        writeln!(file, "{}", hex_digest(payload.as_bytes()))?;
        file.write_all(payload.as_bytes())?;
        file.sync_all()?;
        drop(file);
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// Loads a payload if present and intact; corrupt entries are removed
    /// with a warning on stderr.
    pub fn load(&self, key: &str) -> Option<String> {
        let path = self.entry_path(key);
        let raw = fs::read_to_string(&path).ok()?;
        match raw.split_once('\n') {
            Some((checksum, payload)) if checksum == hex_digest(payload.as_bytes()) => {
                Some(payload.to_string())
            }
            _ => {
                eprintln!(
                    "warning: discarding corrupt cache entry {}",
                    path.display()
                );
                let _ = fs::remove_file(&path);
                None
            }
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn temp_dir(tag: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!("coxlat-cache-test-{tag}-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        dir
    }

    #[test]
    fn store_and_load_round_trip() {
        let cache = Cache::open(temp_dir("roundtrip")).unwrap();
        let key = cache_key(&[("system", "A2"), ("kind", "lattice")]);
        assert_eq!(cache.load(&key), None);
        cache.store(&key, "payload\nwith lines\n").unwrap();
        assert_eq!(cache.load(&key).as_deref(), Some("payload\nwith lines\n"));
    }

    #[test]
    fn distinct_inputs_get_distinct_keys() {
        let a = cache_key(&[("system", "A2"), ("congruence", "cambrian:s,t")]);
        let b = cache_key(&[("system", "A2"), ("congruence", "cambrian:t,s")]);
        assert_ne!(a, b);
        // Key hashing is not confused by delimiter games.
        let c = cache_key(&[("system", "A2x"), ("congruence", "")]);
        assert_ne!(a, c);
    }

    #[test]
    fn corrupt_entries_are_discarded() {
        let dir = temp_dir("corrupt");
        let cache = Cache::open(&dir).unwrap();
        let key = cache_key(&[("k", "v")]);
        cache.store(&key, "the payload").unwrap();
        // Truncate the file behind the cache's back.
        let path = dir.join(format!("{key}.entry"));
        fs::write(&path, "deadbeef\ntrunc").unwrap();
        assert_eq!(cache.load(&key), None);
        assert!(!path.exists(), "corrupt entry must be removed");
    }
}
