//! On-disk cache of computed JSON artifacts.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::CliError;

pub const CACHE_ENV: &str = "FLOPARR_CACHE";

/// Bumped whenever an artifact format or algorithm changes output bytes.
const FORMAT_VERSION: &str = "floparr-cache-1";

#[derive(Debug, Clone)]
pub struct Workspace {
    root: PathBuf,
}

impl Workspace {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        Self { root: root.into() }
    }

    /// `$FLOPARR_CACHE`, or `floparr` under the system temp directory.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_ENV) {
            Some(root) if !root.is_empty() => Self::new(root),
            _ => Self::new(std::env::temp_dir().join("floparr")),
        }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    /// Hex SHA-256 over the artifact name and the canonical input spelling.
    pub fn key(artifact: &str, data: &str, kind: &str, radius: &str) -> String {
        let mut h = Sha256::new();
        for part in [FORMAT_VERSION, artifact, data, kind, radius] {
            h.update(part.as_bytes());
            h.update([0u8]);
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn path(&self, key: &str) -> PathBuf {
        self.root.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Option<String> {
        fs::read_to_string(self.path(key)).ok()
    }

    /// Writes through a temporary file so readers never see partial output.
    pub fn put(&self, key: &str, text: &str) -> Result<(), CliError> {
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| CliError::Io { path, source }
        };
        fs::create_dir_all(&self.root).map_err(io(&self.root))?;
        let tmp = self.root.join(format!("{key}.{}.tmp", std::process::id()));
        fs::write(&tmp, text).map_err(io(&tmp))?;
        let dest = self.path(key);
        fs::rename(&tmp, &dest).map_err(io(&dest))
    }

    /// Cached text for `key`, computing and storing it on a miss. A cache that
    /// cannot be written is skipped rather than failing the command.
    pub fn get_or_compute(
        &self,
        key: &str,
        compute: impl FnOnce() -> Result<String, CliError>,
    ) -> Result<String, CliError> {
        if let Some(text) = self.get(key) {
            return Ok(text);
        }
        let text = compute()?;
        let _ = self.put(key, &text);
        Ok(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_stable_and_distinct() {
        let a = Workspace::key("chambers", "A2:J={}", "central", "");
        assert_eq!(a, Workspace::key("chambers", "A2:J={}", "central", ""));
        assert_eq!(a.len(), 64);
        assert_ne!(a, Workspace::key("arrangement", "A2:J={}", "central", ""));
        assert_ne!(Workspace::key("x", "ab", "c", ""), Workspace::key("x", "a", "bc", ""));
    }

    #[test]
    fn miss_then_hit() {
        let dir = tempfile::tempdir().unwrap();
        let ws = Workspace::new(dir.path());
        let key = Workspace::key("t", "d", "k", "r");
        let first = ws.get_or_compute(&key, || Ok("{}\n".to_string())).unwrap();
        let second = ws.get_or_compute(&key, || panic!("should hit")).unwrap();
        assert_eq!(first, second);
    }
}
