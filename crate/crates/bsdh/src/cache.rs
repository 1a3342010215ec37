//! On-disk cache of complete reduced-word enumerations, keyed by Cartan
//! type and a SHA-256 digest of the element's matrix.

use std::fs;
use std::path::{Path, PathBuf};

use bsdh_core::{RootSystem, WeylElement, Word};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::{Error, Result};

pub const CACHE_DIR_VAR: &str = "BSDH_CACHE_DIR";

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    #[serde(rename = "type")]
    cartan_type: String,
    element: String,
    /// 1-based.
    words: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct WordCache {
    dir: PathBuf,
}

impl WordCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        WordCache { dir: dir.into() }
    }

    /// The cache named by `BSDH_CACHE_DIR`, if set and non-empty.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_DIR_VAR)
            .filter(|d| !d.is_empty())
            .map(WordCache::new)
    }

    pub fn element_hash(w: &WeylElement) -> String {
        let mut hasher = Sha256::new();
        for x in w.matrix() {
            hasher.update(x.to_le_bytes());
        }
        hex::encode(hasher.finalize())
    }

    fn path(&self, rs: &RootSystem, w: &WeylElement) -> PathBuf {
        self.dir.join(format!(
            "{}-{}.json",
            rs.cartan_type(),
            Self::element_hash(w)
        ))
    }

    pub fn load(&self, rs: &RootSystem, w: &WeylElement) -> Result<Option<Vec<Word>>> {
        let path = self.path(rs, w);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::io(&path)(e)),
        };
        let entry: Entry = serde_json::from_str(&text).map_err(|source| Error::Json {
            path: path.clone(),
            source,
        })?;
        let n = rs.rank();
        let words = entry
            .words
            .into_iter()
            .map(|letters| {
                if letters.iter().any(|&k| k == 0 || k > n) {
                    return None;
                }
                Some(Word::new(
                    letters.into_iter().map(|k| k - 1).collect::<Vec<_>>(),
                ))
            })
            .collect::<Option<Vec<_>>>();
        // a stale or foreign entry is a miss
        Ok(words.filter(|ws| {
            ws.iter()
                .all(|word| rs.from_word(word).ok().as_ref() == Some(w))
        }))
    }

    pub fn store(&self, rs: &RootSystem, w: &WeylElement, words: &[Word]) -> Result<()> {
        fs::create_dir_all(&self.dir).map_err(Error::io(&self.dir))?;
        let entry = Entry {
            cartan_type: rs.cartan_type().to_string(),
            element: Self::element_hash(w),
            words: words
                .iter()
                .map(|word| word.letters().iter().map(|k| k + 1).collect())
                .collect(),
        };
        let text = serde_json::to_string(&entry).expect("serializable");
        write_atomic(&self.path(rs, w), text.as_bytes())
    }
}

/// Writes through a temporary file in the same directory and renames it
/// over `path`.
pub(crate) fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    use std::io::Write;
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(Error::io(dir))?;
    tmp.write_all(bytes).map_err(Error::io(path))?;
    tmp.persist(path).map_err(|e| Error::io(path)(e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_stale_entries() {
        let dir = tempfile::tempdir().unwrap();
        let cache = WordCache::new(dir.path());
        let rs = RootSystem::new("A2".parse().unwrap());
        let w0 = rs.longest_element();
        assert!(cache.load(&rs, &w0).unwrap().is_none());
        let words: Vec<Word> = rs.reduced_words(&w0, None).collect();
        cache.store(&rs, &w0, &words).unwrap();
        assert_eq!(cache.load(&rs, &w0).unwrap(), Some(words));

        let s1 = rs.simple_reflection(0);
        cache.store(&rs, &s1, &[Word::new(vec![1])]).unwrap();
        assert_eq!(cache.load(&rs, &s1).unwrap(), None);
    }

    #[test]
    fn hash_distinguishes_elements() {
        let rs = RootSystem::new("B2".parse().unwrap());
        let a = WordCache::element_hash(&rs.simple_reflection(0));
        let b = WordCache::element_hash(&rs.simple_reflection(1));
        assert_ne!(a, b);
        assert_eq!(a.len(), 64);
    }
}
