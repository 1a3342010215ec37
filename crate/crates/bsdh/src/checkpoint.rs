//! Resumable bucketing of the reduced words of `w₀` by `J(w₀, i)`.
//!
//! Words are enumerated in a fixed lexicographic order, so a checkpoint
//! only needs the number of words already consumed and the partial
//! buckets.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use bsdh_core::bsdh::j_sets_of_word;
use bsdh_core::RootSystem;
use serde::{Deserialize, Serialize};

use crate::cache::write_atomic;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bucket {
    /// 1-based simple roots.
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    #[serde(rename = "type")]
    pub cartan_type: String,
    /// Number of reduced words of `w₀`.
    pub total: u64,
    pub processed: u64,
    pub complete: bool,
    pub buckets: Vec<Bucket>,
}

impl Classification {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(&self.to_json()).expect("serializable") + "\n";
        write_atomic(path, text.as_bytes())
    }

    fn load(path: &Path) -> Result<Option<Classification>> {
        match fs::read_to_string(path) {
            Ok(text) => serde_json::from_str(&text)
                .map(Some)
                .map_err(|source| Error::Json {
                    path: path.to_path_buf(),
                    source,
                }),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(Error::io(path)(e)),
        }
    }
}

fn to_buckets(map: &BTreeMap<Vec<usize>, u64>) -> Vec<Bucket> {
    map.iter()
        .map(|(j, &count)| Bucket {
            j: j.clone(),
            count,
        })
        .collect()
}

/// Buckets every reduced word of `w₀`, refusing when there are more than
/// `cap`. With a checkpoint path, progress is saved every `every` words and
/// an unfinished run recorded there is resumed.
pub fn classify_w0(
    rs: &RootSystem,
    cap: u128,
    checkpoint: Option<&Path>,
    every: u64,
) -> Result<Classification> {
    let type_name = rs.cartan_type().to_string();
    let w0 = rs.longest_element();
    let words = rs.reduced_words_capped(&w0, cap, None)?;
    let total = u64::try_from(rs.count_reduced_words(&w0)).unwrap_or(u64::MAX);

    let mut buckets: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut processed = 0;
    if let Some(path) = checkpoint {
        if let Some(prev) = Classification::load(path)? {
            if prev.cartan_type != type_name {
                return Err(Error::CheckpointMismatch {
                    path: path.to_path_buf(),
                    found: prev.cartan_type,
                    expected: type_name,
                });
            }
            if prev.complete {
                return Ok(prev);
            }
            processed = prev.processed;
            buckets = prev.buckets.into_iter().map(|b| (b.j, b.count)).collect();
        }
    }

    let mut state = Classification {
        cartan_type: type_name,
        total,
        processed,
        complete: false,
        buckets: Vec::new(),
    };
    for word in words.skip(processed as usize) {
        let j: Vec<usize> = j_sets_of_word(rs, word.letters())
            .1
            .iter()
            .map(|k| k + 1)
            .collect();
        *buckets.entry(j).or_insert(0) += 1;
        state.processed += 1;
        if let Some(path) = checkpoint {
            if every > 0 && state.processed.is_multiple_of(every) {
                state.buckets = to_buckets(&buckets);
                state.save(path)?;
            }
        }
    }
    state.complete = true;
    state.buckets = to_buckets(&buckets);
    if let Some(path) = checkpoint {
        state.save(path)?;
    }
    Ok(state)
}
