//! An on-disk cache of cohomology dimension vectors.
//!
//! Keys combine the canonical form of the realization (field, ambient size,
//! reduced basis rows), and the bundle expression; files store the key in
//! full and are verified on read, so a hash collision can never surface a
//! wrong table.  Everything here is best-effort: a missing or unreadable
//! cache simply recomputes, and the directory is always safe to delete.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use tautcoh_core::matroid::Realization;

#[derive(Serialize, Deserialize)]
struct CacheRecord {
    key: String,
    h: Vec<usize>,
}

/// Handle on a cache directory.
pub struct DimCache {
    dir: PathBuf,
}

impl DimCache {
    /// Open (creating if needed) a cache directory.
    pub fn new(dir: &Path) -> DimCache {
        let _ = fs::create_dir_all(dir);
        DimCache {
            dir: dir.to_path_buf(),
        }
    }

    /// The canonical key of a (realization, expression) pair.  The basis
    /// matrix of a subspace is in reduced row-echelon form, so equal
    /// subspaces produce equal keys.
    pub fn key(real: &Realization, expr: &str) -> String {
        let mut s = format!(
            "field={};n={};r={};rows=",
            real.field(),
            real.n(),
            real.dim()
        );
        let bm = real.basis_matrix();
        for i in 0..real.dim() {
            for j in 0..real.n() {
                s.push_str(&bm.get(i, j).to_string());
                s.push(',');
            }
            s.push('|');
        }
        s.push_str(";expr=");
        s.push_str(expr);
        s
    }

    fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{:016x}.json", fnv64(key)))
    }

    /// The stored dimension vector, if this exact key was cached.
    pub fn get(&self, key: &str) -> Option<Vec<usize>> {
        let text = fs::read_to_string(self.path_for(key)).ok()?;
        let record: CacheRecord = serde_json::from_str(&text).ok()?;
        (record.key == key).then_some(record.h)
    }

    /// Store a dimension vector under the key.  Writes through a temporary
    /// file so concurrent readers never see a torn record.
    pub fn put(&self, key: &str, h: &[usize]) {
        let record = CacheRecord {
            key: key.to_string(),
            h: h.to_vec(),
        };
        let Ok(text) = serde_json::to_string_pretty(&record) else {
            return;
        };
        let path = self.path_for(key);
        let tmp = path.with_extension("tmp");
        if fs::write(&tmp, text).is_ok() {
            let _ = fs::rename(&tmp, &path);
        }
    }
}

/// FNV-1a, used only to shorten keys into file names; correctness never
/// depends on it because records store and verify the full key.
fn fnv64(s: &str) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for b in s.bytes() {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}
