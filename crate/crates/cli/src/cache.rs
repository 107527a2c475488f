//! Optional on-disk memo of lattice invariants, keyed by the SHA-256 of
//! the canonical spec JSON. Enabled by setting `MKLS_CACHE_DIR`.

use std::path::PathBuf;

use mkls_core::{invariants, KlsError, KlsInvariants, Matroid, MatroidSpec};
use sha2::{Digest, Sha256};

const VERSION: &str = "mkls-invariants-v1";

pub fn key(spec: &MatroidSpec) -> String {
    let canonical = serde_json::to_value(spec).expect("spec serializes").to_string();
    let mut h = Sha256::new();
    h.update(VERSION.as_bytes());
    h.update([0]);
    h.update(canonical.as_bytes());
    hex::encode(h.finalize())
}

fn dir() -> Option<PathBuf> {
    std::env::var_os("MKLS_CACHE_DIR").filter(|d| !d.is_empty()).map(PathBuf::from)
}

/// Invariants of `m`, read from or written to the cache when one is
/// configured. Unreadable entries are recomputed and overwritten.
pub fn cached_invariants(spec: &MatroidSpec, m: &Matroid) -> Result<KlsInvariants, KlsError> {
    let Some(dir) = dir() else {
        return invariants(m);
    };
    let path = dir.join(format!("{}.json", key(spec)));
    if let Some(hit) = std::fs::read(&path).ok().and_then(|b| serde_json::from_slice(&b).ok()) {
        return Ok(hit);
    }
    let inv = invariants(m)?;
    if std::fs::create_dir_all(&dir).is_ok() {
        let tmp = path.with_extension("tmp");
        let body = serde_json::to_vec(&inv).expect("invariants serialize");
        if std::fs::write(&tmp, body).is_ok() {
            let _ = std::fs::rename(&tmp, &path);
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_depends_only_on_content() {
        let a = MatroidSpec::Uniform { n: 3, k: 2 };
        let b: MatroidSpec = serde_json::from_str(r#"{"k":2,"backend":"uniform","n":3}"#).unwrap();
        assert_eq!(key(&a), key(&b));
        assert_ne!(key(&a), key(&MatroidSpec::Uniform { n: 3, k: 1 }));
        assert_eq!(key(&a).len(), 64);
    }
}
