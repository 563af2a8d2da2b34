//! Optional on-disk memo of computed root closures.
//!
//! When `SYMMCOMB_CACHE` names a directory, root systems are keyed by a
//! content hash of their Cartan datum. Entries are verified on load and
//! recomputed on any mismatch, so the directory is always safe to delete.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use symmcomb::cartan::{build_root_system, build_root_system_from_closure, CartanDatum, RootSystem};
use symmcomb::Limits;

pub const ENV_VAR: &str = "SYMMCOMB_CACHE";

#[derive(Serialize, Deserialize)]
struct Entry {
    matrix: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    roots: Vec<Vec<i64>>,
}

fn cache_path(datum: &CartanDatum) -> Option<PathBuf> {
    let dir = std::env::var_os(ENV_VAR)?;
    let mut hasher = Sha256::new();
    hasher.update(format!("{:?}|{:?}", datum.matrix(), datum.symmetrizers()));
    let key = hex_digest(&hasher.finalize());
    Some(PathBuf::from(dir).join(format!("{key}.json")))
}

fn hex_digest(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Builds a root system, consulting the memo directory when configured.
pub fn root_system(datum: CartanDatum, limits: Limits) -> symmcomb::Result<RootSystem> {
    let Some(path) = cache_path(&datum) else {
        return build_root_system(datum, limits);
    };
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(entry) = serde_json::from_str::<Entry>(&text) {
            if entry.matrix == *datum.matrix() && entry.symmetrizers == *datum.symmetrizers() {
                if let Ok(rs) =
                    build_root_system_from_closure(datum.clone(), entry.roots, limits.clone())
                {
                    return Ok(rs);
                }
            }
        }
        // stale or corrupted entry: fall through and recompute
    }
    let rs = build_root_system(datum, limits)?;
    let entry = Entry {
        matrix: rs.datum().matrix().clone(),
        symmetrizers: rs.datum().symmetrizers().clone(),
        roots: rs.roots().iter().map(|r| r.root_coords.clone()).collect(),
    };
    if let Some(parent) = path.parent() {
        let _ = std::fs::create_dir_all(parent);
    }
    let _ = std::fs::write(&path, serde_json::to_string(&entry).expect("serializable entry"));
    Ok(rs)
}
