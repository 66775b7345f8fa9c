//! Optional on-disk persistence of the H-matrix cache.
//!
//! When `POLYMUL_CACHE_DIR` is set, matrices are stored one per file as
//! `H_<basis>_<n>_<k>.json` with their scalar mode recorded; files from the
//! other mode are ignored.

use crate::io;
use crate::AppError;
use polymul_core::scalar::Scalar;
use polymul_core::{HCache, OpMatrix};
use serde_json::json;
use std::path::PathBuf;

pub const ENV_VAR: &str = "POLYMUL_CACHE_DIR";

pub struct DiskCache {
    dir: Option<PathBuf>,
}

impl DiskCache {
    pub fn from_env() -> Self {
        DiskCache {
            dir: std::env::var_os(ENV_VAR).map(PathBuf::from),
        }
    }

    fn path(&self, basis: &str, n: usize, k: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("H_{basis}_{n}_{k}.json")))
    }

    fn mode<S: Scalar>() -> &'static str {
        if S::EXACT {
            "exact"
        } else {
            "float64"
        }
    }

    /// Load `H_{n,k}` from disk into `cache`, when present and mode-matched.
    pub fn preload<S: Scalar>(
        &self,
        cache: &HCache<S>,
        basis: &str,
        n: usize,
        k: usize,
    ) -> Result<(), AppError> {
        let Some(path) = self.path(basis, n, k) else {
            return Ok(());
        };
        if !path.exists() {
            return Ok(());
        }
        let text = std::fs::read_to_string(&path)
            .map_err(|e| AppError::domain(format!("cache file `{}`: {e}", path.display())))?;
        let v: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| AppError::domain(format!("cache file `{}`: {e}", path.display())))?;
        if v.get("mode").and_then(|m| m.as_str()) != Some(Self::mode::<S>()) {
            return Ok(());
        }
        let rows = v
            .get("rows")
            .ok_or_else(|| AppError::domain(format!("cache file `{}` has no rows", path.display())))?;
        let entries = io::matrix_from_json_rows::<S>(rows)?;
        let m = OpMatrix::from_parts(basis, n, k, entries)
            .map_err(|e| AppError::domain(format!("cache file `{}`: {e}", path.display())))?;
        cache.insert(m);
        Ok(())
    }

    /// Persist one matrix; no-op without a cache dir.
    pub fn save<S: Scalar>(&self, m: &OpMatrix<S>) -> Result<(), AppError> {
        let Some(path) = self.path(m.basis_name(), m.n(), m.k()) else {
            return Ok(());
        };
        if path.exists() {
            return Ok(());
        }
        if let Some(dir) = &self.dir {
            std::fs::create_dir_all(dir)
                .map_err(|e| AppError::domain(format!("cache dir `{}`: {e}", dir.display())))?;
        }
        let doc = json!({
            "basis": m.basis_name(),
            "n": m.n(),
            "k": m.k(),
            "mode": Self::mode::<S>(),
            "rows": io::matrix_to_json_rows(m.entries()),
        });
        std::fs::write(&path, format!("{doc}"))
            .map_err(|e| AppError::domain(format!("cache file `{}`: {e}", path.display())))?;
        Ok(())
    }
}
