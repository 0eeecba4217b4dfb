//! On-disk cache of completed enumeration reports, one TOML file per
//! `(n, h, field)`.

use std::fs;
use std::path::{Path, PathBuf};

use betti_cone_core::{ConeReport, FieldSpec, Method};

use crate::document::{report_from_str, report_to_string};
use crate::error::AppError;

/// Overrides any configured cache directory.
pub const CACHE_ENV: &str = "BETTI_CONE_CACHE";

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `BETTI_CONE_CACHE` if set, else `configured`, else no cache.
    pub fn resolve(configured: Option<&Path>) -> Option<Cache> {
        match std::env::var_os(CACHE_ENV) {
            Some(dir) if !dir.is_empty() => Some(Cache::new(dir)),
            _ => configured.map(Cache::new),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, n: usize, h: Option<usize>, field: FieldSpec) -> PathBuf {
        let h = h.map_or_else(|| "all".to_string(), |h| h.to_string());
        self.dir.join(format!("cone-n{n}-h{h}-{field}.toml"))
    }

    pub fn load(&self, n: usize, h: Option<usize>, field: FieldSpec) -> Result<Option<ConeReport>, AppError> {
        let path = self.path(n, h, field);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let report = report_from_str(&text)?;
        let matches = report.n == n && report.h == h && report.field == field;
        Ok(matches.then_some(report))
    }

    /// Stores `report` if it is a complete enumeration; returns whether it
    /// was written.
    pub fn store(&self, report: &ConeReport) -> Result<bool, AppError> {
        let complete = report.method == Method::Enumeration
            && report.stats.as_ref().is_some_and(|s| !s.stopped_early);
        if !complete {
            return Ok(false);
        }
        fs::create_dir_all(&self.dir)?;
        let path = self.path(report.n, report.h, report.field);
        let tmp = path.with_extension("toml.tmp");
        fs::write(&tmp, report_to_string(report)?)?;
        fs::rename(tmp, path)?;
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use betti_cone_core::cone::{enumerate_cone_dim, EnumerationOptions};

    #[test]
    fn stores_and_reloads_complete_runs_only() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let opts = EnumerationOptions::new(4, Some(2));
        let r = enumerate_cone_dim(&opts).unwrap();
        assert_eq!(cache.load(4, Some(2), opts.field).unwrap(), None);
        assert!(cache.store(&r).unwrap());
        assert_eq!(cache.load(4, Some(2), opts.field).unwrap(), Some(r));
        assert_eq!(cache.load(4, None, opts.field).unwrap(), None);

        let early = enumerate_cone_dim(&EnumerationOptions { early_stop: true, ..EnumerationOptions::new(5, None) }).unwrap();
        assert!(early.stats.as_ref().unwrap().stopped_early);
        assert!(!cache.store(&early).unwrap());
    }
}
