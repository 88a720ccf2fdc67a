//! Append-only CSV cache of central values, columns
//! `D,sign,value,error,conductor,cutoff`.
//!
//! Later rows for the same `D` supersede earlier ones. A row is reused only
//! when its cutoff matches the requested cutoff multiplier. Fresh and cached
//! values both pass through [`CacheRow`], so output does not depend on which
//! one was used.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use cubetwist::lfunctions::l_value;
use cubetwist::{LOptions, LValueEstimate, Sign, ValueTable};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheRow {
    #[serde(rename = "D")]
    pub d: i64,
    pub sign: String,
    pub value: f64,
    pub error: f64,
    pub conductor: u64,
    pub cutoff: f64,
}

impl CacheRow {
    pub fn from_estimate(e: &LValueEstimate) -> Self {
        CacheRow {
            d: e.d,
            sign: e.sign.to_string(),
            value: e.value,
            error: e.error_bound,
            conductor: e.conductor_used,
            cutoff: e.cutoff,
        }
    }

    /// The estimate this row stands for. The half-cutoff value and the
    /// functional-equation discrepancy are not stored.
    pub fn to_estimate(&self, options: &LOptions) -> Result<LValueEstimate> {
        Ok(LValueEstimate {
            d: self.d,
            value: self.value,
            value_half_cutoff: self.value,
            error_bound: self.error,
            sign: self.sign.parse::<Sign>()?,
            conductor_used: self.conductor,
            cutoff: self.cutoff,
            vanished: self.value.abs() <= options.vanish_threshold,
            consistency: 0.0,
            candidates: None,
        })
    }

    fn matches(&self, options: &LOptions) -> bool {
        let expected = options.cutoff_mult * (self.conductor as f64).sqrt();
        (self.cutoff - expected).abs() <= 1e-9 * expected
    }
}

pub struct ValueCache {
    path: Option<PathBuf>,
    rows: BTreeMap<i64, CacheRow>,
    options: LOptions,
}

impl ValueCache {
    /// Opens the cache at `path` (which need not exist); `None` keeps values
    /// in memory only.
    pub fn open(path: Option<&Path>, options: LOptions) -> Result<Self> {
        let mut rows = BTreeMap::new();
        if let Some(p) = path.filter(|p| p.exists()) {
            let f = File::open(p).with_context(|| format!("opening cache {}", p.display()))?;
            let mut r = csv::Reader::from_reader(BufReader::new(f));
            for row in r.deserialize::<CacheRow>() {
                let row = row.with_context(|| format!("reading cache {}", p.display()))?;
                if row.matches(&options) {
                    rows.insert(row.d, row);
                }
            }
        }
        Ok(ValueCache {
            path: path.map(Path::to_path_buf),
            rows,
            options,
        })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Makes values for every `d` in `ds` available, computing missing ones
    /// (or all of them with `recompute`) on `pool` and appending them to the
    /// cache file in increasing order of `D`.
    pub fn ensure(&mut self, ds: &[i64], recompute: bool, pool: &rayon::ThreadPool) -> Result<()> {
        let mut missing: Vec<i64> = ds
            .iter()
            .copied()
            .filter(|d| recompute || !self.rows.contains_key(d))
            .collect();
        missing.sort_unstable();
        missing.dedup();
        if missing.is_empty() {
            return Ok(());
        }
        let options = self.options;
        let fresh: Vec<CacheRow> = pool.install(|| {
            missing
                .par_iter()
                .map(|&d| l_value(d, &options).map(|e| CacheRow::from_estimate(&e)))
                .collect::<cubetwist::Result<_>>()
        })?;
        if let Some(path) = &self.path {
            append(path, &fresh)?;
        }
        for row in fresh {
            self.rows.insert(row.d, row);
        }
        Ok(())
    }

    pub fn row(&self, d: i64) -> Option<&CacheRow> {
        self.rows.get(&d)
    }

    /// The requested values as a table for the statistics routines.
    pub fn table(&self, ds: &[i64]) -> Result<ValueTable> {
        ds.iter()
            .filter_map(|d| self.rows.get(d))
            .map(|r| r.to_estimate(&self.options))
            .collect()
    }
}

fn append(path: &Path, rows: &[CacheRow]) -> Result<()> {
    let fresh_file = std::fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
    let f = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .with_context(|| format!("opening cache {} for writing", path.display()))?;
    let mut w = csv::WriterBuilder::new().has_headers(fresh_file).from_writer(f);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    w.into_inner()
        .map_err(|e| anyhow::anyhow!("flushing cache: {e}"))?
        .flush()?;
    Ok(())
}

/// Reads every row of a cache file, including superseded ones.
pub fn read_cache(path: &Path) -> Result<Vec<CacheRow>> {
    let f = File::open(path)?;
    crate::records::read_csv(BufReader::new(f))
}
