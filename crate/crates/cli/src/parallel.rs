//! Rayon-backed table builds and scans.
//!
//! Work is split per partition (one character-table column, one scan entry)
//! and collected back in lex order, so results do not depend on the number
//! of workers.

use std::path::Path;

use monowalk_core::characters::{check_degree, CharacterTable, MnMemo, DEFAULT_MAX_DEGREE};
use monowalk_core::genfun::{normalization, Weights};
use monowalk_core::partitions::lex_list;
use monowalk_core::scanner::{default_point, scan_entry, ScanReport};
use monowalk_core::{ExactRat, Result};
use rayon::prelude::*;

use crate::cache;

fn pool(jobs: Option<usize>) -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        builder = builder.num_threads(n.max(1));
    }
    builder.build().expect("thread pool")
}

/// Character table of `S(d)`, columns computed concurrently.
pub fn build_table(d: u32, jobs: Option<usize>) -> Result<CharacterTable> {
    check_degree(d, DEFAULT_MAX_DEGREE)?;
    let order = lex_list(d);
    let columns = pool(jobs).install(|| {
        order
            .par_iter()
            .map_init(MnMemo::new, |memo, alpha| memo.column(&order, alpha))
            .collect()
    });
    CharacterTable::from_columns(d, columns)
}

/// Scan at `x` (default `1/d`) with entries evaluated concurrently.
pub fn scan(table: &CharacterTable, x: Option<&ExactRat>, jobs: Option<usize>) -> Result<ScanReport> {
    let d = table.degree();
    let x = x.cloned().unwrap_or_else(|| default_point(d));
    let weights = Weights::new(table.order(), &x)?;
    let scale = normalization(d);
    let entries = pool(jobs).install(|| {
        (0..table.size())
            .into_par_iter()
            .map(|col| scan_entry(table, &weights, &scale, col))
            .collect()
    });
    Ok(ScanReport::assemble(d, x, entries))
}

/// Table for `d`, read from `cache_dir` when present and written back after
/// a fresh build. Cache failures only cost time.
pub fn obtain_table(d: u32, jobs: Option<usize>, cache_dir: Option<&Path>) -> Result<CharacterTable> {
    check_degree(d, DEFAULT_MAX_DEGREE)?;
    if let Some(dir) = cache_dir {
        if let Some(t) = cache::load(d, dir) {
            log::info!("loaded d = {d} table from {}", dir.display());
            return Ok(t);
        }
    }
    let t = build_table(d, jobs)?;
    if let Some(dir) = cache_dir {
        match cache::store(&t, dir) {
            Ok(path) => log::info!("wrote {}", path.display()),
            Err(e) => log::warn!("could not write cache in {}: {e}", dir.display()),
        }
    }
    Ok(t)
}
