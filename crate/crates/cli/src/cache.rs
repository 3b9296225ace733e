//! On-disk character-table cache.
//!
//! File layout (UTF-8 text, one item per line):
//!
//! ```text
//! WGCT1
//! degree <d>
//! partitions <n>
//! <partition>            n lines, lex order, comma-separated parts
//! <χ row>                n lines, entries as signed decimals, space-separated
//! checksum <sha256 hex of every preceding byte>
//! ```
//!
//! A file that cannot be read back exactly is never used: loading yields
//! `None` and corruption is reported on the `log` warning channel. Writes go
//! to a temporary file in the cache directory and are renamed into place.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use monowalk_core::characters::CharacterTable;
use monowalk_core::{ExactInt, Partition};
use sha2::{Digest, Sha256};

pub const MAGIC: &str = "WGCT1";
pub const ENV_VAR: &str = "WG_CACHE_DIR";

const MAGIC_FAMILY: &str = "WGCT";

/// Why a cached table was not returned.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CacheMiss {
    #[error("no cache file")]
    Missing,
    #[error("cache file version {0:?} is not {MAGIC}")]
    VersionMismatch(String),
    #[error("corrupt cache file: {0}")]
    Corrupt(String),
    #[error("cache read failed: {0}")]
    Io(String),
}

/// Cache directory named by `WG_CACHE_DIR`, if set and nonempty.
pub fn dir_from_env() -> Option<PathBuf> {
    std::env::var_os(ENV_VAR)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

pub fn file_name(d: u32) -> String {
    format!("chartab-d{d}.wgct")
}

pub fn path_for(dir: &Path, d: u32) -> PathBuf {
    dir.join(file_name(d))
}

pub fn encode(t: &CharacterTable) -> String {
    let mut body = String::new();
    body.push_str(MAGIC);
    body.push('\n');
    body.push_str(&format!("degree {}\n", t.degree()));
    body.push_str(&format!("partitions {}\n", t.size()));
    for p in t.order() {
        body.push_str(&p.to_plain_string());
        body.push('\n');
    }
    for row in 0..t.size() {
        let line: Vec<String> = t.row(row).iter().map(ExactInt::to_string).collect();
        body.push_str(&line.join(" "));
        body.push('\n');
    }
    let sum = hex::encode(Sha256::digest(body.as_bytes()));
    body.push_str(&format!("checksum {sum}\n"));
    body
}

pub fn decode(bytes: &[u8]) -> Result<CharacterTable, CacheMiss> {
    let corrupt = |why: &str| CacheMiss::Corrupt(why.to_string());

    let first = bytes.split(|&b| b == b'\n').next().unwrap_or_default();
    if first != MAGIC.as_bytes() {
        return Err(if first.starts_with(MAGIC_FAMILY.as_bytes()) {
            CacheMiss::VersionMismatch(String::from_utf8_lossy(first).into_owned())
        } else {
            corrupt("bad magic")
        });
    }

    let text = std::str::from_utf8(bytes).map_err(|_| corrupt("not UTF-8"))?;
    let body_end = text
        .trim_end_matches('\n')
        .rfind('\n')
        .map(|i| i + 1)
        .ok_or_else(|| corrupt("truncated"))?;
    let (body, trailer) = text.split_at(body_end);
    let stored = trailer
        .strip_prefix("checksum ")
        .map(str::trim_end)
        .ok_or_else(|| corrupt("missing checksum"))?;
    if stored != hex::encode(Sha256::digest(body.as_bytes())) {
        return Err(corrupt("checksum mismatch"));
    }

    let mut lines = body.lines().skip(1);
    let mut header = |key: &str| -> Result<usize, CacheMiss> {
        lines
            .next()
            .and_then(|l| l.strip_prefix(key))
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| corrupt("bad header"))
    };
    let degree = header("degree ")? as u32;
    let n = header("partitions ")?;
    let order = lines
        .by_ref()
        .take(n)
        .map(|l| l.parse::<Partition>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| corrupt("bad partition line"))?;
    let mut values = Vec::with_capacity(n * n);
    for line in lines.by_ref().take(n) {
        for tok in line.split(' ') {
            values.push(tok.parse::<ExactInt>().map_err(|_| corrupt("bad entry"))?);
        }
    }
    if lines.next().is_some() {
        return Err(corrupt("trailing data"));
    }
    CharacterTable::from_parts(degree, order, values).map_err(|e| CacheMiss::Corrupt(e.to_string()))
}

/// Write `t` into `dir` atomically; returns the final path.
pub fn store(t: &CharacterTable, dir: &Path) -> io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = path_for(dir, t.degree());
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(encode(t).as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(&path).map_err(|e| e.error)?;
    Ok(path)
}

/// Load the degree-`d` table, explaining any miss.
pub fn try_load(d: u32, dir: &Path) -> Result<CharacterTable, CacheMiss> {
    let path = path_for(dir, d);
    let bytes = match fs::read(&path) {
        Ok(b) => b,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Err(CacheMiss::Missing),
        Err(e) => return Err(CacheMiss::Io(e.to_string())),
    };
    let t = decode(&bytes)?;
    if t.degree() != d {
        return Err(CacheMiss::Corrupt(format!(
            "file for degree {d} holds degree {}",
            t.degree()
        )));
    }
    Ok(t)
}

/// The cached table, or `None`. Corrupt and unreadable files are logged.
pub fn load(d: u32, dir: &Path) -> Option<CharacterTable> {
    match try_load(d, dir) {
        Ok(t) => Some(t),
        Err(CacheMiss::Missing) => None,
        Err(miss @ CacheMiss::VersionMismatch(_)) => {
            log::info!("ignoring {}: {miss}", path_for(dir, d).display());
            None
        }
        Err(miss) => {
            log::warn!("ignoring {}: {miss}", path_for(dir, d).display());
            None
        }
    }
}
