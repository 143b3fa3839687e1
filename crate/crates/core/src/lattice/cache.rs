//! On-disk vector lists.
//!
//! ```text
//! #hyperball-roots v1 lattice=L center=c batch=3 norm=3 count=N sha256=<hex>
//! m0 n0 m1 n1 …          (one vector per line, 2n integers)
//! ```
//!
//! The checksum covers the body. Files are written to a temporary file in
//! the same directory and renamed into place.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: &str = "v1";
const MAGIC: &str = "#hyperball-roots";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheKey {
    pub lattice: String,
    pub center: String,
    pub batch: u32,
    pub norm: i64,
}

impl CacheKey {
    pub fn new(lattice: &str, center: &str, batch: u32, norm: i64) -> Self {
        CacheKey { lattice: lattice.into(), center: center.into(), batch, norm }
    }

    pub fn file_name(&self) -> String {
        format!("{}-{}-b{}-n{}.roots", self.lattice, self.center, self.batch, self.norm)
    }

    fn header(&self, count: usize, digest: &str) -> String {
        format!(
            "{MAGIC} {FORMAT_VERSION} lattice={} center={} batch={} norm={} count={count} sha256={digest}",
            self.lattice, self.center, self.batch, self.norm
        )
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),
    #[error("corrupt cache file {path}: {reason}")]
    Corrupt { path: PathBuf, reason: String },
}

fn body_of(rows: &[Vec<i64>]) -> String {
    let mut s = String::new();
    for r in rows {
        let mut first = true;
        for x in r {
            if !first {
                s.push(' ');
            }
            first = false;
            write!(s, "{x}").unwrap();
        }
        s.push('\n');
    }
    s
}

fn digest(body: &str) -> String {
    let h = Sha256::digest(body.as_bytes());
    h.iter().map(|b| format!("{b:02x}")).collect()
}

/// Write atomically; returns the final path.
pub fn write_list(dir: &Path, key: &CacheKey, rows: &[Vec<i64>]) -> Result<PathBuf, CacheError> {
    fs::create_dir_all(dir)?;
    let body = body_of(rows);
    let header = key.header(rows.len(), &digest(&body));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    writeln!(tmp, "{header}")?;
    tmp.write_all(body.as_bytes())?;
    tmp.flush()?;
    let path = dir.join(key.file_name());
    tmp.persist(&path).map_err(|e| CacheError::Io(e.error))?;
    Ok(path)
}

/// `Ok(None)` when absent; `Err(Corrupt)` when present but invalid.
pub fn read_list(dir: &Path, key: &CacheKey) -> Result<Option<Vec<Vec<i64>>>, CacheError> {
    let path = dir.join(key.file_name());
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let corrupt = |reason: &str| CacheError::Corrupt { path: path.clone(), reason: reason.into() };
    let (header, body) = text.split_once('\n').ok_or_else(|| corrupt("missing header"))?;
    let fields: Vec<&str> = header.split(' ').collect();
    if fields.len() != 8 || fields[0] != MAGIC || fields[1] != FORMAT_VERSION {
        return Err(corrupt("bad header"));
    }
    let field = |name: &str| {
        fields
            .iter()
            .find_map(|f| f.strip_prefix(name).and_then(|r| r.strip_prefix('=')))
            .ok_or_else(|| corrupt(&format!("missing {name}")))
    };
    if field("lattice")? != key.lattice
        || field("center")? != key.center
        || field("batch")? != key.batch.to_string()
        || field("norm")? != key.norm.to_string()
    {
        return Err(corrupt("header does not match the requested list"));
    }
    let count: usize = field("count")?.parse().map_err(|_| corrupt("bad count"))?;
    if field("sha256")? != digest(body) {
        return Err(corrupt("checksum mismatch"));
    }
    let rows: Vec<Vec<i64>> = body
        .lines()
        .map(|l| l.split(' ').filter(|t| !t.is_empty()).map(|t| t.parse::<i64>()).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()
        .map_err(|_| corrupt("bad integer"))?;
    if rows.len() != count {
        return Err(corrupt("count mismatch"));
    }
    Ok(Some(rows))
}

pub fn remove_all(dir: &Path) -> Result<usize, CacheError> {
    let mut n = 0;
    if !dir.exists() {
        return Ok(0);
    }
    for entry in fs::read_dir(dir)? {
        let p = entry?.path();
        if p.extension().is_some_and(|e| e == "roots") {
            fs::remove_file(p)?;
            n += 1;
        }
    }
    Ok(n)
}

/// `(file name, count)` for every valid-looking list in `dir`.
pub fn status(dir: &Path) -> Result<Vec<(String, Option<usize>)>, CacheError> {
    let mut out = Vec::new();
    if !dir.exists() {
        return Ok(out);
    }
    for entry in fs::read_dir(dir)? {
        let p = entry?.path();
        if !p.extension().is_some_and(|e| e == "roots") {
            continue;
        }
        let head = fs::read_to_string(&p)?.lines().next().unwrap_or_default().to_string();
        let count = head
            .split(' ')
            .find_map(|f| f.strip_prefix("count="))
            .and_then(|c| c.parse().ok());
        out.push((p.file_name().unwrap().to_string_lossy().into_owned(), count));
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let key = CacheKey::new("L", "c", 1, 3);
        let rows = vec![vec![1, -2, 3, 0], vec![0, 0, 5, 7]];
        assert!(read_list(dir.path(), &key).unwrap().is_none());
        let p = write_list(dir.path(), &key, &rows).unwrap();
        assert_eq!(read_list(dir.path(), &key).unwrap(), Some(rows));
        let mut text = fs::read_to_string(&p).unwrap();
        text.push_str("1 1 1 1\n");
        fs::write(&p, text).unwrap();
        assert!(matches!(read_list(dir.path(), &key), Err(CacheError::Corrupt { .. })));
        let other = CacheKey::new("L", "pinf", 1, 3);
        fs::copy(&p, dir.path().join(other.file_name())).unwrap();
        assert!(read_list(dir.path(), &other).is_err());
        assert_eq!(remove_all(dir.path()).unwrap(), 2);
    }
}
