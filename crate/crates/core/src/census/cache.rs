//! On-disk cache of per-column zero counts.
//!
//! One text file per `(kind, n, ℓ)`:
//!
//! ```text
//! corz-cache 1
//! kind z
//! n 14
//! ell 3
//! columns 135
//! <one zero count per column, in reverse-lexicographic column order>
//! sha256 <hex digest of every preceding byte>
//! ```

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::{Error, Result};

const MAGIC: &str = "corz-cache 1";

/// Which count the columns belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheKind {
    /// Columns over all `μ ⊢ n`, rows over ℓ-cores.
    Z,
    /// Columns and rows over ℓ-cores.
    ZStar,
}

impl CacheKind {
    fn tag(self) -> &'static str {
        match self {
            CacheKind::Z => "z",
            CacheKind::ZStar => "zstar",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ColumnCache {
    dir: PathBuf,
}

impl ColumnCache {
    /// Creates the directory if needed.
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
        Ok(Self { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, kind: CacheKind, n: usize, ell: usize) -> PathBuf {
        self.dir
            .join(format!("{}-l{ell}-n{n}.cache", kind.tag()))
    }

    /// `Ok(None)` when no entry exists; an error when one exists but fails
    /// validation.
    pub fn load(&self, kind: CacheKind, n: usize, ell: usize) -> Result<Option<Vec<u64>>> {
        let path = self.path(kind, n, ell);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::io(&path, e)),
        };
        parse(&text, kind, n, ell)
            .map(Some)
            .map_err(|reason| Error::CorruptCache { path, reason })
    }

    pub fn store(&self, kind: CacheKind, n: usize, ell: usize, columns: &[u64]) -> Result<()> {
        let path = self.path(kind, n, ell);
        let body = render(kind, n, ell, columns);
        let tmp = path.with_extension("tmp");
        let write = || -> std::io::Result<()> {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(body.as_bytes())?;
            f.sync_all()?;
            fs::rename(&tmp, &path)
        };
        write().map_err(|e| Error::io(&path, e))
    }
}

fn render(kind: CacheKind, n: usize, ell: usize, columns: &[u64]) -> String {
    let mut body = format!(
        "{MAGIC}\nkind {}\nn {n}\nell {ell}\ncolumns {}\n",
        kind.tag(),
        columns.len()
    );
    for c in columns {
        body.push_str(&c.to_string());
        body.push('\n');
    }
    let digest = hex::encode(Sha256::digest(body.as_bytes()));
    body.push_str(&format!("sha256 {digest}\n"));
    body
}

fn parse(text: &str, kind: CacheKind, n: usize, ell: usize) -> std::result::Result<Vec<u64>, String> {
    let body_end = text
        .rfind("sha256 ")
        .ok_or_else(|| "missing checksum line".to_string())?;
    let (body, trailer) = text.split_at(body_end);
    let stored = trailer
        .strip_prefix("sha256 ")
        .map(str::trim_end)
        .ok_or_else(|| "malformed checksum line".to_string())?;
    let actual = hex::encode(Sha256::digest(body.as_bytes()));
    if stored != actual {
        return Err(format!("checksum mismatch (stored {stored}, computed {actual})"));
    }

    let mut lines = body.lines();
    let mut expect = |want: String| -> std::result::Result<(), String> {
        match lines.next() {
            Some(line) if line == want => Ok(()),
            Some(line) => Err(format!("expected `{want}`, found `{line}`")),
            None => Err(format!("truncated before `{want}`")),
        }
    };
    expect(MAGIC.to_string())?;
    expect(format!("kind {}", kind.tag()))?;
    expect(format!("n {n}"))?;
    expect(format!("ell {ell}"))?;
    let count_line = lines.next().ok_or("missing column count")?;
    let count: usize = count_line
        .strip_prefix("columns ")
        .and_then(|c| c.parse().ok())
        .ok_or_else(|| format!("bad column count line `{count_line}`"))?;
    let columns = lines
        .map(|l| l.parse::<u64>().map_err(|e| format!("bad column value `{l}`: {e}")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if columns.len() != count {
        return Err(format!("expected {count} columns, found {}", columns.len()));
    }
    Ok(columns)
}
