//! Binary Cayley-table cache.
//!
//! Layout, all integers little-endian:
//!
//! ```text
//! "SGP1" | m: u32 | m*m entries: u32, row-major | m labels: (len: u16, utf-8 bytes)
//! ```

use std::io::{Read, Write};

use super::{AssociativityCheck, FiniteSemigroup, SgpError};

pub const CACHE_MAGIC: &[u8; 4] = b"SGP1";

fn io_err(e: std::io::Error) -> SgpError {
    SgpError::Cache(e.to_string())
}

pub fn write_cache<W: Write>(s: &FiniteSemigroup, mut w: W) -> Result<(), SgpError> {
    let m = s.size();
    let m32 = u32::try_from(m).map_err(|_| SgpError::Cache("semigroup too large".into()))?;
    let mut buf = Vec::with_capacity(8 + 4 * m * m + 8 * m);
    buf.extend_from_slice(CACHE_MAGIC);
    buf.extend_from_slice(&m32.to_le_bytes());
    for &e in s.table() {
        buf.extend_from_slice(&e.to_le_bytes());
    }
    for label in s.labels() {
        let len = u16::try_from(label.len())
            .map_err(|_| SgpError::Cache(format!("label too long: {} bytes", label.len())))?;
        buf.extend_from_slice(&len.to_le_bytes());
        buf.extend_from_slice(label.as_bytes());
    }
    w.write_all(&buf).map_err(io_err)
}

pub fn read_cache<R: Read>(mut r: R, check: AssociativityCheck) -> Result<FiniteSemigroup, SgpError> {
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic).map_err(io_err)?;
    if &magic != CACHE_MAGIC {
        return Err(SgpError::Cache(format!("bad magic {magic:?}")));
    }
    let mut word = [0u8; 4];
    r.read_exact(&mut word).map_err(io_err)?;
    let m = u32::from_le_bytes(word) as usize;
    let bytes = m
        .checked_mul(m)
        .and_then(|c| c.checked_mul(4))
        .ok_or_else(|| SgpError::Cache("size overflow".into()))?;
    // The header is untrusted: grow with the data rather than trusting m up front.
    let mut raw = Vec::new();
    r.by_ref().take(bytes as u64).read_to_end(&mut raw).map_err(io_err)?;
    if raw.len() != bytes {
        return Err(SgpError::Cache(format!("table truncated: {} of {bytes} bytes", raw.len())));
    }
    let table = raw
        .chunks_exact(4)
        .map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]]))
        .collect();
    let mut labels = Vec::new();
    for _ in 0..m {
        let mut len = [0u8; 2];
        r.read_exact(&mut len).map_err(io_err)?;
        let mut bytes = vec![0u8; u16::from_le_bytes(len) as usize];
        r.read_exact(&mut bytes).map_err(io_err)?;
        labels.push(String::from_utf8(bytes).map_err(|e| SgpError::Cache(e.to_string()))?);
    }
    let mut rest = Vec::new();
    r.read_to_end(&mut rest).map_err(io_err)?;
    if !rest.is_empty() {
        return Err(SgpError::Cache(format!("{} trailing bytes", rest.len())));
    }
    FiniteSemigroup::from_table(table, labels, check)
}
