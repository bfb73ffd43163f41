use std::io::{BufRead, Read, Write};

use super::{SantaFePair, SymbolSeq};
use crate::error::{Error, Result};

/// Writes `D=<alphabet size>\n` followed by one raw byte per symbol.
pub fn write_sequence<W: Write>(mut w: W, seq: &SymbolSeq) -> Result<()> {
    if seq.alphabet_size() > 256 {
        return Err(Error::Format(format!(
            "byte format holds at most 256 symbols, alphabet has {}",
            seq.alphabet_size()
        )));
    }
    writeln!(w, "D={}", seq.alphabet_size())?;
    let bytes: Vec<u8> = seq.symbols().iter().map(|&s| s as u8).collect();
    w.write_all(&bytes)?;
    w.flush()?;
    Ok(())
}

pub fn read_sequence<R: Read>(mut r: R) -> Result<SymbolSeq> {
    let mut raw = Vec::new();
    r.read_to_end(&mut raw)?;
    let nl = raw
        .iter()
        .position(|&b| b == b'\n')
        .ok_or_else(|| Error::Format("missing header line".into()))?;
    let header = std::str::from_utf8(&raw[..nl])
        .map_err(|_| Error::Format("header is not UTF-8".into()))?
        .trim_end_matches('\r');
    let d: u32 = header
        .strip_prefix("D=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::Format(format!("bad header {header:?}, expected D=<int>")))?;
    if d > 256 {
        return Err(Error::Format(format!(
            "alphabet size {d} does not fit in bytes"
        )));
    }
    let symbols = raw[nl + 1..].iter().map(|&b| u32::from(b)).collect();
    SymbolSeq::new(d, symbols).map_err(|e| Error::Format(e.to_string()))
}

/// Writes one `k<TAB>bit` line per pair.
pub fn write_pairs<W: Write>(mut w: W, pairs: &[SantaFePair]) -> Result<()> {
    for p in pairs {
        writeln!(w, "{}\t{}", p.k, p.bit)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_pairs<R: BufRead>(r: R) -> Result<Vec<SantaFePair>> {
    let mut pairs = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let parsed = line.split_once('\t').and_then(|(k, b)| {
            let k: u64 = k.parse().ok()?;
            let bit: u8 = b.parse().ok()?;
            (k >= 1 && bit <= 1).then_some(SantaFePair { k, bit })
        });
        pairs.push(parsed.ok_or_else(|| Error::Format(format!("line {}: {line:?}", i + 1)))?);
    }
    Ok(pairs)
}
