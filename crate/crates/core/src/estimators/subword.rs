use crate::complexity::distinct_windows;
use crate::error::{Error, Result};
use crate::processes::SymbolSeq;

/// Number of distinct length-`k` contiguous substrings of `x`.
pub fn subword_complexity(x: &SymbolSeq, k: usize) -> Result<usize> {
    if k == 0 || k > x.len() {
        return Err(Error::Parameter(format!(
            "window length must satisfy 1 <= k <= {}, got {k}",
            x.len()
        )));
    }
    Ok(distinct_windows(x, k))
}
