use super::ngram::ml_code_len;
use crate::error::{Error, Result};
use crate::processes::SymbolSeq;
use crate::scalar::Real;

/// Model cost of an order-`k` chain: `(D-1) D^k / 2 * log2(n)` for the
/// parameters plus `2 log2(k+1) + 1` for the order itself.
pub fn two_part_penalty<T: Real>(alphabet_size: u32, n: usize, k: usize) -> T {
    let d = T::of_f64(f64::from(alphabet_size));
    let two = T::of_f64(2.0);
    let log_n = T::of_usize(n.max(1)).log2();
    let params = (d - T::one()) * d.powi(k as i32) / two * log_n;
    params + two * T::of_usize(k + 1).log2() + T::one()
}

/// Two-part MDL code length together with the minimizing order.
pub fn two_part_code_len_argmin<T: Real>(x: &SymbolSeq, k_max: usize) -> Result<(T, usize)> {
    if k_max > x.len() {
        return Err(Error::Parameter(format!(
            "k_max {k_max} exceeds sequence length {}",
            x.len()
        )));
    }
    let d = x.alphabet_size();
    let mut best = (T::infinity(), 0usize);
    for k in 0..=k_max {
        let penalty = two_part_penalty::<T>(d, x.len(), k);
        if penalty >= best.0 {
            // penalties increase with k and likelihood terms are >= 0
            break;
        }
        let total = ml_code_len::<T>(x, k) + penalty;
        if total < best.0 {
            best = (total, k);
        }
    }
    Ok(best)
}

/// `min_k [ -log2 L_k(x) + penalty(k) ]` over `0 <= k <= k_max`.
pub fn two_part_code_len<T: Real>(x: &SymbolSeq, k_max: usize) -> Result<T> {
    two_part_code_len_argmin(x, k_max).map(|(v, _)| v)
}
