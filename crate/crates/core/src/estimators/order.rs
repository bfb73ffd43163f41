use super::subword::subword_complexity;
use crate::complexity::{ml_code_len, CodeLengthOracle};
use crate::processes::SymbolSeq;
use crate::scalar::Real;

/// Smallest `k` with `-log2 L_k(x) <= budget`.
///
/// `-log2 L_k` is non-increasing in `k` and vanishes at `k = n - 1`, so the
/// search gallops over `k` and then bisects.
pub fn markov_order_within<T: Real>(x: &SymbolSeq, budget: T) -> usize {
    let n = x.len();
    if n <= 1 {
        return 0;
    }
    let fits = |k: usize| ml_code_len::<T>(x, k) <= budget;
    if fits(0) {
        return 0;
    }
    let last = n - 1;
    // invariant: !fits(lo)
    let mut lo = 0;
    let mut hi = 1.min(last);
    while hi < last && !fits(hi) {
        lo = hi;
        hi = (hi * 2).min(last);
    }
    if hi == last && !fits(hi) {
        return last;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Markov order estimate: the least `k` whose maximum-likelihood code length
/// does not exceed the oracle's code length for `x`.
pub fn markov_order<T: Real, O: CodeLengthOracle<T> + ?Sized>(x: &SymbolSeq, oracle: &O) -> usize {
    markov_order_within(x, oracle.code_len(x))
}

/// Distinct windows of length `max(order, 1)`; zero for an empty sequence.
pub fn vocab_proxy_at(x: &SymbolSeq, order: usize) -> usize {
    if x.is_empty() {
        return 0;
    }
    subword_complexity(x, order.clamp(1, x.len())).expect("window length in range")
}

/// Vocabulary proxy: subword complexity at the estimated Markov order.
pub fn vocab_proxy<T: Real, O: CodeLengthOracle<T> + ?Sized>(x: &SymbolSeq, oracle: &O) -> usize {
    vocab_proxy_at(x, markov_order(x, oracle))
}
