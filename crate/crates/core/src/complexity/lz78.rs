use std::collections::HashMap;

use crate::processes::SymbolSeq;
use crate::scalar::Real;

/// Largest alphabet for which the parse trie uses a dense child table.
const DENSE_ALPHABET: u32 = 16;

/// Number of phrases in the incremental (LZ78) parse of `x`, counting a
/// trailing partial phrase.
pub fn lz78_phrase_count(x: &SymbolSeq) -> usize {
    let d = x.alphabet_size();
    let mut phrases = 0usize;
    let mut cur = 0u32;
    if d <= DENSE_ALPHABET {
        let d = d as usize;
        let mut children: Vec<u32> = vec![0; d];
        for &s in x.symbols() {
            let slot = cur as usize * d + s as usize;
            match children[slot] {
                0 => {
                    let node = (children.len() / d) as u32;
                    children[slot] = node;
                    children.resize(children.len() + d, 0);
                    phrases += 1;
                    cur = 0;
                }
                next => cur = next,
            }
        }
    } else {
        let mut children: HashMap<u64, u32> = HashMap::new();
        let mut nodes = 1u32;
        for &s in x.symbols() {
            let key = (u64::from(cur) << 32) | u64::from(s);
            match children.get(&key) {
                Some(&next) => cur = next,
                None => {
                    children.insert(key, nodes);
                    nodes += 1;
                    phrases += 1;
                    cur = 0;
                }
            }
        }
    }
    if cur != 0 {
        phrases += 1;
    }
    phrases
}

/// LZ78 code length in bits: phrase `t` costs `log2(t) + log2(D)`.
pub fn lz78_code_len<T: Real>(x: &SymbolSeq) -> T {
    let phrases = lz78_phrase_count(x);
    let log_d = T::of_f64(f64::from(x.alphabet_size()).log2());
    (1..=phrases).map(|t| T::of_usize(t).log2() + log_d).sum()
}
