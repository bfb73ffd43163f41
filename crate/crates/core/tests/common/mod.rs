//! Brute-force recomputations shared by the oracle tests and the acceptance
//! runner.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use perigraph::SymbolSeq;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn brute_subword(x: &[u32], k: usize) -> usize {
    (0..=x.len() - k)
        .map(|i| x[i..i + k].to_vec())
        .collect::<HashSet<_>>()
        .len()
}

/// -log2 of the maximized order-k likelihood straight from raw counts.
pub fn brute_neg_log_lk(x: &[u32], k: usize) -> f64 {
    let mut ctx: HashMap<&[u32], f64> = HashMap::new();
    let mut joint: HashMap<(&[u32], u32), f64> = HashMap::new();
    for i in k..x.len() {
        *ctx.entry(&x[i - k..i]).or_default() += 1.0;
        *joint.entry((&x[i - k..i], x[i])).or_default() += 1.0;
    }
    (k..x.len())
        .map(|i| {
            let c = &x[i - k..i];
            -(joint[&(c, x[i])] / ctx[c]).log2()
        })
        .sum()
}

/// Length 1..=256 over 2..=5 symbols, skewed so that long repeats occur.
pub fn random_string(rng: &mut ChaCha8Rng) -> SymbolSeq {
    let d = rng.random_range(2..=5u32);
    let n = rng.random_range(1..=256usize);
    let symbols = (0..n)
        .map(|_| {
            let r: f64 = rng.random();
            ((r * r) * f64::from(d)) as u32
        })
        .collect();
    SymbolSeq::new(d, symbols).unwrap()
}
