use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use super::zipf::ZipfSampler;
use super::{Symbol, SymbolSeq};
use crate::error::{Error, Result};

/// Separator symbol of the ternary Santa Fe encoding.
pub const SEP: Symbol = 2;

/// Parameters that fully determine a Santa Fe realization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SantaFeParams {
    pub alpha: f64,
    pub sample_seed: u64,
    pub fact_seed: u64,
}

impl SantaFeParams {
    pub fn new(alpha: f64, sample_seed: u64, fact_seed: u64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 1.0) {
            return Err(Error::Domain(format!(
                "Zipf exponent must satisfy alpha > 1, got {alpha}"
            )));
        }
        Ok(Self {
            alpha,
            sample_seed,
            fact_seed,
        })
    }
}

/// One statement "fact `k` has value `bit`".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SantaFePair {
    pub k: u64,
    pub bit: u8,
}

/// Bits per hash block of the fact sequence.
const BLOCK_BITS: u64 = 256;

fn fact_block(fact_seed: u64, block: u64) -> [u8; 32] {
    let mut buf = [0u8; 16];
    buf[..8].copy_from_slice(&fact_seed.to_le_bytes());
    buf[8..].copy_from_slice(&block.to_le_bytes());
    let digest = Sha256::digest(buf);
    let mut out = [0u8; 32];
    out.copy_from_slice(&digest);
    out
}

fn bit_of(block: &[u8; 32], k: u64) -> u8 {
    let b = (k % BLOCK_BITS) as usize;
    (block[b / 8] >> (b % 8)) & 1
}

/// The fact `z_k` under `fact_seed`.
///
/// Bit `k` is read from SHA-256(`fact_seed` || `k / 256`), so the sequence is
/// a fixed, reproducible stand-in for an incompressible bit string.
pub fn fact_bit(k: u64, fact_seed: u64) -> u8 {
    bit_of(&fact_block(fact_seed, k / BLOCK_BITS), k)
}

/// Memoizing reader of the fact sequence.
#[derive(Debug, Clone)]
pub struct FactBits {
    seed: u64,
    cache: HashMap<u64, [u8; 32]>,
}

impl FactBits {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            cache: HashMap::new(),
        }
    }

    pub fn get(&mut self, k: u64) -> u8 {
        let seed = self.seed;
        let block = self
            .cache
            .entry(k / BLOCK_BITS)
            .or_insert_with(|| fact_block(seed, k / BLOCK_BITS));
        bit_of(block, k)
    }
}

/// Generates `n` Santa Fe pairs `(K_i, z_{K_i})` with `K_i` i.i.d. Zipf(alpha).
pub fn gen_santa_fe(params: SantaFeParams, n: usize) -> Result<Vec<SantaFePair>> {
    let sampler = ZipfSampler::new(params.alpha)?;
    Ok(gen_santa_fe_with(&sampler, params, n))
}

/// As [`gen_santa_fe`], reusing a prepared sampler (whose alpha wins).
pub fn gen_santa_fe_with(
    sampler: &ZipfSampler,
    params: SantaFeParams,
    n: usize,
) -> Vec<SantaFePair> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.sample_seed);
    let mut facts = FactBits::new(params.fact_seed);
    (0..n)
        .map(|_| {
            let k = sampler.sample(&mut rng);
            SantaFePair {
                k,
                bit: facts.get(k),
            }
        })
        .collect()
}

/// The fact indices `K_1..K_n` of the realization seeded by `sample_seed`,
/// without reading any fact bits.
pub fn zipf_indices(sampler: &ZipfSampler, sample_seed: u64, n: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(sample_seed);
    (0..n).map(|_| sampler.sample(&mut rng)).collect()
}

/// Ternary encoding of a pair stream together with pair boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinarizedSantaFe {
    pub seq: SymbolSeq,
    /// `offsets[i]` is the symbol index where pair `i` starts; the last entry
    /// equals the sequence length.
    pub offsets: Vec<usize>,
}

fn push_pair(out: &mut Vec<Symbol>, p: &SantaFePair) {
    let width = 64 - p.k.leading_zeros();
    for shift in (0..width).rev() {
        out.push(((p.k >> shift) & 1) as Symbol);
    }
    out.push(Symbol::from(p.bit & 1));
    out.push(SEP);
}

/// Encodes pairs over `{0, 1, SEP}`: binary digits of `k` (most significant
/// first), then the fact bit, then `SEP`.
pub fn binarize_santa_fe(pairs: &[SantaFePair]) -> SymbolSeq {
    binarize_with_offsets(pairs).seq
}

pub fn binarize_with_offsets(pairs: &[SantaFePair]) -> BinarizedSantaFe {
    let mut symbols = Vec::with_capacity(pairs.len() * 4);
    let mut offsets = Vec::with_capacity(pairs.len() + 1);
    for p in pairs {
        offsets.push(symbols.len());
        push_pair(&mut symbols, p);
    }
    offsets.push(symbols.len());
    BinarizedSantaFe {
        seq: SymbolSeq::new(3, symbols).expect("ternary symbols"),
        offsets,
    }
}

/// Inverse of [`binarize_santa_fe`].
pub fn decode_santa_fe(seq: &SymbolSeq) -> Result<Vec<SantaFePair>> {
    if seq.alphabet_size() != 3 {
        return Err(Error::Format(format!(
            "Santa Fe encoding is ternary, got alphabet size {}",
            seq.alphabet_size()
        )));
    }
    let symbols = seq.symbols();
    let body = match symbols.split_last() {
        None => return Ok(Vec::new()),
        Some((&SEP, body)) => body,
        Some(_) => return Err(Error::Format("trailing pair without separator".into())),
    };
    let mut pairs = Vec::new();
    for (i, word) in body.split(|&s| s == SEP).enumerate() {
        let (bit, digits) = word
            .split_last()
            .ok_or_else(|| Error::Format(format!("empty pair {i}")))?;
        if digits.first() != Some(&1) {
            return Err(Error::Format(format!("pair {i} has no leading 1 digit")));
        }
        if digits.len() > 64 {
            return Err(Error::Format(format!("pair {i} index exceeds 64 bits")));
        }
        let k = digits
            .iter()
            .fold(0u64, |acc, &d| (acc << 1) | u64::from(d));
        pairs.push(SantaFePair { k, bit: *bit as u8 });
    }
    Ok(pairs)
}
