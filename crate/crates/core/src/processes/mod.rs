//! Seeded generators for Santa Fe, Markov and i.i.d. sources.
//!
//! Every generator is a pure function of its parameters and seeds; two calls
//! with the same inputs return identical sequences.

mod io;
mod markov;
mod santa_fe;
mod zipf;

pub use io::{read_pairs, read_sequence, write_pairs, write_sequence};
pub use markov::{gen_markov, MarkovSpec};
pub use santa_fe::{
    binarize_santa_fe, binarize_with_offsets, decode_santa_fe, fact_bit, gen_santa_fe,
    gen_santa_fe_with, zipf_indices, BinarizedSantaFe, FactBits, SantaFePair, SantaFeParams, SEP,
};
pub use zipf::{riemann_zeta, sample_zipf, ZipfSampler};

use crate::error::{Error, Result};

pub type Symbol = u32;

/// A finite-alphabet sequence: every symbol lies in `0..alphabet_size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolSeq {
    alphabet_size: u32,
    symbols: Vec<Symbol>,
}

impl SymbolSeq {
    pub fn new(alphabet_size: u32, symbols: Vec<Symbol>) -> Result<Self> {
        if alphabet_size < 2 {
            return Err(Error::Validation(format!(
                "alphabet size must be at least 2, got {alphabet_size}"
            )));
        }
        if let Some((i, s)) = symbols
            .iter()
            .enumerate()
            .find(|(_, &s)| s >= alphabet_size)
        {
            return Err(Error::Validation(format!(
                "symbol {s} at position {i} is outside alphabet of size {alphabet_size}"
            )));
        }
        Ok(Self {
            alphabet_size,
            symbols,
        })
    }

    pub fn empty(alphabet_size: u32) -> Result<Self> {
        Self::new(alphabet_size, Vec::new())
    }

    /// Builds a sequence from text, one symbol per byte offset from `'a'`.
    /// Handy for small hand-written examples such as `"abab"`.
    pub fn from_letters(text: &str, alphabet_size: u32) -> Result<Self> {
        let symbols = text
            .bytes()
            .map(|b| u32::from(b.wrapping_sub(b'a')))
            .collect();
        Self::new(alphabet_size, symbols)
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    /// Contiguous sub-sequence over the same alphabet.
    pub fn slice(&self, range: std::ops::Range<usize>) -> SymbolSeq {
        SymbolSeq {
            alphabet_size: self.alphabet_size,
            symbols: self.symbols[range].to_vec(),
        }
    }

    pub fn concat(&self, other: &SymbolSeq) -> Result<SymbolSeq> {
        if self.alphabet_size != other.alphabet_size {
            return Err(Error::Validation(format!(
                "alphabet mismatch: {} vs {}",
                self.alphabet_size, other.alphabet_size
            )));
        }
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Ok(SymbolSeq {
            alphabet_size: self.alphabet_size,
            symbols,
        })
    }

    /// Relabels symbols through `perm`, which must be a permutation of `0..D`.
    pub fn relabel(&self, perm: &[Symbol]) -> Result<SymbolSeq> {
        if perm.len() != self.alphabet_size as usize {
            return Err(Error::Parameter(format!(
                "permutation has {} entries for alphabet of size {}",
                perm.len(),
                self.alphabet_size
            )));
        }
        let symbols = self.symbols.iter().map(|&s| perm[s as usize]).collect();
        SymbolSeq::new(self.alphabet_size, symbols)
    }
}
