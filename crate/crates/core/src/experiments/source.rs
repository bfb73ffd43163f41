use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::processes::{
    binarize_with_offsets, gen_markov, gen_santa_fe_with, MarkovSpec, SantaFeParams, SymbolSeq,
    ZipfSampler,
};

/// An information source for the experiments.
///
/// Lengths are counted in source units: pairs for Santa Fe, symbols for
/// Markov chains. Santa Fe pairs are measured through their ternary encoding.
#[derive(Debug, Clone)]
pub enum Source {
    SantaFe {
        sampler: Arc<ZipfSampler>,
        fact_seed: u64,
    },
    Markov(MarkovSpec),
}

impl Source {
    pub fn santa_fe(alpha: f64, fact_seed: u64) -> Result<Self> {
        Ok(Source::SantaFe {
            sampler: Arc::new(ZipfSampler::new(alpha)?),
            fact_seed,
        })
    }

    pub fn markov(spec: MarkovSpec) -> Self {
        Source::Markov(spec)
    }

    pub fn has_facts(&self) -> bool {
        matches!(self, Source::SantaFe { .. })
    }

    /// The source's true Markov order when it has one.
    pub fn true_order(&self) -> Option<usize> {
        match self {
            Source::SantaFe { .. } => None,
            Source::Markov(spec) => Some(spec.order()),
        }
    }

    /// Draws `units` source units for `seed`.
    pub fn realize(&self, units: usize, seed: u64) -> Result<Realization> {
        match self {
            Source::SantaFe { sampler, fact_seed } => {
                let params = SantaFeParams::new(sampler.alpha(), seed, *fact_seed)?;
                let pairs = gen_santa_fe_with(sampler, params, units);
                let encoded = binarize_with_offsets(&pairs);
                Ok(Realization {
                    ks: Some(pairs.iter().map(|p| p.k).collect()),
                    offsets: Some(encoded.offsets),
                    seq: encoded.seq,
                })
            }
            Source::Markov(spec) => Ok(Realization {
                ks: None,
                offsets: None,
                seq: gen_markov(spec, units, seed)?,
            }),
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::SantaFe { sampler, fact_seed } => write!(
                f,
                "santa-fe alpha={} fact_seed={} encoding=ternary-separator",
                sampler.alpha(),
                fact_seed
            ),
            Source::Markov(spec) => {
                let rows: Vec<String> = spec
                    .transitions()
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|p| p.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .collect();
                write!(
                    f,
                    "markov order={} alphabet={} transitions={}",
                    spec.order(),
                    spec.alphabet_size(),
                    rows.join(";")
                )
            }
        }
    }
}

/// One realization: the measured symbol stream plus, for Santa Fe, the fact
/// indices and pair boundaries.
#[derive(Debug, Clone)]
pub struct Realization {
    pub ks: Option<Vec<u64>>,
    pub offsets: Option<Vec<usize>>,
    pub seq: SymbolSeq,
}

impl Realization {
    /// Symbols of source units `start..end`.
    pub fn units(&self, start: usize, end: usize) -> SymbolSeq {
        match &self.offsets {
            Some(off) => self.seq.slice(off[start]..off[end]),
            None => self.seq.slice(start..end),
        }
    }
}
