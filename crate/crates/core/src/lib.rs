//! Simulation and estimation toolkit for facts-versus-words power laws.
//!
//! The crate generates perigraphic (Santa Fe) and Markovian sources, and
//! measures on them the four growth rates that are expected to be ordered:
//! the number of described facts, the redundancy of a universal code, the
//! block mutual information, and the vocabulary size at the estimated Markov
//! order. Kolmogorov complexity is replaced throughout by computable code
//! lengths ([`complexity::CodeLengthOracle`]).
//!
//! The numeric core is generic over [`Real`]; the aliases below fix it to
//! `f64`, which is what the experiments and the CLI use.

pub mod complexity;
pub mod corpus;
pub mod error;
pub mod estimators;
pub mod experiments;
pub mod processes;
pub mod scalar;

pub use complexity::{
    lz78_code_len, mi_estimate, neg_log_lk, two_part_code_len, CodeLengthOracle, Lz78Oracle,
    NGramTable, OracleKind, TwoPartOracle,
};
pub use error::{Error, Result};
pub use estimators::{
    condition_diagnostics, count_facts, hilberg_fit, markov_order, subword_complexity, vocab_proxy,
    ConditionReport, HilbergFit,
};
pub use processes::{
    binarize_santa_fe, decode_santa_fe, fact_bit, gen_markov, gen_santa_fe, sample_zipf,
    MarkovSpec, SantaFePair, SantaFeParams, Symbol, SymbolSeq, ZipfSampler,
};
pub use scalar::Real;

/// Code lengths and other information quantities, in bits.
pub type Bits = f64;
/// Power-law fit in double precision.
pub type Fit = HilbergFit<f64>;
/// Condition diagnostics in double precision.
pub type Conditions = ConditionReport<f64>;

/// Tool version echoed into every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
