//! Text ingestion for the corpus workflows.

use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::processes::{Symbol, SymbolSeq};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusMode {
    Bytes,
    Chars,
    WordTokens,
}

impl CorpusMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CorpusMode::Bytes => "bytes",
            CorpusMode::Chars => "chars",
            CorpusMode::WordTokens => "word-tokens",
        }
    }
}

impl fmt::Display for CorpusMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CorpusMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bytes" => Ok(CorpusMode::Bytes),
            "chars" => Ok(CorpusMode::Chars),
            "word-tokens" | "words" => Ok(CorpusMode::WordTokens),
            other => Err(Error::Parameter(format!(
                "unknown mode {other:?} (expected bytes, chars or word-tokens)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusConfig {
    pub input_path: PathBuf,
    pub mode: CorpusMode,
    /// Keep at most this many symbols (tokens in word mode).
    pub max_symbols: Option<usize>,
    /// Alphabet size override; must cover every observed symbol.
    pub declared_alphabet: Option<u32>,
}

impl CorpusConfig {
    pub fn new(input_path: impl Into<PathBuf>, mode: CorpusMode) -> Self {
        Self {
            input_path: input_path.into(),
            mode,
            max_symbols: None,
            declared_alphabet: None,
        }
    }
}

/// A symbolized text. `labels[s]` names symbol `s` for chars and word modes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub mode: CorpusMode,
    pub seq: SymbolSeq,
    pub labels: Vec<String>,
    /// Tokens in text order (word mode only).
    pub tokens: Vec<String>,
}

impl Corpus {
    /// Reconstructs the character stream in chars mode.
    pub fn decode_chars(&self) -> Option<String> {
        (self.mode == CorpusMode::Chars).then(|| {
            self.seq
                .symbols()
                .iter()
                .map(|&s| self.labels[s as usize].as_str())
                .collect()
        })
    }
}

/// Lowercased whitespace-separated tokens with leading and trailing
/// non-alphanumeric characters removed; tokens that become empty are skipped.
pub fn word_tokens(text: &str) -> Vec<String> {
    text.split_whitespace()
        .map(|t| {
            t.trim_matches(|c: char| !c.is_alphanumeric())
                .to_lowercase()
        })
        .filter(|t| !t.is_empty())
        .collect()
}

/// Dense ids in order of first occurrence.
pub fn dense_ids<T: Clone + Eq + std::hash::Hash>(items: &[T]) -> (Vec<Symbol>, Vec<T>) {
    let mut index: HashMap<&T, Symbol> = HashMap::new();
    let mut labels = Vec::new();
    let ids = items
        .iter()
        .map(|it| {
            *index.entry(it).or_insert_with(|| {
                labels.push(it.clone());
                (labels.len() - 1) as Symbol
            })
        })
        .collect();
    (ids, labels)
}

fn alphabet(observed: u32, declared: Option<u32>, limit: Option<u32>) -> Result<u32> {
    let d = match declared {
        Some(d) if d < observed => {
            return Err(Error::Parameter(format!(
                "declared alphabet {d} is smaller than the {observed} observed symbols"
            )))
        }
        Some(d) => d,
        None => observed,
    };
    if let Some(limit) = limit {
        if d > limit {
            return Err(Error::Parameter(format!("alphabet {d} exceeds {limit}")));
        }
    }
    Ok(d.max(2))
}

pub fn ingest_bytes(raw: &[u8], config: &CorpusConfig) -> Result<Corpus> {
    if raw.is_empty() {
        return Err(Error::InsufficientData(format!(
            "{} is empty",
            config.input_path.display()
        )));
    }
    if config.max_symbols == Some(0) {
        return Err(Error::Parameter("max_symbols must be at least 1".into()));
    }
    let cap = config.max_symbols.unwrap_or(usize::MAX);
    match config.mode {
        CorpusMode::Bytes => {
            let symbols: Vec<Symbol> = raw.iter().take(cap).map(|&b| Symbol::from(b)).collect();
            let observed = symbols.iter().max().map_or(0, |&m| m + 1);
            let d = match config.declared_alphabet {
                None => 256,
                Some(_) => alphabet(observed, config.declared_alphabet, Some(256))?,
            };
            Ok(Corpus {
                mode: CorpusMode::Bytes,
                seq: SymbolSeq::new(d, symbols)?,
                labels: Vec::new(),
                tokens: Vec::new(),
            })
        }
        CorpusMode::Chars => {
            let text = std::str::from_utf8(raw)
                .map_err(|e| Error::Format(format!("input is not UTF-8: {e}")))?;
            let chars: Vec<char> = text.chars().take(cap).collect();
            let (ids, labels) = dense_ids(&chars);
            let d = alphabet(labels.len() as u32, config.declared_alphabet, None)?;
            Ok(Corpus {
                mode: CorpusMode::Chars,
                seq: SymbolSeq::new(d, ids)?,
                labels: labels.into_iter().map(String::from).collect(),
                tokens: Vec::new(),
            })
        }
        CorpusMode::WordTokens => {
            let text = String::from_utf8_lossy(raw);
            let mut tokens = word_tokens(&text);
            tokens.truncate(cap);
            if tokens.is_empty() {
                return Err(Error::InsufficientData("no word tokens in input".into()));
            }
            let (ids, labels) = dense_ids(&tokens);
            let d = alphabet(labels.len() as u32, config.declared_alphabet, None)?;
            Ok(Corpus {
                mode: CorpusMode::WordTokens,
                seq: SymbolSeq::new(d, ids)?,
                labels,
                tokens,
            })
        }
    }
}

/// Reads and symbolizes the configured file.
pub fn ingest_corpus(config: &CorpusConfig) -> Result<Corpus> {
    let raw = std::fs::read(&config.input_path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", config.input_path.display())))?;
    ingest_bytes(&raw, config)
}
