use super::heaps::{heaps_zipf_analysis, HeapsZipf};
use super::Exponent;
use crate::complexity::{mi_estimate, CodeLengthOracle};
use crate::error::{Error, Result};
use crate::processes::SymbolSeq;

/// Block mutual information `J(x_1^n; x_{n+1}^{2n})` of one sequence at
/// `n = 2^min_log2, 2^(min_log2+1), ...` while `2n` fits.
pub fn mi_curve<O: CodeLengthOracle<f64> + ?Sized>(
    seq: &SymbolSeq,
    min_log2: u32,
    oracle: &O,
) -> Vec<(u64, f64)> {
    let mut out = Vec::new();
    let mut n = 1usize << min_log2;
    while 2 * n <= seq.len() {
        let u = seq.slice(0..n);
        let v = seq.slice(n..2 * n);
        out.push((
            n as u64,
            mi_estimate(&u, &v, oracle).expect("same alphabet"),
        ));
        n *= 2;
    }
    out
}

/// Heaps/Zipf statistics of the word tokens and the block mutual
/// information exponent of the symbol stream.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusReport {
    /// Caller-supplied configuration echoed into the summary.
    pub config: Vec<(String, String)>,
    pub symbols: usize,
    pub alphabet_size: u32,
    pub oracle: String,
    pub words: HeapsZipf<String>,
    pub mi_points: Vec<(u64, f64)>,
    pub mi_exp: Exponent,
}

pub fn analyze_corpus<O: CodeLengthOracle<f64> + ?Sized>(
    seq: &SymbolSeq,
    tokens: &[String],
    min_log2: u32,
    oracle: &O,
) -> Result<CorpusReport> {
    if seq.is_empty() {
        return Err(Error::InsufficientData("empty symbol stream".into()));
    }
    let words = heaps_zipf_analysis(tokens)?;
    let mi_points = mi_curve(seq, min_log2, oracle);
    let mi_exp = match crate::estimators::hilberg_fit(&mi_points) {
        Ok(fit) => Exponent::Fitted(fit),
        Err(e) => Exponent::Insufficient(e.to_string()),
    };
    Ok(CorpusReport {
        config: Vec::new(),
        symbols: seq.len(),
        alphabet_size: seq.alphabet_size(),
        oracle: oracle.name().to_string(),
        words,
        mi_points,
        mi_exp,
    })
}
