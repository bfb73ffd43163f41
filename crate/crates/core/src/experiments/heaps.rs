use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::estimators::hilberg_fit;
use crate::Fit;

/// Minimum frequency for a rank to enter the Zipf regression.
pub const ZIPF_MIN_FREQUENCY: u64 = 5;

/// Type-token statistics of a token stream.
#[derive(Debug, Clone, PartialEq)]
pub struct HeapsZipf<T> {
    pub tokens: usize,
    pub types: usize,
    /// `(prefix length, distinct types)` at prefix lengths 1, 2, 4, ...
    pub type_token_curve: Vec<(u64, u64)>,
    /// Types by decreasing frequency; ties keep first-occurrence order.
    pub rank_freq: Vec<(T, u64)>,
    /// Heaps exponent; `None` with fewer than three curve points.
    pub heaps_fit: Option<Fit>,
    /// Slope of `log2 freq` against `log2 rank` over ranks with frequency at
    /// least [`ZIPF_MIN_FREQUENCY`]; negative for Zipf-like data.
    pub zipf_slope: Option<f64>,
}

fn ols_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let m = points.len() as f64;
    let xm = points.iter().map(|p| p.0).sum::<f64>() / m;
    let ym = points.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = points.iter().map(|p| (p.0 - xm).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - xm) * (p.1 - ym)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

pub fn heaps_zipf_analysis<T: Clone + Eq + Hash>(tokens: &[T]) -> Result<HeapsZipf<T>> {
    if tokens.is_empty() {
        return Err(Error::InsufficientData("no tokens".into()));
    }
    let mut counts: HashMap<&T, (u64, usize)> = HashMap::new();
    let mut curve = Vec::new();
    let mut next_mark = 1usize;
    for (i, t) in tokens.iter().enumerate() {
        let first_seen = counts.len();
        counts.entry(t).or_insert((0, first_seen)).0 += 1;
        if i + 1 == next_mark {
            curve.push(((i + 1) as u64, counts.len() as u64));
            next_mark *= 2;
        }
    }
    let mut rank_freq: Vec<(&T, u64, usize)> = counts
        .iter()
        .map(|(t, &(c, first))| (*t, c, first))
        .collect();
    rank_freq.sort_by(|a, b| b.1.cmp(&a.1).then(a.2.cmp(&b.2)));

    let heaps_points: Vec<(u64, f64)> = curve.iter().map(|&(n, v)| (n, v as f64)).collect();
    let heaps_fit = hilberg_fit(&heaps_points).ok();
    let zipf_points: Vec<(f64, f64)> = rank_freq
        .iter()
        .enumerate()
        .take_while(|(_, r)| r.1 >= ZIPF_MIN_FREQUENCY)
        .map(|(i, r)| (((i + 1) as f64).log2(), (r.1 as f64).log2()))
        .collect();

    Ok(HeapsZipf {
        tokens: tokens.len(),
        types: counts.len(),
        type_token_curve: curve,
        rank_freq: rank_freq
            .into_iter()
            .map(|(t, c, _)| (t.clone(), c))
            .collect(),
        heaps_fit,
        zipf_slope: ols_slope(&zipf_points),
    })
}
