use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Power-law growth exponent of a sequence sampled on a grid of lengths.
///
/// `beta` is the least-squares slope of `log2 s` against `log2 n`, clipped
/// below at zero; `raw_slope` keeps the unclipped value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HilbergFit<T> {
    pub beta: T,
    pub raw_slope: T,
    pub stderr: T,
    pub n_min: u64,
    pub n_max: u64,
    pub points_used: usize,
    /// Points discarded because `s <= 0`.
    pub dropped: usize,
}

impl<T: Real> HilbergFit<T> {
    /// Single `key=value` line, keys in fixed order.
    pub fn to_kv_line(&self) -> String {
        format!(
            "beta={:.6} raw_slope={:.6} stderr={:.6} n_min={} n_max={} points={} dropped={}",
            self.beta,
            self.raw_slope,
            self.stderr,
            self.n_min,
            self.n_max,
            self.points_used,
            self.dropped
        )
    }
}

impl<T: Real> fmt::Display for HilbergFit<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_kv_line())
    }
}

/// Fits the Hilberg exponent to `(n, s)` points.
///
/// Points with `s <= 0` (or non-finite `s`) are dropped; at least three
/// usable points with distinct `n` are required.
pub fn hilberg_fit<T: Real>(points: &[(u64, T)]) -> Result<HilbergFit<T>> {
    let usable: Vec<(u64, T)> = points
        .iter()
        .copied()
        .filter(|&(n, s)| n > 0 && s.is_finite() && s > T::zero())
        .collect();
    let dropped = points.len() - usable.len();
    if usable.len() < 3 {
        return Err(Error::InsufficientData(format!(
            "need at least 3 points with s > 0, have {}",
            usable.len()
        )));
    }
    let mut ns: Vec<u64> = usable.iter().map(|p| p.0).collect();
    ns.sort_unstable();
    if ns.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Parameter("grid lengths must be distinct".into()));
    }

    let m = T::of_usize(usable.len());
    let xs: Vec<T> = usable.iter().map(|p| T::of_u64(p.0).log2()).collect();
    let ys: Vec<T> = usable.iter().map(|p| p.1.log2()).collect();
    let x_mean = xs.iter().copied().sum::<T>() / m;
    let y_mean = ys.iter().copied().sum::<T>() / m;
    let sxx: T = xs.iter().map(|&x| (x - x_mean) * (x - x_mean)).sum();
    let sxy: T = xs
        .iter()
        .zip(&ys)
        .map(|(&x, &y)| (x - x_mean) * (y - y_mean))
        .sum();
    let slope = sxy / sxx;
    let intercept = y_mean - slope * x_mean;
    let sse: T = xs
        .iter()
        .zip(&ys)
        .map(|(&x, &y)| {
            let r = y - (intercept + slope * x);
            r * r
        })
        .sum();
    let dof = T::of_usize(usable.len() - 2);
    let stderr = (sse / dof / sxx).sqrt();

    Ok(HilbergFit {
        beta: slope.max(T::zero()),
        raw_slope: slope,
        stderr,
        n_min: ns[0],
        n_max: ns[ns.len() - 1],
        points_used: usable.len(),
        dropped,
    })
}
