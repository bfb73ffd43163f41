use crate::complexity::CodeLengthOracle;
use crate::error::{Error, Result};
use crate::processes::SymbolSeq;
use crate::scalar::Real;

/// Growth factor of `n / C(x_1^n)` across the grid above which the inverse
/// complexity rate is reported as apparently unbounded.
pub const INVERSE_RATE_GROWTH_LIMIT: f64 = 2.0;

/// Empirical diagnostics for the source conditions: complexity rate,
/// non-decreasing block complexity, finite inverse rate, finite alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionReport<T> {
    /// Code rate at the largest grid length, bits per symbol.
    pub h_hat: T,
    /// Grid lengths where the first block looks significantly more complex
    /// than the second.
    pub monotonicity_violations: usize,
    pub grid_points: usize,
    /// Mean of `n / C(x_1^n)` over the grid.
    pub inv_rate_hat: T,
    /// Ratio of `n / C(x_1^n)` at the largest and the smallest grid length.
    pub inv_rate_growth: T,
    pub alphabet_size: u32,
}

impl<T: Real> ConditionReport<T> {
    pub fn inverse_rate_flagged(&self) -> bool {
        !self.inv_rate_hat.is_finite()
            || !self.inv_rate_growth.is_finite()
            || self.inv_rate_growth > T::of_f64(INVERSE_RATE_GROWTH_LIMIT)
    }

    pub fn to_kv_block(&self) -> String {
        format!(
            "h_hat={:.6}\nmonotonicity_violations={}\ngrid_points={}\ninv_rate_hat={:.6}\ninv_rate_growth={:.6}\ninv_rate_flagged={}\nalphabet_size={}\n",
            self.h_hat,
            self.monotonicity_violations,
            self.grid_points,
            self.inv_rate_hat,
            self.inv_rate_growth,
            self.inverse_rate_flagged(),
            self.alphabet_size
        )
    }
}

fn mean<T: Real>(v: &[T]) -> T {
    v.iter().copied().sum::<T>() / T::of_usize(v.len())
}

/// Evaluates the condition surrogates on independent samples of one source.
///
/// Every sample must hold at least `2 * max(grid)` symbols. A grid length
/// `n` counts as a monotonicity violation when the mean of
/// `C(x_1^n) - C(x_{n+1}^{2n})` over samples exceeds three standard errors
/// of that mean (zero with a single sample).
pub fn condition_diagnostics<T: Real, O: CodeLengthOracle<T> + ?Sized>(
    samples: &[SymbolSeq],
    grid: &[usize],
    oracle: &O,
) -> Result<ConditionReport<T>> {
    if grid.is_empty() || samples.is_empty() {
        return Err(Error::InsufficientData(
            "condition diagnostics need a non-empty grid and at least one sample".into(),
        ));
    }
    if grid.contains(&0) {
        return Err(Error::Parameter("grid lengths must be positive".into()));
    }
    let n_max = *grid.iter().max().expect("non-empty");
    let d = samples[0].alphabet_size();
    for (i, x) in samples.iter().enumerate() {
        if x.alphabet_size() != d {
            return Err(Error::Validation(format!(
                "sample {i} has a different alphabet"
            )));
        }
        if x.len() < 2 * n_max {
            return Err(Error::InsufficientData(format!(
                "sample {i} has {} symbols, need {}",
                x.len(),
                2 * n_max
            )));
        }
    }

    let m = T::of_usize(samples.len());
    let three = T::of_f64(3.0);
    let mut violations = 0;
    let mut inv_rates = Vec::with_capacity(grid.len());
    let mut sorted = grid.to_vec();
    sorted.sort_unstable();
    for &n in &sorted {
        let first: Vec<T> = samples
            .iter()
            .map(|x| oracle.code_len(&x.slice(0..n)))
            .collect();
        let second: Vec<T> = samples
            .iter()
            .map(|x| oracle.code_len(&x.slice(n..2 * n)))
            .collect();
        let diffs: Vec<T> = first.iter().zip(&second).map(|(&a, &b)| a - b).collect();
        let d_mean = mean(&diffs);
        let tol = if samples.len() > 1 {
            let var = diffs
                .iter()
                .map(|&v| (v - d_mean) * (v - d_mean))
                .sum::<T>()
                / (m - T::one());
            three * (var / m).sqrt()
        } else {
            T::zero()
        };
        if d_mean > tol {
            violations += 1;
        }
        inv_rates.push(T::of_usize(n) / mean(&first));
    }

    let c_max = mean(
        &samples
            .iter()
            .map(|x| oracle.code_len(&x.slice(0..n_max)))
            .collect::<Vec<T>>(),
    );
    Ok(ConditionReport {
        h_hat: c_max / T::of_usize(n_max),
        monotonicity_violations: violations,
        grid_points: sorted.len(),
        inv_rate_hat: mean(&inv_rates),
        inv_rate_growth: inv_rates[inv_rates.len() - 1] / inv_rates[0],
        alphabet_size: d,
    })
}
