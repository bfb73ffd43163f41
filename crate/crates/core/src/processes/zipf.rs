use rand::Rng;

use crate::error::{Error, Result};

/// Number of support points covered by the explicit CDF table.
pub const TABLE_SIZE: usize = 1 << 20;

/// Riemann zeta at `alpha > 1`.
///
/// Direct summation of the first `TABLE_SIZE - 1` terms followed by an
/// Euler-Maclaurin tail. The neglected remainder is of order
/// `N^{-alpha-5}`, far below 1e-10 relative error for any `alpha > 1`.
pub fn riemann_zeta(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let n = TABLE_SIZE as f64;
    // smallest terms first
    let head: f64 = (1..TABLE_SIZE).rev().map(|k| (k as f64).powf(-alpha)).sum();
    Ok(head + em_tail(alpha, n))
}

/// Euler-Maclaurin estimate of `sum_{k >= n} k^{-alpha}`.
fn em_tail(alpha: f64, n: f64) -> f64 {
    n.powf(1.0 - alpha) / (alpha - 1.0) + 0.5 * n.powf(-alpha) + alpha / 12.0 * n.powf(-alpha - 1.0)
        - alpha * (alpha + 1.0) * (alpha + 2.0) / 720.0 * n.powf(-alpha - 3.0)
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_finite() && alpha > 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "Zipf exponent must satisfy alpha > 1, got {alpha}"
        )))
    }
}

/// Inverse-CDF sampler for `P(K = k) = k^{-alpha} / zeta(alpha)`, `k >= 1`.
///
/// Draws with `k <= TABLE_SIZE` are exact to table resolution; draws in the
/// tail come from the continuous density `x^{-alpha}` on
/// `[TABLE_SIZE + 1/2, inf)` rounded to the nearest integer.
#[derive(Debug, Clone)]
pub struct ZipfSampler {
    alpha: f64,
    zeta: f64,
    cdf: Vec<f64>,
}

impl ZipfSampler {
    pub fn new(alpha: f64) -> Result<Self> {
        let zeta = riemann_zeta(alpha)?;
        let mut cdf = Vec::with_capacity(TABLE_SIZE);
        let mut acc = 0.0;
        for k in 1..=TABLE_SIZE {
            acc += (k as f64).powf(-alpha) / zeta;
            cdf.push(acc);
        }
        Ok(Self { alpha, zeta, cdf })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn zeta(&self) -> f64 {
        self.zeta
    }

    /// Probability mass at `k` (zero for `k = 0`).
    pub fn pmf(&self, k: u64) -> f64 {
        if k == 0 {
            0.0
        } else {
            (k as f64).powf(-self.alpha) / self.zeta
        }
    }

    /// Probability mass beyond the explicit table.
    pub fn tail_mass(&self) -> f64 {
        (1.0 - self.cdf[TABLE_SIZE - 1]).max(0.0)
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        let u: f64 = rng.random();
        let last = self.cdf[TABLE_SIZE - 1];
        if u < last {
            // first index whose cumulative mass exceeds u
            let idx = self.cdf.partition_point(|&c| c <= u);
            return idx as u64 + 1;
        }
        let w: f64 = rng.random();
        let x0 = TABLE_SIZE as f64 + 0.5;
        let x = x0 * (1.0 - w).powf(-1.0 / (self.alpha - 1.0));
        if x >= u64::MAX as f64 {
            u64::MAX
        } else {
            ((x + 0.5).floor() as u64).max(TABLE_SIZE as u64 + 1)
        }
    }
}

/// One Zipf draw. Builds the sampler table on every call; reuse a
/// [`ZipfSampler`] when drawing more than a handful of values.
pub fn sample_zipf<R: Rng + ?Sized>(alpha: f64, rng: &mut R) -> Result<u64> {
    Ok(ZipfSampler::new(alpha)?.sample(rng))
}
