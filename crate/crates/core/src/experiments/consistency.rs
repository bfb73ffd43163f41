use rayon::prelude::*;

use super::{mean, median, ExperimentConfig, Source};
use crate::complexity::CodeLengthOracle;
use crate::error::Result;
use crate::estimators::markov_order_within;

/// Order estimates at one grid length.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderSummary {
    pub n: usize,
    pub median: f64,
    pub mean: f64,
    /// Fraction of seeds that recovered the true order, when there is one.
    pub fraction_correct: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConsistencyReport {
    pub source: String,
    pub config: ExperimentConfig,
    pub true_order: Option<usize>,
    /// `(n, seed, estimated order)` sorted by `n` then seed.
    pub rows: Vec<(usize, u64, usize)>,
    pub summary: Vec<OrderSummary>,
}

impl ConsistencyReport {
    pub fn at(&self, n: usize) -> Option<&OrderSummary> {
        self.summary.iter().find(|s| s.n == n)
    }

    /// Medians never decrease along the grid.
    pub fn median_non_decreasing(&self) -> bool {
        self.summary.windows(2).all(|w| w[0].median <= w[1].median)
    }
}

/// Markov order estimates on prefixes `x_1^n` of one realization per seed.
pub fn run_markov_consistency(
    source: &Source,
    config: &ExperimentConfig,
) -> Result<ConsistencyReport> {
    config.validate()?;
    let per_seed: Vec<Vec<(usize, u64, usize)>> = config
        .seeds
        .par_iter()
        .map(|&seed| {
            let real = source.realize(config.grid_max(), seed)?;
            Ok(config
                .grid
                .iter()
                .map(|&n| {
                    let x = real.units(0, n);
                    let budget: f64 = config.oracle.code_len(&x);
                    (n, seed, markov_order_within(&x, budget))
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut rows: Vec<(usize, u64, usize)> = per_seed.into_iter().flatten().collect();
    rows.sort_unstable();

    let true_order = source.true_order();
    let summary = config
        .grid
        .iter()
        .map(|&n| {
            let orders: Vec<usize> = rows.iter().filter(|r| r.0 == n).map(|r| r.2).collect();
            OrderSummary {
                n,
                median: median(orders.iter().map(|&o| o as f64).collect()),
                mean: mean(orders.iter().map(|&o| o as f64)),
                fraction_correct: true_order.map(|m| {
                    orders.iter().filter(|&&o| o == m).count() as f64 / orders.len() as f64
                }),
            }
        })
        .collect();
    Ok(ConsistencyReport {
        source: source.to_string(),
        config: config.clone(),
        true_order,
        rows,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexity::OracleKind;
    use crate::processes::MarkovSpec;

    #[test]
    fn constant_source_has_order_zero_everywhere() {
        let src = Source::markov(MarkovSpec::iid(vec![1.0, 0.0]).unwrap());
        let cfg = ExperimentConfig::dyadic(4, 8, 3, 0, OracleKind::Lz78).unwrap();
        let r = run_markov_consistency(&src, &cfg).unwrap();
        assert_eq!(r.rows.len(), 15);
        assert!(r.summary.iter().all(|s| s.fraction_correct == Some(1.0)));
        assert!(r.median_non_decreasing());
        assert_eq!(r.at(16).unwrap().median, 0.0);
    }
}
