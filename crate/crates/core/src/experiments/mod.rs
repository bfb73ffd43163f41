//! Multi-seed experiments over dyadic grids and their text reports.

mod consistency;
mod corpus;
mod heaps;
mod report;
mod sandwich;
mod source;

pub use consistency::{run_markov_consistency, ConsistencyReport, OrderSummary};
pub use corpus::{analyze_corpus, mi_curve, CorpusReport};
pub use heaps::{heaps_zipf_analysis, HeapsZipf};
pub use report::{emit_report, render_report, Report, ReportFormat};
pub use sandwich::{
    facts_curve, run_sandwich, CellRow, Exponent, GridMeans, OrderingCheck, SandwichReport, Term,
    ORDERING_TOLERANCE,
};
pub use source::{Realization, Source};

use crate::complexity::OracleKind;
use crate::error::{Error, Result};

/// Seed count used when none is given.
pub const DEFAULT_SEEDS: usize = 20;

/// Grid, seeds and oracle shared by all experiments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub grid: Vec<usize>,
    pub seeds: Vec<u64>,
    pub oracle: OracleKind,
}

impl ExperimentConfig {
    /// Grid `2^min_log2 ..= 2^max_log2` and seeds `seed_base .. seed_base + seeds`.
    pub fn dyadic(
        min_log2: u32,
        max_log2: u32,
        seeds: usize,
        seed_base: u64,
        oracle: OracleKind,
    ) -> Result<Self> {
        if min_log2 > max_log2 || max_log2 > 40 {
            return Err(Error::Parameter(format!(
                "bad grid exponents {min_log2}..={max_log2}"
            )));
        }
        let cfg = Self {
            grid: (min_log2..=max_log2).map(|j| 1usize << j).collect(),
            seeds: (0..seeds as u64)
                .map(|i| seed_base.wrapping_add(i))
                .collect(),
            oracle,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid.is_empty() {
            return Err(Error::InsufficientData("empty grid".into()));
        }
        if let Some(n) = self.grid.iter().find(|n| !n.is_power_of_two()) {
            return Err(Error::Parameter(format!(
                "grid length {n} is not a power of two"
            )));
        }
        if self.grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parameter("grid must be strictly increasing".into()));
        }
        if self.seeds.is_empty() {
            return Err(Error::Parameter("at least one seed is required".into()));
        }
        Ok(())
    }

    pub fn grid_max(&self) -> usize {
        *self.grid.last().expect("validated grid")
    }
}

pub(crate) fn mean(v: impl IntoIterator<Item = f64>) -> f64 {
    let (sum, count) = v
        .into_iter()
        .fold((0.0, 0usize), |(s, c), x| (s + x, c + 1));
    sum / count as f64
}

pub(crate) fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(|a, b| a.total_cmp(b));
    let m = v.len();
    if m % 2 == 1 {
        v[m / 2]
    } else {
        0.5 * (v[m / 2 - 1] + v[m / 2])
    }
}
