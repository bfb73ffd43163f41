use std::fmt;

use rayon::prelude::*;

use super::{mean, median, ExperimentConfig, Source};
use crate::complexity::CodeLengthOracle;
use crate::error::{Error, Result};
use crate::estimators::{count_facts, hilberg_fit, markov_order_within, vocab_proxy_at};
use crate::processes::{zipf_indices, ZipfSampler};
use crate::Fit;

/// Additive slack allowed when comparing two fitted exponents.
pub const ORDERING_TOLERANCE: f64 = 0.1;

/// The four growth terms of the facts-and-words chain, in chain order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Term {
    Facts,
    Redundancy,
    MutualInformation,
    Words,
}

impl Term {
    pub const ALL: [Term; 4] = [
        Term::Facts,
        Term::Redundancy,
        Term::MutualInformation,
        Term::Words,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Term::Facts => "facts",
            Term::Redundancy => "redundancy",
            Term::MutualInformation => "mi",
            Term::Words => "words",
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of fitting one exponent.
#[derive(Debug, Clone, PartialEq)]
pub enum Exponent {
    Fitted(Fit),
    Insufficient(String),
    NotMeasured,
}

impl Exponent {
    fn from_points(points: &[(u64, f64)]) -> Self {
        match hilberg_fit(points) {
            Ok(fit) => Exponent::Fitted(fit),
            Err(e) => Exponent::Insufficient(e.to_string()),
        }
    }

    pub fn beta(&self) -> Option<f64> {
        match self {
            Exponent::Fitted(fit) => Some(fit.beta),
            _ => None,
        }
    }

    pub fn fit(&self) -> Option<&Fit> {
        match self {
            Exponent::Fitted(fit) => Some(fit),
            _ => None,
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Fitted(fit) => write!(f, "{fit}"),
            Exponent::Insufficient(why) => write!(f, "insufficient ({why})"),
            Exponent::NotMeasured => f.write_str("not-measured"),
        }
    }
}

/// Measurements of one realization at one grid length.
#[derive(Debug, Clone, PartialEq)]
pub struct CellRow {
    pub n: usize,
    pub seed: u64,
    /// Fact counter `U` on the first `n` pairs (Santa Fe only).
    pub facts: Option<u64>,
    /// Code length of `x_1^n`, bits.
    pub code_len: f64,
    /// `C(x_1^n) + C(x_{n+1}^{2n}) - C(x_1^{2n})`, bits.
    pub mi: f64,
    pub vocab: usize,
    pub order: usize,
}

/// Seed averages at one grid length.
#[derive(Debug, Clone, PartialEq)]
pub struct GridMeans {
    pub n: usize,
    pub facts: Option<f64>,
    pub code_len: f64,
    pub redundancy: f64,
    pub mi: f64,
    pub vocab: f64,
    pub median_order: f64,
}

/// Whether `lower`'s exponent stays below `upper`'s plus the tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderingCheck {
    pub lower: Term,
    pub upper: Term,
    /// `None` when either exponent is unavailable.
    pub holds: Option<bool>,
}

impl OrderingCheck {
    pub fn is_adjacent(&self) -> bool {
        (self.upper as usize) == (self.lower as usize) + 1
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SandwichReport {
    pub source: String,
    pub config: ExperimentConfig,
    /// Mean code rate at the largest grid length, bits per source unit.
    pub h_hat: f64,
    pub rows: Vec<CellRow>,
    pub means: Vec<GridMeans>,
    pub facts_exp: Exponent,
    pub redundancy_exp: Exponent,
    pub mi_exp: Exponent,
    pub words_exp: Exponent,
    /// Every pair of terms in chain order.
    pub orderings: Vec<OrderingCheck>,
}

impl SandwichReport {
    pub fn exponent(&self, term: Term) -> &Exponent {
        match term {
            Term::Facts => &self.facts_exp,
            Term::Redundancy => &self.redundancy_exp,
            Term::MutualInformation => &self.mi_exp,
            Term::Words => &self.words_exp,
        }
    }

    pub fn ordering(&self, lower: Term, upper: Term) -> Option<bool> {
        self.orderings
            .iter()
            .find(|o| o.lower == lower && o.upper == upper)
            .and_then(|o| o.holds)
    }

    /// True when some measured exponent could not be fitted.
    pub fn is_insufficient(&self) -> bool {
        Term::ALL
            .iter()
            .any(|&t| matches!(self.exponent(t), Exponent::Insufficient(_)))
    }
}

fn measure_seed(
    source: &Source,
    config: &ExperimentConfig,
    seed: u64,
    facts: bool,
) -> Result<Vec<CellRow>> {
    let real = source.realize(2 * config.grid_max(), seed)?;
    let mut rows = Vec::with_capacity(config.grid.len());
    for &n in &config.grid {
        let u = real.units(0, n);
        let v = real.units(n, 2 * n);
        let uv = real.units(0, 2 * n);
        let c_u: f64 = config.oracle.code_len(&u);
        let c_v: f64 = config.oracle.code_len(&v);
        let c_uv: f64 = config.oracle.code_len(&uv);
        let order = markov_order_within(&u, c_u);
        rows.push(CellRow {
            n,
            seed,
            facts: if facts {
                real.ks.as_ref().map(|ks| count_facts(&ks[..n]))
            } else {
                None
            },
            code_len: c_u,
            mi: c_u + c_v - c_uv,
            vocab: vocab_proxy_at(&u, order),
            order,
        });
    }
    Ok(rows)
}

/// Estimates all four exponents of the chain on `source`.
///
/// Each seed draws one realization of length `2 * max(grid)` and every grid
/// length `n` uses its prefix `x_1^{2n}`; the per-seed measurements are
/// averaged before fitting. The
/// redundancy term uses `h_hat`, the mean code rate at the largest `n`, in
/// place of the unknown entropy rate. With `facts` set the source must be a
/// Santa Fe process.
pub fn run_sandwich(
    source: &Source,
    config: &ExperimentConfig,
    facts: bool,
) -> Result<SandwichReport> {
    config.validate()?;
    if facts && !source.has_facts() {
        return Err(Error::Unsupported(format!(
            "the fact counter is only defined for Santa Fe sources, not {source}"
        )));
    }
    let per_seed: Vec<Vec<CellRow>> = config
        .seeds
        .par_iter()
        .map(|&seed| measure_seed(source, config, seed, facts))
        .collect::<Result<_>>()?;
    let mut rows: Vec<CellRow> = per_seed.into_iter().flatten().collect();
    rows.sort_by_key(|r| (r.n, r.seed));

    let n_max = config.grid_max();
    let h_hat = mean(rows.iter().filter(|r| r.n == n_max).map(|r| r.code_len)) / n_max as f64;

    let means: Vec<GridMeans> = config
        .grid
        .iter()
        .map(|&n| {
            let cell: Vec<&CellRow> = rows.iter().filter(|r| r.n == n).collect();
            let code_len = mean(cell.iter().map(|r| r.code_len));
            GridMeans {
                n,
                facts: facts.then(|| mean(cell.iter().filter_map(|r| r.facts).map(|u| u as f64))),
                code_len,
                redundancy: code_len - h_hat * n as f64,
                mi: mean(cell.iter().map(|r| r.mi)),
                vocab: mean(cell.iter().map(|r| r.vocab as f64)),
                median_order: median(cell.iter().map(|r| r.order as f64).collect()),
            }
        })
        .collect();

    let points = |f: &dyn Fn(&GridMeans) -> f64| -> Vec<(u64, f64)> {
        means.iter().map(|m| (m.n as u64, f(m))).collect()
    };
    let facts_exp = if facts {
        Exponent::from_points(&points(&|m| m.facts.unwrap_or(0.0)))
    } else {
        Exponent::NotMeasured
    };
    let redundancy_exp = Exponent::from_points(&points(&|m| m.redundancy));
    let mi_exp = Exponent::from_points(&points(&|m| m.mi));
    let words_exp = Exponent::from_points(&points(&|m| m.vocab));

    let mut report = SandwichReport {
        source: source.to_string(),
        config: config.clone(),
        h_hat,
        rows,
        means,
        facts_exp,
        redundancy_exp,
        mi_exp,
        words_exp,
        orderings: Vec::new(),
    };
    for (i, &lower) in Term::ALL.iter().enumerate() {
        for &upper in &Term::ALL[i + 1..] {
            let holds = match (report.exponent(lower).beta(), report.exponent(upper).beta()) {
                (Some(a), Some(b)) => Some(a <= b + ORDERING_TOLERANCE),
                _ => None,
            };
            report.orderings.push(OrderingCheck {
                lower,
                upper,
                holds,
            });
        }
    }
    Ok(report)
}

/// Mean fact counter `U` over seeds at each grid length, for a Santa Fe
/// source with Zipf exponent `sampler.alpha()`, and its fitted exponent.
pub fn facts_curve(
    sampler: &ZipfSampler,
    grid: &[usize],
    seeds: &[u64],
) -> Result<(Vec<(u64, f64)>, Fit)> {
    let n_max = *grid
        .iter()
        .max()
        .ok_or_else(|| Error::InsufficientData("empty grid".into()))?;
    let per_seed: Vec<Vec<u64>> = seeds
        .par_iter()
        .map(|&seed| {
            let ks = zipf_indices(sampler, seed, n_max);
            grid.iter().map(|&n| count_facts(&ks[..n])).collect()
        })
        .collect();
    let curve: Vec<(u64, f64)> = grid
        .iter()
        .enumerate()
        .map(|(j, &n)| (n as u64, mean(per_seed.iter().map(|u| u[j] as f64))))
        .collect();
    let fit = hilberg_fit(&curve)?;
    Ok((curve, fit))
}
