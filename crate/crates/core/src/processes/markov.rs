use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Symbol, SymbolSeq};
use crate::error::{Error, Result};

const ROW_TOLERANCE: f64 = 1e-12;

/// A finite-order Markov chain over `alphabet_size` symbols.
///
/// `transitions` has one row per length-`order` context, indexed by the
/// context read as a base-`D` number with the oldest symbol most
/// significant. `initial` is a distribution over the same context indices.
#[derive(Debug, Clone, PartialEq)]
pub struct MarkovSpec {
    order: usize,
    alphabet_size: u32,
    transitions: Vec<Vec<f64>>,
    initial: Vec<f64>,
}

impl MarkovSpec {
    pub fn new(
        order: usize,
        alphabet_size: u32,
        transitions: Vec<Vec<f64>>,
        initial: Vec<f64>,
    ) -> Result<Self> {
        if alphabet_size < 2 {
            return Err(Error::Validation("alphabet size must be at least 2".into()));
        }
        let contexts = (alphabet_size as usize)
            .checked_pow(order as u32)
            .filter(|&c| c <= 1 << 24)
            .ok_or_else(|| Error::Validation(format!("order {order} has too many contexts")))?;
        if transitions.len() != contexts {
            return Err(Error::Validation(format!(
                "expected {contexts} transition rows, got {}",
                transitions.len()
            )));
        }
        for (i, row) in transitions.iter().enumerate() {
            if row.len() != alphabet_size as usize {
                return Err(Error::Validation(format!(
                    "row {i} has {} entries, expected {alphabet_size}",
                    row.len()
                )));
            }
            check_distribution(row).map_err(|e| Error::Validation(format!("row {i}: {e}")))?;
        }
        if initial.len() != contexts {
            return Err(Error::Validation(format!(
                "initial distribution has {} entries, expected {contexts}",
                initial.len()
            )));
        }
        check_distribution(&initial)
            .map_err(|e| Error::Validation(format!("initial distribution: {e}")))?;
        Ok(Self {
            order,
            alphabet_size,
            transitions,
            initial,
        })
    }

    /// I.i.d. source with marginal `probs`.
    pub fn iid(probs: Vec<f64>) -> Result<Self> {
        let d = probs.len() as u32;
        Self::new(0, d, vec![probs], vec![1.0])
    }

    /// Order-`order` chain started from its stationary context distribution.
    pub fn stationary(
        order: usize,
        alphabet_size: u32,
        transitions: Vec<Vec<f64>>,
    ) -> Result<Self> {
        let contexts = transitions.len().max(1);
        let uniform = vec![1.0 / contexts as f64; contexts];
        let mut spec = Self::new(order, alphabet_size, transitions, uniform)?;
        spec.initial = spec.stationary_contexts();
        Ok(spec)
    }

    /// Binary order-1 chain that keeps its symbol with probability `stay`.
    pub fn binary_symmetric(stay: f64) -> Result<Self> {
        Self::stationary(1, 2, vec![vec![stay, 1.0 - stay], vec![1.0 - stay, stay]])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    pub fn transitions(&self) -> &[Vec<f64>] {
        &self.transitions
    }

    pub fn initial(&self) -> &[f64] {
        &self.initial
    }

    fn contexts(&self) -> usize {
        self.transitions.len()
    }

    fn next_context(&self, ctx: usize, s: Symbol) -> usize {
        if self.order == 0 {
            0
        } else {
            (ctx * self.alphabet_size as usize + s as usize) % self.contexts()
        }
    }

    /// Stationary distribution over contexts, by power iteration from the
    /// uniform distribution (averaged over two steps to damp periodicity).
    pub fn stationary_contexts(&self) -> Vec<f64> {
        let c = self.contexts();
        let mut p = vec![1.0 / c as f64; c];
        for _ in 0..10_000 {
            let mut q = vec![0.0; c];
            for (ctx, row) in self.transitions.iter().enumerate() {
                for (s, &t) in row.iter().enumerate() {
                    q[self.next_context(ctx, s as Symbol)] += p[ctx] * t;
                }
            }
            let avg: Vec<f64> = p.iter().zip(&q).map(|(a, b)| 0.5 * (a + b)).collect();
            let delta: f64 = avg.iter().zip(&p).map(|(a, b)| (a - b).abs()).sum();
            p = avg;
            if delta < 1e-15 {
                break;
            }
        }
        let total: f64 = p.iter().sum();
        p.iter().map(|v| v / total).collect()
    }
}

fn check_distribution(p: &[f64]) -> std::result::Result<(), String> {
    if p.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
        return Err("entries must be finite and non-negative".into());
    }
    let sum: f64 = p.iter().sum();
    if (sum - 1.0).abs() > ROW_TOLERANCE {
        return Err(format!("sums to {sum}, not 1"));
    }
    Ok(())
}

fn draw<R: Rng>(rng: &mut R, cumulative: &[f64]) -> usize {
    let u: f64 = rng.random::<f64>() * cumulative[cumulative.len() - 1];
    cumulative
        .iter()
        .position(|&c| u < c)
        .unwrap_or(cumulative.len() - 1)
}

fn cumulate(p: &[f64]) -> Vec<f64> {
    p.iter()
        .scan(0.0, |acc, &v| {
            *acc += v;
            Some(*acc)
        })
        .collect()
}

/// Samples `n` symbols from the chain.
pub fn gen_markov(spec: &MarkovSpec, n: usize, seed: u64) -> Result<SymbolSeq> {
    if n < spec.order {
        return Err(Error::Parameter(format!(
            "length {n} is shorter than the chain order {}",
            spec.order
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<f64>> = spec.transitions.iter().map(|r| cumulate(r)).collect();
    let d = spec.alphabet_size as usize;
    let mut out = Vec::with_capacity(n);

    let mut ctx = draw(&mut rng, &cumulate(&spec.initial));
    for i in (0..spec.order).rev() {
        out.push(((ctx / d.pow(i as u32)) % d) as Symbol);
    }
    while out.len() < n {
        let s = draw(&mut rng, &rows[ctx]) as Symbol;
        out.push(s);
        ctx = spec.next_context(ctx, s);
    }
    SymbolSeq::new(spec.alphabet_size, out)
}
