//! Window packing and context/successor counting shared by the likelihood
//! and subword estimators.

use crate::error::{Error, Result};
use crate::processes::{Symbol, SymbolSeq};
use crate::scalar::Real;

/// Packs every length-`len` window of `x` into a base-`d` integer, oldest
/// symbol most significant, so that integer order equals lexicographic
/// order. Returns `None` when `d^len` overflows `u64`.
pub(crate) fn packed_windows(x: &[Symbol], d: u32, len: usize) -> Option<Vec<u64>> {
    let modulus = u64::from(d).checked_pow(u32::try_from(len).ok()?)?;
    if x.len() < len {
        return Some(Vec::new());
    }
    if len == 0 {
        return Some(vec![0; x.len() + 1]);
    }
    let d = u64::from(d);
    let mut out = Vec::with_capacity(x.len() - len + 1);
    let mut key = 0u64;
    for (i, &s) in x.iter().enumerate() {
        key = (key % (modulus / d)) * d + u64::from(s);
        if i + 1 >= len {
            out.push(key);
        }
    }
    Some(out)
}

/// Number of distinct length-`len` windows.
pub(crate) fn distinct_windows(x: &SymbolSeq, len: usize) -> usize {
    let s = x.symbols();
    if s.len() < len {
        return 0;
    }
    if len == 0 {
        return 1;
    }
    match packed_windows(s, x.alphabet_size(), len) {
        Some(keys)
            if u64::from(x.alphabet_size())
                .checked_pow(len as u32)
                .is_some_and(|b| b as usize <= dense_limit(s.len())) =>
        {
            let mut seen = vec![false; u64::from(x.alphabet_size()).pow(len as u32) as usize];
            keys.iter()
                .filter(|&&k| !std::mem::replace(&mut seen[k as usize], true))
                .count()
        }
        Some(mut keys) => {
            keys.sort_unstable();
            keys.dedup();
            keys.len()
        }
        None => {
            let mut starts: Vec<usize> = (0..=s.len() - len).collect();
            starts.sort_unstable_by(|&a, &b| s[a..a + len].cmp(&s[b..b + len]));
            starts.dedup_by(|a, b| s[*a..*a + len] == s[*b..*b + len]);
            starts.len()
        }
    }
}

/// Counts of one context: where it occurs, how often it is followed by
/// a scored symbol, and the per-successor breakdown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContextRow {
    start: usize,
    total: u64,
    successors: Vec<(Symbol, u64)>,
}

impl ContextRow {
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn successors(&self) -> &[(Symbol, u64)] {
        &self.successors
    }
}

/// Largest dense count table used for a sequence of length `n`.
fn dense_limit(n: usize) -> usize {
    (4 * n).clamp(1 << 12, 1 << 22)
}

/// Visits the context groups of order `k` in lexicographic context order.
/// Scored positions are `k..n` (0-based), each with context `x[i-k..i]`.
fn for_each_context<F>(x: &SymbolSeq, k: usize, mut visit: F)
where
    F: FnMut(usize, u64, &[(Symbol, u64)]),
{
    let s = x.symbols();
    let n = s.len();
    if k >= n {
        return;
    }
    let d = x.alphabet_size();
    let mut succ: Vec<(Symbol, u64)> = Vec::new();

    let buckets = u64::from(d).checked_pow((k + 1) as u32).map(|b| b as usize);
    if let Some(buckets) = buckets.filter(|&b| b <= dense_limit(n)) {
        // counting pass over a dense table of all (k+1)-grams
        let keys = packed_windows(s, d, k + 1).expect("fits in u64");
        let mut counts = vec![0u64; buckets];
        let mut first = vec![u32::MAX; buckets / d as usize];
        for (j, &key) in keys.iter().enumerate() {
            counts[key as usize] += 1;
            let ctx = key as usize / d as usize;
            if first[ctx] == u32::MAX {
                first[ctx] = j as u32;
            }
        }
        for (ctx, row) in counts.chunks_exact(d as usize).enumerate() {
            if first[ctx] == u32::MAX {
                continue;
            }
            succ.clear();
            succ.extend(
                row.iter()
                    .enumerate()
                    .filter(|(_, &c)| c > 0)
                    .map(|(sym, &c)| (sym as Symbol, c)),
            );
            visit(first[ctx] as usize, row.iter().sum(), &succ);
        }
    } else if let Some(keys) = packed_windows(s, d, k + 1) {
        let mut keyed: Vec<(u64, u32)> = keys
            .into_iter()
            .enumerate()
            .map(|(j, key)| (key, j as u32))
            .collect();
        keyed.sort_unstable();
        let d = u64::from(d);
        let mut i = 0;
        while i < keyed.len() {
            let ctx = keyed[i].0 / d;
            let first = keyed[i].1 as usize;
            succ.clear();
            let mut total = 0u64;
            while i < keyed.len() && keyed[i].0 / d == ctx {
                let key = keyed[i].0;
                let mut c = 0u64;
                while i < keyed.len() && keyed[i].0 == key {
                    c += 1;
                    i += 1;
                }
                succ.push(((key % d) as Symbol, c));
                total += c;
            }
            visit(first, total, &succ);
        }
    } else {
        let mut starts: Vec<usize> = (0..n - k).collect();
        starts.sort_unstable_by(|&a, &b| s[a..=a + k].cmp(&s[b..=b + k]).then(a.cmp(&b)));
        let mut i = 0;
        while i < starts.len() {
            let first = starts[i];
            let ctx = &s[first..first + k];
            succ.clear();
            let mut total = 0u64;
            while i < starts.len() && &s[starts[i]..starts[i] + k] == ctx {
                let sym = s[starts[i] + k];
                let mut c = 0u64;
                while i < starts.len()
                    && &s[starts[i]..starts[i] + k] == ctx
                    && s[starts[i] + k] == sym
                {
                    c += 1;
                    i += 1;
                }
                succ.push((sym, c));
                total += c;
            }
            visit(first, total, &succ);
        }
    }
}

/// Context and successor counts of order `k` over a sequence; the empirical
/// conditional frequencies attain the order-`k` maximum likelihood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NGramTable {
    order: usize,
    n: usize,
    symbols: Vec<Symbol>,
    rows: Vec<ContextRow>,
}

impl NGramTable {
    pub fn build(x: &SymbolSeq, k: usize) -> Result<Self> {
        if k > x.len() {
            return Err(Error::Parameter(format!(
                "order {k} exceeds sequence length {}",
                x.len()
            )));
        }
        let mut rows = Vec::new();
        for_each_context(x, k, |start, total, succ| {
            rows.push(ContextRow {
                start,
                total,
                successors: succ.to_vec(),
            })
        });
        Ok(Self {
            order: k,
            n: x.len(),
            symbols: x.symbols().to_vec(),
            rows,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_contexts(&self) -> usize {
        self.rows.len()
    }

    /// Contexts in lexicographic order with their rows.
    pub fn rows(&self) -> impl Iterator<Item = (&[Symbol], &ContextRow)> {
        self.rows
            .iter()
            .map(move |r| (&self.symbols[r.start..r.start + self.order], r))
    }

    fn find(&self, context: &[Symbol]) -> Option<&ContextRow> {
        if context.len() != self.order {
            return None;
        }
        self.rows
            .binary_search_by(|r| self.symbols[r.start..r.start + self.order].cmp(context))
            .ok()
            .map(|i| &self.rows[i])
    }

    pub fn context_count(&self, context: &[Symbol]) -> u64 {
        self.find(context).map_or(0, |r| r.total)
    }

    pub fn successor_count(&self, context: &[Symbol], symbol: Symbol) -> u64 {
        self.find(context)
            .and_then(|r| r.successors.iter().find(|(s, _)| *s == symbol))
            .map_or(0, |&(_, c)| c)
    }

    /// `-log2` of the maximized order-`k` likelihood.
    pub fn neg_log_likelihood<T: Real>(&self) -> T {
        self.rows
            .iter()
            .map(|r| row_code_len::<T>(r.total, &r.successors))
            .sum()
    }
}

fn row_code_len<T: Real>(total: u64, succ: &[(Symbol, u64)]) -> T {
    if succ.len() <= 1 {
        return T::zero();
    }
    let total_t = T::of_u64(total);
    succ.iter()
        .map(|&(_, c)| {
            let c = T::of_u64(c);
            -c * (c / total_t).log2()
        })
        .sum()
}

/// `-log2 L_k(x)` without materializing the table.
pub(crate) fn ml_code_len<T: Real>(x: &SymbolSeq, k: usize) -> T {
    let mut acc = T::zero();
    for_each_context(x, k, |_, total, succ| {
        acc = acc + row_code_len::<T>(total, succ)
    });
    acc
}
