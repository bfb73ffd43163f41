//! The measurable quantities: subword complexity, Markov order and
//! vocabulary, the Santa Fe fact counter, power-law exponents and
//! diagnostics for the source conditions.

mod conditions;
mod facts;
mod hilberg;
mod order;
mod subword;

pub use conditions::{condition_diagnostics, ConditionReport, INVERSE_RATE_GROWTH_LIMIT};
pub use facts::count_facts;
pub use hilberg::{hilberg_fit, HilbergFit};
pub use order::{markov_order, markov_order_within, vocab_proxy, vocab_proxy_at};
pub use subword::subword_complexity;
