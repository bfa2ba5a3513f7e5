//! Exhaustive, symmetry-pruned enumeration over Parikh classes: exact minima
//! `M(x, n)`, complete minimizer sets, conjecture sweeps and a resumable
//! JSONL result cache.

mod cache;
mod engine;
mod verify;

pub use cache::{CacheRecord, ResultCache, CACHE_SCHEMA, COUNTER_VERSION};
pub use engine::{
    binomial, min_over_parikh, min_over_parikh_cached, parikh_class, partition_work,
    MinimizationResult, ParikhClassIter, SearchOptions, WorkChunk, MAX_SEARCH_LEN,
};
pub use verify::{
    verify_closed_forms, verify_effective, verify_fici_saarela, verify_identities,
    verify_section5, verify_two_a, write_csv_rows, ClassRow, ClosedFormCheck, ClosedFormOutcome,
    ConjectureId, ConjectureReport, Counterexample, EffectiveCheck, EffectiveOutcome, FiciSweep,
    IdentityOutcome, LengthRange, Section5Outcome, TwoAMismatch, TwoAOutcome, Verdict,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("x = {x} exceeds word length n = {n}")]
    CountExceedsLength { x: usize, n: usize },
    #[error("word length {0} exceeds the engine limit of {MAX_SEARCH_LEN}")]
    LengthUnsupported(usize),
    #[error("class (x={x}, n={n}) holds {words} words, over the budget of {budget}; pass force to run anyway")]
    BudgetExceeded { x: usize, n: usize, words: u128, budget: u64 },
    #[error("chunk count must be at least 1")]
    ZeroChunks,
    #[error("cache i/o: {0}")]
    Cache(#[from] std::io::Error),
    #[error(transparent)]
    Forms(#[from] crate::closed_forms::FormsError),
}
