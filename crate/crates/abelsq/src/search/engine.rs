//! The enumeration core: bitmask word representation, fixed-popcount
//! iteration, work partitioning and exact minimization over a Parikh class.
//!
//! Words of length `n <= 62` are packed into a `u64` with the first letter in
//! the most significant used bit and `b = 1`, so ascending mask order is
//! lexicographic order with `a < b`.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

#[cfg(test)]
use crate::counting::SquareCensus;
use crate::word::{Letter, Word};

use super::SearchError;

/// Longest word the mask engine handles.
pub const MAX_SEARCH_LEN: usize = 62;

/// C(n, k) without overflow for the lengths the engine accepts.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub(crate) fn mask_to_word(mask: u64, n: usize) -> Word {
    let letters = (0..n)
        .map(|i| {
            if mask >> (n - 1 - i) & 1 == 1 {
                Letter::B
            } else {
                Letter::A
            }
        })
        .collect();
    Word::new(letters)
}

pub(crate) fn word_to_mask(w: &Word) -> Option<(u64, usize)> {
    let n = w.len();
    if n > MAX_SEARCH_LEN {
        return None;
    }
    let mut mask = 0u64;
    for &l in w.letters() {
        mask = mask << 1 | (l == Letter::B) as u64;
    }
    Some((mask, n))
}

pub(crate) fn reverse_mask(mask: u64, n: usize) -> u64 {
    if n == 0 {
        return 0;
    }
    mask.reverse_bits() >> (64 - n)
}

pub(crate) fn complement_mask(mask: u64, n: usize) -> u64 {
    mask ^ ((1u64 << n) - 1)
}

/// Next integer with the same popcount (Gosper's hack); `None` for 0.
fn next_same_popcount(v: u64) -> Option<u64> {
    if v == 0 {
        return None;
    }
    let c = v & v.wrapping_neg();
    let r = v.checked_add(c)?;
    Some((((r ^ v) >> 2) / c) | r)
}

/// Ascending masks of `width` bits with exactly `ones` bits set.
#[derive(Debug, Clone)]
pub(crate) struct FixedPopcountIter {
    next: Option<u64>,
    limit: u64,
}

impl FixedPopcountIter {
    pub(crate) fn new(width: usize, ones: usize) -> Self {
        debug_assert!(width <= MAX_SEARCH_LEN);
        let limit = 1u64 << width;
        let next = if ones > width {
            None
        } else if ones == 0 {
            Some(0)
        } else {
            Some((1u64 << ones) - 1)
        };
        FixedPopcountIter { next, limit }
    }
}

impl Iterator for FixedPopcountIter {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let v = self.next?;
        self.next = next_same_popcount(v).filter(|&succ| succ < self.limit);
        Some(v)
    }
}

/// Lexicographic stream of every word of length `n` with exactly `x` letters
/// `a` (the `C(n, x)` members of the Parikh class).
#[derive(Debug, Clone)]
pub struct ParikhClassIter {
    masks: FixedPopcountIter,
    n: usize,
}

impl Iterator for ParikhClassIter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        self.masks.next().map(|m| mask_to_word(m, self.n))
    }
}

pub fn parikh_class(x: usize, n: usize) -> Result<ParikhClassIter, SearchError> {
    if x > n {
        return Err(SearchError::CountExceedsLength { x, n });
    }
    if n > MAX_SEARCH_LEN {
        return Err(SearchError::LengthUnsupported(n));
    }
    Ok(ParikhClassIter { masks: FixedPopcountIter::new(n, n - x), n })
}

/// Scratch-buffer counter for `theta` over packed words. Occurrence checks
/// use prefix `b` counts; deduplication keys are the exact (length, letters)
/// encoding of each factor, so counting is never probabilistic.
pub(crate) struct ThetaCounter {
    pref: [u8; MAX_SEARCH_LEN + 1],
    factors: Vec<(u32, u64)>,
}

impl ThetaCounter {
    pub(crate) fn new() -> Self {
        ThetaCounter { pref: [0; MAX_SEARCH_LEN + 1], factors: Vec::new() }
    }

    /// Fill `factors` with the deduplicated abelian-square factor encodings.
    fn collect(&mut self, mask: u64, n: usize) {
        self.factors.clear();
        for i in 0..n {
            self.pref[i + 1] = self.pref[i] + (mask >> (n - 1 - i) & 1) as u8;
        }
        for p in 1..=n / 2 {
            for s in 0..=n - 2 * p {
                if self.pref[s + p] - self.pref[s] == self.pref[s + 2 * p] - self.pref[s + p] {
                    let len = 2 * p;
                    let bits = mask >> (n - s - len) & ((1u64 << len) - 1);
                    self.factors.push((len as u32, bits));
                }
            }
        }
        self.factors.sort_unstable();
        self.factors.dedup();
    }

    pub(crate) fn theta(&mut self, mask: u64, n: usize) -> usize {
        self.collect(mask, n);
        self.factors.len()
    }

    /// Whether every factor found by the last `theta` call is a power of a
    /// single letter.
    pub(crate) fn last_members_all_trivial(&self) -> bool {
        self.factors
            .iter()
            .all(|&(len, bits)| bits == 0 || bits == (1u64 << len) - 1)
    }

    /// Mask-path census, cross-checked against the slice-path census in
    /// tests as a second independent route.
    #[cfg(test)]
    pub(crate) fn census(&mut self, mask: u64, n: usize) -> SquareCensus {
        self.collect(mask, n);
        let theta = self.factors.len();
        let trivial = self
            .factors
            .iter()
            .filter(|&&(len, bits)| bits == 0 || bits == (1u64 << len) - 1)
            .count();
        let mut parikhs: Vec<(u32, u32)> = self
            .factors
            .iter()
            .map(|&(len, bits)| (len, bits.count_ones()))
            .collect();
        parikhs.sort_unstable();
        parikhs.dedup();
        SquareCensus {
            theta,
            trivial,
            nontrivial: theta - trivial,
            inequivalent: parikhs.len(),
        }
    }
}

/// Whether `mask` is the smallest element of its orbit under reversal (and,
/// when `with_complement`, complementation).
pub(crate) fn is_canonical(mask: u64, n: usize, with_complement: bool) -> bool {
    let r = reverse_mask(mask, n);
    if r < mask {
        return false;
    }
    if with_complement {
        let c = complement_mask(mask, n);
        if c < mask || complement_mask(r, n) < mask {
            return false;
        }
    }
    true
}

/// The orbit of `mask` under reversal (and optionally complementation),
/// deduplicated.
pub(crate) fn orbit(mask: u64, n: usize, with_complement: bool) -> Vec<u64> {
    let mut members = vec![mask, reverse_mask(mask, n)];
    if with_complement {
        members.push(complement_mask(mask, n));
        members.push(complement_mask(reverse_mask(mask, n), n));
    }
    members.sort_unstable();
    members.dedup();
    members
}

/// A disjoint slice of one Parikh class: every word starting with `prefix`.
/// Chunks produced for a given class jointly cover it; infeasible prefixes
/// yield empty chunks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkChunk {
    pub n: usize,
    pub x: usize,
    pub prefix: Word,
    pub remaining: usize,
}

impl WorkChunk {
    fn suffix_ones(&self) -> Option<usize> {
        let prefix_b = self
            .prefix
            .letters()
            .iter()
            .filter(|&&l| l == Letter::B)
            .count();
        let total_b = self.n - self.x;
        let ones = total_b.checked_sub(prefix_b)?;
        (ones <= self.remaining).then_some(ones)
    }

    /// Number of words the chunk covers.
    pub fn word_count(&self) -> u128 {
        match self.suffix_ones() {
            Some(ones) => binomial(self.remaining, ones),
            None => 0,
        }
    }

    pub(crate) fn masks(&self) -> impl Iterator<Item = u64> + '_ {
        let (prefix_mask, prefix_len) = word_to_mask(&self.prefix).expect("prefix fits in mask");
        debug_assert_eq!(prefix_len + self.remaining, self.n);
        let shift = self.remaining;
        let suffixes = match self.suffix_ones() {
            Some(ones) => FixedPopcountIter::new(self.remaining, ones),
            None => FixedPopcountIter { next: None, limit: 0 },
        };
        suffixes.map(move |s| prefix_mask << shift | s)
    }

    /// The chunk's words in lexicographic order.
    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        let n = self.n;
        self.masks().map(move |m| mask_to_word(m, n))
    }
}

/// Split the class `(x, n)` into `2^ceil(log2(chunk_count))` disjoint chunks
/// by fixing prefixes. Aggregating per-chunk results is order-independent.
pub fn partition_work(x: usize, n: usize, chunk_count: usize) -> Result<Vec<WorkChunk>, SearchError> {
    if chunk_count == 0 {
        return Err(SearchError::ZeroChunks);
    }
    if x > n {
        return Err(SearchError::CountExceedsLength { x, n });
    }
    if n > MAX_SEARCH_LEN {
        return Err(SearchError::LengthUnsupported(n));
    }
    let prefix_len = (chunk_count.next_power_of_two().trailing_zeros() as usize).min(n);
    let chunks = (0..1u64 << prefix_len)
        .map(|prefix_mask| WorkChunk {
            n,
            x,
            prefix: mask_to_word(prefix_mask, prefix_len),
            remaining: n - prefix_len,
        })
        .collect();
    Ok(chunks)
}

/// Tunables for the exhaustive engine.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Evaluate only lexicographic representatives under reversal (and
    /// complementation when `2x = n`) and re-expand afterwards.
    pub use_symmetry: bool,
    /// Worker count; 0 means available parallelism.
    pub threads: usize,
    /// Refuse classes with more words than this unless `force` is set.
    pub budget: u64,
    pub force: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { use_symmetry: true, threads: 0, budget: 1 << 30, force: false }
    }
}

impl SearchOptions {
    pub fn effective_threads(&self) -> usize {
        if self.threads > 0 {
            self.threads
        } else {
            std::thread::available_parallelism().map_or(1, |p| p.get())
        }
    }
}

/// Exact minimum of `theta` over a Parikh class, with the complete minimizer
/// set (unsymmetrized, lexicographically sorted). `words_examined` counts
/// evaluated words, which under symmetry pruning is the representative count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimizationResult {
    pub n: usize,
    pub x: usize,
    pub min_theta: usize,
    pub minimizers: Vec<Word>,
    pub words_examined: u64,
    #[serde(default)]
    pub elapsed: Duration,
}

struct ChunkMin {
    min_theta: Option<usize>,
    minimizer_masks: Vec<u64>,
    examined: u64,
}

fn scan_chunk(chunk: &WorkChunk, prune: bool, with_complement: bool) -> ChunkMin {
    let mut counter = ThetaCounter::new();
    let mut best: Option<usize> = None;
    let mut minimizers = Vec::new();
    let mut examined = 0u64;
    for mask in chunk.masks() {
        if prune && !is_canonical(mask, chunk.n, with_complement) {
            continue;
        }
        examined += 1;
        let theta = counter.theta(mask, chunk.n);
        match best {
            Some(b) if theta > b => {}
            Some(b) if theta == b => minimizers.push(mask),
            _ => {
                best = Some(theta);
                minimizers.clear();
                minimizers.push(mask);
            }
        }
    }
    ChunkMin { min_theta: best, minimizer_masks: minimizers, examined }
}

pub(crate) fn run_on_pool<T: Send>(
    threads: usize,
    chunks: &[WorkChunk],
    job: impl Fn(&WorkChunk) -> T + Sync + Send,
) -> Vec<T> {
    if threads <= 1 || chunks.len() <= 1 {
        chunks.iter().map(job).collect()
    } else {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("worker pool");
        pool.install(|| chunks.par_iter().map(job).collect())
    }
}

/// Brute-force `M(x, n)` over the whole class. With `use_symmetry` only orbit
/// representatives are evaluated; the reported minimizer set is re-expanded
/// and identical to the unpruned one.
pub fn min_over_parikh(
    x: usize,
    n: usize,
    options: &SearchOptions,
) -> Result<MinimizationResult, SearchError> {
    if x > n {
        return Err(SearchError::CountExceedsLength { x, n });
    }
    if n > MAX_SEARCH_LEN {
        return Err(SearchError::LengthUnsupported(n));
    }
    let class_size = binomial(n, x);
    if !options.force && class_size > options.budget as u128 {
        return Err(SearchError::BudgetExceeded { x, n, words: class_size, budget: options.budget });
    }

    let started = Instant::now();
    let threads = options.effective_threads();
    let chunk_count = if threads > 1 { threads * 4 } else { 1 };
    let chunks = partition_work(x, n, chunk_count)?;
    let with_complement = options.use_symmetry && 2 * x == n;
    let prune = options.use_symmetry;

    let outcomes = run_on_pool(threads, &chunks, |chunk| scan_chunk(chunk, prune, with_complement));

    let mut min_theta = usize::MAX;
    let mut words_examined = 0u64;
    for outcome in &outcomes {
        words_examined += outcome.examined;
        if let Some(m) = outcome.min_theta {
            min_theta = min_theta.min(m);
        }
    }
    let mut masks: Vec<u64> = Vec::new();
    for outcome in outcomes {
        if outcome.min_theta == Some(min_theta) {
            masks.extend(outcome.minimizer_masks);
        }
    }
    if prune {
        let mut expanded = Vec::with_capacity(masks.len() * 2);
        for mask in masks {
            expanded.extend(orbit(mask, n, with_complement));
        }
        masks = expanded;
    }
    masks.sort_unstable();
    masks.dedup();

    Ok(MinimizationResult {
        n,
        x,
        min_theta: if min_theta == usize::MAX { 0 } else { min_theta },
        minimizers: masks.into_iter().map(|m| mask_to_word(m, n)).collect(),
        words_examined,
        elapsed: started.elapsed(),
    })
}

/// Cache-aware minimization: replay a stored result for `(n, x)` under the
/// current counter version when one exists, otherwise compute and persist.
/// Passing `None` is plain [`min_over_parikh`].
pub fn min_over_parikh_cached(
    x: usize,
    n: usize,
    options: &SearchOptions,
    cache: Option<&mut super::ResultCache>,
) -> Result<MinimizationResult, SearchError> {
    match cache {
        None => min_over_parikh(x, n, options),
        Some(cache) => {
            if let Some(record) = cache.get(n, x) {
                return Ok(record.clone().into_result());
            }
            let result = min_over_parikh(x, n, options)?;
            cache.store(super::CacheRecord::from_result(&result))?;
            Ok(result)
        }
    }
}
