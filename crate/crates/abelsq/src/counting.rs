//! Exact detection, enumeration and counting of abelian squares in linear and
//! circular binary words.
//!
//! An abelian square is a factor `uv` with `|u| = |v|` and equal Parikh
//! vectors; `theta(w)` counts the distinct factor strings of `w` that are
//! abelian squares. Trivial squares are powers of a single letter; two squares
//! are equivalent when their Parikh vectors coincide. All deduplication here
//! compares letter sequences exactly, never fingerprints alone.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{Letter, ParikhVector, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CountingError {
    #[error("word {0:?} is not an abelian square")]
    NotAbelianSquare(String),
}

/// One abelian-square occurrence: the factor `w[start .. start+2p-1]` where
/// `p = half_length`. `start` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Occurrence {
    pub start: usize,
    pub half_length: usize,
}

/// The distinct abelian-square factors of a word, ordered by
/// (length, lexicographic).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactorSet {
    members: Vec<Word>,
}

impl FactorSet {
    fn from_slices(slices: HashSet<&[Letter]>) -> Self {
        let mut members: Vec<Word> = slices
            .into_iter()
            .map(|s| Word::new(s.to_vec()))
            .collect();
        members.sort_by(|u, v| u.len().cmp(&v.len()).then_with(|| u.cmp(v)));
        FactorSet { members }
    }

    pub fn members(&self) -> &[Word] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.iter().any(|m| m == w)
    }

    /// Census of this member set (counts of the type described on
    /// [`SquareCensus`]).
    pub fn census(&self) -> SquareCensus {
        let theta = self.members.len();
        let trivial = self.members.iter().filter(|m| is_single_letter(m)).count();
        let parikhs: HashSet<ParikhVector> =
            self.members.iter().map(|m| m.parikh()).collect();
        SquareCensus {
            theta,
            trivial,
            nontrivial: theta - trivial,
            inequivalent: parikhs.len(),
        }
    }
}

/// Counts of distinct abelian-square factors: total (`theta`), trivial
/// (single-letter powers), non-trivial, and inequivalent (distinct Parikh
/// vectors among members).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareCensus {
    pub theta: usize,
    pub trivial: usize,
    pub nontrivial: usize,
    pub inequivalent: usize,
}

fn is_single_letter(w: &Word) -> bool {
    let letters = w.letters();
    match letters.first() {
        None => false,
        Some(first) => letters.iter().all(|l| l == first),
    }
}

fn prefix_b_counts(letters: &[Letter]) -> Vec<u32> {
    let mut pref = Vec::with_capacity(letters.len() + 1);
    pref.push(0u32);
    let mut acc = 0u32;
    for &l in letters {
        if l == Letter::B {
            acc += 1;
        }
        pref.push(acc);
    }
    pref
}

/// True iff `|w|` is even and the two halves have equal Parikh vectors.
/// The empty word satisfies this vacuously.
pub fn is_abelian_square(w: &Word) -> bool {
    let n = w.len();
    if !n.is_multiple_of(2) {
        return false;
    }
    let half = &w.letters()[..n / 2];
    let rest = &w.letters()[n / 2..];
    let count_b = |s: &[Letter]| s.iter().filter(|&&l| l == Letter::B).count();
    count_b(half) == count_b(rest)
}

/// All abelian-square occurrences of `w`, ordered by (start, half_length).
/// Runs in O(n^2) using prefix letter counts.
pub fn occurrences(w: &Word) -> Vec<Occurrence> {
    let n = w.len();
    let pref = prefix_b_counts(w.letters());
    let mut out = Vec::new();
    for start in 0..n {
        for p in 1..=(n - start) / 2 {
            if pref[start + p] - pref[start] == pref[start + 2 * p] - pref[start + p] {
                out.push(Occurrence { start: start + 1, half_length: p });
            }
        }
    }
    out
}

/// The set of distinct abelian-square factors of `w`.
pub fn distinct_abelian_squares(w: &Word) -> FactorSet {
    let letters = w.letters();
    let mut slices: HashSet<&[Letter]> = HashSet::new();
    for occ in occurrences(w) {
        let start = occ.start - 1;
        slices.insert(&letters[start..start + 2 * occ.half_length]);
    }
    FactorSet::from_slices(slices)
}

/// Full census of the distinct abelian squares of `w`.
pub fn census(w: &Word) -> SquareCensus {
    distinct_abelian_squares(w).census()
}

/// Whether two abelian squares are equivalent (same Parikh vector).
/// Rejects inputs that are not abelian squares.
pub fn equivalent(u: &Word, v: &Word) -> Result<bool, CountingError> {
    for w in [u, v] {
        if !is_abelian_square(w) {
            return Err(CountingError::NotAbelianSquare(w.to_literal()));
        }
    }
    Ok(u.parikh() == v.parikh())
}

/// The distinct abelian squares among circular factors of `w`: factors
/// `w[i .. i+l-1]` with indices modulo `|w|`, for every start and every
/// length `1 <= l <= |w|` (no multi-wrap).
pub fn circular_abelian_squares(w: &Word) -> FactorSet {
    let n = w.len();
    if n == 0 {
        return FactorSet::default();
    }
    let mut doubled = Vec::with_capacity(2 * n);
    doubled.extend_from_slice(w.letters());
    doubled.extend_from_slice(w.letters());
    let pref = prefix_b_counts(&doubled);
    let mut slices: HashSet<&[Letter]> = HashSet::new();
    for start in 0..n {
        for p in 1..=n / 2 {
            if pref[start + p] - pref[start] == pref[start + 2 * p] - pref[start + p] {
                slices.insert(&doubled[start..start + 2 * p]);
            }
        }
    }
    FactorSet::from_slices(slices)
}

/// Census over the circular factor set of `w`.
pub fn circular_census(w: &Word) -> SquareCensus {
    circular_abelian_squares(w).census()
}

/// A non-trivial abelian square forced by five alternating runs, together
/// with where it sits in the host word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiveRunWitness {
    pub witness: Word,
    pub occurrence: Occurrence,
}

/// If `w` contains a factor `x^i1 y^j1 x^i2 y^j2 x^i3` of five alternating
/// runs, locate the non-trivial abelian square that the pattern forces:
/// with `j' = min(j1, j2)` the witness is `y^j' x^i2 y^j'` for even `i2`; for
/// odd `i2` it is `x y^j1 x^i2 y^j1` when `j1 <= j2` and the reverse shape
/// `y^j2 x^i2 y^j2 x` otherwise (the direct form would overrun the shorter
/// run). Returns `None` when no five-run factor exists.
pub fn five_run_witness(w: &Word) -> Option<FiveRunWitness> {
    let encoding = w.runs();
    let runs = encoding.runs();
    if runs.len() < 5 {
        return None;
    }
    // Start position (1-based) of the window's second run.
    let window = &runs[0..5];
    let i1 = window[0].1;
    let j1 = window[1].1;
    let i2 = window[2].1;
    let j2 = window[3].1;
    let second_run_start = 1 + i1;
    let inner_run_start = second_run_start + j1;

    let j_min = j1.min(j2);
    let (start, len) = if i2.is_multiple_of(2) {
        // y^j' x^i2 y^j': take the last j' letters of the first y-run.
        (inner_run_start - j_min, 2 * j_min + i2)
    } else if j1 <= j2 {
        // x y^j1 x^i2 y^j1: starts on the last letter of the first x-run.
        (second_run_start - 1, 1 + 2 * j1 + i2)
    } else {
        // y^j2 x^i2 y^j2 x: ends on the first letter of the last x-run.
        (inner_run_start - j2, 2 * j2 + i2 + 1)
    };

    let witness = Word::new(w.letters()[start - 1..start - 1 + len].to_vec());
    debug_assert!(is_abelian_square(&witness));
    debug_assert!(!is_single_letter(&witness));
    Some(FiveRunWitness {
        witness,
        occurrence: Occurrence { start, half_length: len / 2 },
    })
}
