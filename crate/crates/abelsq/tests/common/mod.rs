//! Naive counting oracle used by the invariant and acceptance suites.
//!
//! Deliberately independent of the library's counting paths: factors are
//! enumerated as plain index ranges and tested by scanning and counting
//! letters in each half, with no prefix sums, bitmasks or occurrence lists.

// Shared between test binaries; not every binary uses every helper.
#![allow(dead_code)]

use std::collections::BTreeSet;

use abelsq::word::{Letter, Word};

fn count_letter(slice: &[Letter], letter: Letter) -> usize {
    slice.iter().filter(|&&l| l == letter).count()
}

fn halves_balanced(factor: &[Letter]) -> bool {
    let half = factor.len() / 2;
    factor.len().is_multiple_of(2)
        && count_letter(&factor[..half], Letter::A) == count_letter(&factor[half..], Letter::A)
        && count_letter(&factor[..half], Letter::B) == count_letter(&factor[half..], Letter::B)
}

/// Every distinct non-empty abelian-square factor of `w`, by brute force.
pub fn naive_abelian_square_factors(w: &Word) -> BTreeSet<Vec<Letter>> {
    let letters = w.letters();
    let mut set = BTreeSet::new();
    for start in 0..letters.len() {
        for end in (start + 2..=letters.len()).step_by(2) {
            let factor = &letters[start..end];
            if halves_balanced(factor) {
                set.insert(factor.to_vec());
            }
        }
    }
    set
}

pub fn naive_theta(w: &Word) -> usize {
    naive_abelian_square_factors(w).len()
}

/// Trivial / non-trivial / inequivalent counts derived directly from the
/// naive factor set.
pub fn naive_census(w: &Word) -> (usize, usize, usize, usize) {
    let set = naive_abelian_square_factors(w);
    let theta = set.len();
    let trivial = set
        .iter()
        .filter(|f| f.iter().all(|&l| l == f[0]))
        .count();
    let parikhs: BTreeSet<(usize, usize)> = set
        .iter()
        .map(|f| (count_letter(f, Letter::A), count_letter(f, Letter::B)))
        .collect();
    (theta, trivial, theta - trivial, parikhs.len())
}

/// Distinct abelian squares among circular factors, via explicit rotations:
/// the circular factors of `w` are the prefixes (of length at most `|w|`)
/// of its rotations.
pub fn naive_circular_square_factors(w: &Word) -> BTreeSet<Vec<Letter>> {
    let n = w.len();
    let letters = w.letters();
    let mut set = BTreeSet::new();
    for split in 0..n {
        let mut rotation: Vec<Letter> = letters[split..].to_vec();
        rotation.extend_from_slice(&letters[..split]);
        for len in (2..=n).step_by(2) {
            let factor = &rotation[..len];
            if halves_balanced(factor) {
                set.insert(factor.to_vec());
            }
        }
    }
    set
}

/// All 2^n words of length `n`, built independently of the search engine
/// (bit i of the counter decides letter i).
pub fn all_words(n: usize) -> impl Iterator<Item = Word> {
    (0u64..1 << n).map(move |bits| {
        Word::new(
            (0..n)
                .map(|i| if bits >> i & 1 == 1 { Letter::B } else { Letter::A })
                .collect(),
        )
    })
}

/// Deterministic xorshift stream for reproducible random sampling without
/// dragging in RNG state elsewhere.
pub struct XorShift(pub u64);

impl XorShift {
    pub fn next(&mut self) -> u64 {
        let mut v = self.0;
        v ^= v << 13;
        v ^= v >> 7;
        v ^= v << 17;
        self.0 = v;
        v
    }

    pub fn word(&mut self, len: usize) -> Word {
        Word::new(
            (0..len)
                .map(|_| if self.next() & 1 == 1 { Letter::B } else { Letter::A })
                .collect(),
        )
    }
}
