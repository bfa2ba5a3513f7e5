//! Closed-form minimum counts, extremal-word families, effective
//! partitions/words and the arithmetic identities behind them.
//!
//! `M(x, n)` denotes the least value of `theta` over binary words of length
//! `n` containing exactly `x` letters `a`. Exact closed forms exist for
//! `x` (or `n - x`) in `{0, 1, 2, 3}`; the interior is covered by a
//! conjectured bound that the search engine tests exhaustively.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{word_from_exponents, Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormsError {
    #[error("x = {x} exceeds word length n = {n}")]
    CountExceedsLength { x: usize, n: usize },
    #[error("no exact closed form for x = {x}, n = {n}: both x and n-x exceed 3")]
    NoClosedForm { x: usize, n: usize },
    #[error("closed form for x = {x} requires n >= {min_n}, got n = {n}")]
    LengthTooSmall { x: usize, n: usize, min_n: usize },
    #[error("extremal family for x = {x}, n = {n} is not characterized; use brute force")]
    NoExtremalFamily { x: usize, n: usize },
    #[error("effective partition requires n >= 3, got {0}")]
    PartitionTooSmall(usize),
    #[error("effective words require letter counts >= 3, got {0}")]
    EffectiveCountTooSmall(usize),
    #[error("x = {x} is a boundary class for n = {n}: covered by exact closed forms")]
    BoundaryClass { x: usize, n: usize },
}

/// Which kind of lower bound a reported value is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundKind {
    #[serde(rename = "exact_M")]
    ExactM,
    #[serde(rename = "conjectured_min")]
    ConjecturedMin,
    #[serde(rename = "fici_saarela")]
    FiciSaarela,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BoundKind::ExactM => "exact_M",
            BoundKind::ConjecturedMin => "conjectured_min",
            BoundKind::FiciSaarela => "fici_saarela",
        };
        f.write_str(s)
    }
}

/// The conjectured universal lower bound: every binary word of length `n`
/// contains at least `floor(n/4)` abelian squares.
pub fn fici_saarela_bound(n: usize) -> usize {
    n / 4
}

/// Exact minimum `M(x, n)` where known:
/// `M(0,n) = floor(n/2)`, `M(1,n) = floor(n/4)`,
/// `M(2,n) = floor((n-2)/2)` for `n >= 3`, `M(3,n) = floor((n+2)/4)`,
/// extended to `n - x <= 3` by complementation. The special value
/// `M(2,2) = 1` falls out of complementation (it normalizes to `M(0,2)`).
pub fn min_theta(x: usize, n: usize) -> Result<usize, FormsError> {
    if x > n {
        return Err(FormsError::CountExceedsLength { x, n });
    }
    // After normalization x <= n/2, so the x = 2 arm only sees n >= 4.
    let x = x.min(n - x);
    match x {
        0 => Ok(n / 2),
        1 => Ok(n / 4),
        2 => Ok((n - 2) / 2),
        3 => Ok((n + 2) / 4),
        _ => Err(FormsError::NoClosedForm { x, n }),
    }
}

/// `floor(ceil((n-1)/2) / 2) = floor(n/4)` for every integer `n`.
pub fn floor_quarter_identity_holds(n: i64) -> bool {
    // ceil((n-1)/2) = floor(n/2) for integers.
    let lhs = n.div_euclid(2).div_euclid(2);
    lhs == n.div_euclid(4)
}

/// `floor((m+2)/4) + floor((n+2)/4) >= floor((m+n)/4)` for positive `m`, `n`.
pub fn superadditivity_holds(m: u64, n: u64) -> bool {
    (m + 2) / 4 + (n + 2) / 4 >= (m + n) / 4
}

/// The run shape `b^i a b^j a b^k` of a word with exactly two `a`s.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoARunShape {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl TwoARunShape {
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        TwoARunShape { i, j, k }
    }

    /// The denoted word, zero-exponent runs elided.
    pub fn word(&self) -> Word {
        word_from_exponents(&[
            (Letter::B, self.i),
            (Letter::A, 1),
            (Letter::B, self.j),
            (Letter::A, 1),
            (Letter::B, self.k),
        ])
    }
}

/// Split of `theta(b^i a b^j a b^k)` into trivial squares and squares
/// containing both `a`s.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoADecomposition {
    /// Trivial squares `b^{2m}`: bounded by the longest `b` run.
    pub trivial: usize,
    /// Squares of the form `b^x a b^j a b^z` spanning both `a`s.
    pub spanning: usize,
    pub theta: usize,
}

/// Count `theta` of a two-`a` word from its run shape alone: the trivial
/// part is `max(floor(i/2), floor(j/2), floor(k/2))` and the spanning part
/// is the number of pairs `(x, z)` with `0 <= x <= i`, `0 <= z <= k`,
/// `x + z = j (mod 2)` and `|x - z| <= j`.
pub fn two_a_decomposition(shape: TwoARunShape) -> TwoADecomposition {
    let TwoARunShape { i, j, k } = shape;
    let trivial = (i / 2).max(j / 2).max(k / 2);
    let mut spanning = 0usize;
    for x in 0..=i {
        for z in 0..=k {
            if (x + z) % 2 == j % 2 && x.abs_diff(z) <= j {
                spanning += 1;
            }
        }
    }
    TwoADecomposition { trivial, spanning, theta: trivial + spanning }
}

fn b_a_b_a(m: usize, n: usize) -> Word {
    word_from_exponents(&[
        (Letter::B, m),
        (Letter::A, 1),
        (Letter::B, n - m - 2),
        (Letter::A, 1),
    ])
}

fn b_aaa_b(left: usize, right: usize) -> Word {
    word_from_exponents(&[(Letter::B, left), (Letter::A, 3), (Letter::B, right)])
}

fn sorted_dedup(mut words: Vec<Word>) -> Vec<Word> {
    words.sort();
    words.dedup();
    words
}

/// The complete family of words attaining `M(x, n)`, for the characterized
/// ranges: `x = 1` (n >= 1), `x = 2` (n >= 3) and `x = 3` (n >= 10; smaller
/// lengths have ad-hoc extra minimizers and are left to brute force).
/// The returned set is closed under reversal and sorted.
///
/// A word with one `a` is `b^i a b^j` and has theta exactly
/// `floor(max(i, j) / 2)` (all its squares are `b` powers inside the longer
/// run), so the `x = 1` family is every split whose longer run reaches but
/// does not exceed the floor: when `floor(n/2)` is even this admits
/// `max(i, j) = floor(n/2) + 1` as well, not only the balanced split.
pub fn extremal_words(x: usize, n: usize) -> Result<Vec<Word>, FormsError> {
    match x {
        1 => {
            if n < 1 {
                return Err(FormsError::LengthTooSmall { x, n, min_n: 1 });
            }
            let min = n / 4;
            let words = (0..n)
                .filter(|&i| (i.max(n - 1 - i)) / 2 == min)
                .map(|i| {
                    word_from_exponents(&[
                        (Letter::B, i),
                        (Letter::A, 1),
                        (Letter::B, n - 1 - i),
                    ])
                })
                .collect();
            Ok(sorted_dedup(words))
        }
        2 => {
            if n < 3 {
                return Err(FormsError::LengthTooSmall { x, n, min_n: 3 });
            }
            let mut words = Vec::new();
            for m in 0..=n - 2 {
                if (n - m).is_multiple_of(2) {
                    continue;
                }
                if m >= (n - 1) / 2 && m % 2 == 0 {
                    continue;
                }
                let word = b_a_b_a(m, n);
                words.push(word.reverse());
                words.push(word);
            }
            Ok(sorted_dedup(words))
        }
        3 => {
            if n < 10 {
                return Err(FormsError::NoExtremalFamily { x, n });
            }
            let shapes: Vec<(usize, usize)> = match n % 4 {
                0 => vec![((n - 4) / 2, (n - 2) / 2), ((n - 2) / 2, (n - 4) / 2)],
                1 => vec![((n - 3) / 2, (n - 3) / 2)],
                2 => vec![
                    ((n - 6) / 2, n / 2),
                    (n / 2, (n - 6) / 2),
                    ((n - 2) / 2, (n - 4) / 2),
                    ((n - 4) / 2, (n - 2) / 2),
                ],
                _ => vec![
                    ((n - 3) / 2, (n - 3) / 2),
                    ((n - 1) / 2, (n - 5) / 2),
                    ((n - 5) / 2, (n - 1) / 2),
                ],
            };
            Ok(sorted_dedup(
                shapes.into_iter().map(|(l, r)| b_aaa_b(l, r)).collect(),
            ))
        }
        _ => Err(FormsError::NoExtremalFamily { x, n }),
    }
}

/// The effective partition `e(n) = [p, q]`: `p + q = n`, `q` odd, `q > p`,
/// `q` minimal. Closed form `q = 2*floor((n+2)/4) + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EffectivePartition {
    pub p: usize,
    pub q: usize,
}

/// Compute `e(n)` for `n >= 3`. The definition requires positive parts and
/// so `n >= 4`; `n = 3` is admitted as a formula extension with `p = 0`,
/// which the effective-word builder needs for three-letter counts.
pub fn effective_partition(n: usize) -> Result<EffectivePartition, FormsError> {
    if n < 3 {
        return Err(FormsError::PartitionTooSmall(n));
    }
    let q = 2 * ((n + 2) / 4) + 1;
    Ok(EffectivePartition { p: n - q, q })
}

/// The effective word `a^h b^i a^j b^k` for `x` letters `a` and `y` letters
/// `b`, where `[h, j] = e(x)` and `[k, i] = e(y)`. Zero-length outer runs
/// (from the `n = 3` extension) are elided.
pub fn effective_word(x: usize, y: usize) -> Result<Word, FormsError> {
    for count in [x, y] {
        if count < 3 {
            return Err(FormsError::EffectiveCountTooSmall(count));
        }
    }
    let ex = effective_partition(x)?;
    let ey = effective_partition(y)?;
    Ok(word_from_exponents(&[
        (Letter::A, ex.p),
        (Letter::B, ey.q),
        (Letter::A, ex.q),
        (Letter::B, ey.p),
    ]))
}

/// `theta` of the effective word: `floor((x+2)/4) + floor((y+2)/4)`.
pub fn theta_effective(x: usize, y: usize) -> Result<usize, FormsError> {
    for count in [x, y] {
        if count < 3 {
            return Err(FormsError::EffectiveCountTooSmall(count));
        }
    }
    Ok((x + 2) / 4 + (y + 2) / 4)
}

/// Whether `(x, n)` is a boundary Parikh class, i.e. one covered by the
/// exact closed forms rather than the interior conjecture.
pub fn is_boundary(x: usize, n: usize) -> bool {
    x <= 3 || n < x || n - x <= 3
}

/// Conjectured minimum for interior classes (`4 <= x <= n - 4`):
/// `floor(q_a/2) + floor(q_b/2)` over the odd parts of `e(x)` and `e(n-x)`,
/// which equals `floor((x+2)/4) + floor((n-x+2)/4)`.
pub fn conjectured_min(x: usize, n: usize) -> Result<usize, FormsError> {
    if x > n {
        return Err(FormsError::CountExceedsLength { x, n });
    }
    if is_boundary(x, n) {
        return Err(FormsError::BoundaryClass { x, n });
    }
    let qa = effective_partition(x)?.q;
    let qb = effective_partition(n - x)?.q;
    Ok(qa / 2 + qb / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::census;
    use crate::word::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn literals(words: &[Word]) -> Vec<String> {
        words.iter().map(|v| v.to_literal()).collect()
    }

    #[test]
    fn fici_saarela_bound_values() {
        assert_eq!(fici_saarela_bound(18), 4);
        assert_eq!(fici_saarela_bound(3), 0);
        assert_eq!(fici_saarela_bound(8), 2);
    }

    #[test]
    fn min_theta_examples() {
        assert_eq!(min_theta(2, 11), Ok(4));
        assert_eq!(min_theta(3, 13), Ok(3));
        assert_eq!(min_theta(1, 18), Ok(4));
        assert_eq!(min_theta(2, 2), Ok(1));
        assert_eq!(min_theta(0, 7), Ok(3));
        // Complementation: requesting n - x <= 3 works.
        assert_eq!(min_theta(16, 18), Ok(8));
        assert_eq!(min_theta(18, 18), Ok(9));
    }

    #[test]
    fn min_theta_rejects_interior_classes() {
        assert_eq!(min_theta(4, 18), Err(FormsError::NoClosedForm { x: 4, n: 18 }));
        assert_eq!(min_theta(9, 18), Err(FormsError::NoClosedForm { x: 9, n: 18 }));
        assert!(min_theta(5, 4).is_err());
    }

    #[test]
    fn identity_spot_checks() {
        for n in [7i64, 8, 1] {
            assert!(floor_quarter_identity_holds(n));
        }
    }

    #[test]
    fn superadditivity_spot_checks() {
        assert!(superadditivity_holds(1, 1));
        assert!(superadditivity_holds(2, 2));
        assert!(superadditivity_holds(3, 3));
    }

    #[test]
    fn two_a_decomposition_examples() {
        let d = two_a_decomposition(TwoARunShape::new(2, 3, 1));
        assert_eq!((d.trivial, d.spanning, d.theta), (1, 3, 4));
        assert_eq!(census(&TwoARunShape::new(2, 3, 1).word()).theta, 4);

        let d = two_a_decomposition(TwoARunShape::new(0, 0, 0));
        assert_eq!((d.trivial, d.spanning, d.theta), (0, 1, 1));

        let d = two_a_decomposition(TwoARunShape::new(0, 1, 0));
        assert_eq!((d.trivial, d.spanning, d.theta), (0, 0, 0));
    }

    #[test]
    fn two_a_shape_words() {
        assert_eq!(TwoARunShape::new(2, 3, 1).word(), w("bbabbbab"));
        assert_eq!(TwoARunShape::new(0, 0, 0).word(), w("aa"));
        assert_eq!(TwoARunShape::new(5, 0, 5).word(), w("b^5aab^5"));
    }

    #[test]
    fn extremal_words_one_a() {
        // floor(n/2) odd: only the near-balanced splits.
        assert_eq!(literals(&extremal_words(1, 6).unwrap()), vec!["bbabbb", "bbbabb"]);
        assert_eq!(literals(&extremal_words(1, 7).unwrap()), vec!["bbbabbb"]);
        // floor(n/2) even: one longer run reaches the same floor.
        assert_eq!(
            literals(&extremal_words(1, 5).unwrap()),
            vec!["babbb", "bbabb", "bbbab"]
        );
        assert_eq!(
            literals(&extremal_words(1, 4).unwrap()),
            vec!["abbb", "babb", "bbab", "bbba"]
        );
        assert_eq!(literals(&extremal_words(1, 1).unwrap()), vec!["a"]);
    }

    #[test]
    fn extremal_words_two_a_match_known_rows() {
        assert_eq!(
            literals(&extremal_words(2, 6).unwrap()),
            vec!["ababbb", "abbbab", "babbba", "bbbaba"]
        );
        assert_eq!(literals(&extremal_words(2, 5).unwrap()), vec!["abbba"]);
        assert_eq!(literals(&extremal_words(2, 4).unwrap()), vec!["abab", "baba"]);
        assert_eq!(literals(&extremal_words(2, 3).unwrap()), vec!["aba"]);
    }

    #[test]
    fn extremal_words_three_a_by_residue() {
        assert_eq!(
            literals(&extremal_words(3, 11).unwrap()),
            vec!["bbbaaabbbbb", "bbbbaaabbbb", "bbbbbaaabbb"]
        );
        assert_eq!(
            literals(&extremal_words(3, 12).unwrap()),
            vec!["bbbbaaabbbbb", "bbbbbaaabbbb"]
        );
        assert_eq!(literals(&extremal_words(3, 13).unwrap()), vec!["bbbbbaaabbbbb"]);
        assert_eq!(
            literals(&extremal_words(3, 10).unwrap()),
            vec!["bbaaabbbbb", "bbbaaabbbb", "bbbbaaabbb", "bbbbbaaabb"]
        );
    }

    #[test]
    fn extremal_words_rejections() {
        assert!(extremal_words(3, 9).is_err());
        assert!(extremal_words(0, 5).is_err());
        assert!(extremal_words(4, 20).is_err());
        assert!(extremal_words(2, 2).is_err());
    }

    #[test]
    fn effective_partition_examples() {
        assert_eq!(effective_partition(10), Ok(EffectivePartition { p: 3, q: 7 }));
        assert_eq!(effective_partition(4), Ok(EffectivePartition { p: 1, q: 3 }));
        assert_eq!(effective_partition(3), Ok(EffectivePartition { p: 0, q: 3 }));
        assert!(effective_partition(2).is_err());
    }

    #[test]
    fn effective_word_examples() {
        assert_eq!(effective_word(5, 13).unwrap(), w("a^2b^7a^3b^6"));
        assert_eq!(effective_word(15, 3).unwrap(), w("a^6b^3a^9"));
        // [h,j] = e(4) = [1,3], [k,i] = e(14) = [5,9].
        assert_eq!(effective_word(4, 14).unwrap(), w("ab^9a^3b^5"));
        assert!(effective_word(2, 5).is_err());
    }

    #[test]
    fn theta_effective_examples() {
        assert_eq!(theta_effective(5, 13), Ok(4));
        assert_eq!(theta_effective(9, 9), Ok(4));
        assert_eq!(theta_effective(4, 4), Ok(2));
        assert_eq!(census(&effective_word(4, 4).unwrap()).theta, 2);
    }

    #[test]
    fn conjectured_min_examples() {
        assert_eq!(conjectured_min(5, 18), Ok(4));
        assert_eq!(conjectured_min(6, 18), Ok(5));
        assert_eq!(conjectured_min(9, 18), Ok(4));
        assert_eq!(
            conjectured_min(16, 18),
            Err(FormsError::BoundaryClass { x: 16, n: 18 })
        );
        assert!(conjectured_min(3, 18).is_err());
    }

    #[test]
    fn boundary_classification() {
        for x in [0, 1, 2, 3, 15, 16, 17, 18] {
            assert!(is_boundary(x, 18), "x = {x}");
        }
        for x in 4..=14 {
            assert!(!is_boundary(x, 18), "x = {x}");
        }
    }
}
