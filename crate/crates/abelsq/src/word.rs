//! Binary words over `{a, b}`: parsing, formatting, Parikh arithmetic and the
//! three counting-invariant symmetries (complement, reverse, conjugate).

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Guard against accidentally expanding a run-length expression like `b^10000000000`
/// into an unusable amount of memory.
pub const MAX_PARSE_LEN: usize = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("invalid character {0:?}: words use the alphabet {{a, b}}")]
    InvalidCharacter(char),
    #[error("exponent must be a positive decimal integer")]
    InvalidExponent,
    #[error("'^' must directly follow a letter and be followed by an exponent")]
    DanglingCaret,
    #[error("expanded word length exceeds the {MAX_PARSE_LEN}-letter parser limit")]
    TooLong,
    #[error("split index {split} out of range for a word of length {len}")]
    SplitOutOfRange { split: usize, len: usize },
    #[error("adjacent runs must have different letters")]
    NonAlternatingRuns,
    #[error("run exponents must be positive")]
    EmptyRun,
}

/// One of the two letters of the binary alphabet. Ordered `A < B`, which makes
/// derived word comparison lexicographic in the usual sense.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    /// The other letter.
    pub fn complement(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            _ => None,
        }
    }
}

/// Letter counts `[|w|_a, |w|_b]` of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParikhVector {
    pub count_a: usize,
    pub count_b: usize,
}

impl ParikhVector {
    pub fn new(count_a: usize, count_b: usize) -> Self {
        ParikhVector { count_a, count_b }
    }

    /// Total length of any word with this Parikh vector.
    pub fn len(&self) -> usize {
        self.count_a + self.count_b
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Counts with the letter roles swapped.
    pub fn swapped(&self) -> ParikhVector {
        ParikhVector { count_a: self.count_b, count_b: self.count_a }
    }
}

impl fmt::Display for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.count_a, self.count_b)
    }
}

/// An immutable finite binary word. Positions are 1-based in user-facing
/// contexts (`w[1..n]`); slices use ordinary 0-based indexing internally.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    /// `letter` repeated `count` times.
    pub fn repeated(letter: Letter, count: usize) -> Self {
        Word { letters: vec![letter; count] }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Letter> {
        self.letters.iter()
    }

    pub fn parikh(&self) -> ParikhVector {
        let count_a = self.letters.iter().filter(|&&l| l == Letter::A).count();
        ParikhVector { count_a, count_b: self.letters.len() - count_a }
    }

    /// Letterwise swap of `a` and `b`.
    pub fn complement(&self) -> Word {
        Word { letters: self.letters.iter().map(|l| l.complement()).collect() }
    }

    /// The word written backwards.
    pub fn reverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().copied().collect() }
    }

    /// Rotation `vu` of `w = uv` with `|u| = split`.
    pub fn conjugate(&self, split: usize) -> Result<Word, WordError> {
        if split > self.len() {
            return Err(WordError::SplitOutOfRange { split, len: self.len() });
        }
        let mut letters = Vec::with_capacity(self.len());
        letters.extend_from_slice(&self.letters[split..]);
        letters.extend_from_slice(&self.letters[..split]);
        Ok(Word { letters })
    }

    /// Maximal-run decomposition of the word.
    pub fn runs(&self) -> RunEncoding {
        let mut runs: Vec<(Letter, usize)> = Vec::new();
        for &l in &self.letters {
            match runs.last_mut() {
                Some((letter, exponent)) if *letter == l => *exponent += 1,
                _ => runs.push((l, 1)),
            }
        }
        RunEncoding { runs }
    }

    /// Length of the longest run of `letter` (0 if the letter is absent).
    pub fn max_run(&self, letter: Letter) -> usize {
        self.runs()
            .runs()
            .iter()
            .filter(|(l, _)| *l == letter)
            .map(|(_, e)| *e)
            .max()
            .unwrap_or(0)
    }

    /// The word as a plain `a`/`b` string.
    pub fn to_literal(&self) -> String {
        self.letters.iter().map(|l| l.as_char()).collect()
    }

    /// Run-length style, `^` omitted for exponent 1: `bbabbbab` -> `b^2ab^3ab`.
    pub fn to_run_string(&self) -> String {
        let mut out = String::new();
        for (letter, exponent) in self.runs().runs() {
            out.push(letter.as_char());
            if *exponent > 1 {
                out.push('^');
                out.push_str(&exponent.to_string());
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_literal())
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_literal())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_word(&s).map_err(D::Error::custom)
    }
}

/// Alternating run-length form of a word: `[(b,2),(a,1),(b,3)]` denotes
/// `b^2 a b^3`. Validated so that `decode` is a bijection onto words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunEncoding {
    runs: Vec<(Letter, usize)>,
}

impl RunEncoding {
    pub fn new(runs: Vec<(Letter, usize)>) -> Result<Self, WordError> {
        for window in runs.windows(2) {
            if window[0].0 == window[1].0 {
                return Err(WordError::NonAlternatingRuns);
            }
        }
        if runs.iter().any(|(_, e)| *e == 0) {
            return Err(WordError::EmptyRun);
        }
        Ok(RunEncoding { runs })
    }

    pub fn runs(&self) -> &[(Letter, usize)] {
        &self.runs
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Expand back into an explicit word.
    pub fn decode(&self) -> Word {
        let total: usize = self.runs.iter().map(|(_, e)| e).sum();
        let mut letters = Vec::with_capacity(total);
        for (letter, exponent) in &self.runs {
            letters.extend(std::iter::repeat_n(*letter, *exponent));
        }
        Word { letters }
    }
}

/// Convenience for building words like `b^i a b^j a b^k`; zero exponents are
/// elided rather than rejected.
pub fn word_from_exponents(parts: &[(Letter, usize)]) -> Word {
    let total: usize = parts.iter().map(|(_, e)| e).sum();
    let mut letters = Vec::with_capacity(total);
    for (letter, exponent) in parts {
        letters.extend(std::iter::repeat_n(*letter, *exponent));
    }
    Word { letters }
}

/// Parse either a literal `a`/`b` string or a run-length expression such as
/// `b^9ab^8`. Whitespace may separate tokens; `x^k` expands to `k` copies of
/// `x` and exponents must be positive.
pub fn parse_word(text: &str) -> Result<Word, WordError> {
    let mut letters = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c.is_whitespace() {
            continue;
        }
        let letter = match Letter::from_char(c) {
            Some(l) => l,
            None if c == '^' => return Err(WordError::DanglingCaret),
            None => return Err(WordError::InvalidCharacter(c)),
        };
        let exponent = if chars.peek() == Some(&'^') {
            chars.next();
            let mut digits = String::new();
            while let Some(d) = chars.peek() {
                if d.is_ascii_digit() {
                    digits.push(*d);
                    chars.next();
                } else {
                    break;
                }
            }
            if digits.is_empty() {
                return Err(WordError::DanglingCaret);
            }
            let exponent: usize = digits.parse().map_err(|_| WordError::InvalidExponent)?;
            if exponent == 0 {
                return Err(WordError::InvalidExponent);
            }
            exponent
        } else {
            1
        };
        if letters.len() + exponent > MAX_PARSE_LEN {
            return Err(WordError::TooLong);
        }
        letters.extend(std::iter::repeat_n(letter, exponent));
    }
    Ok(Word { letters })
}
