//! Counting abelian squares in binary words.
//!
//! An abelian square is a word `uv` where `v` is a rearrangement of `u`
//! (equal Parikh vectors). This crate provides:
//!
//! - [`word`]: the binary word model, run-length codec and symmetries;
//! - [`counting`]: exact enumeration and counting of distinct abelian-square
//!   factors in linear and circular words;
//! - [`closed_forms`]: closed-form minimum counts `M(x, n)` for boundary
//!   Parikh classes, extremal-word families, effective partitions/words and
//!   the conjectured interior bounds;
//! - [`search`]: an exhaustive, symmetry-pruned engine computing true minima
//!   and sweeping the conjectures, with a resumable JSONL result cache;
//! - [`tables`]: golden copies of the reference minimum tables and
//!   brute-force diffing against them.

pub mod closed_forms;
pub mod counting;
pub mod search;
pub mod tables;
pub mod word;

pub use counting::{census, distinct_abelian_squares, is_abelian_square, SquareCensus};
pub use search::{min_over_parikh, MinimizationResult, SearchOptions};
pub use word::{parse_word, Letter, ParikhVector, Word};
