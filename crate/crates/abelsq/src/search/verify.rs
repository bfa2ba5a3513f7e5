//! Exhaustive verification of the closed forms, the two-`a` decomposition,
//! the effective-word theorem, the arithmetic identities, and the
//! lower-bound conjectures (with tightness bookkeeping).

use std::collections::BTreeMap;
use std::io;

use serde::{Deserialize, Serialize};

use crate::closed_forms::{
    self, conjectured_min, effective_word, extremal_words, fici_saarela_bound,
    floor_quarter_identity_holds, min_theta, superadditivity_holds, theta_effective, BoundKind,
    FormsError, TwoADecomposition, TwoARunShape,
};
use crate::counting;
use crate::word::Word;

use super::engine::{
    complement_mask, is_canonical, mask_to_word, min_over_parikh_cached, orbit, partition_work,
    run_on_pool, SearchOptions, ThetaCounter, WorkChunk,
};
use super::SearchError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureId {
    FiciSaarela,
    Extended,
    Section5,
}

impl std::fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ConjectureId::FiciSaarela => "fici_saarela",
            ConjectureId::Extended => "extended",
            ConjectureId::Section5 => "section5",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Counterexample,
}

/// Lengths a sweep covered, inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthRange {
    pub from: usize,
    pub to: usize,
}

/// A word that beats (or, for tightness-style claims, meets without
/// satisfying) the claimed bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub word: Word,
    pub theta: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub conjecture_id: ConjectureId,
    pub range: LengthRange,
    pub verdict: Verdict,
    pub counterexamples: Vec<Counterexample>,
    /// Number of equality instances seen: words for the length-wise
    /// conjectures, Parikh classes for the per-class one.
    pub tight_cases: u64,
}

impl ConjectureReport {
    fn new(
        conjecture_id: ConjectureId,
        range: LengthRange,
        mut counterexamples: Vec<Counterexample>,
        tight_cases: u64,
    ) -> Self {
        counterexamples.sort_by(|a, b| {
            (a.word.len(), &a.word).cmp(&(b.word.len(), &b.word))
        });
        counterexamples.dedup();
        let verdict = if counterexamples.is_empty() {
            Verdict::Holds
        } else {
            Verdict::Counterexample
        };
        ConjectureReport { conjecture_id, range, verdict, counterexamples, tight_cases }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// One `(n, x)` class line of a report file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    pub n: usize,
    pub x: usize,
    pub min_theta: usize,
    pub bound: usize,
    pub kind: BoundKind,
    pub tight: bool,
}

/// Write rows in the report-file format: a `n,x,min_theta,bound,kind,tight`
/// header followed by one CSV line per class.
pub fn write_csv_rows<W: io::Write>(rows: &[ClassRow], mut out: W) -> io::Result<()> {
    writeln!(out, "n,x,min_theta,bound,kind,tight")?;
    for row in rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            row.n, row.x, row.min_theta, row.bound, row.kind, row.tight
        )?;
    }
    Ok(())
}

/// Outcome of the length-wise conjecture sweep: the plain lower bound and
/// the extended tightness claim, plus per-class minima.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiciSweep {
    pub base: ConjectureReport,
    pub extended: ConjectureReport,
    pub rows: Vec<ClassRow>,
    pub words_examined: u64,
}

#[derive(Default)]
struct FiciClassScan {
    min_theta: Option<usize>,
    tight_words: u64,
    base_violations: Vec<(u64, usize)>,
    ext_violations: Vec<(u64, usize)>,
    examined: u64,
}

fn scan_chunk_fici(
    chunk: &WorkChunk,
    bound: usize,
    prune: bool,
    with_complement: bool,
) -> FiciClassScan {
    let mut counter = ThetaCounter::new();
    let mut scan = FiciClassScan::default();
    let n = chunk.n;
    for mask in chunk.masks() {
        if prune && !is_canonical(mask, n, with_complement) {
            continue;
        }
        scan.examined += 1;
        let theta = counter.theta(mask, n);
        let weight = if prune { orbit(mask, n, with_complement).len() as u64 } else { 1 };
        if scan.min_theta.is_none_or(|m| theta < m) {
            scan.min_theta = Some(theta);
        }
        if theta < bound {
            scan.base_violations.push((mask, theta));
        } else if theta == bound {
            scan.tight_words += weight;
            if !counter.last_members_all_trivial() {
                scan.ext_violations.push((mask, theta));
            }
        }
    }
    scan
}

/// For every word of length `1..=n_max` (modulo reversal/complement
/// symmetry), check `theta >= floor(n/4)`, and for every equality case check
/// that all abelian squares present are trivial. Both claims are reported
/// independently; per-class minima are returned as report rows.
pub fn verify_fici_saarela(
    n_max: usize,
    options: &SearchOptions,
) -> Result<FiciSweep, SearchError> {
    let threads = options.effective_threads();
    let prune = options.use_symmetry;
    let mut rows = Vec::new();
    let mut base_counterexamples = Vec::new();
    let mut ext_counterexamples = Vec::new();
    let mut tight_cases = 0u64;
    let mut words_examined = 0u64;

    for n in 1..=n_max {
        let bound = fici_saarela_bound(n);
        let mut class_minima: BTreeMap<usize, usize> = BTreeMap::new();
        for x in 0..=n / 2 {
            let class_size = super::engine::binomial(n, x);
            if !options.force && class_size > options.budget as u128 {
                return Err(SearchError::BudgetExceeded {
                    x,
                    n,
                    words: class_size,
                    budget: options.budget,
                });
            }
            let with_complement = prune && 2 * x == n;
            let chunk_count = if threads > 1 { threads * 4 } else { 1 };
            let chunks = partition_work(x, n, chunk_count)?;
            let scans = run_on_pool(threads, &chunks, |chunk| {
                scan_chunk_fici(chunk, bound, prune, with_complement)
            });

            let mirror = x != n - x;
            let mut class_min: Option<usize> = None;
            for scan in scans {
                words_examined += scan.examined;
                if let Some(m) = scan.min_theta {
                    class_min = Some(class_min.map_or(m, |c: usize| c.min(m)));
                }
                tight_cases += scan.tight_words * if mirror { 2 } else { 1 };
                for (violations, out) in [
                    (&scan.base_violations, &mut base_counterexamples),
                    (&scan.ext_violations, &mut ext_counterexamples),
                ] {
                    for &(mask, theta) in violations {
                        let in_class = if prune {
                            orbit(mask, n, with_complement)
                        } else {
                            vec![mask]
                        };
                        for member in in_class {
                            if mirror {
                                out.push(Counterexample {
                                    word: mask_to_word(complement_mask(member, n), n),
                                    theta,
                                    bound,
                                });
                            }
                            out.push(Counterexample {
                                word: mask_to_word(member, n),
                                theta,
                                bound,
                            });
                        }
                    }
                }
            }
            class_minima.insert(x, class_min.expect("non-empty class"));
        }
        for x in 0..=n {
            let min = class_minima[&x.min(n - x)];
            rows.push(ClassRow {
                n,
                x,
                min_theta: min,
                bound,
                kind: BoundKind::FiciSaarela,
                tight: min == bound,
            });
        }
    }

    let range = LengthRange { from: 1, to: n_max };
    Ok(FiciSweep {
        base: ConjectureReport::new(
            ConjectureId::FiciSaarela,
            range,
            base_counterexamples,
            tight_cases,
        ),
        extended: ConjectureReport::new(
            ConjectureId::Extended,
            range,
            ext_counterexamples,
            tight_cases,
        ),
        rows,
        words_examined,
    })
}

/// Outcome of the interior-class conjecture sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section5Outcome {
    pub report: ConjectureReport,
    pub rows: Vec<ClassRow>,
}

/// For every non-boundary class (`4 <= x <= n-4`, `n <= n_max`), check that
/// the exact minimum is at least the conjectured bound and record tightness
/// per class. `tight_cases` counts classes here. A cache makes interrupted
/// sweeps resume past already-solved classes.
pub fn verify_section5(
    n_max: usize,
    options: &SearchOptions,
    mut cache: Option<&mut super::ResultCache>,
) -> Result<Section5Outcome, SearchError> {
    let mut rows = Vec::new();
    let mut counterexamples = Vec::new();
    let mut tight_classes = 0u64;

    for n in 8..=n_max {
        let mut minima: BTreeMap<usize, (usize, Vec<Word>)> = BTreeMap::new();
        for x in 4..=n / 2 {
            let result = min_over_parikh_cached(x, n, options, cache.as_deref_mut())?;
            minima.insert(x, (result.min_theta, result.minimizers));
        }
        for x in 4..=n - 4 {
            let (min, minimizers) = &minima[&x.min(n - x)];
            let bound = conjectured_min(x, n)?;
            let tight = *min == bound;
            if tight {
                tight_classes += 1;
            }
            if *min < bound {
                for word in minimizers {
                    let word = if x <= n / 2 { word.clone() } else { word.complement() };
                    counterexamples.push(Counterexample { word, theta: *min, bound });
                }
            }
            rows.push(ClassRow {
                n,
                x,
                min_theta: *min,
                bound,
                kind: BoundKind::ConjecturedMin,
                tight,
            });
        }
    }

    let range = LengthRange { from: 8.min(n_max), to: n_max };
    Ok(Section5Outcome {
        report: ConjectureReport::new(ConjectureId::Section5, range, counterexamples, tight_classes),
        rows,
    })
}

/// One closed-form comparison: brute-force minimum (and minimizer set where
/// the family is characterized) against the formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormCheck {
    pub x: usize,
    pub n: usize,
    pub expected_min: usize,
    pub computed_min: usize,
    pub expected_family: Option<Vec<Word>>,
    pub computed_minimizers: Vec<Word>,
}

impl ClosedFormCheck {
    pub fn passed(&self) -> bool {
        self.expected_min == self.computed_min
            && self
                .expected_family
                .as_ref()
                .is_none_or(|f| *f == self.computed_minimizers)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormOutcome {
    pub checks: Vec<ClosedFormCheck>,
    pub mismatches: usize,
    pub rows: Vec<ClassRow>,
}

impl ClosedFormOutcome {
    pub fn all_match(&self) -> bool {
        self.mismatches == 0
    }
}

/// Compare `M(x, n)` closed forms (x <= 3) against brute force for all valid
/// `n <= n_max`, and the characterized extremal families against brute-force
/// minimizer sets.
pub fn verify_closed_forms(
    n_max: usize,
    options: &SearchOptions,
    mut cache: Option<&mut super::ResultCache>,
) -> Result<ClosedFormOutcome, SearchError> {
    let mut checks = Vec::new();
    let mut rows = Vec::new();
    for x in 0..=3usize {
        for n in x.max(1)..=n_max {
            let expected = min_theta(x, n)?;
            let result = min_over_parikh_cached(x, n, options, cache.as_deref_mut())?;
            let family_known = match x {
                1 => true,
                2 => n >= 3,
                3 => n >= 10,
                _ => false,
            };
            let expected_family = if family_known { Some(extremal_words(x, n)?) } else { None };
            let check = ClosedFormCheck {
                x,
                n,
                expected_min: expected,
                computed_min: result.min_theta,
                expected_family,
                computed_minimizers: result.minimizers,
            };
            rows.push(ClassRow {
                n,
                x,
                min_theta: result.min_theta,
                bound: expected,
                kind: BoundKind::ExactM,
                tight: result.min_theta == expected,
            });
            checks.push(check);
        }
    }
    let mismatches = checks.iter().filter(|c| !c.passed()).count();
    Ok(ClosedFormOutcome { checks, mismatches, rows })
}

/// A run shape whose formula count disagrees with the brute-force census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoAMismatch {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub formula_theta: usize,
    pub formula_spanning: usize,
    pub oracle_theta: usize,
    pub oracle_spanning: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoAOutcome {
    pub shapes_checked: u64,
    pub mismatches: Vec<TwoAMismatch>,
}

impl TwoAOutcome {
    pub fn all_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// For every shape `b^i a b^j a b^k` within the bounds, check that the
/// `S0 + S2` decomposition equals the census theta and that `S2` equals the
/// number of distinct square factors containing both `a`s.
pub fn verify_two_a(i_max: usize, j_max: usize, k_max: usize) -> TwoAOutcome {
    let mut shapes_checked = 0u64;
    let mut mismatches = Vec::new();
    for i in 0..=i_max {
        for j in 0..=j_max {
            for k in 0..=k_max {
                shapes_checked += 1;
                let shape = TwoARunShape::new(i, j, k);
                let TwoADecomposition { spanning, theta, .. } =
                    closed_forms::two_a_decomposition(shape);
                let factors = counting::distinct_abelian_squares(&shape.word());
                let oracle_theta = factors.len();
                let oracle_spanning = factors
                    .members()
                    .iter()
                    .filter(|m| m.parikh().count_a == 2)
                    .count();
                if theta != oracle_theta || spanning != oracle_spanning {
                    mismatches.push(TwoAMismatch {
                        i,
                        j,
                        k,
                        formula_theta: theta,
                        formula_spanning: spanning,
                        oracle_theta,
                        oracle_spanning,
                    });
                }
            }
        }
    }
    TwoAOutcome { shapes_checked, mismatches }
}

/// One effective-word check. Failing any clause lands the record in the
/// outcome's failure list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EffectiveCheck {
    pub x: usize,
    pub y: usize,
    pub word: Word,
    pub theta: usize,
    pub expected_theta: usize,
    pub only_trivial: bool,
    pub meets_floor_bound: bool,
}

impl EffectiveCheck {
    pub fn passed(&self) -> bool {
        self.theta == self.expected_theta && self.only_trivial && self.meets_floor_bound
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EffectiveOutcome {
    pub checked: u64,
    pub failures: Vec<EffectiveCheck>,
}

impl EffectiveOutcome {
    pub fn all_match(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For all `4 <= x, y <= max`: the effective word contains only trivial
/// abelian squares, has exactly `floor((x+2)/4) + floor((y+2)/4)` of them,
/// and that count is at least `floor((x+y)/4)`.
pub fn verify_effective(max: usize) -> Result<EffectiveOutcome, FormsError> {
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for x in 4..=max {
        for y in 4..=max {
            checked += 1;
            let word = effective_word(x, y)?;
            let census = counting::census(&word);
            let check = EffectiveCheck {
                x,
                y,
                theta: census.theta,
                expected_theta: theta_effective(x, y)?,
                only_trivial: census.nontrivial == 0,
                meets_floor_bound: census.theta >= fici_saarela_bound(x + y),
                word,
            };
            if !check.passed() {
                failures.push(check);
            }
        }
    }
    Ok(EffectiveOutcome { checked, failures })
}

/// Outcome of the fixed-range arithmetic identity checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityOutcome {
    pub identity_checked: u64,
    pub identity_failures: Vec<i64>,
    pub lemma_checked: u64,
    pub lemma_failures: Vec<(u64, u64)>,
}

impl IdentityOutcome {
    pub fn holds(&self) -> bool {
        self.identity_failures.is_empty() && self.lemma_failures.is_empty()
    }
}

/// Check the floor/ceiling identity over `-100..=100` and superadditivity
/// over `1..=200` squared.
pub fn verify_identities() -> IdentityOutcome {
    let mut outcome = IdentityOutcome {
        identity_checked: 0,
        identity_failures: Vec::new(),
        lemma_checked: 0,
        lemma_failures: Vec::new(),
    };
    for n in -100i64..=100 {
        outcome.identity_checked += 1;
        if !floor_quarter_identity_holds(n) {
            outcome.identity_failures.push(n);
        }
    }
    for m in 1u64..=200 {
        for n in 1u64..=200 {
            outcome.lemma_checked += 1;
            if !superadditivity_holds(m, n) {
                outcome.lemma_failures.push((m, n));
            }
        }
    }
    outcome
}
