//! Payload types and renderers shared between the `abelsq` binary and its
//! integration tests. Every command's JSON output deserializes back into the
//! type defined here.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use abelsq::counting::{Occurrence, SquareCensus};
use abelsq::search::{
    CacheRecord, ClassRow, ClosedFormOutcome, ConjectureReport, EffectiveOutcome, FiciSweep,
    IdentityOutcome, MinimizationResult, Section5Outcome, TwoAOutcome,
};
use abelsq::tables::TableDiff;

/// Output of `abelsq count`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CountPayload {
    pub word: String,
    pub length: usize,
    pub circular: bool,
    pub census: SquareCensus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub occurrences: Option<Vec<Occurrence>>,
}

impl CountPayload {
    pub fn header_line(&self) -> String {
        let c = &self.census;
        format!(
            "theta={} trivial={} nontrivial={} inequivalent={}",
            c.theta, c.trivial, c.nontrivial, c.inequivalent
        )
    }

    pub fn render_text(&self) -> String {
        let mut out = self.header_line();
        out.push('\n');
        if let Some(factors) = &self.factors {
            for f in factors {
                out.push_str(f);
                out.push('\n');
            }
        }
        if let Some(occurrences) = &self.occurrences {
            for o in occurrences {
                let _ = writeln!(out, "occurrence start={} half_length={}", o.start, o.half_length);
            }
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let c = &self.census;
        format!(
            "theta,trivial,nontrivial,inequivalent\n{},{},{},{}\n",
            c.theta, c.trivial, c.nontrivial, c.inequivalent
        )
    }

    pub fn render_md(&self) -> String {
        let c = &self.census;
        let mut out = String::from("| theta | trivial | nontrivial | inequivalent |\n|---|---|---|---|\n");
        let _ = writeln!(out, "| {} | {} | {} | {} |", c.theta, c.trivial, c.nontrivial, c.inequivalent);
        if let Some(factors) = &self.factors {
            let _ = writeln!(out, "\nfactors: {}", factors.join(" "));
        }
        out
    }
}

/// Output of `abelsq minimize`: the cache-record wire format.
pub type MinimizePayload = CacheRecord;

pub fn minimize_text(result: &MinimizationResult, cache_hit: bool) -> String {
    let mut out = format!(
        "M(x={}, n={}) = {}   [{} words examined, {} ms{}]\n",
        result.x,
        result.n,
        result.min_theta,
        result.words_examined,
        result.elapsed.as_millis(),
        if cache_hit { ", cached" } else { "" }
    );
    let _ = writeln!(
        out,
        "minimizers ({}): {}",
        result.minimizers.len(),
        result
            .minimizers
            .iter()
            .map(|w| w.to_literal())
            .collect::<Vec<_>>()
            .join(" ")
    );
    out
}

pub fn minimize_csv(record: &CacheRecord) -> String {
    format!(
        "n,x,min_theta,minimizers,words_examined,elapsed_ms\n{},{},{},{},{},{}\n",
        record.n,
        record.x,
        record.min_theta,
        record
            .minimizers
            .iter()
            .map(|w| w.to_literal())
            .collect::<Vec<_>>()
            .join(" "),
        record.words_examined,
        record.elapsed_ms
    )
}

/// One displayed table row; minimizer tables fill `minimizers`, the sample
/// table fills `sample`/`sample_theta`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableRowOut {
    pub n: usize,
    pub x: usize,
    pub min_theta: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimizers: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_theta: Option<usize>,
}

/// Output of `abelsq tables`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TablesPayload {
    pub table: u8,
    pub rows: Vec<TableRowOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diff: Option<TableDiff>,
}

impl TablesPayload {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let key = if self.table == 3 {
                format!("x={}", row.x)
            } else {
                format!("n={}", row.n)
            };
            let _ = write!(out, "{key} min={}", row.min_theta);
            if let Some(words) = &row.minimizers {
                let _ = write!(out, " words: {}", words.join(" "));
            }
            if let Some(sample) = &row.sample {
                let _ = write!(out, " sample: {sample}");
                if let Some(t) = row.sample_theta {
                    let _ = write!(out, " (theta {t})");
                }
            }
            out.push('\n');
        }
        if let Some(diff) = &self.diff {
            out.push_str(&render_diff_text(diff));
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from("n,x,min_theta,minimizers,sample,sample_theta\n");
        for row in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                row.n,
                row.x,
                row.min_theta,
                row.minimizers.as_ref().map(|w| w.join(" ")).unwrap_or_default(),
                row.sample.clone().unwrap_or_default(),
                row.sample_theta.map(|t| t.to_string()).unwrap_or_default()
            );
        }
        out
    }

    pub fn render_md(&self) -> String {
        let mut out = String::new();
        if self.table == 3 {
            out.push_str("| x | min | sample | sample theta |\n|---|---|---|---|\n");
            for row in &self.rows {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} |",
                    row.x,
                    row.min_theta,
                    row.sample.clone().unwrap_or_default(),
                    row.sample_theta.map(|t| t.to_string()).unwrap_or_default()
                );
            }
        } else {
            out.push_str("| n | min | words |\n|---|---|---|\n");
            for row in &self.rows {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} |",
                    row.n,
                    row.min_theta,
                    row.minimizers.as_ref().map(|w| w.join(" ")).unwrap_or_default()
                );
            }
        }
        if let Some(diff) = &self.diff {
            out.push_str(&render_diff_text(diff));
        }
        out
    }
}

pub fn render_diff_text(diff: &TableDiff) -> String {
    let mut out = format!(
        "diff table {}: {} rows checked, {} mismatches, {} documented misprint flags\n",
        diff.table,
        diff.rows_checked,
        diff.mismatches.len(),
        diff.misprint_flags.len()
    );
    for m in &diff.mismatches {
        let _ = writeln!(
            out,
            "mismatch {} {}: expected {} computed {}",
            m.row, m.field, m.expected, m.computed
        );
    }
    for f in &diff.misprint_flags {
        let _ = writeln!(
            out,
            "misprint {}: printed {:?}, checked {:?} ({})",
            f.row, f.printed, f.checked, f.detail
        );
    }
    out
}

/// Output of `abelsq verify`, tagged by target.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "target", rename_all = "snake_case")]
pub enum VerifyPayload {
    FiciSaarela { report: ConjectureReport, rows: Vec<ClassRow>, words_examined: u64 },
    Extended { report: ConjectureReport, rows: Vec<ClassRow>, words_examined: u64 },
    Section5(Section5Outcome),
    ClosedForms(ClosedFormOutcome),
    TwoA(TwoAOutcome),
    Effective(EffectiveOutcome),
    Identities(IdentityOutcome),
}

impl VerifyPayload {
    pub fn from_fici(sweep: FiciSweep, extended: bool) -> Self {
        if extended {
            VerifyPayload::Extended {
                report: sweep.extended,
                rows: sweep.rows,
                words_examined: sweep.words_examined,
            }
        } else {
            VerifyPayload::FiciSaarela {
                report: sweep.base,
                rows: sweep.rows,
                words_examined: sweep.words_examined,
            }
        }
    }

    /// Whether the sweep verified its claim (drives the exit code).
    pub fn verified(&self) -> bool {
        match self {
            VerifyPayload::FiciSaarela { report, .. }
            | VerifyPayload::Extended { report, .. } => report.holds(),
            VerifyPayload::Section5(outcome) => outcome.report.holds(),
            VerifyPayload::ClosedForms(outcome) => outcome.all_match(),
            VerifyPayload::TwoA(outcome) => outcome.all_match(),
            VerifyPayload::Effective(outcome) => outcome.all_match(),
            VerifyPayload::Identities(outcome) => outcome.holds(),
        }
    }

    /// Class rows, for targets that produce them.
    pub fn rows(&self) -> Option<&[ClassRow]> {
        match self {
            VerifyPayload::FiciSaarela { rows, .. } | VerifyPayload::Extended { rows, .. } => {
                Some(rows)
            }
            VerifyPayload::Section5(outcome) => Some(&outcome.rows),
            VerifyPayload::ClosedForms(outcome) => Some(&outcome.rows),
            _ => None,
        }
    }

    pub fn render_text(&self) -> String {
        match self {
            VerifyPayload::FiciSaarela { report, words_examined, .. }
            | VerifyPayload::Extended { report, words_examined, .. } => {
                let mut out = format!(
                    "target={} range={}..{} verdict={} tight_cases={} counterexamples={} words_examined={}\n",
                    report.conjecture_id,
                    report.range.from,
                    report.range.to,
                    if report.holds() { "holds" } else { "counterexample" },
                    report.tight_cases,
                    report.counterexamples.len(),
                    words_examined
                );
                for c in &report.counterexamples {
                    let _ = writeln!(
                        out,
                        "counterexample word={} theta={} bound={}",
                        c.word.to_literal(),
                        c.theta,
                        c.bound
                    );
                }
                out
            }
            VerifyPayload::Section5(outcome) => {
                let report = &outcome.report;
                let mut out = format!(
                    "target=section5 range={}..{} verdict={} tight_classes={} classes={} counterexamples={}\n",
                    report.range.from,
                    report.range.to,
                    if report.holds() { "holds" } else { "counterexample" },
                    report.tight_cases,
                    outcome.rows.len(),
                    report.counterexamples.len()
                );
                for c in &report.counterexamples {
                    let _ = writeln!(
                        out,
                        "counterexample word={} theta={} bound={}",
                        c.word.to_literal(),
                        c.theta,
                        c.bound
                    );
                }
                out
            }
            VerifyPayload::ClosedForms(outcome) => {
                let mut out = format!(
                    "target=closed_forms checks={} mismatches={}\n",
                    outcome.checks.len(),
                    outcome.mismatches
                );
                for check in outcome.checks.iter().filter(|c| !c.passed()) {
                    let _ = writeln!(
                        out,
                        "mismatch x={} n={} expected_min={} computed_min={}",
                        check.x, check.n, check.expected_min, check.computed_min
                    );
                }
                out
            }
            VerifyPayload::TwoA(outcome) => {
                let mut out = format!(
                    "target=two_a shapes_checked={} mismatches={}\n",
                    outcome.shapes_checked,
                    outcome.mismatches.len()
                );
                for m in &outcome.mismatches {
                    let _ = writeln!(
                        out,
                        "mismatch shape=({},{},{}) formula={} oracle={}",
                        m.i, m.j, m.k, m.formula_theta, m.oracle_theta
                    );
                }
                out
            }
            VerifyPayload::Effective(outcome) => {
                let mut out = format!(
                    "target=effective checked={} failures={}\n",
                    outcome.checked,
                    outcome.failures.len()
                );
                for f in &outcome.failures {
                    let _ = writeln!(
                        out,
                        "failure x={} y={} word={} theta={} expected={} only_trivial={}",
                        f.x,
                        f.y,
                        f.word.to_literal(),
                        f.theta,
                        f.expected_theta,
                        f.only_trivial
                    );
                }
                out
            }
            VerifyPayload::Identities(outcome) => format!(
                "target=identities identity_checked={} identity_failures={} lemma_checked={} lemma_failures={}\n",
                outcome.identity_checked,
                outcome.identity_failures.len(),
                outcome.lemma_checked,
                outcome.lemma_failures.len()
            ),
        }
    }

    pub fn render_csv(&self) -> String {
        if let Some(rows) = self.rows() {
            let mut buf = Vec::new();
            abelsq::search::write_csv_rows(rows, &mut buf).expect("csv into memory");
            String::from_utf8(buf).expect("csv is utf-8")
        } else {
            match self {
                VerifyPayload::TwoA(outcome) => format!(
                    "shapes_checked,mismatches\n{},{}\n",
                    outcome.shapes_checked,
                    outcome.mismatches.len()
                ),
                VerifyPayload::Effective(outcome) => format!(
                    "checked,failures\n{},{}\n",
                    outcome.checked,
                    outcome.failures.len()
                ),
                VerifyPayload::Identities(outcome) => format!(
                    "identity_checked,identity_failures,lemma_checked,lemma_failures\n{},{},{},{}\n",
                    outcome.identity_checked,
                    outcome.identity_failures.len(),
                    outcome.lemma_checked,
                    outcome.lemma_failures.len()
                ),
                _ => unreachable!("row targets handled above"),
            }
        }
    }
}

/// Output of `abelsq effective` (always emitted as a single JSON object).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EffectivePayload {
    pub x: usize,
    pub y: usize,
    /// Run-length form of the effective word.
    pub word: String,
    pub word_literal: String,
    /// Measured count of distinct abelian squares.
    pub theta: usize,
    /// Closed-form count; must equal `theta`.
    pub theta_effective: usize,
    /// `floor((x + y) / 4)`.
    pub fici_saarela_bound: usize,
    pub meets_bound: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}
