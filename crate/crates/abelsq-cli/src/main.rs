use std::fs::File;
use std::io::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use abelsq::closed_forms::{effective_word, fici_saarela_bound, theta_effective};
use abelsq::counting;
use abelsq::search::{
    min_over_parikh, verify_closed_forms, verify_effective, verify_fici_saarela,
    verify_identities, verify_section5, verify_two_a, write_csv_rows, CacheRecord,
    MinimizationResult, ResultCache, SearchOptions,
};
use abelsq::tables::{self, TableId};
use abelsq::word::parse_word;

use abelsq_cli::{
    minimize_csv, minimize_text, CountPayload, EffectivePayload, TableRowOut, TablesPayload,
    VerifyPayload,
};

const EXIT_VERIFIED: i32 = 0;
const EXIT_COUNTEREXAMPLE: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "abelsq",
    version,
    about = "Count abelian squares in binary words, find per-class minima and verify the bounds"
)]
struct Cli {
    /// Output format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (defaults to available parallelism).
    #[arg(long, global = true, env = "ABELSQ_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Count the distinct abelian squares of a word.
    Count {
        /// The word, literal (`abaab`) or run-length (`b^9ab^8`).
        word: String,
        /// List the factor set, one factor per line.
        #[arg(long)]
        factors: bool,
        /// List every (start, half_length) occurrence.
        #[arg(long, conflicts_with = "circular")]
        occurrences: bool,
        /// Count over circular factors instead.
        #[arg(long)]
        circular: bool,
    },
    /// Exhaustively minimize theta over the words with `x` letters `a` and
    /// length `n`.
    Minimize {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        x: usize,
        /// JSONL result cache for resumable runs.
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Evaluate every word instead of symmetry representatives.
        #[arg(long)]
        no_symmetry: bool,
        /// Run even if the class exceeds the word budget.
        #[arg(long)]
        force: bool,
    },
    /// Recompute a reference minimum table (1, 2 or 3) by brute force.
    Tables {
        which: u8,
        /// Compare against the embedded golden values; exit 1 on mismatch.
        #[arg(long)]
        diff: bool,
    },
    /// Run a verification sweep; exit 0 iff the claim holds in range.
    Verify {
        target: VerifyTarget,
        /// Maximum word length for the conjecture/closed-form sweeps.
        #[arg(long, default_value_t = 24)]
        nmax: usize,
        /// Run-exponent bound for the two_a sweep.
        #[arg(long, default_value_t = 12)]
        bounds: usize,
        /// Letter-count bound for the effective sweep.
        #[arg(long, default_value_t = 40)]
        max: usize,
        /// Write per-class CSV rows to this file.
        #[arg(long)]
        report: Option<PathBuf>,
        /// JSONL result cache; per-class sweeps resume past solved classes.
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Evaluate every word instead of symmetry representatives.
        #[arg(long)]
        no_symmetry: bool,
        /// Run even if a class exceeds the word budget.
        #[arg(long)]
        force: bool,
    },
    /// Build the effective word for `x` letters `a` and `y` letters `b`.
    Effective { x: usize, y: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyTarget {
    #[value(name = "fici_saarela")]
    FiciSaarela,
    #[value(name = "extended")]
    Extended,
    #[value(name = "section5")]
    Section5,
    #[value(name = "closed_forms")]
    ClosedForms,
    #[value(name = "two_a")]
    TwoA,
    #[value(name = "effective")]
    Effective,
    #[value(name = "identities")]
    Identities,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(EXIT_USAGE);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    let options = SearchOptions {
        threads: cli.threads.unwrap_or(0),
        ..SearchOptions::default()
    };
    match cli.command {
        Command::Count { word, factors, occurrences, circular } => {
            cmd_count(&word, factors, occurrences, circular, cli.format)
        }
        Command::Minimize { n, x, cache, no_symmetry, force } => {
            let options = SearchOptions { use_symmetry: !no_symmetry, force, ..options };
            cmd_minimize(n, x, cache, &options, cli.format)
        }
        Command::Tables { which, diff } => cmd_tables(which, diff, &options, cli.format),
        Command::Verify { target, nmax, bounds, max, report, cache, no_symmetry, force } => {
            let options = SearchOptions { use_symmetry: !no_symmetry, force, ..options };
            cmd_verify(target, nmax, bounds, max, report, cache, &options, cli.format)
        }
        Command::Effective { x, y } => cmd_effective(x, y),
    }
}

fn print_json<T: serde::Serialize>(payload: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(payload)?);
    Ok(())
}

fn cmd_count(
    word_text: &str,
    factors: bool,
    occurrences: bool,
    circular: bool,
    format: Format,
) -> Result<i32> {
    let word = parse_word(word_text).with_context(|| format!("cannot parse {word_text:?}"))?;
    let factor_set = if circular {
        counting::circular_abelian_squares(&word)
    } else {
        counting::distinct_abelian_squares(&word)
    };
    let payload = CountPayload {
        word: word.to_literal(),
        length: word.len(),
        circular,
        census: factor_set.census(),
        factors: factors
            .then(|| factor_set.members().iter().map(|m| m.to_literal()).collect()),
        occurrences: occurrences.then(|| counting::occurrences(&word)),
    };
    match format {
        Format::Text => print!("{}", payload.render_text()),
        Format::Json => print_json(&payload)?,
        Format::Csv => print!("{}", payload.render_csv()),
        Format::Md => print!("{}", payload.render_md()),
    }
    Ok(EXIT_VERIFIED)
}

fn cmd_minimize(
    n: usize,
    x: usize,
    cache_path: Option<PathBuf>,
    options: &SearchOptions,
    format: Format,
) -> Result<i32> {
    let mut cache = match &cache_path {
        Some(path) => {
            let cache = ResultCache::open(path)
                .with_context(|| format!("cannot open cache {}", path.display()))?;
            for warning in cache.warnings() {
                eprintln!("warning: {warning}");
            }
            Some(cache)
        }
        None => None,
    };

    let (result, cache_hit) = match cache.as_ref().and_then(|c| c.get(n, x)) {
        Some(record) => (record.clone().into_result(), true),
        None => {
            let result = min_over_parikh(x, n, options)?;
            if let Some(cache) = cache.as_mut() {
                cache.store(CacheRecord::from_result(&result))?;
            }
            (result, false)
        }
    };
    if cache_hit {
        eprintln!("cache hit for (n={n}, x={x})");
    }

    let record = CacheRecord::from_result(&result);
    match format {
        Format::Text => print!("{}", minimize_text(&result, cache_hit)),
        Format::Json => print_json(&record)?,
        Format::Csv => print!("{}", minimize_csv(&record)),
        Format::Md => {
            println!("| n | x | min | minimizers |");
            println!("|---|---|---|---|");
            println!(
                "| {} | {} | {} | {} |",
                record.n,
                record.x,
                record.min_theta,
                record
                    .minimizers
                    .iter()
                    .map(|w| w.to_literal())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }
    }
    Ok(EXIT_VERIFIED)
}

fn table_rows(table: TableId, results: &[MinimizationResult]) -> Vec<TableRowOut> {
    match table {
        TableId::One | TableId::Two => results
            .iter()
            .map(|r| TableRowOut {
                n: r.n,
                x: r.x,
                min_theta: r.min_theta,
                minimizers: Some(r.minimizers.iter().map(|w| w.to_literal()).collect()),
                sample: None,
                sample_theta: None,
            })
            .collect(),
        TableId::Three => results
            .iter()
            .zip(tables::TABLE_3)
            .map(|(r, spec)| {
                let checked = parse_word(spec.checked_sample).expect("golden sample");
                TableRowOut {
                    n: r.n,
                    x: r.x,
                    min_theta: r.min_theta,
                    minimizers: None,
                    sample: Some(spec.sample.to_string()),
                    sample_theta: Some(counting::census(&checked).theta),
                }
            })
            .collect(),
    }
}

fn cmd_tables(which: u8, diff: bool, options: &SearchOptions, format: Format) -> Result<i32> {
    let table = TableId::from_number(which)
        .with_context(|| format!("no table {which}; expected 1, 2 or 3"))?;
    let started = Instant::now();
    let results = tables::reproduce(table, options)?;
    let diff_result = if diff { Some(tables::diff(table, options)?) } else { None };
    eprintln!(
        "table {} recomputed in {} ms",
        table.number(),
        started.elapsed().as_millis()
    );

    let payload = TablesPayload {
        table: table.number(),
        rows: table_rows(table, &results),
        diff: diff_result,
    };
    match format {
        Format::Text => print!("{}", payload.render_text()),
        Format::Json => print_json(&payload)?,
        Format::Csv => print!("{}", payload.render_csv()),
        Format::Md => print!("{}", payload.render_md()),
    }
    let clean = payload.diff.as_ref().is_none_or(|d| d.clean());
    Ok(if clean { EXIT_VERIFIED } else { EXIT_COUNTEREXAMPLE })
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    target: VerifyTarget,
    nmax: usize,
    bounds: usize,
    max: usize,
    report_path: Option<PathBuf>,
    cache_path: Option<PathBuf>,
    options: &SearchOptions,
    format: Format,
) -> Result<i32> {
    let mut cache = match &cache_path {
        Some(path) => {
            if !matches!(target, VerifyTarget::Section5 | VerifyTarget::ClosedForms) {
                eprintln!("warning: --cache only applies to the section5 and closed_forms sweeps");
                None
            } else {
                let cache = ResultCache::open(path)
                    .with_context(|| format!("cannot open cache {}", path.display()))?;
                for warning in cache.warnings() {
                    eprintln!("warning: {warning}");
                }
                eprintln!("cache: {} classes loaded", cache.len());
                Some(cache)
            }
        }
        None => None,
    };

    let started = Instant::now();
    let payload = match target {
        VerifyTarget::FiciSaarela => {
            VerifyPayload::from_fici(verify_fici_saarela(nmax, options)?, false)
        }
        VerifyTarget::Extended => {
            VerifyPayload::from_fici(verify_fici_saarela(nmax, options)?, true)
        }
        VerifyTarget::Section5 => {
            VerifyPayload::Section5(verify_section5(nmax, options, cache.as_mut())?)
        }
        VerifyTarget::ClosedForms => {
            VerifyPayload::ClosedForms(verify_closed_forms(nmax, options, cache.as_mut())?)
        }
        VerifyTarget::TwoA => VerifyPayload::TwoA(verify_two_a(bounds, bounds, bounds)),
        VerifyTarget::Effective => VerifyPayload::Effective(verify_effective(max)?),
        VerifyTarget::Identities => VerifyPayload::Identities(verify_identities()),
    };
    if let Some(cache) = &cache {
        eprintln!("cache: {} classes stored", cache.len());
    }
    eprintln!("verification finished in {} ms", started.elapsed().as_millis());

    if let Some(path) = report_path {
        let mut file = File::create(&path)
            .with_context(|| format!("cannot create report {}", path.display()))?;
        match payload.rows() {
            Some(rows) => write_csv_rows(rows, &mut file)?,
            None => file.write_all(payload.render_csv().as_bytes())?,
        }
        eprintln!("report written to {}", path.display());
    }

    match format {
        Format::Text | Format::Md => print!("{}", payload.render_text()),
        Format::Json => print_json(&payload)?,
        Format::Csv => print!("{}", payload.render_csv()),
    }
    Ok(if payload.verified() { EXIT_VERIFIED } else { EXIT_COUNTEREXAMPLE })
}

fn cmd_effective(x: usize, y: usize) -> Result<i32> {
    let word = effective_word(x, y)?;
    let expected = theta_effective(x, y)?;
    let theta = counting::census(&word).theta;
    let bound = fici_saarela_bound(x + y);
    let mut notes = Vec::new();
    for (count, letter) in [(x, 'a'), (y, 'b')] {
        if count == 3 {
            notes.push(format!(
                "count {count} of letter {letter} uses the formula extension of the \
                 effective partition (zero-length outer run)"
            ));
        }
    }
    let payload = EffectivePayload {
        x,
        y,
        word: word.to_run_string(),
        word_literal: word.to_literal(),
        theta,
        theta_effective: expected,
        fici_saarela_bound: bound,
        meets_bound: theta >= bound,
        notes,
    };
    // This command always answers with a single JSON object.
    print_json(&payload)?;
    Ok(EXIT_VERIFIED)
}
