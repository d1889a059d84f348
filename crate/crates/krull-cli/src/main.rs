//! The `krull` binary: analyze | counterexample | corpus.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use krull_core::monoid::MonoidError;

use krull_cli::corpus::{CorpusSummary, MAX_COUNT};
use krull_cli::input::MonoidInput;
use krull_cli::report::ReportDocument;
use krull_cli::suite::SuiteReport;

/// Exit codes beyond success: usage and input parsing problems exit 2
/// (clap's own convention), unsupported dimensions 3, exceeded degree
/// bounds 4, counterexample suite failures 5, corpus contradictions 6.
const EXIT_PARSE: u8 = 2;
const EXIT_DIMENSION: u8 = 3;
const EXIT_BOUND: u8 = 4;
const EXIT_SUITE: u8 = 5;
const EXIT_CONTRADICTION: u8 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser)]
#[command(
    name = "krull",
    version,
    about = "Exact deciders for the Krull property ladder on affine monoids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one affine monoid from a JSON description
    Analyze {
        /// Path to the JSON monoid description
        #[arg(long)]
        input: PathBuf,
        /// Write the document here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Degree bound for the t-ideal classification (overrides the
        /// bound embedded in the input file)
        #[arg(long)]
        degree_bound: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the dyadic counterexample suite at a chain depth
    Counterexample {
        /// Chain depth (exponent denominators up to 2^depth)
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=16))]
        depth: u32,
        /// Write the document here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Cross-check the deciders on a seeded random monoid corpus
    Corpus {
        /// Seed for the deterministic corpus generator
        #[arg(long)]
        seed: u64,
        /// Number of monoids to generate
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=MAX_COUNT))]
        count: u64,
        /// Write the document here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), u8> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            EXIT_PARSE
        }),
    }
}

fn cmd_analyze(
    input_path: &Path,
    out: Option<&Path>,
    degree_bound: Option<i64>,
    format: Format,
) -> Result<(), u8> {
    let text = std::fs::read_to_string(input_path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", input_path.display());
        EXIT_PARSE
    })?;
    let mut input = MonoidInput::parse(&text).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_PARSE
    })?;
    if degree_bound.is_some() {
        input.degree_bound = degree_bound;
    }
    let monoid = input.to_monoid().map_err(|e| {
        eprintln!("error: {e}");
        match e {
            MonoidError::UnsupportedDimension { .. } => EXIT_DIMENSION,
            _ => EXIT_PARSE,
        }
    })?;
    // classify t-ideals up front so an exhausted bound or budget becomes
    // a clean exit instead of an "unsupported" verdict buried in the report
    let bound = input.bound();
    match krull_core::monoid::properties::t_prime_flags(&monoid, bound.as_ref()) {
        Err(MonoidError::BoundExceeded { bound }) => {
            eprintln!("error: degree bound {bound} exceeded during t-ideal classification");
            return Err(EXIT_BOUND);
        }
        Err(e @ MonoidError::BudgetExceeded { .. }) => {
            eprintln!("error: {e}");
            return Err(EXIT_BOUND);
        }
        _ => {}
    }
    let document = ReportDocument::build(&input, &monoid);
    let rendered = match format {
        Format::Json => document.to_json(),
        Format::Text => document.to_text(),
    };
    write_output(out, &rendered)
}

fn cmd_counterexample(depth: u32, out: Option<&Path>, format: Format) -> Result<(), u8> {
    let report = SuiteReport::run(depth);
    let rendered = match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    write_output(out, &rendered)?;
    if report.passed {
        Ok(())
    } else {
        eprintln!("error: counterexample suite failed at depth {depth}");
        Err(EXIT_SUITE)
    }
}

fn cmd_corpus(seed: u64, count: usize, out: Option<&Path>, format: Format) -> Result<(), u8> {
    let summary = CorpusSummary::run(seed, count);
    let rendered = match format {
        Format::Json => summary.to_json(),
        Format::Text => summary.to_text(),
    };
    write_output(out, &rendered)?;
    if summary.has_contradiction() {
        eprintln!(
            "error: decider and oracle contradict on entries {:?}",
            summary.contradictions
        );
        Err(EXIT_CONTRADICTION)
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let result = match &cli.command {
        Command::Analyze {
            input,
            out,
            degree_bound,
            format,
        } => cmd_analyze(input, out.as_deref(), *degree_bound, *format),
        Command::Counterexample { depth, out, format } => {
            cmd_counterexample(*depth, out.as_deref(), *format)
        }
        Command::Corpus {
            seed,
            count,
            out,
            format,
        } => cmd_corpus(*seed, *count as usize, out.as_deref(), *format),
    };
    eprintln!("elapsed: {} ms", started.elapsed().as_millis());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}
