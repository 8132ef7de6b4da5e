use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, ValueEnum};
use coincide_core::engine::{evaluate_batch_sequential, PairQuery};
use coincide_core::frontend::{emit_report, parse_query_file, Format, Outcome, Report};
use coincide_core::tables::HomotopyTables;

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

/// Decide looseness and Nielsen numbers for pairs of maps S^m -> N.
#[derive(Debug, Parser)]
#[command(name = "coincide", version)]
struct Args {
    /// Query file (JSON); standard input when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Report format; overrides the file's options.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Include the full rule trace in the report.
    #[arg(long)]
    trace: bool,
    /// Homotopy table file to use instead of the bundled one.
    #[arg(long)]
    tables: Option<PathBuf>,
    /// Evaluate the batch on all cores.
    #[arg(long)]
    batch_parallel: bool,
}

const EXIT_VALIDATION: u8 = 1;
const EXIT_INCONSISTENCY: u8 = 2;

fn read_input(path: Option<&PathBuf>) -> Result<Vec<u8>> {
    match path {
        Some(p) => std::fs::read(p).with_context(|| format!("cannot read {}", p.display())),
        None => {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf).context("cannot read standard input")?;
            Ok(buf)
        }
    }
}

#[cfg(feature = "parallel")]
fn evaluate(queries: &[PairQuery], tables: &HomotopyTables, parallel: bool) -> Vec<Result<coincide_core::engine::Verdict, coincide_core::engine::EngineError>> {
    if parallel {
        coincide_core::engine::evaluate_batch_parallel(queries, tables)
    } else {
        evaluate_batch_sequential(queries, tables)
    }
}

#[cfg(not(feature = "parallel"))]
fn evaluate(queries: &[PairQuery], tables: &HomotopyTables, parallel: bool) -> Vec<Result<coincide_core::engine::Verdict, coincide_core::engine::EngineError>> {
    if parallel {
        eprintln!("coincide: built without the `parallel` feature, evaluating sequentially");
    }
    evaluate_batch_sequential(queries, tables)
}

fn run(args: Args) -> Result<ExitCode> {
    let owned;
    let tables = match &args.tables {
        Some(path) => {
            owned = HomotopyTables::from_path(path).with_context(|| format!("invalid table file {}", path.display()))?;
            &owned
        }
        None => HomotopyTables::bundled(),
    };
    let bytes = read_input(args.input.as_ref())?;
    let file = match parse_query_file(&bytes, tables) {
        Ok(f) => f,
        Err(diagnostics) => {
            for d in &diagnostics.0 {
                eprintln!("coincide: {d}");
            }
            return Ok(ExitCode::from(EXIT_VALIDATION));
        }
    };
    let mut options = file.options.clone();
    options.trace |= args.trace;
    if let Some(f) = args.format {
        options.format = match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        };
    }
    let results = evaluate(&file.queries, tables, args.batch_parallel);
    let outcomes = file.queries.iter().zip(results).map(|(q, r)| Outcome::new(q.id.clone(), r)).collect();
    let report = Report::new(outcomes);
    let mut stdout = std::io::stdout().lock();
    stdout.write_all(emit_report(&report, &options).as_bytes()).context("cannot write the report")?;
    stdout.flush()?;
    Ok(if report.has_inconsistency() { ExitCode::from(EXIT_INCONSISTENCY) } else { ExitCode::SUCCESS })
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("coincide: {e:#}");
            ExitCode::from(EXIT_VALIDATION)
        }
    }
}
