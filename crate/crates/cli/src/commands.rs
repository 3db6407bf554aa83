//! Argument definitions and subcommand drivers.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use shadows::classifier::witness_is_valid;
use shadows::oracle::{brute_force_basic_shades, ORACLE_MAX_N};
use shadows::{
    classify, enumerate_basic_shades, ClassificationRecord, EnumerationOptions, SkewIntMatrix,
};

use crate::record::OutputRecord;
use crate::render::{write_records, Format};
use crate::{CliError, Result};

pub const THREADS_ENV: &str = "SHADOWS_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "shadows",
    version,
    about = "Enumerate and classify basic shades"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the basic shades of one size, optionally classified.
    Enumerate(EnumerateArgs),
    /// Counts table of shades, shadows and essential shadows per size.
    Report(ReportArgs),
    /// Compare the enumerator with the brute-force oracle (n ≤ 4).
    Verify(VerifyArgs),
    /// Classify the matrices of a JSONL file.
    Classify(ClassifyArgs),
}

#[derive(Debug, Args)]
pub struct Threads {
    /// Worker threads; defaults to the machine's parallelism.
    #[arg(long, env = THREADS_ENV, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,
}

impl Threads {
    pub fn resolve(&self) -> usize {
        match self.threads {
            Some(k) => usize::from(k),
            None => std::thread::available_parallelism().map_or(1, |p| p.get()),
        }
    }
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    /// Decide shadow and essential status for every shade.
    #[arg(long)]
    pub classify: bool,
    /// Keep only essential shadows (implies --classify).
    #[arg(long)]
    pub essential_only: bool,
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub threads: Threads,
    /// Group as essential shadows, other shadows, non-shadows (implies
    /// --classify).
    #[arg(long)]
    pub paper_order: bool,
    /// Stop the search once the zero matrix has been emitted.
    #[arg(long)]
    pub stop_at_zero: bool,
    /// Discard row prefixes that cannot extend to a basic representative.
    #[arg(long)]
    pub prune: bool,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub threads: Threads,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Text,
    Csv,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// JSONL input: each line is a record with a `matrix` field or a bare
    /// row-major grid.
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub threads: Threads,
}

pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Enumerate(args) => enumerate(&args, stdout),
        Command::Report(args) => report(&args, stdout),
        Command::Verify(args) => verify(&args, stdout),
        Command::Classify(args) => classify_file(&args, stdout),
    }
}

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

/// Classifies in parallel, keeping input order, and re-checks every
/// witness.
fn classify_all(shades: &[SkewIntMatrix], threads: usize) -> Result<Vec<ClassificationRecord>> {
    let records: Vec<ClassificationRecord> =
        pool(threads).install(|| shades.par_iter().map(classify).collect());
    for (k, rec) in records.iter().enumerate() {
        let valid = match &rec.witness {
            Some(w) => witness_is_valid(&rec.matrix, w),
            None => !rec.is_shadow,
        };
        if !valid {
            return Err(CliError::InvalidWitness(k + 1));
        }
    }
    Ok(records)
}

fn with_output(
    out: &Option<PathBuf>,
    stdout: &mut dyn Write,
    f: impl FnOnce(&mut dyn Write) -> Result<()>,
) -> Result<()> {
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            f(&mut w)?;
            w.flush()?;
        }
        None => {
            let mut w = BufWriter::new(stdout);
            f(&mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

/// The records of one enumerate run, in output order with indices assigned.
pub fn enumerate_records(args: &EnumerateArgs) -> Result<Vec<OutputRecord>> {
    let threads = args.threads.resolve();
    let opts = EnumerationOptions::new(args.n)
        .workers(threads)
        .pruning(args.prune)
        .stop_at_zero(args.stop_at_zero);
    let shades = enumerate_basic_shades(&opts)?;
    if !(args.classify || args.essential_only || args.paper_order) {
        return Ok(shades
            .iter()
            .enumerate()
            .map(|(k, a)| OutputRecord::bare(k + 1, a))
            .collect());
    }
    let mut records = classify_all(&shades, threads)?;
    if args.essential_only {
        records.retain(|r| r.is_essential);
    }
    if args.paper_order {
        // stable, so each group stays in ⪯ order
        records.sort_by_key(|r| (!r.is_essential, !r.is_shadow));
    }
    Ok(records
        .iter()
        .enumerate()
        .map(|(k, r)| OutputRecord::classified(k + 1, r))
        .collect())
}

pub fn enumerate(args: &EnumerateArgs, stdout: &mut dyn Write) -> Result<()> {
    let records = enumerate_records(args)?;
    with_output(&args.out, stdout, |w| {
        write_records(w, &records, args.format)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportRow {
    pub n: usize,
    pub shades: usize,
    pub shadows: usize,
    pub essential: usize,
}

pub fn report_rows(max_n: usize, threads: usize) -> Result<Vec<ReportRow>> {
    (1..=max_n)
        .map(|n| {
            let opts = EnumerationOptions::new(n).workers(threads).pruning(true);
            let shades = enumerate_basic_shades(&opts)?;
            let records = classify_all(&shades, threads)?;
            Ok(ReportRow {
                n,
                shades: records.len(),
                shadows: records.iter().filter(|r| r.is_shadow).count(),
                essential: records.iter().filter(|r| r.is_essential).count(),
            })
        })
        .collect()
}

pub fn report(args: &ReportArgs, stdout: &mut dyn Write) -> Result<()> {
    let rows = report_rows(args.max_n, args.threads.resolve())?;
    with_output(&args.out, stdout, |w| {
        match args.format {
            ReportFormat::Csv => {
                writeln!(w, "n,shades,shadows,essential")?;
                for r in &rows {
                    writeln!(w, "{},{},{},{}", r.n, r.shades, r.shadows, r.essential)?;
                }
            }
            ReportFormat::Text => {
                writeln!(
                    w,
                    "{:>2}  {:>7}  {:>7}  {:>9}",
                    "n", "shades", "shadows", "essential"
                )?;
                for r in &rows {
                    writeln!(
                        w,
                        "{:>2}  {:>7}  {:>7}  {:>9}",
                        r.n, r.shades, r.shadows, r.essential
                    )?;
                }
            }
        }
        Ok(())
    })
}

pub fn verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Result<()> {
    let oracle = brute_force_basic_shades(args.n)?;
    let fast = enumerate_basic_shades(&EnumerationOptions::new(args.n))?;
    if fast.len() != oracle.len() || !fast.iter().all(|a| oracle.contains(a)) {
        return Err(CliError::OracleMismatch(args.n));
    }
    writeln!(
        stdout,
        "n = {}: {} basic shades, enumerator agrees with the brute-force oracle (limit n = {ORACLE_MAX_N})",
        args.n,
        fast.len()
    )?;
    Ok(())
}

/// Reads matrices from JSONL; blank lines are skipped.
pub fn read_matrices(reader: impl BufRead) -> Result<Vec<SkewIntMatrix>> {
    let mut out = Vec::new();
    for (k, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let bad = |message: String| CliError::Input {
            line: k + 1,
            message,
        };
        let value: serde_json::Value =
            serde_json::from_str(&line).map_err(|e| bad(e.to_string()))?;
        let grid = value.get("matrix").unwrap_or(&value);
        let rows: Vec<Vec<i64>> =
            serde_json::from_value(grid.clone()).map_err(|e| bad(format!("matrix: {e}")))?;
        out.push(SkewIntMatrix::from_rows(&rows).map_err(|e| bad(e.to_string()))?);
    }
    Ok(out)
}

pub fn classify_file(args: &ClassifyArgs, stdout: &mut dyn Write) -> Result<()> {
    let file = File::open(&args.input)?;
    let matrices = read_matrices(BufReader::new(file))?;
    let records: Vec<OutputRecord> = classify_all(&matrices, args.threads.resolve())?
        .iter()
        .enumerate()
        .map(|(k, r)| OutputRecord::classified(k + 1, r))
        .collect();
    with_output(&args.out, stdout, |w| {
        write_records(w, &records, args.format)
    })
}
