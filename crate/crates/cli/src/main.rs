//! Command-line front end: search a file, benchmark the matchers, or
//! generate a seeded random corpus.
//!
//! Exit status: 0 on success (including searches with no matches), 1 on
//! usage errors, 2 on I/O errors.

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use abelian::bench::{
    render_table, run_benchmark, BenchAlgo, BenchConfig, BenchError, RenderFormat,
};
use abelian::corpus::{generate_random, load_text, CorpusError, CorpusSpec};
use abelian::engine::{resolve_algorithm, search, AlgorithmId, SearchRequest};

#[derive(Parser)]
#[command(name = "abelian", version, about = "Abelian (jumbled) pattern matching tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find all windows of a text that are permutations of a pattern.
    Search(SearchArgs),
    /// Time the matchers over a grid of pattern lengths.
    Bench(BenchArgs),
    /// Write a seeded uniform random corpus to a file.
    Gen(GenArgs),
}

#[derive(Args)]
struct SearchArgs {
    /// Pattern, taken as the raw bytes of the argument.
    #[arg(long, required_unless_present = "pattern_file", conflicts_with = "pattern_file")]
    pattern: Option<String>,
    /// Read the pattern from a file instead (raw bytes, for patterns that
    /// cannot be typed in a shell).
    #[arg(long)]
    pattern_file: Option<PathBuf>,
    /// File holding the text to search (raw bytes).
    #[arg(long)]
    text_file: PathBuf,
    /// Algorithm to run.
    #[arg(long, default_value = "auto", value_parser = AlgorithmId::from_str)]
    algo: AlgorithmId,
    /// Print a JSON object with positions and work counters instead of
    /// one position per line.
    #[arg(long)]
    json: bool,
    /// Print 1-based positions (default is 0-based).
    #[arg(long)]
    one_based: bool,
    /// Search the text as-is instead of reducing non-pattern bytes to a
    /// sentinel first.
    #[arg(long)]
    no_reduce: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Benchmark corpus file (raw bytes).
    #[arg(long, required_unless_present = "random", conflicts_with = "random")]
    text_file: Option<PathBuf>,
    /// Generate the corpus instead: <n>:<sigma> random bytes.
    #[arg(long, value_parser = parse_random)]
    random: Option<RandomSpec>,
    /// Pattern lengths to measure.
    #[arg(long, value_delimiter = ',', default_value = "2,4,8,16,32,64,128,256")]
    lengths: Vec<usize>,
    /// Searches per (algorithm, length) cell, each with a freshly
    /// extracted pattern.
    #[arg(long, default_value_t = abelian::bench::DEFAULT_RUNS)]
    runs: usize,
    /// Algorithms to measure; known unimplemented competitors (gfg, efs,
    /// bam, ebl, ea) render as unavailable rows.
    #[arg(
        long,
        value_delimiter = ',',
        value_parser = BenchAlgo::from_str,
        default_value = "wm,hcam,bhcam,hfam,bhfam"
    )]
    algos: Vec<BenchAlgo>,
    /// Seed for corpus generation and pattern extraction.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output format.
    #[arg(long, default_value = "text", value_parser = RenderFormat::from_str)]
    format: RenderFormat,
}

#[derive(Args)]
struct GenArgs {
    /// Corpus length in bytes.
    #[arg(long)]
    n: usize,
    /// Alphabet size; bytes are drawn uniformly from 0..sigma.
    #[arg(long)]
    sigma: usize,
    /// Generator seed.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output file.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy)]
struct RandomSpec {
    n: usize,
    sigma: usize,
}

fn parse_random(s: &str) -> Result<RandomSpec, String> {
    let (n, sigma) = s
        .split_once(':')
        .ok_or_else(|| format!("expected <n>:<sigma>, got `{s}`"))?;
    let n = n.parse().map_err(|_| format!("invalid corpus length `{n}`"))?;
    let sigma = sigma.parse().map_err(|_| format!("invalid alphabet size `{sigma}`"))?;
    Ok(RandomSpec { n, sigma })
}

enum CliError {
    Usage(String),
    Io(String),
    /// The stdout consumer went away mid-write (`abelian search ... | head`).
    /// Treated as success with no diagnostics, Unix style.
    ClosedPipe,
}

fn read_bytes(path: &Path) -> Result<Vec<u8>, CliError> {
    load_text(path).map_err(|err| CliError::Io(err.to_string()))
}

fn stdout_error(err: io::Error) -> CliError {
    if err.kind() == io::ErrorKind::BrokenPipe {
        CliError::ClosedPipe
    } else {
        CliError::Io(format!("cannot write to stdout: {err}"))
    }
}

fn run_search(args: &SearchArgs) -> Result<(), CliError> {
    let pattern = match (&args.pattern, &args.pattern_file) {
        (Some(inline), None) => inline.clone().into_bytes(),
        (None, Some(path)) => read_bytes(path)?,
        _ => unreachable!("clap enforces exactly one pattern source"),
    };
    let text = read_bytes(&args.text_file)?;
    let report = search(&SearchRequest {
        pattern: &pattern,
        text: &text,
        algorithm: args.algo,
        instrument: args.json,
        reduce_alphabet: !args.no_reduce,
    });
    let base = usize::from(args.one_based);
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    if args.json {
        let positions: Vec<usize> = report.positions.iter().map(|&s| s + base).collect();
        let counters = report.counters.map(|c| {
            serde_json::json!({
                "inspections": c.inspections,
                "candidates": c.candidates,
                "verified_rejections": c.verified_rejections,
            })
        });
        let object = serde_json::json!({
            "algorithm": resolve_algorithm(args.algo, &pattern).name(),
            "pattern_length": pattern.len(),
            "text_length": text.len(),
            "positions": positions,
            "counters": counters,
        });
        writeln!(out, "{object}").map_err(stdout_error)?;
    } else {
        for &s in &report.positions {
            writeln!(out, "{}", s + base).map_err(stdout_error)?;
        }
    }
    out.flush().map_err(stdout_error)
}

fn run_bench(args: &BenchArgs) -> Result<(), CliError> {
    let corpus = match (&args.text_file, args.random) {
        (Some(path), None) => CorpusSpec::File { path: path.clone() },
        (None, Some(RandomSpec { n, sigma })) => CorpusSpec::Random { n, sigma, seed: args.seed },
        _ => unreachable!("clap enforces exactly one corpus source"),
    };
    let config = BenchConfig {
        corpus,
        lengths: args.lengths.clone(),
        runs: args.runs,
        algorithms: args.algos.clone(),
        seed: args.seed,
    };
    let table = run_benchmark(&config).map_err(|err| match err {
        BenchError::Corpus(CorpusError::Io { .. }) => CliError::Io(err.to_string()),
        _ => CliError::Usage(err.to_string()),
    })?;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    write!(out, "{}", render_table(&table, args.format)).map_err(stdout_error)?;
    out.flush().map_err(stdout_error)
}

fn run_gen(args: &GenArgs) -> Result<(), CliError> {
    let corpus = generate_random(args.n, args.sigma, args.seed)
        .map_err(|err| CliError::Usage(err.to_string()))?;
    std::fs::write(&args.out, corpus)
        .map_err(|err| CliError::Io(format!("cannot write {}: {err}", args.out.display())))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are successes; anything else is a
            // usage error.
            let code = u8::from(err.use_stderr());
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Search(args) => run_search(args),
        Command::Bench(args) => run_bench(args),
        Command::Gen(args) => run_gen(args),
    };
    match result {
        Ok(()) | Err(CliError::ClosedPipe) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
