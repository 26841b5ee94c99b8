//! Benchmark harness: time every requested algorithm over a grid of
//! pattern lengths and render the results in the classic three-group
//! table layout.
//!
//! Protocol, per `(algorithm, length)` cell: extract `runs` patterns of
//! that length from the corpus (a fresh pattern per run, deterministic in
//! the seed), run one full search per pattern on a monotonic clock with
//! profile construction inside the timed region, and record the mean and
//! population standard deviation in hundredths of a second. Work counters
//! come from a second, untimed instrumented pass so the timed run stays
//! unperturbed. The timing loop is strictly sequential on one thread.
//!
//! The same seed produces the same patterns for every algorithm, so the
//! per-cell occurrence totals double as a cheap cross-algorithm
//! correctness check. The final speed-up row compares the best
//! heap-counting matcher against the best baseline per column; positive
//! percentages mean the new matchers were slower.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::corpus::{extract_patterns, CorpusError, CorpusSpec};
use crate::engine::{search, AlgorithmId, SearchRequest};

/// Pattern lengths benchmarked by default: doubling from 2 to 256.
pub const DEFAULT_LENGTHS: [usize; 8] = [2, 4, 8, 16, 32, 64, 128, 256];

/// Default repetitions per cell: desk scale, well under the thousand-run
/// protocol the layout comes from; raise it for publishable numbers.
pub const DEFAULT_RUNS: usize = 200;

/// Unit of every reported time: hundredths of a second.
pub const TIME_UNIT: &str = "cs";

/// Well-known competitor algorithms not implemented here. Requesting one
/// adds an explicitly unavailable row rather than silently dropping it,
/// keeping rendered tables shape-compatible with published ones.
pub const EXTERNAL_ALGORITHMS: [&str; 5] = ["gfg", "efs", "bam", "ebl", "ea"];

/// Odd 64-bit multiplier (golden-ratio constant) mixing the pattern
/// length into the seed, so per-length pattern streams are decorrelated.
const SEED_MIX: u64 = 0x9E37_79B9_7F4A_7C15;

/// A benchmarkable algorithm: one of ours, or a known external name that
/// renders as unavailable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BenchAlgo {
    Implemented(AlgorithmId),
    External(&'static str),
}

impl BenchAlgo {
    pub fn name(&self) -> &str {
        match self {
            BenchAlgo::Implemented(id) => id.name(),
            BenchAlgo::External(name) => name,
        }
    }
}

impl fmt::Display for BenchAlgo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Rejected benchmark algorithm name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseBenchAlgoError {
    name: String,
}

impl fmt::Display for ParseBenchAlgoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown benchmark algorithm `{}`; expected an implemented algorithm \
             (oracle, wm, hcam, bhcam, hfam, bhfam, auto) or a known external one \
             (gfg, efs, bam, ebl, ea)",
            self.name
        )
    }
}

impl std::error::Error for ParseBenchAlgoError {}

impl FromStr for BenchAlgo {
    type Err = ParseBenchAlgoError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(id) = s.parse::<AlgorithmId>() {
            return Ok(BenchAlgo::Implemented(id));
        }
        EXTERNAL_ALGORITHMS
            .iter()
            .find(|&&name| name == s)
            .map(|&name| BenchAlgo::External(name))
            .ok_or_else(|| ParseBenchAlgoError { name: s.to_string() })
    }
}

/// What to benchmark: corpus, pattern lengths, repetitions, algorithms,
/// and the seed driving pattern extraction.
#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub corpus: CorpusSpec,
    pub lengths: Vec<usize>,
    pub runs: usize,
    pub algorithms: Vec<BenchAlgo>,
    pub seed: u64,
}

impl BenchConfig {
    /// Table-shaped defaults: doubling lengths 2..=256, 200 runs, every
    /// implemented matcher except the brute-force oracle (which is
    /// quadratic and only interesting on request).
    pub fn new(corpus: CorpusSpec, seed: u64) -> Self {
        BenchConfig {
            corpus,
            lengths: DEFAULT_LENGTHS.to_vec(),
            runs: DEFAULT_RUNS,
            algorithms: [
                AlgorithmId::Wm,
                AlgorithmId::Hcam,
                AlgorithmId::Bhcam,
                AlgorithmId::Hfam,
                AlgorithmId::Bhfam,
            ]
            .map(BenchAlgo::Implemented)
            .to_vec(),
            seed,
        }
    }
}

/// One measured cell of the table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchCell {
    /// Mean search time over the runs, hundredths of a second.
    pub mean_cs: f64,
    /// Population standard deviation of the run times, same unit.
    pub stddev_cs: f64,
    /// Mean inspected bytes per run; `None` for the oracle, which has no
    /// instrumented form.
    pub mean_inspections: Option<f64>,
    /// Mean fingerprint candidates per run; `None` for the oracle.
    pub mean_candidates: Option<f64>,
    /// Total occurrences reported across all runs. Identical across
    /// algorithms for the same corpus and seed.
    pub occurrences: u64,
}

/// One algorithm's row: a cell per length, `None` where unavailable
/// (external algorithm, or pattern longer than the corpus).
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub algorithm: BenchAlgo,
    pub cells: Vec<Option<BenchCell>>,
}

/// The full grid plus the derived speed-up row.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchTable {
    pub lengths: Vec<usize>,
    pub rows: Vec<BenchRow>,
    /// Per length: `100 * (best_new - best_baseline) / best_baseline`,
    /// where the new family is the heap and byte-sum matchers and the
    /// baselines are everything else. Positive means the new matchers
    /// were slower. `None` where either side has no measured cell.
    pub speedup_row: Vec<Option<f64>>,
}

/// Failures configuring or provisioning a benchmark.
#[derive(Debug)]
pub enum BenchError {
    Config(&'static str),
    Corpus(CorpusError),
}

impl fmt::Display for BenchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BenchError::Config(msg) => write!(f, "invalid benchmark configuration: {msg}"),
            BenchError::Corpus(err) => err.fmt(f),
        }
    }
}

impl std::error::Error for BenchError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            BenchError::Corpus(err) => Some(err),
            BenchError::Config(_) => None,
        }
    }
}

impl From<CorpusError> for BenchError {
    fn from(err: CorpusError) -> Self {
        BenchError::Corpus(err)
    }
}

/// Runs the whole grid. Lengths exceeding the corpus produce unavailable
/// cells, not errors.
pub fn run_benchmark(config: &BenchConfig) -> Result<BenchTable, BenchError> {
    if config.lengths.is_empty() {
        return Err(BenchError::Config("lengths must be nonempty"));
    }
    if config.lengths.contains(&0) {
        return Err(BenchError::Config("pattern lengths must be at least 1"));
    }
    if config.runs == 0 {
        return Err(BenchError::Config("runs must be at least 1"));
    }
    let text = config.corpus.materialize()?;
    let rows = config
        .algorithms
        .iter()
        .map(|algo| BenchRow {
            algorithm: algo.clone(),
            cells: match algo {
                BenchAlgo::External(_) => vec![None; config.lengths.len()],
                BenchAlgo::Implemented(id) => config
                    .lengths
                    .iter()
                    .map(|&m| run_cell(*id, &text, m, config))
                    .collect(),
            },
        })
        .collect::<Vec<_>>();
    let speedup_row = compute_speedup_row(&rows, config.lengths.len());
    Ok(BenchTable {
        lengths: config.lengths.clone(),
        rows,
        speedup_row,
    })
}

fn run_cell(id: AlgorithmId, text: &[u8], m: usize, config: &BenchConfig) -> Option<BenchCell> {
    if m > text.len() {
        return None;
    }
    let pattern_seed = config.seed ^ (m as u64).wrapping_mul(SEED_MIX);
    let patterns =
        extract_patterns(text, m, config.runs, pattern_seed).expect("length checked above");
    let mut times_cs = Vec::with_capacity(config.runs);
    let mut occurrences = 0u64;
    let mut inspections = 0u64;
    let mut candidates = 0u64;
    for pattern in &patterns {
        let request = SearchRequest {
            pattern,
            text,
            algorithm: id,
            instrument: false,
            reduce_alphabet: false,
        };
        let started = Instant::now();
        let report = search(&request);
        times_cs.push(started.elapsed().as_secs_f64() * 100.0);
        occurrences += report.positions.len() as u64;

        if id != AlgorithmId::Oracle {
            let counted = search(&SearchRequest {
                instrument: true,
                ..request
            });
            let c = counted.counters.expect("instrumented non-oracle search");
            inspections += c.inspections;
            candidates += c.candidates;
        }
    }
    let (mean_cs, stddev_cs) = mean_and_stddev(&times_cs);
    let runs = config.runs as f64;
    let (mean_inspections, mean_candidates) = if id == AlgorithmId::Oracle {
        (None, None)
    } else {
        (Some(inspections as f64 / runs), Some(candidates as f64 / runs))
    };
    Some(BenchCell {
        mean_cs,
        stddev_cs,
        mean_inspections,
        mean_candidates,
        occurrences,
    })
}

fn mean_and_stddev(samples: &[f64]) -> (f64, f64) {
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let variance = samples.iter().map(|t| (t - mean) * (t - mean)).sum::<f64>() / n;
    (mean, variance.sqrt())
}

fn is_new_family(algo: &BenchAlgo) -> bool {
    matches!(
        algo,
        BenchAlgo::Implemented(
            AlgorithmId::Hcam | AlgorithmId::Bhcam | AlgorithmId::Hfam | AlgorithmId::Bhfam
        )
    )
}

/// Recomputes the speed-up row from measured rows; exposed so rendered
/// tables can be cross-checked.
pub fn compute_speedup_row(rows: &[BenchRow], num_lengths: usize) -> Vec<Option<f64>> {
    (0..num_lengths)
        .map(|column| {
            let best = |new: bool| {
                rows.iter()
                    .filter(|row| is_new_family(&row.algorithm) == new)
                    .filter_map(|row| row.cells[column].map(|cell| cell.mean_cs))
                    .min_by(|a, b| a.total_cmp(b))
            };
            match (best(true), best(false)) {
                (Some(best_new), Some(best_base)) if best_base > 0.0 => {
                    Some(100.0 * (best_new - best_base) / best_base)
                }
                _ => None,
            }
        })
        .collect()
}

/// Output encodings for [`render_table`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    /// Fixed-width table in the three-group layout, best cell per group
    /// and column starred, speed-up row last.
    Text,
    /// Header `algorithm,m,mean_cs,stddev_cs,inspections,candidates`,
    /// one line per cell; unavailable cells keep empty value fields.
    Csv,
    /// One JSON object per cell with the same field names as the CSV;
    /// unavailable values are null.
    JsonLines,
}

impl FromStr for RenderFormat {
    type Err = ParseRenderFormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(RenderFormat::Text),
            "csv" => Ok(RenderFormat::Csv),
            "jsonl" => Ok(RenderFormat::JsonLines),
            _ => Err(ParseRenderFormatError { name: s.to_string() }),
        }
    }
}

/// Rejected render format name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRenderFormatError {
    name: String,
}

impl fmt::Display for ParseRenderFormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown format `{}`; expected text, csv or jsonl", self.name)
    }
}

impl std::error::Error for ParseRenderFormatError {}

/// Renders a finished table. Always ends with a newline.
pub fn render_table(table: &BenchTable, format: RenderFormat) -> String {
    match format {
        RenderFormat::Text => render_text(table),
        RenderFormat::Csv => render_csv(table),
        RenderFormat::JsonLines => render_jsonl(table),
    }
}

fn render_csv(table: &BenchTable) -> String {
    let mut out = String::from("algorithm,m,mean_cs,stddev_cs,inspections,candidates\n");
    for row in &table.rows {
        for (cell, &m) in row.cells.iter().zip(&table.lengths) {
            let name = row.algorithm.name();
            match cell {
                Some(c) => {
                    let fmt_opt =
                        |v: Option<f64>| v.map(|v| v.to_string()).unwrap_or_default();
                    out.push_str(&format!(
                        "{name},{m},{},{},{},{}\n",
                        c.mean_cs,
                        c.stddev_cs,
                        fmt_opt(c.mean_inspections),
                        fmt_opt(c.mean_candidates),
                    ));
                }
                None => out.push_str(&format!("{name},{m},,,,\n")),
            }
        }
    }
    out
}

fn render_jsonl(table: &BenchTable) -> String {
    let mut out = String::new();
    for row in &table.rows {
        for (cell, &m) in row.cells.iter().zip(&table.lengths) {
            let object = match cell {
                Some(c) => serde_json::json!({
                    "algorithm": row.algorithm.name(),
                    "m": m,
                    "mean_cs": c.mean_cs,
                    "stddev_cs": c.stddev_cs,
                    "inspections": c.mean_inspections,
                    "candidates": c.mean_candidates,
                }),
                None => serde_json::json!({
                    "algorithm": row.algorithm.name(),
                    "m": m,
                    "mean_cs": null,
                    "stddev_cs": null,
                    "inspections": null,
                    "candidates": null,
                }),
            };
            out.push_str(&object.to_string());
            out.push('\n');
        }
    }
    out
}

/// Row-group layout of the text rendering, mirroring the published
/// tables: prefix-based scans, suffix-based scans, SIMD.
fn group_of(algo: &BenchAlgo) -> usize {
    match algo {
        BenchAlgo::Implemented(
            AlgorithmId::Oracle
            | AlgorithmId::Wm
            | AlgorithmId::Hcam
            | AlgorithmId::Hfam
            | AlgorithmId::Auto,
        ) => 0,
        BenchAlgo::Implemented(AlgorithmId::Bhcam | AlgorithmId::Bhfam) => 1,
        BenchAlgo::External("gfg" | "efs") => 0,
        BenchAlgo::External("bam" | "ebl") => 1,
        BenchAlgo::External(_) => 2,
    }
}

const GROUP_LABELS: [&str; 3] = ["prefix based", "suffix based", "simd"];
const NAME_WIDTH: usize = 9;
const CELL_WIDTH: usize = 9;

fn render_text(table: &BenchTable) -> String {
    let mut out = String::new();
    out.push_str(&format!("{:<NAME_WIDTH$}", "m"));
    for &m in &table.lengths {
        out.push_str(&format!("{m:>CELL_WIDTH$}"));
    }
    out.push('\n');
    let width = NAME_WIDTH + CELL_WIDTH * table.lengths.len();
    out.push_str(&"-".repeat(width));
    out.push('\n');

    for (group, label) in GROUP_LABELS.iter().enumerate() {
        let members: Vec<&BenchRow> = table
            .rows
            .iter()
            .filter(|row| group_of(&row.algorithm) == group)
            .collect();
        if members.is_empty() {
            continue;
        }
        out.push_str(label);
        out.push('\n');
        // Best mean per column within the group, for the star marker.
        let best: Vec<Option<f64>> = (0..table.lengths.len())
            .map(|column| {
                members
                    .iter()
                    .filter_map(|row| row.cells[column].map(|cell| cell.mean_cs))
                    .min_by(|a, b| a.total_cmp(b))
            })
            .collect();
        for row in members {
            out.push_str(&format!("  {:<width$}", row.algorithm.name(), width = NAME_WIDTH - 2));
            for (cell, best) in row.cells.iter().zip(&best) {
                match cell {
                    Some(c) => {
                        let star = if Some(c.mean_cs) == *best { "*" } else { "" };
                        out.push_str(&format!("{:>CELL_WIDTH$}", format!("{:.2}{star}", c.mean_cs)));
                    }
                    None => out.push_str(&format!("{:>CELL_WIDTH$}", "-")),
                }
            }
            out.push('\n');
        }
    }

    out.push_str(&"-".repeat(width));
    out.push('\n');
    out.push_str(&format!("{:<NAME_WIDTH$}", "speed-up"));
    for value in &table.speedup_row {
        match value {
            Some(pct) => out.push_str(&format!("{:>CELL_WIDTH$}", format!("{pct:+.1}%"))),
            None => out.push_str(&format!("{:>CELL_WIDTH$}", "-")),
        }
    }
    out.push('\n');
    out.push_str(&format!("(times in {TIME_UNIT}; * = best in group; positive speed-up = slower)\n"));
    out
}
