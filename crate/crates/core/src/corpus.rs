//! Corpus provisioning: seeded random texts, raw file ingestion, and
//! random pattern extraction.
//!
//! Everything randomized is driven by ChaCha20 (RFC 8439) seeded from a
//! caller-supplied 64-bit value, so corpora and extracted patterns are
//! bit-identical across platforms and across time. Sampling a bounded
//! range uses rejection, not a bare modulo, so "uniform" means uniform.
//! Standard benchmark corpora (genome, protein, natural-language texts)
//! are not bundled; [`load_text`] ingests any local file as raw bytes.

use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

/// Where benchmark or test text comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSpec {
    /// `n` bytes drawn uniformly from `0..sigma`, reproducible from
    /// `seed`.
    Random { n: usize, sigma: usize, seed: u64 },
    /// The raw bytes of a file.
    File { path: PathBuf },
}

impl CorpusSpec {
    /// Produces the corpus bytes.
    pub fn materialize(&self) -> Result<Vec<u8>, CorpusError> {
        match self {
            CorpusSpec::Random { n, sigma, seed } => generate_random(*n, *sigma, *seed),
            CorpusSpec::File { path } => load_text(path),
        }
    }
}

/// Failures while producing or reading corpus data.
#[derive(Debug)]
pub enum CorpusError {
    /// Alphabet size outside `2..=256`.
    SigmaOutOfRange(usize),
    /// A random corpus of zero bytes was requested.
    EmptyCorpus,
    /// Patterns of length `m` cannot be cut from an `n`-byte text.
    PatternLength { m: usize, n: usize },
    /// File could not be read.
    Io { path: PathBuf, source: io::Error },
}

impl fmt::Display for CorpusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusError::SigmaOutOfRange(sigma) => {
                write!(f, "alphabet size {sigma} is outside the supported range 2..=256")
            }
            CorpusError::EmptyCorpus => write!(f, "random corpus length must be at least 1"),
            CorpusError::PatternLength { m, n } => {
                write!(f, "cannot extract patterns of length {m} from a text of {n} bytes")
            }
            CorpusError::Io { path, source } => {
                write!(f, "cannot read {}: {source}", path.display())
            }
        }
    }
}

impl std::error::Error for CorpusError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CorpusError::Io { source, .. } => Some(source),
            _ => None,
        }
    }
}

/// Draws a value uniformly from `0..bound` by rejection over the full
/// 64-bit output of `rng`.
fn uniform_u64(rng: &mut ChaCha20Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    // Accept only below the largest multiple of `bound`; what remains is
    // exactly uniform. The rejection zone is under one part in 2^32 for
    // any bound a text offset can take.
    let zone = (u64::MAX / bound) * bound;
    loop {
        let v = rng.next_u64();
        if v < zone {
            return v % bound;
        }
    }
}

/// Generates `n` bytes drawn independently and uniformly from
/// `0..sigma`, reproducibly from `seed`. O(n) expected time.
pub fn generate_random(n: usize, sigma: usize, seed: u64) -> Result<Vec<u8>, CorpusError> {
    if !(2..=256).contains(&sigma) {
        return Err(CorpusError::SigmaOutOfRange(sigma));
    }
    if n == 0 {
        return Err(CorpusError::EmptyCorpus);
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    // Per-byte rejection: accept below the largest multiple of sigma.
    // For sigma = 256 every byte is accepted unchanged.
    let limit = (256 - 256 % sigma) as u16;
    let mut out = Vec::with_capacity(n);
    let mut buf = [0u8; 1024];
    'fill: loop {
        rng.fill_bytes(&mut buf);
        for &b in &buf {
            if (b as u16) < limit {
                out.push((b as usize % sigma) as u8);
                if out.len() == n {
                    break 'fill;
                }
            }
        }
    }
    Ok(out)
}

/// Reads a file as raw bytes: no decoding, no normalization, zero bytes
/// preserved.
pub fn load_text(path: &Path) -> Result<Vec<u8>, CorpusError> {
    fs::read(path).map_err(|source| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Cuts `count` substrings of length `m` out of `y`, start offsets drawn
/// uniformly from `[0, |y| - m]`, reproducibly from `seed`.
///
/// Each extracted pattern trivially occurs in `y` (at least where it was
/// cut), which is what benchmark runs rely on.
pub fn extract_patterns(
    y: &[u8],
    m: usize,
    count: usize,
    seed: u64,
) -> Result<Vec<Vec<u8>>, CorpusError> {
    if m == 0 || m > y.len() {
        return Err(CorpusError::PatternLength { m, n: y.len() });
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let bound = (y.len() - m + 1) as u64;
    Ok((0..count)
        .map(|_| {
            let offset = uniform_u64(&mut rng, bound) as usize;
            y[offset..offset + m].to_vec()
        })
        .collect())
}
