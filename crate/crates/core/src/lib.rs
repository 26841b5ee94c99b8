//! Abelian (jumbled) pattern matching over raw byte strings.
//!
//! An *abelian occurrence* of a pattern `x` in a text `y` is a window of
//! `y` whose bytes are a permutation of `x`, i.e. whose per-byte occurrence
//! counts (Parikh vector) equal the pattern's. This crate implements a
//! family of online matchers for that problem plus the scaffolding needed
//! to compare them:
//!
//! * [`parikh`] — Parikh vectors, window verification, and the brute-force
//!   matcher that serves as the correctness oracle for everything else.
//! * [`heap`] — the heap-counting matchers: a prefix-based scan (`hcam`)
//!   and a suffix-based skip scan (`bhcam`), both exact. A window is
//!   summarised by a single word-sized fingerprint, the sum of per-byte
//!   weights chosen as powers of the pattern length.
//! * [`filter`] — relaxed variants (`hfam`, `bhfam`) that use the raw byte
//!   codes as weights and confirm every fingerprint hit by verification.
//! * [`window`] — the classic sliding-window counting baseline (`wm`).
//! * [`engine`] — algorithm registry, alphabet reduction, automatic
//!   algorithm selection, and the single search entry point.
//! * [`corpus`] — seeded random text generation, file ingestion, and
//!   random pattern extraction.
//! * [`bench`] — a harness timing every algorithm over a grid of pattern
//!   lengths, rendered as text, CSV, or JSON lines.
//!
//! # Example
//!
//! ```
//! use abelian::engine::{search, AlgorithmId, SearchRequest};
//!
//! let report = search(&SearchRequest {
//!     pattern: b"ab",
//!     text: b"abba",
//!     algorithm: AlgorithmId::Hcam,
//!     instrument: false,
//!     reduce_alphabet: false,
//! });
//! assert_eq!(report.positions.as_slice(), &[0, 2]);
//! ```
//!
//! All positions are 0-based window start offsets, reported in ascending
//! order. Every matcher returns exactly the same positions as
//! [`parikh::brute_force_search`]; the fingerprint-based ones differ only
//! in how much of the text they inspect to get there.

pub mod bench;
pub mod corpus;
pub mod engine;
pub mod filter;
pub mod heap;
pub mod parikh;
mod report;
pub mod window;

pub use engine::{search, AlgorithmId, SearchRequest};
pub use heap::{build_profile, PatternProfile};
pub use parikh::{brute_force_search, compute_parikh_vector, MatchPositions, ParikhVector};
pub use report::{Counters, MatchReport};
