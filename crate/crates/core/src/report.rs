//! Search results and the instrumentation counters behind them.
//!
//! Every matcher comes in two monomorphized flavours: a plain one whose
//! counter hooks compile to nothing, and an instrumented one that tallies
//! its work. Both return a [`MatchReport`]; only the instrumented flavour
//! populates `counters`.

use crate::parikh::MatchPositions;

/// Work counters collected by the instrumented search entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Counters {
    /// Text-byte reads, including sentinel-buffer and verification reads.
    /// Every read increments this exactly once.
    pub inspections: u64,
    /// Fingerprint hits (or, for counting matchers, zero-mismatch events)
    /// at reportable positions.
    pub candidates: u64,
    /// Candidates discarded by verification. Zero when the matcher runs
    /// without a verification step.
    pub verified_rejections: u64,
}

/// Outcome of a search: positions plus, when instrumented, counters.
///
/// Invariants on an instrumented report: `candidates >= positions.len()`,
/// and `verified_rejections == candidates - positions.len()` whenever a
/// verification step was active.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchReport {
    pub positions: MatchPositions,
    /// `Some` iff the search ran through an instrumented entry point.
    pub counters: Option<Counters>,
}

impl MatchReport {
    pub(crate) fn empty(counters: Option<Counters>) -> Self {
        MatchReport {
            positions: MatchPositions::default(),
            counters,
        }
    }
}

/// Counter sink the search loops are generic over. The no-op impl erases
/// all instrumentation from the plain entry points at compile time.
pub(crate) trait Tally {
    /// One text-byte read.
    fn read(&mut self);
    fn candidate(&mut self);
    fn rejection(&mut self);
    fn finish(self, positions: MatchPositions) -> MatchReport;
}

pub(crate) struct NoTally;

impl Tally for NoTally {
    #[inline(always)]
    fn read(&mut self) {}
    #[inline(always)]
    fn candidate(&mut self) {}
    #[inline(always)]
    fn rejection(&mut self) {}

    fn finish(self, positions: MatchPositions) -> MatchReport {
        MatchReport {
            positions,
            counters: None,
        }
    }
}

#[derive(Default)]
pub(crate) struct CountTally(Counters);

impl Tally for CountTally {
    #[inline(always)]
    fn read(&mut self) {
        self.0.inspections += 1;
    }

    #[inline(always)]
    fn candidate(&mut self) {
        self.0.candidates += 1;
    }

    #[inline(always)]
    fn rejection(&mut self) {
        self.0.verified_rejections += 1;
    }

    fn finish(self, positions: MatchPositions) -> MatchReport {
        MatchReport {
            positions,
            counters: Some(self.0),
        }
    }
}
