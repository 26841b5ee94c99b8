//! Classic counting baseline: maintain per-byte counts of the sliding
//! window and the number of bytes whose count disagrees with the pattern.
//!
//! A window matches exactly when zero byte values disagree, so the test
//! per position is O(1) after two O(1) count updates per slide. No
//! fingerprints, no verification, no skips: this is the natural
//! comparison point for the fingerprint matchers, touching every text
//! byte the same number of times as the prefix scans.

use crate::parikh::{compute_parikh_vector, MatchPositions, ParikhVector, ALPHABET};
use crate::report::{CountTally, MatchReport, NoTally, Tally};

/// Sliding-window byte counts plus the number of byte values whose window
/// count differs from the pattern count.
#[derive(Debug, Clone)]
pub struct CountState {
    target: ParikhVector,
    window: [usize; ALPHABET],
    mismatches: usize,
}

impl CountState {
    /// State for an empty window compared against `target`: every byte
    /// occurring in the pattern starts out mismatched.
    pub fn new(target: ParikhVector) -> Self {
        let mismatches = target.distinct();
        CountState {
            target,
            window: [0; ALPHABET],
            mismatches,
        }
    }

    /// Adds one occurrence of `c` to the window.
    #[inline]
    pub fn add(&mut self, c: u8) {
        let c = c as usize;
        if self.window[c] == self.target.counts()[c] {
            self.mismatches += 1;
        }
        self.window[c] += 1;
        if self.window[c] == self.target.counts()[c] {
            self.mismatches -= 1;
        }
    }

    /// Removes one occurrence of `c` from the window.
    #[inline]
    pub fn remove(&mut self, c: u8) {
        let c = c as usize;
        debug_assert!(self.window[c] > 0);
        if self.window[c] == self.target.counts()[c] {
            self.mismatches += 1;
        }
        self.window[c] -= 1;
        if self.window[c] == self.target.counts()[c] {
            self.mismatches -= 1;
        }
    }

    /// True iff the window counts equal the pattern counts everywhere.
    #[inline]
    pub fn is_match(&self) -> bool {
        self.mismatches == 0
    }
}

/// Counting search: report every position where the window's byte counts
/// equal the pattern's. Exact with no verification step.
pub fn wm_search(x: &[u8], y: &[u8]) -> MatchReport {
    wm_impl(x, y, NoTally)
}

/// [`wm_search`] with work counters. Positions are identical.
pub fn wm_search_instrumented(x: &[u8], y: &[u8]) -> MatchReport {
    wm_impl(x, y, CountTally::default())
}

fn wm_impl<T: Tally>(x: &[u8], y: &[u8], mut tally: T) -> MatchReport {
    let (m, n) = (x.len(), y.len());
    let mut out = MatchPositions::default();
    if m == 0 || n < m {
        return tally.finish(out);
    }
    let mut state = CountState::new(compute_parikh_vector(x));
    for &c in &y[..m] {
        tally.read();
        state.add(c);
    }
    let mut s = 0usize;
    loop {
        if state.is_match() {
            tally.candidate();
            out.push(s);
        }
        if s == n - m {
            break;
        }
        tally.read();
        tally.read();
        state.remove(y[s]);
        state.add(y[s + m]);
        s += 1;
    }
    tally.finish(out)
}
