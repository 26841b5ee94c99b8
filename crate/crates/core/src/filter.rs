//! Relaxed byte-sum filters: the heap-counting scan orders with the
//! cheapest possible weights.
//!
//! Instead of powers of the pattern length, each byte simply weighs its
//! own code, so a window's fingerprint is the plain sum of its byte
//! values. Equal Parikh vectors still imply equal sums, but the converse
//! fails badly (`"ab"` and `` "`c" `` both sum to 195), so every
//! fingerprint hit is confirmed by verification before it is reported.
//! Positions are exact; only the work bound degrades, to O(nm) in the
//! worst case when almost every window collides.
//!
//! What the relaxation buys: no per-pattern weight table to build, a
//! fingerprint that never overflows in practice (at most `255 * m`), and
//! the same O(1) slide and membership-skip machinery as the exact
//! matchers. [`hfam_search`] is the prefix scan, [`bhfam_search`] the
//! suffix scan with skips.

use crate::heap::{
    backward_scan, prefix_scan, single_byte_scan, EmptyPatternError, FingerprintSpec,
    MembershipMap, SentinelMode,
};
use crate::parikh::{compute_parikh_vector, ParikhVector, ALPHABET};
use crate::report::{CountTally, MatchReport, NoTally, Tally};

/// Identity weight table: byte `c` weighs `c`.
pub const BYTE_CODE_WEIGHTS: [u64; ALPHABET] = {
    let mut weights = [0u64; ALPHABET];
    let mut c = 0;
    while c < ALPHABET {
        weights[c] = c as u64;
        c += 1;
    }
    weights
};

/// Sum of the byte codes of `w`.
pub fn byte_sum(w: &[u8]) -> u64 {
    w.iter().map(|&c| c as u64).sum()
}

/// Pattern data for the relaxed filters: target sum, membership, and the
/// Parikh vector used to verify candidates.
#[derive(Debug, Clone)]
pub struct ByteSumProfile {
    pattern: Vec<u8>,
    m: usize,
    delta_sum: u64,
    membership: MembershipMap,
    pv: ParikhVector,
}

impl ByteSumProfile {
    pub fn pattern(&self) -> &[u8] {
        &self.pattern
    }

    /// Pattern length.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Byte-code sum of the pattern.
    pub fn delta_sum(&self) -> u64 {
        self.delta_sum
    }

    pub fn membership(&self) -> &MembershipMap {
        &self.membership
    }

    pub fn pv(&self) -> &ParikhVector {
        &self.pv
    }
}

/// Precomputes the byte-sum profile of a nonempty pattern.
pub fn build_byte_sum_profile(x: &[u8]) -> Result<ByteSumProfile, EmptyPatternError> {
    if x.is_empty() {
        return Err(EmptyPatternError);
    }
    Ok(ByteSumProfile {
        pattern: x.to_vec(),
        m: x.len(),
        delta_sum: byte_sum(x),
        membership: MembershipMap::from_pattern(x),
        pv: compute_parikh_vector(x),
    })
}

fn spec_of(profile: &ByteSumProfile) -> FingerprintSpec<'_> {
    FingerprintSpec {
        weights: &BYTE_CODE_WEIGHTS,
        delta: profile.delta_sum,
        m: profile.m,
        verify_candidates: true,
        pv: &profile.pv,
    }
}

/// Prefix-based relaxed search: rolling byte sum, every hit verified.
pub fn hfam_search(profile: &ByteSumProfile, y: &[u8]) -> MatchReport {
    hfam_impl(profile, y, NoTally)
}

/// [`hfam_search`] with work counters. Positions are identical.
pub fn hfam_search_instrumented(profile: &ByteSumProfile, y: &[u8]) -> MatchReport {
    hfam_impl(profile, y, CountTally::default())
}

fn hfam_impl<T: Tally>(profile: &ByteSumProfile, y: &[u8], tally: T) -> MatchReport {
    if profile.m == 1 {
        return single_byte_scan(&profile.membership, y, tally);
    }
    prefix_scan(&spec_of(profile), y, tally)
}

/// Suffix-based relaxed search: membership-driven skips, every hit
/// verified.
pub fn bhfam_search(profile: &ByteSumProfile, y: &[u8]) -> MatchReport {
    bhfam_impl(profile, y, NoTally)
}

/// [`bhfam_search`] with work counters. Positions are identical.
pub fn bhfam_search_instrumented(profile: &ByteSumProfile, y: &[u8]) -> MatchReport {
    bhfam_impl(profile, y, CountTally::default())
}

fn bhfam_impl<T: Tally>(profile: &ByteSumProfile, y: &[u8], tally: T) -> MatchReport {
    if profile.m == 1 {
        return single_byte_scan(&profile.membership, y, tally);
    }
    backward_scan(
        &spec_of(profile),
        &profile.membership,
        y,
        &profile.pattern,
        SentinelMode::Copied,
        tally,
    )
}
