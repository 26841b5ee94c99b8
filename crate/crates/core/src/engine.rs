//! Algorithm registry and unified search entry point.
//!
//! Everything the callers above the matchers need in one place: parse and
//! print algorithm names, reduce the text alphabet to the pattern's
//! (search-equivalent, often faster for the skip-based scans), pick an
//! algorithm automatically from the pattern's shape, and dispatch a
//! [`SearchRequest`] to the right matcher.

use std::fmt;
use std::str::FromStr;

use crate::filter::{
    bhfam_search, bhfam_search_instrumented, build_byte_sum_profile, hfam_search,
    hfam_search_instrumented,
};
use crate::heap::{
    bhcam_search, bhcam_search_instrumented, build_profile, hcam_search,
    hcam_search_instrumented, MembershipMap,
};
use crate::parikh::brute_force_search;
use crate::report::{Counters, MatchReport};
use crate::window::{wm_search, wm_search_instrumented};

/// Alphabet-size threshold: at or below it, `auto` picks the prefix scan.
///
/// Tunable. Drawn from observed crossovers between prefix- and
/// suffix-based matchers: skips pay off only when enough byte values lie
/// outside the pattern alphabet. Correctness never depends on the value.
pub const AUTO_SIGMA_THRESHOLD: usize = 4;

/// Pattern-length threshold: at or below it, `auto` picks the prefix scan.
///
/// Tunable, same caveats as [`AUTO_SIGMA_THRESHOLD`]: short windows make
/// backward skips too small to beat the plain rolling update.
pub const AUTO_LENGTH_THRESHOLD: usize = 8;

/// Names of every runnable algorithm, plus `auto`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgorithmId {
    /// Brute force, for ground truth. Never instrumented.
    Oracle,
    /// Sliding-window counting baseline.
    Wm,
    /// Exact prefix-based heap fingerprint scan.
    Hcam,
    /// Exact suffix-based heap fingerprint scan with skips.
    Bhcam,
    /// Relaxed prefix-based byte-sum filter.
    Hfam,
    /// Relaxed suffix-based byte-sum filter with skips.
    Bhfam,
    /// Resolved per pattern via [`auto_select`].
    Auto,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 7] = [
        AlgorithmId::Oracle,
        AlgorithmId::Wm,
        AlgorithmId::Hcam,
        AlgorithmId::Bhcam,
        AlgorithmId::Hfam,
        AlgorithmId::Bhfam,
        AlgorithmId::Auto,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgorithmId::Oracle => "oracle",
            AlgorithmId::Wm => "wm",
            AlgorithmId::Hcam => "hcam",
            AlgorithmId::Bhcam => "bhcam",
            AlgorithmId::Hfam => "hfam",
            AlgorithmId::Bhfam => "bhfam",
            AlgorithmId::Auto => "auto",
        }
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Rejected algorithm name, with the accepted spellings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseAlgorithmError {
    name: String,
}

impl fmt::Display for ParseAlgorithmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown algorithm `{}`; expected one of oracle, wm, hcam, bhcam, hfam, bhfam, auto",
            self.name
        )
    }
}

impl std::error::Error for ParseAlgorithmError {}

impl FromStr for AlgorithmId {
    type Err = ParseAlgorithmError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AlgorithmId::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| ParseAlgorithmError { name: s.to_string() })
    }
}

/// One search call: what to look for, where, with which algorithm, and
/// whether to count work and reduce the alphabet first.
#[derive(Debug, Clone, Copy)]
pub struct SearchRequest<'a> {
    pub pattern: &'a [u8],
    pub text: &'a [u8],
    pub algorithm: AlgorithmId,
    /// Populate [`MatchReport::counters`] (except for the oracle, which
    /// has no instrumented form).
    pub instrument: bool,
    /// Replace non-pattern bytes by a sentinel before searching. Never
    /// changes the positions; see [`reduce_text`].
    pub reduce_alphabet: bool,
}

/// Smallest byte value not occurring in the pattern, if any.
fn reduction_sentinel(membership: &MembershipMap) -> Option<u8> {
    (0..=255u8).find(|&c| !membership.contains(c))
}

/// Copies `y` with every byte outside the pattern alphabet replaced by
/// one designated non-member value (the smallest such byte).
///
/// Abelian occurrences survive the substitution in both directions: a
/// matching window contains only members and is copied verbatim, and a
/// reduced window equal to some permutation of the pattern cannot contain
/// the sentinel, so its original bytes were members and unchanged. When
/// the pattern uses all 256 byte values no non-member exists, and none is
/// needed: the reduction is the identity. Idempotent either way.
pub fn reduce_text(y: &[u8], membership: &MembershipMap) -> Vec<u8> {
    match reduction_sentinel(membership) {
        Some(sentinel) => y
            .iter()
            .map(|&c| if membership.contains(c) { c } else { sentinel })
            .collect(),
        None => y.to_vec(),
    }
}

/// Deterministic algorithm choice from the pattern shape: the prefix scan
/// for small alphabets (`sigma_x` at most [`AUTO_SIGMA_THRESHOLD`]) or
/// short patterns (`m` at most [`AUTO_LENGTH_THRESHOLD`]), the skip-based
/// suffix scan otherwise.
pub fn auto_select(m: usize, sigma_x: usize) -> AlgorithmId {
    debug_assert!(m >= 1);
    if sigma_x <= AUTO_SIGMA_THRESHOLD || m <= AUTO_LENGTH_THRESHOLD {
        AlgorithmId::Hcam
    } else {
        AlgorithmId::Bhcam
    }
}

/// The concrete algorithm a request for `algorithm` would run on
/// `pattern`: `auto` resolves via [`auto_select`], everything else is
/// itself. Empty patterns are never dispatched; they resolve to the
/// prefix scan by convention.
pub fn resolve_algorithm(algorithm: AlgorithmId, pattern: &[u8]) -> AlgorithmId {
    match algorithm {
        AlgorithmId::Auto => {
            if pattern.is_empty() {
                AlgorithmId::Hcam
            } else {
                auto_select(pattern.len(), MembershipMap::from_pattern(pattern).sigma())
            }
        }
        other => other,
    }
}

/// Runs one search request and reports the match positions, with work
/// counters when `instrument` is set (the oracle always reports `None`).
///
/// An empty pattern, or a pattern longer than the text, yields an empty
/// report without dispatching. Unknown algorithm names cannot reach this
/// function; they are rejected when parsing an [`AlgorithmId`].
pub fn search(request: &SearchRequest<'_>) -> MatchReport {
    let &SearchRequest {
        pattern,
        text,
        algorithm,
        instrument,
        reduce_alphabet,
    } = request;
    let algorithm = resolve_algorithm(algorithm, pattern);
    if pattern.is_empty() || text.len() < pattern.len() {
        let counters = (instrument && algorithm != AlgorithmId::Oracle).then(Counters::default);
        return MatchReport::empty(counters);
    }

    let reduced;
    let haystack = if reduce_alphabet {
        reduced = reduce_text(text, &MembershipMap::from_pattern(pattern));
        reduced.as_slice()
    } else {
        text
    };

    match algorithm {
        AlgorithmId::Oracle => MatchReport {
            positions: brute_force_search(pattern, haystack),
            counters: None,
        },
        AlgorithmId::Wm => {
            if instrument {
                wm_search_instrumented(pattern, haystack)
            } else {
                wm_search(pattern, haystack)
            }
        }
        AlgorithmId::Hcam => {
            let profile = build_profile(pattern).expect("pattern is nonempty");
            if instrument {
                hcam_search_instrumented(&profile, haystack)
            } else {
                hcam_search(&profile, haystack)
            }
        }
        AlgorithmId::Bhcam => {
            let profile = build_profile(pattern).expect("pattern is nonempty");
            if instrument {
                bhcam_search_instrumented(&profile, haystack)
            } else {
                bhcam_search(&profile, haystack)
            }
        }
        AlgorithmId::Hfam => {
            let profile = build_byte_sum_profile(pattern).expect("pattern is nonempty");
            if instrument {
                hfam_search_instrumented(&profile, haystack)
            } else {
                hfam_search(&profile, haystack)
            }
        }
        AlgorithmId::Bhfam => {
            let profile = build_byte_sum_profile(pattern).expect("pattern is nonempty");
            if instrument {
                bhfam_search_instrumented(&profile, haystack)
            } else {
                bhfam_search(&profile, haystack)
            }
        }
        AlgorithmId::Auto => unreachable!("auto was resolved above"),
    }
}
