//! Heap-counting matchers: exact abelian search through a single rolling
//! word fingerprint.
//!
//! The heap mapping assigns each distinct pattern byte, in first-occurrence
//! order, the weights `m^0, m^1, ..., m^(sigma_x - 1)` (with `m` the
//! pattern length); every byte not in the pattern gets weight 0. The
//! *heap value* of a string is the sum of its bytes' weights, so a window
//! fingerprint is the base-`m` digit vector of its per-symbol counts: the
//! count of the i-th pattern symbol occupies digit i, and non-pattern
//! bytes contribute nothing. A digit can only spill into its neighbour if
//! some symbol occurs `m` times in an `m`-byte window, which forces a
//! single-symbol pattern, where fingerprint equality is again a true
//! match. Hence, as long as `m^sigma_x` fits the fingerprint word, window
//! fingerprint equality with the pattern's `delta` is *equivalent* to
//! Parikh equality and candidates need no verification.
//!
//! All fingerprint arithmetic wraps modulo `2^64`. When `m^sigma_x`
//! overflows the word, wrapped fingerprints may collide, so
//! [`HeapMapping::collision_possible`] flips on and every candidate is
//! confirmed with the early-exit verification of [`crate::parikh`];
//! positions stay exact either way.
//!
//! Two scan orders are provided:
//!
//! * [`hcam_search`] slides a window left to right, updating the
//!   fingerprint in O(1) per step: always linear.
//! * [`bhcam_search`] scans each window right to left and, on meeting a
//!   byte that cannot occur in any match, skips past it entirely;
//!   sub-linear in practice on large alphabets. A copy of the pattern
//!   appended after the text acts as a sentinel so the scanning loops need
//!   no per-step bounds test; hits past `n - m` are suppressed.

use std::fmt;

use crate::parikh::{compute_parikh_vector, MatchPositions, ParikhVector, ALPHABET};
use crate::report::{CountTally, MatchReport, NoTally, Tally};

/// Rejected construction of a profile from an empty pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmptyPatternError;

impl fmt::Display for EmptyPatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pattern must contain at least one byte")
    }
}

impl std::error::Error for EmptyPatternError {}

/// Per-byte fingerprint weights: powers of the pattern length `m` in
/// first-occurrence order, 0 for bytes absent from the pattern.
///
/// Weights are reduced modulo `2^64`. Once a power wraps to 0 (possible
/// only for even `m`), that byte and all later first occurrences are
/// indistinguishable from non-members in the fingerprint; exactness is
/// preserved because such mappings always have `collision_possible` set.
#[derive(Debug, Clone)]
pub struct HeapMapping {
    weights: [u64; ALPHABET],
    base_m: usize,
    sigma_x: usize,
    collision_possible: bool,
}

impl HeapMapping {
    /// Fingerprint weight of byte `c`.
    #[inline]
    pub fn weight(&self, c: u8) -> u64 {
        self.weights[c as usize]
    }

    /// The full weight table.
    #[inline]
    pub fn weights(&self) -> &[u64; ALPHABET] {
        &self.weights
    }

    /// Pattern length used as the weight base.
    pub fn base_m(&self) -> usize {
        self.base_m
    }

    /// Number of distinct pattern bytes.
    pub fn sigma_x(&self) -> usize {
        self.sigma_x
    }

    /// True iff `m^sigma_x` does not fit a 64-bit word, in which case
    /// fingerprint equality is necessary but not sufficient and candidates
    /// must be verified.
    pub fn collision_possible(&self) -> bool {
        self.collision_possible
    }
}

/// Which byte values occur in the pattern.
#[derive(Debug, Clone)]
pub struct MembershipMap {
    member: [bool; ALPHABET],
}

impl MembershipMap {
    /// Marks exactly the bytes occurring in `x`.
    pub fn from_pattern(x: &[u8]) -> Self {
        let mut member = [false; ALPHABET];
        for &c in x {
            member[c as usize] = true;
        }
        MembershipMap { member }
    }

    #[inline]
    pub fn contains(&self, c: u8) -> bool {
        self.member[c as usize]
    }

    /// Number of member byte values.
    pub fn sigma(&self) -> usize {
        self.member.iter().filter(|&&b| b).count()
    }
}

/// Everything precomputed from a pattern: alphabet, weights, fingerprint.
///
/// Immutable after construction and safe to share across threads; each
/// search owns its private scratch.
#[derive(Debug, Clone)]
pub struct PatternProfile {
    pattern: Vec<u8>,
    m: usize,
    heap: HeapMapping,
    membership: MembershipMap,
    delta: u64,
    pv: ParikhVector,
}

impl PatternProfile {
    pub fn pattern(&self) -> &[u8] {
        &self.pattern
    }

    /// Pattern length.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn heap(&self) -> &HeapMapping {
        &self.heap
    }

    pub fn membership(&self) -> &MembershipMap {
        &self.membership
    }

    /// Heap value of the pattern itself.
    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn pv(&self) -> &ParikhVector {
        &self.pv
    }
}

/// True iff `m^sigma_x` is at least `2^64`, i.e. the maximum attainable
/// window fingerprint no longer fits the word and equality checks may
/// collide.
///
/// Computed by overflow-checked repeated multiplication, never by
/// floating-point logarithms.
pub fn fingerprint_collision_possible(m: usize, sigma_x: usize) -> bool {
    debug_assert!(m >= 2);
    debug_assert!(sigma_x >= 1 && sigma_x <= m.min(ALPHABET));
    let mut acc = 1u64;
    for _ in 0..sigma_x {
        match acc.checked_mul(m as u64) {
            Some(next) => acc = next,
            None => return true,
        }
    }
    false
}

/// Builds the heap mapping of a pattern `x` of length `m >= 2`.
///
/// Distinct bytes receive successive powers of `m` in first-occurrence
/// order; every other byte keeps weight 0. Lengths below 2 are a caller
/// contract violation (degenerate patterns are routed to a byte scan).
pub fn compute_heap_mapping(x: &[u8], m: usize) -> HeapMapping {
    assert_eq!(m, x.len(), "m must equal the pattern length");
    assert!(m >= 2, "heap mapping requires m >= 2");
    let mut weights = [0u64; ALPHABET];
    let mut next_power = 1u64;
    for &c in x {
        if weights[c as usize] == 0 {
            weights[c as usize] = next_power;
            next_power = next_power.wrapping_mul(m as u64);
        }
    }
    // Count distinct bytes separately: a wrapped power can be 0, which the
    // weight table cannot distinguish from "unassigned".
    let mut seen = [false; ALPHABET];
    let mut sigma_x = 0usize;
    for &c in x {
        if !seen[c as usize] {
            seen[c as usize] = true;
            sigma_x += 1;
        }
    }
    let collision_possible = fingerprint_collision_possible(m, sigma_x);
    HeapMapping {
        weights,
        base_m: m,
        sigma_x,
        collision_possible,
    }
}

/// Heap value of `w`: the sum of its bytes' weights modulo `2^64`.
pub fn heap_value(w: &[u8], mapping: &HeapMapping) -> u64 {
    w.iter()
        .fold(0u64, |acc, &c| acc.wrapping_add(mapping.weights[c as usize]))
}

/// Precomputes the full search profile of a nonempty pattern in
/// O(m + 256) time.
pub fn build_profile(x: &[u8]) -> Result<PatternProfile, EmptyPatternError> {
    if x.is_empty() {
        return Err(EmptyPatternError);
    }
    let m = x.len();
    let membership = MembershipMap::from_pattern(x);
    let heap = if m >= 2 {
        compute_heap_mapping(x, m)
    } else {
        // m = 1 degenerates to single-byte search; the mapping below keeps
        // the profile invariants (weights 1 = 1^0, delta = 1) while the
        // searches route around the fingerprint machinery.
        let mut weights = [0u64; ALPHABET];
        weights[x[0] as usize] = 1;
        HeapMapping {
            weights,
            base_m: 1,
            sigma_x: 1,
            collision_possible: false,
        }
    };
    let delta = heap_value(x, &heap);
    let pv = compute_parikh_vector(x);
    Ok(PatternProfile {
        pattern: x.to_vec(),
        m,
        heap,
        membership,
        delta,
        pv,
    })
}

/// How the suffix-based searches realize the pattern copy that follows the
/// text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SentinelMode {
    /// Allocate an `n + m` buffer holding the text followed by the
    /// pattern. O(n) extra space, branch-free reads.
    #[default]
    Copied,
    /// Read text and pattern in place through a position test; no extra
    /// allocation. Produces bit-identical reports.
    InPlace,
}

/// Prefix-based exact search: one O(1) fingerprint update per slide.
///
/// A position is a candidate when the window fingerprint equals the
/// pattern's `delta`; candidates are reported directly unless the profile
/// has `collision_possible`, in which case each is confirmed by
/// verification first. Returns no counters; see
/// [`hcam_search_instrumented`].
pub fn hcam_search(profile: &PatternProfile, y: &[u8]) -> MatchReport {
    hcam_impl(profile, y, NoTally)
}

/// [`hcam_search`] with work counters. Positions are identical.
pub fn hcam_search_instrumented(profile: &PatternProfile, y: &[u8]) -> MatchReport {
    hcam_impl(profile, y, CountTally::default())
}

fn hcam_impl<T: Tally>(profile: &PatternProfile, y: &[u8], tally: T) -> MatchReport {
    if profile.m == 1 {
        return single_byte_scan(&profile.membership, y, tally);
    }
    let spec = FingerprintSpec {
        weights: &profile.heap.weights,
        delta: profile.delta,
        m: profile.m,
        verify_candidates: profile.heap.collision_possible,
        pv: &profile.pv,
    };
    prefix_scan(&spec, y, tally)
}

/// Suffix-based exact search with membership-driven skips.
///
/// Each window is scanned right to left; a byte not occurring in the
/// pattern ends the scan and jumps the window past it. Completed windows
/// then slide forward by one while the entering byte stays a member.
/// Uses [`SentinelMode::Copied`]; see [`bhcam_search_with`] for the
/// in-place variant.
pub fn bhcam_search(profile: &PatternProfile, y: &[u8]) -> MatchReport {
    bhcam_search_with(profile, y, SentinelMode::Copied, false)
}

/// [`bhcam_search`] with work counters. Positions are identical.
pub fn bhcam_search_instrumented(profile: &PatternProfile, y: &[u8]) -> MatchReport {
    bhcam_search_with(profile, y, SentinelMode::Copied, true)
}

/// Suffix-based search with explicit sentinel mode and instrumentation
/// choice. All four combinations report identical positions, and the two
/// sentinel modes produce identical counters.
pub fn bhcam_search_with(
    profile: &PatternProfile,
    y: &[u8],
    mode: SentinelMode,
    instrument: bool,
) -> MatchReport {
    if profile.m == 1 {
        return if instrument {
            single_byte_scan(&profile.membership, y, CountTally::default())
        } else {
            single_byte_scan(&profile.membership, y, NoTally)
        };
    }
    let spec = FingerprintSpec {
        weights: &profile.heap.weights,
        delta: profile.delta,
        m: profile.m,
        verify_candidates: profile.heap.collision_possible,
        pv: &profile.pv,
    };
    if instrument {
        backward_scan(&spec, &profile.membership, y, &profile.pattern, mode, CountTally::default())
    } else {
        backward_scan(&spec, &profile.membership, y, &profile.pattern, mode, NoTally)
    }
}

/// Fingerprint parameters shared by the exact and relaxed scan skeletons.
pub(crate) struct FingerprintSpec<'a> {
    pub weights: &'a [u64; ALPHABET],
    pub delta: u64,
    pub m: usize,
    /// Confirm every fingerprint hit with verification before reporting.
    pub verify_candidates: bool,
    pub pv: &'a ParikhVector,
}

/// Early-exit window verification that tallies its reads. Mirrors
/// [`crate::parikh::verify`] byte for byte.
fn confirm<T: Tally>(pv: &ParikhVector, m: usize, y: &[u8], s: usize, tally: &mut T) -> bool {
    let mut window = [0usize; ALPHABET];
    for &c in &y[s..s + m] {
        tally.read();
        let c = c as usize;
        window[c] += 1;
        if window[c] > pv.counts()[c] {
            return false;
        }
    }
    true
}

/// m = 1 degenerates to exact single-byte search over the membership map.
pub(crate) fn single_byte_scan<T: Tally>(
    membership: &MembershipMap,
    y: &[u8],
    mut tally: T,
) -> MatchReport {
    let mut out = MatchPositions::default();
    for (i, &c) in y.iter().enumerate() {
        tally.read();
        if membership.contains(c) {
            tally.candidate();
            out.push(i);
        }
    }
    tally.finish(out)
}

/// Left-to-right scan: initialize the fingerprint over the first window,
/// then one subtract/add pair per slide. Shared by `hcam` (power weights)
/// and `hfam` (byte-code weights).
pub(crate) fn prefix_scan<T: Tally>(spec: &FingerprintSpec, y: &[u8], mut tally: T) -> MatchReport {
    let (m, n) = (spec.m, y.len());
    debug_assert!(m >= 1);
    let mut out = MatchPositions::default();
    if n < m {
        return tally.finish(out);
    }
    let mut gamma = 0u64;
    for &c in &y[..m] {
        tally.read();
        gamma = gamma.wrapping_add(spec.weights[c as usize]);
    }
    let mut s = 0usize;
    loop {
        if gamma == spec.delta {
            tally.candidate();
            if !spec.verify_candidates || confirm(spec.pv, m, y, s, &mut tally) {
                out.push(s);
            } else {
                tally.rejection();
            }
        }
        if s == n - m {
            break;
        }
        tally.read();
        tally.read();
        gamma = gamma
            .wrapping_sub(spec.weights[y[s] as usize])
            .wrapping_add(spec.weights[y[s + m] as usize]);
        s += 1;
    }
    tally.finish(out)
}

/// Right-to-left scan skeleton shared by `bhcam` and `bhfam`.
///
/// The running value is `gamma = h(window) - delta` in wrapping
/// arithmetic, so a candidate shows as `gamma == 0`. The buffer logically
/// extends the text with a copy of the pattern; the scan therefore always
/// terminates at the sentinel window and needs no per-read bound test.
/// Fingerprint hits past `n - m` are suppressed (the first one ends the
/// search, which is sound because `s` never decreases).
pub(crate) fn backward_scan<T: Tally>(
    spec: &FingerprintSpec,
    membership: &MembershipMap,
    y: &[u8],
    pattern: &[u8],
    mode: SentinelMode,
    tally: T,
) -> MatchReport {
    let (m, n) = (spec.m, y.len());
    debug_assert!(m >= 2);
    debug_assert_eq!(pattern.len(), m);
    if n < m {
        return tally.finish(MatchPositions::default());
    }
    match mode {
        SentinelMode::Copied => {
            let mut buffer = Vec::with_capacity(n + m);
            buffer.extend_from_slice(y);
            buffer.extend_from_slice(pattern);
            backward_scan_inner(spec, membership, y, &Contiguous(&buffer), tally)
        }
        SentinelMode::InPlace => backward_scan_inner(
            spec,
            membership,
            y,
            &Seamed {
                text: y,
                pattern,
            },
            tally,
        ),
    }
}

/// Read access to the text-plus-sentinel buffer.
trait SentinelText {
    fn at(&self, i: usize) -> u8;
}

struct Contiguous<'a>(&'a [u8]);

impl SentinelText for Contiguous<'_> {
    #[inline(always)]
    fn at(&self, i: usize) -> u8 {
        self.0[i]
    }
}

struct Seamed<'a> {
    text: &'a [u8],
    pattern: &'a [u8],
}

impl SentinelText for Seamed<'_> {
    #[inline(always)]
    fn at(&self, i: usize) -> u8 {
        if i < self.text.len() {
            self.text[i]
        } else {
            self.pattern[i - self.text.len()]
        }
    }
}

fn backward_scan_inner<B: SentinelText, T: Tally>(
    spec: &FingerprintSpec,
    membership: &MembershipMap,
    y: &[u8],
    z: &B,
    mut tally: T,
) -> MatchReport {
    let (m, n) = (spec.m, y.len());
    let mut out = MatchPositions::default();
    let mut s = 0usize;
    'outer: loop {
        // Backward scan of the window [s, s + m). A non-member byte at
        // window offset j - 1 restarts the scan just past it.
        let mut gamma = spec.delta.wrapping_neg();
        let mut j = m;
        while j > 0 {
            tally.read();
            let c = z.at(s + j - 1);
            if membership.contains(c) {
                gamma = gamma.wrapping_add(spec.weights[c as usize]);
                j -= 1;
            } else {
                gamma = spec.delta.wrapping_neg();
                s += j;
                j = m;
            }
        }
        // Forward slide: report while the entering byte keeps the window
        // inside member territory. The sentinel window (s = n) always has
        // gamma == 0 and lies past n - m, ending the search.
        loop {
            if gamma == 0 {
                if s <= n - m {
                    tally.candidate();
                    if !spec.verify_candidates || confirm(spec.pv, m, y, s, &mut tally) {
                        out.push(s);
                    } else {
                        tally.rejection();
                    }
                } else {
                    break 'outer;
                }
            }
            tally.read();
            let entering = z.at(s + m);
            if !membership.contains(entering) {
                break;
            }
            tally.read();
            gamma = gamma
                .wrapping_add(spec.weights[entering as usize])
                .wrapping_sub(spec.weights[z.at(s) as usize]);
            s += 1;
        }
        s += m + 1;
    }
    tally.finish(out)
}
