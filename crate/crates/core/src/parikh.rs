//! Parikh vectors and the brute-force reference matcher.
//!
//! This module is the ground truth for the rest of the crate: every other
//! matcher is tested against [`brute_force_search`]. Clarity wins over
//! speed here.
//!
//! The alphabet is raw bytes, so every per-symbol table is a fixed array
//! of 256 entries and "clearing the alphabet" is a constant-size fill.
//! All indices are 0-based throughout the crate.

/// Number of distinct byte values; the size of every per-symbol table.
pub const ALPHABET: usize = 256;

/// Per-byte occurrence counts of a byte string.
///
/// Two strings are abelian-equivalent (permutations of each other) exactly
/// when their Parikh vectors are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParikhVector {
    counts: [usize; ALPHABET],
    total: usize,
}

impl ParikhVector {
    /// Occurrence count of byte value `c`.
    #[inline]
    pub fn count(&self, c: u8) -> usize {
        self.counts[c as usize]
    }

    /// Sum of all counts, i.e. the length of the source string.
    #[inline]
    pub fn total(&self) -> usize {
        self.total
    }

    /// The full 256-entry count table.
    #[inline]
    pub fn counts(&self) -> &[usize; ALPHABET] {
        &self.counts
    }

    /// Number of byte values with a nonzero count.
    pub fn distinct(&self) -> usize {
        self.counts.iter().filter(|&&c| c != 0).count()
    }
}

/// Ascending window start offsets of the abelian occurrences of a pattern.
///
/// Invariant: strictly increasing, no duplicates, and every position `p`
/// satisfies `p <= n - m` for the text/pattern it was computed from.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MatchPositions {
    positions: Vec<usize>,
}

impl MatchPositions {
    /// Positions as a slice, ascending.
    #[inline]
    pub fn as_slice(&self) -> &[usize] {
        &self.positions
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.positions.iter()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.positions
    }

    /// Append a position. Callers scan left to right, so appends must be
    /// strictly increasing.
    #[inline]
    pub(crate) fn push(&mut self, p: usize) {
        debug_assert!(self.positions.last().is_none_or(|&last| last < p));
        self.positions.push(p);
    }
}

impl From<Vec<usize>> for MatchPositions {
    /// Wraps an already strictly increasing position list.
    fn from(positions: Vec<usize>) -> Self {
        assert!(
            positions.windows(2).all(|w| w[0] < w[1]),
            "positions must be strictly increasing"
        );
        MatchPositions { positions }
    }
}

impl<'a> IntoIterator for &'a MatchPositions {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.positions.iter()
    }
}

/// Counts the occurrences of every byte value in `x`.
///
/// The empty string yields the all-zero vector.
pub fn compute_parikh_vector(x: &[u8]) -> ParikhVector {
    let mut counts = [0usize; ALPHABET];
    for &c in x {
        counts[c as usize] += 1;
    }
    ParikhVector {
        counts,
        total: x.len(),
    }
}

/// Tests whether the length-`m` window of `y` starting at `s` has Parikh
/// vector `pv_x`.
///
/// Tallies the window left to right and aborts as soon as any byte's
/// running count exceeds the pattern's count for that byte. When all `m`
/// bytes are placed without an overflow, both tallies sum to `m`, so they
/// are equal.
///
/// `s` must satisfy `s + m <= y.len()`; out-of-range offsets are a caller
/// contract violation.
pub fn verify(pv_x: &ParikhVector, m: usize, y: &[u8], s: usize) -> bool {
    assert!(
        s <= y.len() && m <= y.len() - s,
        "window [{s}, {s}+{m}) out of range for text of length {}",
        y.len()
    );
    let mut window = [0usize; ALPHABET];
    for &c in &y[s..s + m] {
        let c = c as usize;
        window[c] += 1;
        if window[c] > pv_x.counts[c] {
            return false;
        }
    }
    true
}

/// Finds every abelian occurrence of `x` in `y` by checking each window.
///
/// This is the correctness oracle: O(n(m + sigma)) worst case, no
/// shortcuts. An empty pattern matches nowhere, as does a pattern longer
/// than the text.
pub fn brute_force_search(x: &[u8], y: &[u8]) -> MatchPositions {
    let mut out = MatchPositions::default();
    let (m, n) = (x.len(), y.len());
    if m == 0 || n < m {
        return out;
    }
    let pv_x = compute_parikh_vector(x);
    for s in 0..=n - m {
        if verify(&pv_x, m, y, s) {
            out.push(s);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashMap;

    /// Independent tally used to derive expected Parikh counts.
    fn tally(x: &[u8]) -> HashMap<u8, usize> {
        let mut map = HashMap::new();
        for &c in x {
            *map.entry(c).or_insert(0) += 1;
        }
        map
    }

    #[test]
    fn parikh_vector_of_abab() {
        let pv = compute_parikh_vector(b"abab");
        assert_eq!(pv.count(b'a'), 2);
        assert_eq!(pv.count(b'b'), 2);
        assert_eq!(pv.count(b'c'), 0);
        assert_eq!(pv.total(), 4);
    }

    #[test]
    fn parikh_vector_of_empty() {
        let pv = compute_parikh_vector(b"");
        assert_eq!(pv.total(), 0);
        assert!(pv.counts().iter().all(|&c| c == 0));
    }

    #[test]
    fn parikh_vector_of_banana_matches_independent_tally() {
        let pv = compute_parikh_vector(b"banana");
        let expected = tally(b"banana");
        assert_eq!(expected[&b'a'], 3);
        assert_eq!(expected[&b'b'], 1);
        assert_eq!(expected[&b'n'], 2);
        for c in 0..=255u8 {
            assert_eq!(pv.count(c), expected.get(&c).copied().unwrap_or(0));
        }
        assert_eq!(pv.total(), 6);
        assert_eq!(pv.distinct(), 3);
    }

    #[test]
    fn verify_accepts_permutation() {
        let pv = compute_parikh_vector(b"ab");
        assert!(verify(&pv, 2, b"ba", 0));
    }

    #[test]
    fn verify_rejects_count_overflow() {
        let pv = compute_parikh_vector(b"ab");
        assert!(!verify(&pv, 2, b"bb", 0));
    }

    #[test]
    fn verify_inner_window() {
        // "aba" at offset 1 of "xaba" is a permutation of "aab".
        let pv = compute_parikh_vector(b"aab");
        assert!(verify(&pv, 3, b"xaba", 1));
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn verify_rejects_out_of_range_window() {
        let pv = compute_parikh_vector(b"ab");
        verify(&pv, 2, b"abc", 2);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_search(b"ab", b"abba").as_slice(), &[0, 2]);
        assert_eq!(brute_force_search(b"aa", b"aaa").as_slice(), &[0, 1]);
        assert!(brute_force_search(b"ab", b"cd").is_empty());
    }

    #[test]
    fn brute_force_degenerate_inputs() {
        assert!(brute_force_search(b"", b"abc").is_empty());
        assert!(brute_force_search(b"abcd", b"abc").is_empty());
        assert!(brute_force_search(b"a", b"").is_empty());
    }

    #[test]
    #[should_panic(expected = "strictly increasing")]
    fn match_positions_rejects_unsorted() {
        let _ = MatchPositions::from(vec![3, 1]);
    }

    fn small_instance() -> impl Strategy<Value = (Vec<u8>, Vec<u8>)> {
        let sigma = 1u8..5;
        sigma.prop_flat_map(|sigma| {
            (
                proptest::collection::vec(0..sigma, 0..6),
                proptest::collection::vec(0..sigma, 0..24),
            )
        })
    }

    proptest! {
        #[test]
        fn parikh_vector_is_permutation_invariant(
            mut x in proptest::collection::vec(any::<u8>(), 0..64),
            seed in any::<u64>(),
        ) {
            let pv = compute_parikh_vector(&x);
            // Fisher-Yates with a cheap LCG; any reordering will do.
            let mut state = seed | 1;
            for i in (1..x.len()).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                x.swap(i, (state >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(compute_parikh_vector(&x), pv);
        }

        #[test]
        fn verify_iff_window_parikh_equal((x, y) in small_instance()) {
            prop_assume!(!x.is_empty() && y.len() >= x.len());
            let pv = compute_parikh_vector(&x);
            let m = x.len();
            for s in 0..=y.len() - m {
                let window_pv = compute_parikh_vector(&y[s..s + m]);
                prop_assert_eq!(verify(&pv, m, &y, s), window_pv == pv);
            }
        }

        #[test]
        fn brute_force_agrees_with_verify((x, y) in small_instance()) {
            prop_assume!(!x.is_empty() && y.len() >= x.len());
            let hits = brute_force_search(&x, &y);
            let pv = compute_parikh_vector(&x);
            let m = x.len();
            for s in 0..=y.len() - m {
                prop_assert_eq!(hits.as_slice().contains(&s), verify(&pv, m, &y, s));
            }
            prop_assert!(hits.as_slice().windows(2).all(|w| w[0] < w[1]));
        }
    }
}
