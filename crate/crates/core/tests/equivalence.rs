//! Cross-algorithm agreement on instances larger and more varied than the
//! in-module property tests exercise.

use abelian::engine::{reduce_text, search, AlgorithmId, SearchRequest};
use abelian::heap::MembershipMap;
use abelian::parikh::brute_force_search;
use proptest::prelude::*;

fn instance() -> impl Strategy<Value = (Vec<u8>, Vec<u8>)> {
    prop_oneof![Just(2usize), Just(4), Just(8), Just(20), Just(96)].prop_flat_map(|sigma| {
        (
            proptest::collection::vec((0..sigma).prop_map(|v| v as u8), 1..=64),
            proptest::collection::vec((0..sigma).prop_map(|v| v as u8), 0..2000),
        )
    })
}

proptest! {
    #[test]
    fn every_algorithm_matches_brute_force((x, y) in instance()) {
        let expected = brute_force_search(&x, &y);
        for algorithm in AlgorithmId::ALL {
            let report = search(&SearchRequest {
                pattern: &x,
                text: &y,
                algorithm,
                instrument: true,
                reduce_alphabet: false,
            });
            prop_assert_eq!(&report.positions, &expected, "algorithm {}", algorithm);
            // Candidates split exactly into reported matches and verified
            // rejections, whichever matcher ran.
            if let Some(c) = report.counters {
                prop_assert_eq!(
                    c.candidates,
                    c.verified_rejections + report.positions.len() as u64,
                    "algorithm {}",
                    algorithm
                );
            }
        }
    }

    #[test]
    fn searching_the_reduced_text_is_equivalent((x, y) in instance()) {
        let membership = MembershipMap::from_pattern(&x);
        let reduced = reduce_text(&y, &membership);
        let expected = brute_force_search(&x, &y);
        prop_assert_eq!(&brute_force_search(&x, &reduced), &expected);
        for algorithm in AlgorithmId::ALL {
            let report = search(&SearchRequest {
                pattern: &x,
                text: &reduced,
                algorithm,
                instrument: false,
                reduce_alphabet: false,
            });
            prop_assert_eq!(&report.positions, &expected, "algorithm {}", algorithm);
        }
    }
}
