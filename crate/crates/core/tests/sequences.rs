mod common;

use coc_core::graphs::{enumerate_realizations, DEFAULT_REALIZATION_CAP};
use coc_core::{degree_seq::realize, format_sequence, parse_sequence, DegreeSequence, FormatStyle};
use proptest::prelude::*;

fn sorted_vec(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0..n, n).prop_map(|mut v| {
        v.sort_unstable();
        v
    })
}

fn seq(v: &[usize]) -> DegreeSequence {
    DegreeSequence::new(v.to_vec()).unwrap()
}

#[test]
fn graphicality_matches_enumeration() {
    for n in 1..=7 {
        let realizable = common::graphical_by_enumeration(n);
        for d in common::nondecreasing(n) {
            assert_eq!(seq(&d).is_graphical(), realizable.contains(&d), "{d:?}");
        }
    }
}

#[test]
fn havel_hakimi_realizes_every_graphical_sequence() {
    for n in 1..=8 {
        for d in common::nondecreasing(n) {
            let s = seq(&d);
            match realize(&s) {
                Ok(g) => {
                    let adj = common::adjacency(&g);
                    assert_eq!(common::degrees(&adj), d, "labels follow the sequence");
                }
                Err(_) => assert!(!s.is_graphical(), "{d:?}"),
            }
        }
    }
}

#[test]
fn realization_counts_match_brute_force() {
    for n in 1..=6 {
        let p = common::pairs(n);
        let mut counts = std::collections::BTreeMap::<Vec<usize>, usize>::new();
        for mask in 0..1u64 << p.len() {
            let d = common::degrees(&common::graph_from_mask(n, &p, mask));
            if d.windows(2).all(|w| w[0] <= w[1]) {
                *counts.entry(d).or_default() += 1;
            }
        }
        for d in common::nondecreasing(n) {
            let s = seq(&d);
            let expected = counts.get(&d).copied().unwrap_or(0);
            match enumerate_realizations(&s, DEFAULT_REALIZATION_CAP) {
                Ok(graphs) => {
                    assert_eq!(graphs.len(), expected, "{d:?}");
                    let distinct: std::collections::BTreeSet<_> = graphs.iter().map(common::adjacency).collect();
                    assert_eq!(distinct.len(), graphs.len());
                    for g in &graphs {
                        assert_eq!(common::degrees(&common::adjacency(g)), d);
                    }
                }
                Err(_) => assert_eq!(expected, 0, "{d:?}"),
            }
        }
    }
}

#[test]
fn enumeration_refuses_beyond_cap() {
    let s = seq(&[1; 10]);
    assert!(enumerate_realizations(&s, DEFAULT_REALIZATION_CAP).is_err());
    assert_eq!(enumerate_realizations(&s, 10).unwrap().len(), 945);
}

#[test]
fn parse_accepts_both_styles_and_rejects_garbage() {
    assert_eq!(parse_sequence("2^3,3^28,4^5").unwrap().len(), 36);
    assert_eq!(parse_sequence("3, 1, 2, 2").unwrap().degrees(), &[1, 2, 2, 3]);
    for bad in ["", "1,,2", "a", "2^", "1^0", "3,3,3"] {
        assert!(parse_sequence(bad).is_err(), "{bad:?}");
    }
}

proptest! {
    #[test]
    fn format_round_trips(d in (1usize..12).prop_flat_map(sorted_vec)) {
        let s = seq(&d);
        for style in [FormatStyle::Expanded, FormatStyle::Exponent] {
            let text = format_sequence(&s, style);
            prop_assert_eq!(parse_sequence(&text).unwrap(), s.clone());
        }
        prop_assert_eq!(s.to_string().parse::<DegreeSequence>().unwrap(), s);
    }

    #[test]
    fn majorization_is_a_partial_order(
        (a, b, c) in (1usize..10).prop_flat_map(|n| (sorted_vec(n), sorted_vec(n), sorted_vec(n)))
    ) {
        let (sa, sb, sc) = (seq(&a), seq(&b), seq(&c));
        prop_assert!(sa.majorizes(&sa).unwrap());
        prop_assert_eq!(sa.majorizes(&sb).unwrap(), common::majorizes(&a, &b));
        if sa.majorizes(&sb).unwrap() && sb.majorizes(&sa).unwrap() {
            prop_assert_eq!(&sa, &sb);
        }
        if sa.majorizes(&sb).unwrap() && sb.majorizes(&sc).unwrap() {
            prop_assert!(sa.majorizes(&sc).unwrap());
        }
    }

    #[test]
    fn majorization_rejects_length_mismatch(a in sorted_vec(4), b in sorted_vec(5)) {
        prop_assert!(seq(&a).majorizes(&seq(&b)).is_err());
    }
}
