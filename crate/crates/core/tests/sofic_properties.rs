mod common;

use proptest::prelude::*;
use subshift::graph::LabeledGraph;
use subshift::{Alphabet, Language, Oracle, Side, SoficShift, StateSet, Word};

// Unions lemma at table level: T(w) is the union of T(aw) over letters a with aw a word.
#[test]
fn terminal_set_is_union_of_one_letter_extensions() {
    for s in common::sofic_systems() {
        for n in 0..=6 {
            for (w, t) in s.terminal_sets(n) {
                let mut union = StateSet::empty();
                for a in s.alphabet().letters() {
                    let aw = w.prepended(a);
                    let ta = s.terminal_set(&aw);
                    union = union.union(&ta);
                }
                assert_eq!(union, t, "{}", s.name());
            }
        }
    }
}

// Superset lemma: a suffix's follower set contains the word's.
#[test]
fn suffix_follower_sets_are_supersets() {
    for s in common::sofic_systems() {
        for n in 0..=6 {
            for (w, t) in s.terminal_sets(n) {
                for suffix in w.suffixes() {
                    let ts = s.terminal_set(suffix);
                    assert!(s.languages_equal(&ts.union(&t), &ts), "{}", s.name());
                }
            }
        }
    }
}

// Lengthen lemma: equal follower classes stay equal after appending a letter.
#[test]
fn equal_classes_stay_equal_after_extension() {
    for s in common::sofic_systems() {
        for n in 0..=6 {
            let table = s.class_table(n, Side::Follower).unwrap();
            let next = s.class_table(n + 1, Side::Follower).unwrap();
            let words: Vec<&Word> = table.words().collect();
            for (i, w) in words.iter().enumerate() {
                for u in &words[i + 1..] {
                    if table.class_of(w) != table.class_of(u) {
                        continue;
                    }
                    for a in s.alphabet().letters() {
                        let (wa, ua) = (w.pushed(a), u.pushed(a));
                        assert_eq!(next.class_of(&wa).is_some(), next.class_of(&ua).is_some());
                        if next.class_of(&wa).is_some() {
                            assert_eq!(next.class_of(&wa), next.class_of(&ua), "{}", s.name());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn class_tables_agree_with_depth_four_profiles() {
    for s in [common::golden_mean(), common::even_shift()] {
        let oracle = Oracle::new(&s);
        for n in 0..=6 {
            for side in [Side::Follower, Side::Predecessor] {
                let exact = s.class_table(n, side).unwrap();
                let profiled = oracle.classify(n, side, 4).unwrap();
                assert_eq!(exact.assignments, profiled.assignments, "{} n={n} {side}", s.name());
            }
        }
    }
}

#[test]
fn class_counts_never_exceed_automaton_size() {
    for s in common::sofic_systems() {
        let aut = s.follower_automaton().unwrap();
        for n in 0..=8 {
            assert!(s.class_table(n, Side::Follower).unwrap().count() <= aut.node_count());
            assert!(s.cumulative_follower_count(n) <= aut.node_count());
            assert!(s.cumulative_follower_count(n) <= s.cumulative_follower_count(n + 1));
        }
    }
}

#[test]
fn automaton_runs_agree_with_class_tables() {
    for s in common::sofic_systems() {
        let aut = s.follower_automaton().unwrap();
        for n in 0..=6 {
            let table = s.class_table(n, Side::Follower).unwrap();
            for (w, &id) in &table.assignments {
                let node = aut.run(w).expect("word is in the language");
                let (_, set) = aut.representative(node);
                assert!(s.languages_equal(set, &table.representatives[id].1));
            }
        }
    }
}

#[test]
fn unions_criterion_implies_finite_automaton() {
    for s in common::sofic_systems() {
        if (1..=6).any(|n| s.unions_criterion(n)) {
            assert!(s.follower_automaton().is_ok());
        }
    }
}

fn arb_graph() -> impl Strategy<Value = LabeledGraph> {
    (1usize..=4).prop_flat_map(|states| {
        proptest::collection::btree_set((0..states, 0u8..2, 0..states), 1..=8).prop_map(move |edges| {
            let names: Vec<String> = (0..states).map(|i| format!("s{i}")).collect();
            let triples: Vec<(String, String, String)> = edges
                .into_iter()
                .map(|(a, l, b)| (names[a].clone(), l.to_string(), names[b].clone()))
                .collect();
            LabeledGraph::new(Alphabet::new(["0", "1"]).unwrap(), &names, &triples).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn serialization_round_trips(g in arb_graph()) {
        let text = g.serialize();
        let parsed = LabeledGraph::parse(&text).unwrap();
        prop_assert_eq!(&parsed, &g);
        prop_assert_eq!(parsed.serialize(), text);
    }

    #[test]
    fn essentialize_is_idempotent(g in arb_graph()) {
        if let Ok(e) = g.essentialize() {
            prop_assert!(e.is_essential());
            prop_assert_eq!(e.essentialize().unwrap(), e);
        }
    }

    #[test]
    fn random_presentations_respect_invariants(g in arb_graph()) {
        let Ok(s) = SoficShift::new(&g) else { return Ok(()); };
        let aut = s.follower_automaton().unwrap();
        let oracle = Oracle::new(&s);
        for n in 0..=4 {
            let exact = s.class_table(n, Side::Follower).unwrap();
            prop_assert!(exact.count() <= aut.node_count());
            // profiles refine nothing the exact partition merges
            let profiled = oracle.classify(n, Side::Follower, 4).unwrap();
            prop_assert!(profiled.count() <= exact.count());
            for (w, id) in &exact.assignments {
                for (u, id2) in &exact.assignments {
                    if id == id2 {
                        prop_assert_eq!(profiled.class_of(w), profiled.class_of(u));
                    }
                }
            }
            let pred = s.class_table(n, Side::Predecessor).unwrap();
            prop_assert!(oracle.classify(n, Side::Predecessor, 3).unwrap().count() <= pred.count());
        }
    }

    #[test]
    fn languages_equal_is_symmetric_and_matches_short_profiles(g in arb_graph(), a in 0usize..16, b in 0usize..16) {
        let Ok(s) = SoficShift::new(&g) else { return Ok(()); };
        let k = s.graph().state_count();
        let pick = |mask: usize| StateSet::from_states((0..k).filter(|i| mask >> i & 1 == 1));
        let (p, q) = (pick(a), pick(b));
        let eq = s.languages_equal(&p, &q);
        prop_assert_eq!(eq, s.languages_equal(&q, &p));
        if eq {
            // equal languages agree on every short word
            for n in 0..=5 {
                for w in subshift::alphabet::all_words(2, n) {
                    let (tp, tq) = (run(&s, &p, &w), run(&s, &q, &w));
                    prop_assert_eq!(tp.is_empty(), tq.is_empty());
                }
            }
        }
    }
}

fn run(s: &SoficShift, start: &StateSet, w: &Word) -> StateSet {
    w.iter().fold(start.clone(), |acc, &a| s.transition(&acc, a))
}
