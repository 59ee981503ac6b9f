mod common;

use std::collections::BTreeSet;

use subshift::graph::LabeledGraph;
use subshift::{enumerate_language, Alphabet, CodedSystem, Language, Oracle, SGapSpec, Side, SoficShift, Word};

// The coded golden mean is itself sofic: the golden mean graph plus a
// separator edge between every pair of states.
fn coded_golden_mean_graph() -> SoficShift {
    let states = ["a", "b"];
    let mut edges = vec![("a", "0", "a"), ("a", "1", "b"), ("b", "0", "a")];
    for s in states {
        for t in states {
            edges.push((s, "c", t));
        }
    }
    let g = LabeledGraph::new(Alphabet::new(["0", "1", "c"]).unwrap(), &states, &edges).unwrap();
    SoficShift::new(&g).unwrap()
}

// S = {1, 2}: after a 1, one or two 0s, then another 1.
fn sgap_12_graph() -> SoficShift {
    let g = LabeledGraph::parse("alphabet: 0 1\nstates: p q r\nedge: p 0 q\nedge: q 0 r\nedge: q 1 p\nedge: r 1 p\n").unwrap();
    SoficShift::new(&g).unwrap()
}

/// Factors of length `n` of concatenations of blocks `0^s 1`, built directly.
fn sgap_factors(gaps: &[u64], n: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let mut stack = vec![String::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() >= 2 * n + 2 {
            for i in 0..=prefix.len() - n {
                out.insert(prefix[i..i + n].to_string());
            }
            continue;
        }
        for &s in gaps {
            stack.push(format!("{prefix}{}1", "0".repeat(s as usize)));
        }
    }
    out
}

fn render_all(sys: &dyn Language, n: usize) -> BTreeSet<String> {
    enumerate_language(sys, n)
        .unwrap()
        .iter()
        .map(|w| sys.alphabet().render(w).replace(' ', ""))
        .collect()
}

#[test]
fn coded_golden_mean_matches_graph_presentation() {
    let y = common::coded_golden_mean();
    let g = coded_golden_mean_graph();
    assert_eq!(y.alphabet(), g.alphabet());
    for n in 0..=9 {
        assert_eq!(enumerate_language(&y, n).unwrap(), enumerate_language(&g, n).unwrap(), "n = {n}");
    }
}

#[test]
fn sgap_membership_matches_independent_constructions() {
    let y = common::sgap_12();
    let g = sgap_12_graph();
    for n in 0..=10 {
        assert_eq!(enumerate_language(&y, n).unwrap(), enumerate_language(&g, n).unwrap(), "n = {n}");
    }
    for n in 1..=8 {
        assert_eq!(render_all(&y, n), sgap_factors(&[1, 2], n), "n = {n}");
    }
    let pow2 = CodedSystem::sgap(SGapSpec::powers_of_two(64).unwrap());
    for n in 1..=8 {
        assert_eq!(render_all(&pow2, n), sgap_factors(&[1, 2, 4, 8, 16], n), "n = {n}");
    }
}

#[test]
fn base_embedding_is_exact() {
    let y = common::coded_golden_mean();
    let x = common::golden_mean();
    for n in 0..=8 {
        let sep_free: BTreeSet<Word> = enumerate_language(&y, n)
            .unwrap()
            .into_iter()
            .filter(|w| !w.contains(&y.separator()))
            .map(|w| y.to_base(&w).unwrap())
            .collect();
        let base: BTreeSet<Word> = enumerate_language(&x, n).unwrap().into_iter().collect();
        assert_eq!(sep_free, base, "n = {n}");
        for w in &base {
            assert!(y.contains(&y.from_base(w)).unwrap());
        }
    }
}

#[test]
fn separator_forgets_the_past() {
    let y = common::coded_golden_mean();
    let o = Oracle::new(&y);
    let c = y.separator();
    for lu in 0..=4 {
        for lv in 0..=4 {
            for u in enumerate_language(&y, lu).unwrap() {
                for v in enumerate_language(&y, lv).unwrap() {
                    let cv = Word::from_letters(&[c]).concat(&v);
                    let ucv = u.concat(&cv);
                    if !y.contains(&ucv).unwrap() {
                        assert!(!y.contains(&cv).unwrap() || !y.contains(&u.pushed(c)).unwrap());
                        continue;
                    }
                    for d in 1..=4 {
                        assert_eq!(
                            o.profile(&ucv, Side::Follower, d).unwrap().extensions,
                            o.profile(&cv, Side::Follower, d).unwrap().extensions
                        );
                    }
                    assert_eq!(y.normalize_after_separator(&ucv).unwrap(), y.normalize_after_separator(&cv).unwrap());
                }
            }
        }
    }
}

#[test]
fn separator_forgets_the_past_at_depth_five() {
    let y = common::sgap_12();
    let o = Oracle::new(&y);
    let sep = y.separator();
    for n in 0..=6 {
        for w in enumerate_language(&y, n).unwrap() {
            if !w.contains(&sep) {
                continue;
            }
            let tail = y.normalize_after_separator(&w).unwrap();
            assert_eq!(
                o.profile(&w, Side::Follower, 5).unwrap().extensions,
                o.profile(&tail, Side::Follower, 5).unwrap().extensions
            );
        }
    }
    let a = y.alphabet().parse_word("0010").unwrap();
    let b = y.alphabet().parse_word("10").unwrap();
    assert_eq!(y.normalize_after_separator(&a).unwrap(), b);
    assert_eq!(
        o.profile(&a, Side::Follower, 3).unwrap().extensions,
        o.profile(&b, Side::Follower, 3).unwrap().extensions
    );
    let none = y.alphabet().parse_word("00").unwrap();
    assert!(y.normalize_after_separator(&none).is_err());
}

#[test]
fn separator_collisions_are_rejected() {
    assert!(CodedSystem::from_shift(common::golden_mean(), "1").is_err());
}

#[test]
fn finite_gap_sets_are_exhaustive_and_rules_respect_cutoff() {
    let spec = SGapSpec::from_gaps([1, 2]).unwrap();
    assert!(!spec.has_gap_at_least(3).unwrap());
    let pow2 = SGapSpec::powers_of_two(64).unwrap();
    assert!(pow2.has_gap_at_least(33).unwrap());
    assert!(pow2.has_gap_at_least(65).is_err());
    let y = CodedSystem::sgap(pow2);
    let long = Word(vec![y.alphabet().letter("0").unwrap(); 70]);
    assert!(y.contains(&long).unwrap_err().is_budget());
}

#[test]
fn sgap_follower_counts_stabilize_for_a_sofic_gap_set() {
    let y = common::sgap_12();
    let g = sgap_12_graph();
    let o = Oracle::new(&y);
    for n in 0..=6 {
        let exact = g.class_table(n, Side::Follower).unwrap().count();
        for d in 3..=6 {
            assert_eq!(o.classify(n, Side::Follower, d).unwrap().count(), exact, "n={n} d={d}");
        }
        assert!(exact <= 3);
    }
}

#[test]
fn powers_of_two_counts_keep_growing_in_range() {
    // reported, not a proof of nonsoficity
    let y = CodedSystem::sgap(SGapSpec::powers_of_two(64).unwrap());
    let o = Oracle::new(&y);
    let counts: Vec<usize> = (0..=8).map(|n| o.classify(n, Side::Follower, 10).unwrap().count()).collect();
    println!("powers-of-two S-gap, depth 10 follower counts for n = 0..8: {counts:?}");
    assert!(counts[8] > counts[2]);
}
