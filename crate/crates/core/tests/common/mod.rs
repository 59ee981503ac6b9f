#![allow(dead_code)]

use subshift::graph::builtin;
use subshift::{CodedSystem, Language, SGapSpec, SoficShift, UpDown};

pub fn golden_mean() -> SoficShift {
    SoficShift::named(&builtin::golden_mean(), "golden-mean").unwrap()
}

pub fn even_shift() -> SoficShift {
    SoficShift::named(&builtin::even_shift(), "even-shift").unwrap()
}

pub fn full_shift() -> SoficShift {
    SoficShift::named(&builtin::full_shift(), "full-shift").unwrap()
}

pub fn periodic() -> SoficShift {
    SoficShift::named(&builtin::periodic_01(), "periodic-01").unwrap()
}

pub fn sofic_systems() -> Vec<SoficShift> {
    vec![golden_mean(), even_shift(), full_shift(), periodic()]
}

pub fn sgap_12() -> CodedSystem {
    CodedSystem::sgap(SGapSpec::from_gaps([1, 2]).unwrap())
}

pub fn coded_golden_mean() -> CodedSystem {
    CodedSystem::from_shift(golden_mean(), "c").unwrap()
}

/// Every built-in system behind the membership contract.
pub fn all_systems() -> Vec<Box<dyn Language>> {
    let mut v: Vec<Box<dyn Language>> = sofic_systems()
        .into_iter()
        .map(|s| Box::new(s) as Box<dyn Language>)
        .collect();
    v.push(Box::new(UpDown::default()));
    v.push(Box::new(sgap_12()));
    v.push(Box::new(coded_golden_mean()));
    v.push(Box::new(CodedSystem::sgap(SGapSpec::powers_of_two(64).unwrap())));
    v
}

/// Membership in the up/down shift by walking the graph from every start
/// vertex up to `2^(len+1)`, one vertex at a time. Independent of the
/// interval calculus.
pub fn updown_brute_member(word: &str) -> bool {
    let bound = 1u64 << (word.len() + 1);
    (0..=bound).any(|v| walk(v, word).is_some())
}

/// Explicit walk of the up/down graph from vertex `v`.
pub fn walk(mut v: u64, word: &str) -> Option<u64> {
    for c in word.chars() {
        v = match c {
            'U' => v + 1,
            'D' if v >= 1 => v / 2,
            'E' if v == 0 => 0,
            _ => return None,
        };
    }
    Some(v)
}

/// Start vertices in `0..=bound` from which `word` can be read.
pub fn brute_initial(word: &str, bound: u64) -> Vec<u64> {
    (0..=bound).filter(|&v| walk(v, word).is_some()).collect()
}
