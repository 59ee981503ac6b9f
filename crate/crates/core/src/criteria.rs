//! Sufficient conditions for soficity, evaluated as reports.
//!
//! A checker only returns [`Verdict::CertifiedSofic`] when its hypothesis is
//! established from exact counts. Depth-limited counts are lower bounds and
//! cannot establish an upper-bound hypothesis, so every count-based checker
//! answers [`Verdict::NotApplicable`] for them.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::alphabet::{Letter, Word};
use crate::error::Result;
use crate::language::{enumerate_language, Language};
use crate::oracle::Oracle;
use crate::sofic::SoficShift;
use crate::table::Side;
use crate::updown::UpDown;

pub const CITE_UNIONS: &str =
    "F(n) contained in the union of F(l) for l < n implies sofic (every word is shortenable below n)";
pub const CITE_CUMULATIVE: &str =
    "|union of F(l) for l <= n| <= n implies sofic (nonsofic shifts gain a new follower set at every length)";
pub const CITE_LOG: &str = "|F(n)| <= log2(n+1) implies sofic (at most 2^|F(n)| - 1 unions of length-n follower sets)";
pub const CITE_FULL_SHIFT: &str = "|F(n)| = 1 for some n implies a full shift on the letters that occur";
pub const CITE_COMPLEXITY: &str =
    "p(n) <= n for some n implies the shift is a finite union of periodic orbits (Morse-Hedlund)";
pub const CITE_CONJECTURE: &str =
    "conjecture: |F(n)| <= n for some n implies sofic; proved for n <= 3";
pub const CITE_EMPTY_WORD: &str =
    "a nonempty word sharing the follower set of the empty word, together with |F(n)| <= n, implies sofic";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CertifiedSofic,
    HypothesisNotMet,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CertifiedSofic => "certified-sofic",
            Verdict::HypothesisNotMet => "hypothesis-not-met",
            Verdict::NotApplicable => "not-applicable",
        }
    }
}

/// JSON field order is fixed: criterion, system, n, quantities, verdict,
/// citation, notes. Quantities are keyed in sorted order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionReport {
    pub criterion: &'static str,
    pub system: String,
    pub n: usize,
    pub quantities: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub citation: &'static str,
    pub notes: Vec<String>,
}

impl CriterionReport {
    fn new(criterion: &'static str, system: String, n: usize, citation: &'static str) -> Self {
        CriterionReport {
            criterion,
            system,
            n,
            quantities: BTreeMap::new(),
            verdict: Verdict::HypothesisNotMet,
            citation,
            notes: Vec::new(),
        }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.quantities.insert(key.to_string(), value);
        self
    }

    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::CertifiedSofic
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Follower-set data a checker consumes.
pub trait FollowerSource {
    fn system(&self) -> String;

    /// Whether counts are exact rather than depth-limited lower bounds.
    fn exact(&self) -> bool;

    fn follower_count(&self, n: usize) -> Result<usize>;

    fn unions_holds(&self, n: usize) -> Result<bool>;

    fn cumulative_count(&self, n: usize) -> Result<usize>;

    /// Number of nonempty words of length at most `n` with the empty word's follower set.
    fn empty_word_twins(&self, n: usize) -> Result<usize>;

    /// Whether every two-letter word over the occurring letters is in the language.
    fn all_letter_pairs(&self) -> Result<bool>;
}

fn all_letter_pairs_in<L: Language + ?Sized>(lang: &L) -> Result<bool> {
    let mut active = Vec::new();
    for a in lang.alphabet().letters() {
        if lang.contains(&[a])? {
            active.push(a);
        }
    }
    for &a in &active {
        for &b in &active {
            if !lang.contains(&[a, b])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl FollowerSource for SoficShift {
    fn system(&self) -> String {
        self.name()
    }

    fn exact(&self) -> bool {
        true
    }

    fn follower_count(&self, n: usize) -> Result<usize> {
        Ok(self.class_table(n, Side::Follower)?.count())
    }

    fn unions_holds(&self, n: usize) -> Result<bool> {
        Ok(self.unions_criterion(n))
    }

    fn cumulative_count(&self, n: usize) -> Result<usize> {
        Ok(self.cumulative_follower_count(n))
    }

    fn empty_word_twins(&self, n: usize) -> Result<usize> {
        Ok(SoficShift::empty_word_twins(self, n).len())
    }

    fn all_letter_pairs(&self) -> Result<bool> {
        all_letter_pairs_in(self)
    }
}

impl FollowerSource for UpDown {
    fn system(&self) -> String {
        self.name()
    }

    fn exact(&self) -> bool {
        true
    }

    fn follower_count(&self, n: usize) -> Result<usize> {
        Ok(self.follower_table(n)?.count())
    }

    fn unions_holds(&self, n: usize) -> Result<bool> {
        self.unions_criterion(n)
    }

    fn cumulative_count(&self, n: usize) -> Result<usize> {
        self.cumulative_follower_count(n)
    }

    fn empty_word_twins(&self, n: usize) -> Result<usize> {
        let root = self.terminal(&[])?;
        let mut twins = 0;
        for len in 1..=n {
            twins += self
                .terminal_sets(len)?
                .iter()
                .filter(|(_, s)| *s == root)
                .count();
        }
        Ok(twins)
    }

    fn all_letter_pairs(&self) -> Result<bool> {
        all_letter_pairs_in(self)
    }
}

/// Follower data estimated from depth-`depth` profiles of an oracle.
pub struct DepthLimited<L> {
    oracle: Oracle<L>,
    depth: usize,
}

impl<L: Language> DepthLimited<L> {
    pub fn new(oracle: Oracle<L>, depth: usize) -> Self {
        DepthLimited { oracle, depth }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn oracle(&self) -> &Oracle<L> {
        &self.oracle
    }
}

impl<L: Language> FollowerSource for DepthLimited<L> {
    fn system(&self) -> String {
        self.oracle.language().name()
    }

    fn exact(&self) -> bool {
        false
    }

    fn follower_count(&self, n: usize) -> Result<usize> {
        Ok(self.oracle.classify(n, Side::Follower, self.depth)?.count())
    }

    fn unions_holds(&self, n: usize) -> Result<bool> {
        let mut shorter = std::collections::BTreeSet::new();
        for len in 0..n {
            for (_, p) in self.oracle.classify(len, Side::Follower, self.depth)?.representatives {
                shorter.insert(p);
            }
        }
        Ok(self
            .oracle
            .classify(n, Side::Follower, self.depth)?
            .representatives
            .iter()
            .all(|(_, p)| shorter.contains(p)))
    }

    fn cumulative_count(&self, n: usize) -> Result<usize> {
        self.oracle.cumulative_follower_count(n, self.depth)
    }

    fn empty_word_twins(&self, n: usize) -> Result<usize> {
        let root = self.oracle.profile(&Word::empty(), Side::Follower, self.depth)?;
        let mut twins = 0;
        for len in 1..=n {
            for w in enumerate_language(self.oracle.language(), len)? {
                if self.oracle.profile(&w, Side::Follower, self.depth)?.extensions == root.extensions {
                    twins += 1;
                }
            }
        }
        Ok(twins)
    }

    fn all_letter_pairs(&self) -> Result<bool> {
        all_letter_pairs_in(self.oracle.language())
    }
}

fn not_applicable(mut report: CriterionReport) -> CriterionReport {
    report.verdict = Verdict::NotApplicable;
    report
        .notes
        .push("counts are depth-limited lower bounds; they can refute but never establish this hypothesis".into());
    report.with("exact", json!(false))
}

pub fn check_unions(src: &dyn FollowerSource, n: usize) -> Result<CriterionReport> {
    let report = CriterionReport::new("unions", src.system(), n, CITE_UNIONS);
    if !src.exact() {
        return Ok(not_applicable(report));
    }
    if n == 0 {
        let mut r = report.with("exact", json!(true));
        r.verdict = Verdict::NotApplicable;
        r.notes.push("needs n >= 1".into());
        return Ok(r);
    }
    let holds = src.unions_holds(n)?;
    let mut r = report
        .with("exact", json!(true))
        .with("contained", json!(holds))
        .with("follower_count", json!(src.follower_count(n)?));
    if holds {
        r.verdict = Verdict::CertifiedSofic;
    }
    Ok(r)
}

pub fn check_cumulative(src: &dyn FollowerSource, n: usize) -> Result<CriterionReport> {
    let report = CriterionReport::new("cumulative", src.system(), n, CITE_CUMULATIVE);
    if !src.exact() {
        return Ok(not_applicable(report));
    }
    let cumulative = src.cumulative_count(n)?;
    let twins = src.empty_word_twins(n)?;
    let mut r = report
        .with("exact", json!(true))
        .with("cumulative_count", json!(cumulative))
        .with("empty_word_twins", json!(twins));
    if cumulative <= n {
        r.verdict = Verdict::CertifiedSofic;
    }
    if twins > 0 {
        r.notes.push(format!(
            "{twins} nonempty word(s) of length <= {n} share the empty word's follower set; {CITE_EMPTY_WORD}"
        ));
    }
    Ok(r)
}

/// `count` must be the exact number of follower sets of words of length `n`.
pub fn check_log(system: &str, count: usize, n: usize) -> CriterionReport {
    // 2^count <= n + 1, without floating point
    let holds = count < 128 && (1u128 << count) <= n as u128 + 1;
    let mut r = CriterionReport::new("log", system.to_string(), n, CITE_LOG)
        .with("exact", json!(true))
        .with("follower_count", json!(count));
    if holds {
        r.verdict = Verdict::CertifiedSofic;
    }
    r
}

pub fn check_log_source(src: &dyn FollowerSource, n: usize) -> Result<CriterionReport> {
    if !src.exact() {
        return Ok(not_applicable(CriterionReport::new("log", src.system(), n, CITE_LOG)));
    }
    Ok(check_log(&src.system(), src.follower_count(n)?, n))
}

pub fn check_full_shift(src: &dyn FollowerSource, n: usize) -> Result<CriterionReport> {
    let report = CriterionReport::new("full-shift", src.system(), n, CITE_FULL_SHIFT);
    if !src.exact() {
        return Ok(not_applicable(report));
    }
    let count = src.follower_count(n)?;
    let mut r = report
        .with("exact", json!(true))
        .with("follower_count", json!(count));
    if count == 1 {
        if src.all_letter_pairs()? {
            r.verdict = Verdict::CertifiedSofic;
            r.notes.push("full shift on active alphabet".into());
        } else {
            r.notes
                .push("single follower set but some two-letter word is missing; engine inconsistency".into());
        }
    }
    Ok(r)
}

/// Exact word complexity up to `n_max`; certifies when `p(n) <= n` for some `n`.
pub fn word_complexity_check<L: Language + ?Sized>(lang: &L, n_max: usize) -> Result<CriterionReport> {
    let mut counts = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        counts.push(enumerate_language(lang, n)?.len());
    }
    let witness = (1..=n_max).find(|&n| counts[n] <= n);
    let mut r = CriterionReport::new("word-complexity", lang.name(), n_max, CITE_COMPLEXITY)
        .with("exact", json!(true))
        .with("complexity", json!(counts));
    if let Some(n) = witness {
        r.verdict = Verdict::CertifiedSofic;
        r = r.with("witness_n", json!(n));
        let unique = unique_right_extension(lang, n)?;
        r = r.with("unique_right_extension_at_witness", json!(unique));
        if unique {
            r.notes.push(format!("every word of length {n} extends uniquely to the right"));
        } else {
            // p(m) = p(m+1) forces unique right extensions at length m
            match (n..n_max).find(|&m| counts[m] == counts[m + 1]) {
                Some(m) => r.notes.push(format!("right extensions become unique at length {m}")),
                None => r.notes.push(format!(
                    "unique right extension not reached by horizon {n_max}"
                )),
            }
        }
        r.notes.push("finite union of periodic orbits".into());
    }
    Ok(r)
}

fn unique_right_extension<L: Language + ?Sized>(lang: &L, n: usize) -> Result<bool> {
    let letters: Vec<Letter> = lang.alphabet().letters().collect();
    for w in enumerate_language(lang, n)? {
        let mut ext = 0;
        for &a in &letters {
            if lang.contains(&w.pushed(a))? {
                ext += 1;
            }
        }
        if ext != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SoficKnowledge {
    Sofic,
    /// Nonsofic with a certificate (as for the up/down shift).
    Nonsofic,
    Unknown,
}

/// Scans exact counts `counts[i] = |F(i + 1)|` for the least `n` with `|F(n)| <= n`.
///
/// Certifies only when that `n` is at most 3, where the conjecture is
/// proved; beyond that the probe is evidence. A least `n` on a shift known
/// to be nonsofic is reported as a violation.
pub fn conjecture_probe(
    system: &str,
    counts: &[usize],
    exact: bool,
    knowledge: SoficKnowledge,
) -> CriterionReport {
    let least = counts
        .iter()
        .enumerate()
        .map(|(i, &c)| (i + 1, c))
        .find(|&(n, c)| c <= n)
        .map(|(n, _)| n);
    let violation = exact && least.is_some() && knowledge == SoficKnowledge::Nonsofic;
    let mut r = CriterionReport::new("conjecture-probe", system.to_string(), counts.len(), CITE_CONJECTURE)
        .with("counts", json!(counts))
        .with("exact", json!(exact))
        .with("least_n", json!(least))
        .with("knowledge", json!(knowledge))
        .with("violation", json!(violation));
    match (exact, least) {
        (false, _) => {
            r.verdict = Verdict::NotApplicable;
            r.notes.push("lower-bound counts cannot witness |F(n)| <= n".into());
        }
        (true, None) => {
            r.notes.push(format!("|F(n)| > n for every n <= {}", counts.len()));
        }
        (true, Some(n)) if n <= 3 => {
            r.verdict = Verdict::CertifiedSofic;
            r.notes.push(format!(
                "|F({n})| <= {n}; the cases n = 1, 2, 3 are proved (n = 1 forces a full shift)"
            ));
        }
        (true, Some(n)) => {
            r.verdict = Verdict::NotApplicable;
            r.notes.push(format!("|F({n})| <= {n}; evidence only, the conjecture is open for n > 3"));
        }
    }
    if violation {
        r.notes.push("CONJECTURE VIOLATION".into());
    }
    r
}

impl CriterionReport {
    pub fn violation(&self) -> bool {
        self.quantities.get("violation") == Some(&Value::Bool(true))
    }
}

/// Every count-based checker for lengths `1..=n_max`, in a fixed order.
pub fn all_checks(src: &dyn FollowerSource, n_max: usize) -> Result<Vec<CriterionReport>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.push(check_unions(src, n)?);
        out.push(check_cumulative(src, n)?);
        out.push(check_log_source(src, n)?);
        out.push(check_full_shift(src, n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::graph::builtin;
    use crate::language::FullShift;

    fn shift(g: crate::graph::LabeledGraph) -> SoficShift {
        SoficShift::new(&g).unwrap()
    }

    #[test]
    fn unions_examples() {
        let even = shift(builtin::even_shift());
        assert!(check_unions(&even, 3).unwrap().is_certified());
        assert_eq!(check_unions(&even, 2).unwrap().verdict, Verdict::HypothesisNotMet);
        let gm = shift(builtin::golden_mean());
        assert!(check_unions(&gm, 2).unwrap().is_certified());
    }

    #[test]
    fn cumulative_examples() {
        let full = shift(builtin::full_shift());
        assert!(check_cumulative(&full, 1).unwrap().is_certified());
        let even = shift(builtin::even_shift());
        let r = check_cumulative(&even, 3).unwrap();
        assert!(r.is_certified());
        assert_eq!(r.quantities["cumulative_count"], json!(3));
        assert!(!r.notes.is_empty());
    }

    #[test]
    fn log_boundaries() {
        assert!(check_log("x", 3, 7).is_certified());
        assert_eq!(check_log("x", 3, 6).verdict, Verdict::HypothesisNotMet);
        assert!(check_log("x", 1, 1).is_certified());
        assert!(!check_log("x", 200, 10).is_certified());
        for n in 1..=12 {
            assert!(!check_log("updown", 2 * n + 1, n).is_certified());
        }
    }

    #[test]
    fn full_shift_examples() {
        let r = check_full_shift(&shift(builtin::full_shift()), 3).unwrap();
        assert!(r.is_certified());
        assert_eq!(r.notes, ["full shift on active alphabet"]);
        assert!(!check_full_shift(&shift(builtin::golden_mean()), 3).unwrap().is_certified());
        assert!(!check_full_shift(&shift(builtin::even_shift()), 1).unwrap().is_certified());
    }

    #[test]
    fn depth_limited_never_certifies() {
        let full = FullShift::new(Alphabet::new(["0", "1"]).unwrap());
        let src = DepthLimited::new(Oracle::new(full), 2);
        for r in all_checks(&src, 3).unwrap() {
            assert_eq!(r.verdict, Verdict::NotApplicable, "{}", r.criterion);
        }
        assert_eq!(
            conjecture_probe("full", &[1, 1], false, SoficKnowledge::Unknown).verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn complexity_examples() {
        let periodic = shift(builtin::periodic_01());
        let r = word_complexity_check(&periodic, 4).unwrap();
        assert!(r.is_certified());
        assert_eq!(r.quantities["witness_n"], json!(2));
        assert_eq!(r.quantities["unique_right_extension_at_witness"], json!(true));

        let full = shift(builtin::full_shift());
        assert!(!word_complexity_check(&full, 6).unwrap().is_certified());
        let gm = shift(builtin::golden_mean());
        assert!(!word_complexity_check(&gm, 8).unwrap().is_certified());
    }

    #[test]
    fn conjecture_probe_examples() {
        let ud: Vec<usize> = (1..=12).map(|n| 2 * n + 1).collect();
        let r = conjecture_probe("updown", &ud, true, SoficKnowledge::Nonsofic);
        assert_eq!(r.quantities["least_n"], Value::Null);
        assert!(!r.violation());
        assert_eq!(r.verdict, Verdict::HypothesisNotMet);

        let r = conjecture_probe("even", &[2, 3, 3, 3], true, SoficKnowledge::Sofic);
        assert_eq!(r.quantities["least_n"], json!(3));
        assert!(r.is_certified());
        assert!(!r.violation());

        let r = conjecture_probe("full", &[1, 1, 1], true, SoficKnowledge::Sofic);
        assert_eq!(r.quantities["least_n"], json!(1));

        let r = conjecture_probe("fake", &[5, 5, 5, 4], true, SoficKnowledge::Nonsofic);
        assert!(r.violation());
    }

    #[test]
    fn json_key_order_is_fixed() {
        let r = check_log("even", 3, 7);
        let s = r.to_json();
        let keys = ["\"criterion\"", "\"system\"", "\"n\"", "\"quantities\"", "\"verdict\"", "\"citation\"", "\"notes\""];
        let positions: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|p| p[0] < p[1]), "{s}");
        assert!(s.contains("\"verdict\":\"certified-sofic\""));
    }
}
