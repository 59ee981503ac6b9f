//! The infinite up/down/equals graph on the vertices 0, 1, 2, ...
//!
//! From every vertex `k` a `U` edge leads to `k + 1`. From every `k >= 1` a
//! `D` edge leads to `k / 2` (rounded down); vertex 0 instead carries a
//! self-loop labeled `E`, so `D` is never legal at 0 and `E` is legal only
//! there. The graph is right-resolving and presents a nonsofic shift with
//! exactly `2n + 1` follower sets of words of length `n`.
//!
//! Sets of vertices reached by (or starting) paths with a given label are
//! always empty, a half-open interval or a ray, so the engine works on that
//! closed family symbolically.

use std::collections::BTreeSet;
use std::fmt;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::error::{Error, Result};
use crate::language::Language;
use crate::table::{ClassTable, Side};

pub const DEFAULT_MAX_LEN: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    D,
    E,
    U,
}

impl Step {
    pub const ALL: [Step; 3] = [Step::D, Step::E, Step::U];

    pub fn from_letter(alphabet: &Alphabet, a: Letter) -> Result<Step> {
        if a.index() >= alphabet.len() {
            return Err(Error::UnknownLetter(format!("#{}", a.0)));
        }
        match alphabet.token(a) {
            "D" => Ok(Step::D),
            "E" => Ok(Step::E),
            "U" => Ok(Step::U),
            other => Err(Error::UnknownLetter(other.to_string())),
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Step::D => "D",
            Step::E => "E",
            Step::U => "U",
        }
    }

    /// Position in the sorted alphabet `D E U`.
    pub fn letter(self) -> Letter {
        Letter(self as u8)
    }
}

/// Empty set, `[lo, hi)` with `lo < hi`, or `[lo, inf)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexSet {
    Empty,
    Interval { lo: u64, hi: u64 },
    Ray { lo: u64 },
}

impl VertexSet {
    /// Normalizes `[lo, hi)`; empty when `hi <= lo`.
    pub fn interval(lo: u64, hi: u64) -> VertexSet {
        if hi > lo {
            VertexSet::Interval { lo, hi }
        } else {
            VertexSet::Empty
        }
    }

    pub fn singleton(k: u64) -> VertexSet {
        VertexSet::Interval { lo: k, hi: k + 1 }
    }

    pub fn ray(lo: u64) -> VertexSet {
        VertexSet::Ray { lo }
    }

    pub fn all() -> VertexSet {
        VertexSet::Ray { lo: 0 }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, VertexSet::Empty)
    }

    pub fn contains(&self, k: u64) -> bool {
        match *self {
            VertexSet::Empty => false,
            VertexSet::Interval { lo, hi } => lo <= k && k < hi,
            VertexSet::Ray { lo } => lo <= k,
        }
    }

    pub fn least(&self) -> Option<u64> {
        match *self {
            VertexSet::Empty => None,
            VertexSet::Interval { lo, .. } | VertexSet::Ray { lo } => Some(lo),
        }
    }

    /// Image under one forward edge labeled `step`.
    pub fn forward(self, step: Step) -> VertexSet {
        match (step, self) {
            (_, VertexSet::Empty) => VertexSet::Empty,
            (Step::U, VertexSet::Interval { lo, hi }) => VertexSet::interval(lo + 1, hi + 1),
            (Step::U, VertexSet::Ray { lo }) => VertexSet::ray(lo + 1),
            // only vertices >= 1 carry a D edge
            (Step::D, VertexSet::Interval { lo, hi }) => {
                let lo = lo.max(1);
                if lo >= hi {
                    VertexSet::Empty
                } else {
                    VertexSet::interval(lo / 2, (hi - 1) / 2 + 1)
                }
            }
            (Step::D, VertexSet::Ray { lo }) => VertexSet::ray(lo.max(1) / 2),
            (Step::E, s) => {
                if s.contains(0) {
                    VertexSet::singleton(0)
                } else {
                    VertexSet::Empty
                }
            }
        }
    }

    /// Preimage under one edge labeled `step`: the vertices with a `step`
    /// edge landing in `self`.
    pub fn backward(self, step: Step) -> VertexSet {
        match (step, self) {
            (_, VertexSet::Empty) => VertexSet::Empty,
            (Step::U, VertexSet::Interval { lo, hi }) => {
                VertexSet::interval(lo.saturating_sub(1), hi - 1)
            }
            (Step::U, VertexSet::Ray { lo }) => VertexSet::ray(lo.saturating_sub(1)),
            // k / 2 in [lo, hi) iff k in [2lo, 2hi); vertex 0 has no D edge
            (Step::D, VertexSet::Interval { lo, hi }) => VertexSet::interval((2 * lo).max(1), 2 * hi),
            (Step::D, VertexSet::Ray { lo }) => VertexSet::ray((2 * lo).max(1)),
            (Step::E, s) => {
                if s.contains(0) {
                    VertexSet::singleton(0)
                } else {
                    VertexSet::Empty
                }
            }
        }
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexSet::Empty => f.write_str("empty"),
            VertexSet::Interval { lo, hi } => write!(f, "[{lo},{hi})"),
            VertexSet::Ray { lo } => write!(f, "[{lo},inf)"),
        }
    }
}

/// The shift presented by the up/down/equals graph.
#[derive(Debug, Clone)]
pub struct UpDown {
    alphabet: Alphabet,
    max_len: usize,
}

impl Default for UpDown {
    fn default() -> Self {
        UpDown::new(DEFAULT_MAX_LEN)
    }
}

/// Exact count table for the up/down shift, keyed by vertex sets.
pub type VertexTable = ClassTable<VertexSet>;

impl UpDown {
    /// `max_len` caps the word length of exhaustive tables.
    pub fn new(max_len: usize) -> Self {
        UpDown {
            alphabet: Alphabet::new(["D", "E", "U"]).expect("static alphabet"),
            max_len,
        }
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn word(&self, text: &str) -> Result<Word> {
        self.alphabet.parse_word(text)
    }

    pub fn render(&self, w: &[Letter]) -> String {
        self.alphabet.render(w)
    }

    fn steps(&self, w: &[Letter]) -> Result<Vec<Step>> {
        w.iter().map(|&a| Step::from_letter(&self.alphabet, a)).collect()
    }

    pub fn forward_step(&self, s: VertexSet, a: Letter) -> Result<VertexSet> {
        Ok(s.forward(Step::from_letter(&self.alphabet, a)?))
    }

    pub fn backward_step(&self, s: VertexSet, a: Letter) -> Result<VertexSet> {
        Ok(s.backward(Step::from_letter(&self.alphabet, a)?))
    }

    /// Terminal vertices of paths labeled `w`; empty iff `w` is not a word of the shift.
    pub fn terminal(&self, w: &[Letter]) -> Result<VertexSet> {
        Ok(self
            .steps(w)?
            .into_iter()
            .fold(VertexSet::all(), VertexSet::forward))
    }

    /// Initial vertices of paths labeled `w`.
    pub fn initial(&self, w: &[Letter]) -> Result<VertexSet> {
        Ok(self
            .steps(w)?
            .into_iter()
            .rev()
            .fold(VertexSet::all(), VertexSet::backward))
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n > self.max_len {
            return Err(Error::Budget {
                what: "up/down word length",
                requested: n as u128,
                limit: self.max_len as u128,
            });
        }
        Ok(())
    }

    /// All words of length `n` with their terminal sets, by a pruned walk of
    /// the prefix tree.
    pub fn terminal_sets(&self, n: usize) -> Result<Vec<(Word, VertexSet)>> {
        self.check_len(n)?;
        let mut out = Vec::new();
        let mut prefix = Word::empty();
        walk_forward(VertexSet::all(), n, &mut prefix, &mut out);
        Ok(out)
    }

    /// Exact follower-set table: distinct terminal sets are distinct follower sets.
    pub fn follower_table(&self, n: usize) -> Result<VertexTable> {
        Ok(ClassTable::build_keyed(n, Side::Follower, self.terminal_sets(n)?))
    }

    /// Exact predecessor-set table: distinct initial sets are distinct predecessor sets.
    pub fn predecessor_table(&self, n: usize) -> Result<VertexTable> {
        let words = self.terminal_sets(n)?;
        let entries = words
            .into_iter()
            .map(|(w, _)| {
                let i = self.initial(&w).expect("letters come from the alphabet");
                (w, i)
            })
            .collect::<Vec<_>>();
        Ok(ClassTable::build_keyed(n, Side::Predecessor, entries))
    }

    /// Distinct follower sets among all words of length at most `n`.
    pub fn cumulative_follower_count(&self, n: usize) -> Result<usize> {
        let mut seen = BTreeSet::new();
        for len in 0..=n {
            seen.extend(self.terminal_sets(len)?.into_iter().map(|(_, s)| s));
        }
        Ok(seen.len())
    }

    /// Whether every terminal set at length `n` already occurs at a shorter length.
    pub fn unions_criterion(&self, n: usize) -> Result<bool> {
        let mut shorter = BTreeSet::new();
        for len in 0..n {
            shorter.extend(self.terminal_sets(len)?.into_iter().map(|(_, s)| s));
        }
        Ok(self
            .terminal_sets(n)?
            .iter()
            .all(|(_, s)| shorter.contains(s)))
    }

    /// Words `v D^(ceil(n/2)-1) E` with `v` a `U`/`D` word of length
    /// `floor(n/2)` free of `UU`. Their initial sets are pairwise distinct.
    pub fn witness_set(&self, n: usize) -> Result<Vec<Word>> {
        if n <= 6 {
            return Err(Error::Precondition(format!(
                "witness set needs length above 6, got {n}"
            )));
        }
        let tail_d = n.div_ceil(2) - 1;
        let mut tail = vec![Step::D.letter(); tail_d];
        tail.push(Step::E.letter());
        let mut out: Vec<Word> = no_double_u(n / 2)
            .into_iter()
            .map(|v| v.concat(&tail))
            .collect();
        out.sort();
        Ok(out)
    }

    /// `U^(2^m - k - 1) D^m E` where `2^m` is the least power of two above `k`.
    /// Legal after a word ending at `k` (or at any vertex of a ray from `k`),
    /// illegal after one ending only at vertices above `k`.
    pub fn follower_witness(&self, k: u64) -> Word {
        let m = least_power_above(k);
        let mut w = vec![Step::U.letter(); ((1u64 << m) - k - 1) as usize];
        w.extend(std::iter::repeat(Step::D.letter()).take(m as usize));
        w.push(Step::E.letter());
        Word(w)
    }

    /// `D^(m+1) E` with `2^m` the least power of two above `k`: legal from
    /// `2^m`, illegal from `k`. Separates `{k}` from `[k, inf)`.
    pub fn ray_witness(&self, k: u64) -> Word {
        let m = least_power_above(k);
        let mut w = vec![Step::D.letter(); m as usize + 1];
        w.push(Step::E.letter());
        Word(w)
    }

    /// A word that follows exactly one of two distinct nonempty terminal sets.
    pub fn separating_word(&self, s: VertexSet, t: VertexSet) -> Option<Word> {
        let (a, b) = (s.least()?, t.least()?);
        if s == t {
            return None;
        }
        if a == b {
            // same least vertex: one is {k}, the other [k, inf)
            return Some(self.ray_witness(a));
        }
        Some(self.follower_witness(a.min(b)))
    }
}

fn least_power_above(k: u64) -> u32 {
    // 2^m > k
    64 - k.leading_zeros()
}

fn walk_forward(s: VertexSet, n: usize, prefix: &mut Word, out: &mut Vec<(Word, VertexSet)>) {
    if prefix.len() == n {
        out.push((prefix.clone(), s));
        return;
    }
    for step in Step::ALL {
        let t = s.forward(step);
        if !t.is_empty() {
            prefix.push(step.letter());
            walk_forward(t, n, prefix, out);
            prefix.0.pop();
        }
    }
}

fn no_double_u(len: usize) -> Vec<Word> {
    let mut words = vec![Word::empty()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(words.len() * 2);
        for w in &words {
            next.push(w.pushed(Step::D.letter()));
            if w.last() != Some(&Step::U.letter()) {
                next.push(w.pushed(Step::U.letter()));
            }
        }
        words = next;
    }
    words
}

/// Parameters of the closed form for the initial interval of `v` followed by a seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormParams {
    /// Number of `D` letters in `v`.
    pub doublings: u32,
    /// For each `U`, the number of `D` letters to its left; strictly
    /// decreasing when listed from the rightmost `U`.
    pub exponents: Vec<u32>,
    pub a: u64,
    pub b: u64,
}

impl ClosedFormParams {
    pub fn left_endpoint(&self) -> u64 {
        (self.a << self.doublings) - self.offset()
    }

    pub fn right_endpoint(&self) -> u64 {
        (self.b << self.doublings) - self.offset()
    }

    fn offset(&self) -> u64 {
        self.exponents.iter().map(|&e| 1u64 << e).sum()
    }
}

impl UpDown {
    /// Initial set of `v · s` where `s` is a suffix with initial set
    /// `[a, b)`, computed without iterating: `[2^j a - Σ 2^n_i, 2^j b - Σ 2^n_i)`.
    ///
    /// Requires `v` over `U`/`D` with no `UU` and `a` larger than the number
    /// of `U` letters, so no intermediate interval touches vertex 0.
    pub fn closed_form_params(&self, v: &[Letter], seed: VertexSet) -> Result<ClosedFormParams> {
        let VertexSet::Interval { lo: a, hi: b } = seed else {
            return Err(Error::Precondition(format!("seed must be a finite interval, got {seed}")));
        };
        let steps = self.steps(v)?;
        if steps.contains(&Step::E) {
            return Err(Error::Precondition("closed form word must not contain E".into()));
        }
        if steps.windows(2).any(|p| p == [Step::U, Step::U]) {
            return Err(Error::Precondition("closed form word contains consecutive U".into()));
        }
        let ups = steps.iter().filter(|&&s| s == Step::U).count() as u64;
        if a <= ups {
            return Err(Error::Precondition(format!(
                "seed start {a} must exceed the number of U letters ({ups})"
            )));
        }
        let mut exponents = Vec::new();
        let mut ds_left = 0u32;
        for s in &steps {
            match s {
                Step::D => ds_left += 1,
                Step::U => exponents.push(ds_left),
                Step::E => unreachable!(),
            }
        }
        exponents.reverse();
        if ds_left >= 62 || (b as u128) << ds_left >= u64::MAX as u128 {
            return Err(Error::Precondition("closed form overflows 64 bits".into()));
        }
        Ok(ClosedFormParams {
            doublings: ds_left,
            exponents,
            a,
            b,
        })
    }

    pub fn closed_form(&self, v: &[Letter], seed: VertexSet) -> Result<VertexSet> {
        let p = self.closed_form_params(v, seed)?;
        Ok(VertexSet::interval(p.left_endpoint(), p.right_endpoint()))
    }
}

impl Language for UpDown {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn contains(&self, word: &[Letter]) -> Result<bool> {
        Ok(!self.terminal(word)?.is_empty())
    }

    fn name(&self) -> String {
        "updown".to_string()
    }
}
