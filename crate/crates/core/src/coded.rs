//! Coded subshifts whose code words are `w c` for `w` in a base set `W`,
//! with `c` a separator letter outside the base alphabet.
//!
//! A finite word `s_0 c s_1 c ... c s_m` belongs to the coded shift iff the
//! interior segments are in `W`, `s_0` is a suffix of a word of `W` and
//! `s_m` is a prefix of one. A word with no separator must be a factor of a
//! word of `W`.

use std::fmt;
use std::sync::Arc;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::language::Language;
use crate::sofic::SoficShift;

/// Membership predicates for the base set `W`, over the base alphabet.
pub trait CodeWords: Send + Sync {
    fn base_alphabet(&self) -> &Alphabet;
    fn is_in_w(&self, w: &[Letter]) -> Result<bool>;
    fn is_w_prefix(&self, w: &[Letter]) -> Result<bool>;
    fn is_w_suffix(&self, w: &[Letter]) -> Result<bool>;
    fn is_cfree_factor(&self, w: &[Letter]) -> Result<bool>;
    fn name(&self) -> String;
}

/// `W = L(X)` for a sofic `X`; all four predicates are membership in `L(X)`.
pub struct SoficCode {
    shift: SoficShift,
}

impl SoficCode {
    pub fn new(shift: SoficShift) -> Self {
        SoficCode { shift }
    }

    pub fn shift(&self) -> &SoficShift {
        &self.shift
    }
}

impl CodeWords for SoficCode {
    fn base_alphabet(&self) -> &Alphabet {
        self.shift.graph().alphabet()
    }

    fn is_in_w(&self, w: &[Letter]) -> Result<bool> {
        self.shift.contains(w)
    }

    fn is_w_prefix(&self, w: &[Letter]) -> Result<bool> {
        self.shift.contains(w)
    }

    fn is_w_suffix(&self, w: &[Letter]) -> Result<bool> {
        self.shift.contains(w)
    }

    fn is_cfree_factor(&self, w: &[Letter]) -> Result<bool> {
        self.shift.contains(w)
    }

    fn name(&self) -> String {
        self.shift.name()
    }
}

/// Allowed gap lengths of an S-gap shift.
#[derive(Clone)]
pub struct SGapSpec {
    predicate: Arc<dyn Fn(u64) -> bool + Send + Sync>,
    cutoff: u64,
    // true when no gap above `cutoff` satisfies the predicate
    exhaustive: bool,
    label: String,
}

impl fmt::Debug for SGapSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SGapSpec")
            .field("label", &self.label)
            .field("cutoff", &self.cutoff)
            .field("exhaustive", &self.exhaustive)
            .finish()
    }
}

impl SGapSpec {
    /// A finite gap set; answers are exact at every length.
    pub fn from_gaps(gaps: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut gaps: Vec<u64> = gaps.into_iter().collect();
        gaps.sort_unstable();
        gaps.dedup();
        let Some(&cutoff) = gaps.last() else {
            return Err(Error::Precondition("gap set is empty".into()));
        };
        let label = gaps.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        let set = gaps.clone();
        Ok(SGapSpec {
            predicate: Arc::new(move |g| set.binary_search(&g).is_ok()),
            cutoff,
            exhaustive: true,
            label: format!("{{{label}}}"),
        })
    }

    /// A gap rule searched only up to `cutoff`; queries needing larger gaps fail.
    pub fn from_rule<F>(label: &str, predicate: F, cutoff: u64) -> Result<Self>
    where
        F: Fn(u64) -> bool + Send + Sync + 'static,
    {
        if !(0..=cutoff).any(&predicate) {
            return Err(Error::Precondition(format!(
                "gap rule `{label}` allows no gap up to {cutoff}"
            )));
        }
        Ok(SGapSpec {
            predicate: Arc::new(predicate),
            cutoff,
            exhaustive: false,
            label: format!("[{label}<={cutoff}]"),
        })
    }

    pub fn powers_of_two(cutoff: u64) -> Result<Self> {
        Self::from_rule("powers-of-2", |g| g.is_power_of_two(), cutoff)
    }

    pub fn allows(&self, gap: u64) -> bool {
        (self.predicate)(gap)
    }

    pub fn cutoff(&self) -> u64 {
        self.cutoff
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Whether some allowed gap is at least `j`.
    pub fn has_gap_at_least(&self, j: u64) -> Result<bool> {
        if j <= self.cutoff && (j..=self.cutoff).any(|g| self.allows(g)) {
            return Ok(true);
        }
        if self.exhaustive {
            Ok(false)
        } else {
            Err(Error::CutoffExceeded {
                length: j as usize,
                cutoff: self.cutoff,
            })
        }
    }
}

/// `W = {0^s : s in S}` over the one-letter alphabet `{0}`.
pub struct SGapCode {
    spec: SGapSpec,
    alphabet: Alphabet,
}

impl SGapCode {
    pub fn new(spec: SGapSpec) -> Self {
        SGapCode {
            spec,
            alphabet: Alphabet::new(["0"]).expect("static alphabet"),
        }
    }

    // Length of w if it is a power of the single letter.
    fn zero_run(&self, w: &[Letter]) -> Option<u64> {
        w.iter().all(|a| a.0 == 0).then_some(w.len() as u64)
    }
}

impl CodeWords for SGapCode {
    fn base_alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn is_in_w(&self, w: &[Letter]) -> Result<bool> {
        Ok(self.zero_run(w).is_some_and(|j| self.spec.allows(j)))
    }

    fn is_w_prefix(&self, w: &[Letter]) -> Result<bool> {
        match self.zero_run(w) {
            Some(j) => self.spec.has_gap_at_least(j),
            None => Ok(false),
        }
    }

    fn is_w_suffix(&self, w: &[Letter]) -> Result<bool> {
        self.is_w_prefix(w)
    }

    fn is_cfree_factor(&self, w: &[Letter]) -> Result<bool> {
        self.is_w_prefix(w)
    }

    fn name(&self) -> String {
        format!("sgap{}", self.spec.label())
    }
}

/// A coded shift `Y`, usable as a [`Language`] over the base alphabet plus the separator.
pub struct CodedSystem {
    alphabet: Alphabet,
    separator: Letter,
    // combined letter -> base letter (None for the separator)
    to_base: Vec<Option<Letter>>,
    code: Box<dyn CodeWords>,
}

impl CodedSystem {
    pub fn new(code: Box<dyn CodeWords>, separator: &str) -> Result<Self> {
        let base = code.base_alphabet();
        if base.contains_token(separator) {
            return Err(Error::SeparatorCollision(separator.to_string()));
        }
        let alphabet = Alphabet::new(
            base.tokens()
                .iter()
                .cloned()
                .chain(std::iter::once(separator.to_string())),
        )?;
        let separator = alphabet.letter(separator)?;
        let to_base = alphabet
            .letters()
            .map(|l| {
                (l != separator).then(|| base.letter(alphabet.token(l)).expect("token from base"))
            })
            .collect();
        Ok(CodedSystem {
            alphabet,
            separator,
            to_base,
            code,
        })
    }

    /// Coded shift over a sofic base with `W = L(X)`.
    pub fn from_sofic(graph: &LabeledGraph, separator: &str) -> Result<Self> {
        Self::from_shift(SoficShift::new(graph)?, separator)
    }

    pub fn from_shift(shift: SoficShift, separator: &str) -> Result<Self> {
        Self::new(Box::new(SoficCode::new(shift)), separator)
    }

    /// S-gap shift: base `{0}`, separator `1`.
    pub fn sgap(spec: SGapSpec) -> Self {
        Self::new(Box::new(SGapCode::new(spec)), "1").expect("`1` is not in `{0}`")
    }

    pub fn separator(&self) -> Letter {
        self.separator
    }

    pub fn code(&self) -> &dyn CodeWords {
        self.code.as_ref()
    }

    /// Translates a separator-free word of the combined alphabet to the base alphabet.
    pub fn to_base(&self, segment: &[Letter]) -> Result<Word> {
        segment
            .iter()
            .map(|&a| {
                self.to_base
                    .get(a.index())
                    .copied()
                    .flatten()
                    .ok_or_else(|| Error::UnknownLetter(format!("#{}", a.0)))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Translates a base-alphabet word into the combined alphabet.
    pub fn from_base(&self, w: &[Letter]) -> Word {
        Word(
            w.iter()
                .map(|&b| {
                    self.alphabet
                        .letter(self.code.base_alphabet().token(b))
                        .expect("base token is in the combined alphabet")
                })
                .collect(),
        )
    }

    pub fn is_in_w(&self, base_word: &[Letter]) -> Result<bool> {
        self.code.is_in_w(base_word)
    }

    pub fn is_w_prefix(&self, base_word: &[Letter]) -> Result<bool> {
        self.code.is_w_prefix(base_word)
    }

    pub fn is_w_suffix(&self, base_word: &[Letter]) -> Result<bool> {
        self.code.is_w_suffix(base_word)
    }

    pub fn is_cfree_factor(&self, base_word: &[Letter]) -> Result<bool> {
        self.code.is_cfree_factor(base_word)
    }

    /// Exact membership of a finite word in `L(Y)` by segment decomposition.
    pub fn membership(&self, u: &[Letter]) -> Result<bool> {
        if let Some(a) = u.iter().find(|a| a.index() >= self.alphabet.len()) {
            return Err(Error::UnknownLetter(format!("#{}", a.0)));
        }
        let segments: Vec<&[Letter]> = u.split(|&a| a == self.separator).collect();
        let last = segments.len() - 1;
        if last == 0 {
            return self.code.is_cfree_factor(&self.to_base(u)?);
        }
        if !self.code.is_w_suffix(&self.to_base(segments[0])?)? {
            return Ok(false);
        }
        for seg in &segments[1..last] {
            if !self.code.is_in_w(&self.to_base(seg)?)? {
                return Ok(false);
            }
        }
        self.code.is_w_prefix(&self.to_base(segments[last])?)
    }

    /// The suffix of `u` from its last separator on; it has the same
    /// follower set as `u` whenever `u` is in the language.
    pub fn normalize_after_separator(&self, u: &[Letter]) -> Result<Word> {
        let pos = u
            .iter()
            .rposition(|&a| a == self.separator)
            .ok_or_else(|| Error::Precondition("word contains no separator".into()))?;
        Ok(Word::from_letters(&u[pos..]))
    }
}

impl Language for CodedSystem {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn contains(&self, word: &[Letter]) -> Result<bool> {
        self.membership(word)
    }

    fn name(&self) -> String {
        let base = self.code.name();
        if base.starts_with("sgap") {
            base
        } else {
            format!("coded({base},{})", self.alphabet.token(self.separator))
        }
    }
}
