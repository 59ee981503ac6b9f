//! The membership contract every analyzed system implements.

use crate::alphabet::{Alphabet, Letter, Word};
use crate::error::Result;

/// Membership oracle for the language of a nonempty subshift.
///
/// Implementations must be factorial (factors of members are members) and
/// biextendable (every member extends by one letter on each side). Membership
/// is fallible only for systems that search a bounded parameter space and
/// refuse to guess beyond it.
pub trait Language {
    fn alphabet(&self) -> &Alphabet;

    fn contains(&self, word: &[Letter]) -> Result<bool>;

    /// Short human-readable identifier used in reports.
    fn name(&self) -> String;
}

impl<L: Language + ?Sized> Language for &L {
    fn alphabet(&self) -> &Alphabet {
        (**self).alphabet()
    }

    fn contains(&self, word: &[Letter]) -> Result<bool> {
        (**self).contains(word)
    }

    fn name(&self) -> String {
        (**self).name()
    }
}

/// All words of length `n` in the language, sorted canonically.
///
/// Walks the prefix tree and prunes at the first non-member, which is sound
/// because the language is factorial.
pub fn enumerate_language<L: Language + ?Sized>(lang: &L, n: usize) -> Result<Vec<Word>> {
    let letters: Vec<Letter> = lang.alphabet().letters().collect();
    let mut out = Vec::new();
    let mut stack = Word::empty();
    walk(lang, &letters, n, &mut stack, &mut out)?;
    Ok(out)
}

fn walk<L: Language + ?Sized>(
    lang: &L,
    letters: &[Letter],
    n: usize,
    prefix: &mut Word,
    out: &mut Vec<Word>,
) -> Result<()> {
    if prefix.len() == n {
        out.push(prefix.clone());
        return Ok(());
    }
    for &a in letters {
        prefix.push(a);
        if lang.contains(prefix)? {
            walk(lang, letters, n, prefix, out)?;
        }
        prefix.0.pop();
    }
    Ok(())
}

/// The full shift on an alphabet.
#[derive(Debug, Clone)]
pub struct FullShift {
    alphabet: Alphabet,
}

impl FullShift {
    pub fn new(alphabet: Alphabet) -> Self {
        FullShift { alphabet }
    }
}

impl Language for FullShift {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn contains(&self, _word: &[Letter]) -> Result<bool> {
        Ok(true)
    }

    fn name(&self) -> String {
        format!("full-shift-{}", self.alphabet.len())
    }
}

/// First factor of `word` that is not in the language, if any. Used to test
/// the factorial property of an oracle.
pub fn find_nonmember_factor<L: Language + ?Sized>(lang: &L, word: &Word) -> Result<Option<Word>> {
    for f in word.factors() {
        if !lang.contains(f)? {
            return Ok(Some(Word::from_letters(f)));
        }
    }
    Ok(None)
}

/// Whether a member word extends by some letter on the left and on the right.
pub fn is_biextendable<L: Language + ?Sized>(lang: &L, word: &Word) -> Result<bool> {
    let mut right = false;
    let mut left = false;
    for a in lang.alphabet().letters() {
        right = right || lang.contains(&word.pushed(a))?;
        left = left || lang.contains(&word.prepended(a))?;
        if left && right {
            return Ok(true);
        }
    }
    Ok(false)
}
