//! Brute-force extension profiles from nothing but a membership oracle.
//!
//! A depth-`d` profile of `w` lists every length-`d` word that may follow
//! (or precede) `w`, or every pair that may surround it. Equal sets have
//! equal profiles, so class counts built from profiles are lower bounds on
//! the true counts. This module deliberately uses no structure of the
//! system beyond factoriality.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::alphabet::{Letter, Word};
use crate::error::{Error, Result};
use crate::language::{enumerate_language, Language};
use crate::table::{ClassTable, Side};

/// Default cap on the number of candidate extensions of a single profile.
pub const DEFAULT_BUDGET: u128 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extensions {
    Words(BTreeSet<Word>),
    Pairs(BTreeSet<(Word, Word)>),
}

impl Extensions {
    pub fn len(&self) -> usize {
        match self {
            Extensions::Words(s) => s.len(),
            Extensions::Pairs(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionProfile {
    pub word: Word,
    pub side: Side,
    pub depth: usize,
    pub extensions: Extensions,
}

#[derive(Debug, Clone, Copy)]
pub struct Oracle<L> {
    lang: L,
    budget: u128,
}

impl<L: Language> Oracle<L> {
    pub fn new(lang: L) -> Self {
        Oracle {
            lang,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(lang: L, budget: u128) -> Self {
        Oracle { lang, budget }
    }

    pub fn language(&self) -> &L {
        &self.lang
    }

    fn check_budget(&self, side: Side, depth: usize) -> Result<()> {
        let k = self.lang.alphabet().len() as u128;
        let exp = match side {
            Side::Extender => 2 * depth,
            _ => depth,
        };
        let requested = k.checked_pow(exp as u32).unwrap_or(u128::MAX);
        if requested > self.budget {
            return Err(Error::Budget {
                what: "extension candidates per profile",
                requested,
                limit: self.budget,
            });
        }
        Ok(())
    }

    /// The depth-`depth` profile of `w`.
    pub fn profile(&self, w: &Word, side: Side, depth: usize) -> Result<ExtensionProfile> {
        if depth == 0 {
            return Err(Error::Precondition("profile depth must be at least 1".into()));
        }
        self.check_budget(side, depth)?;
        if !self.lang.contains(w)? {
            return Err(Error::NotInLanguage(self.lang.alphabet().render(w)));
        }
        let extensions = match side {
            Side::Follower => Extensions::Words(self.right_extensions(w, depth)?),
            Side::Predecessor => Extensions::Words(self.left_extensions(w, depth)?),
            Side::Extender => {
                let mut pairs = BTreeSet::new();
                for s in self.right_extensions(w, depth)? {
                    let ws = w.concat(&s);
                    for p in self.left_extensions(&ws, depth)? {
                        pairs.insert((p, s.clone()));
                    }
                }
                Extensions::Pairs(pairs)
            }
        };
        Ok(ExtensionProfile {
            word: w.clone(),
            side,
            depth,
            extensions,
        })
    }

    /// `{u : |u| = depth, wu in L}`, grown letter by letter; a candidate whose
    /// prefix already fails cannot succeed because the language is factorial.
    fn right_extensions(&self, w: &Word, depth: usize) -> Result<BTreeSet<Word>> {
        let letters: Vec<Letter> = self.lang.alphabet().letters().collect();
        let mut frontier = vec![Word::empty()];
        for _ in 0..depth {
            let mut next = Vec::new();
            for u in &frontier {
                for &a in &letters {
                    let cand = u.pushed(a);
                    if self.lang.contains(&w.concat(&cand))? {
                        next.push(cand);
                    }
                }
            }
            frontier = next;
        }
        Ok(frontier.into_iter().collect())
    }

    /// `{u : |u| = depth, uw in L}`.
    fn left_extensions(&self, w: &Word, depth: usize) -> Result<BTreeSet<Word>> {
        let letters: Vec<Letter> = self.lang.alphabet().letters().collect();
        let mut frontier = vec![Word::empty()];
        for _ in 0..depth {
            let mut next = Vec::new();
            for u in &frontier {
                for &a in &letters {
                    let cand = u.prepended(a);
                    if self.lang.contains(&cand.concat(w))? {
                        next.push(cand);
                    }
                }
            }
            frontier = next;
        }
        Ok(frontier.into_iter().collect())
    }

    /// Partition of the length-`n` words by depth-`depth` profile.
    pub fn classify(&self, n: usize, side: Side, depth: usize) -> Result<ClassTable<Extensions>> {
        let words = enumerate_language(&self.lang, n)?;
        let mut entries = Vec::with_capacity(words.len());
        for w in words {
            let p = self.profile(&w, side, depth)?;
            entries.push((w, p.extensions));
        }
        Ok(ClassTable::build_keyed(n, side, entries))
    }

    /// Distinct follower profiles among all words of length at most `n`.
    pub fn cumulative_follower_count(&self, n: usize, depth: usize) -> Result<usize> {
        let mut seen: HashMap<Extensions, ()> = HashMap::new();
        for len in 0..=n {
            for w in enumerate_language(&self.lang, len)? {
                seen.insert(self.profile(&w, Side::Follower, depth)?.extensions, ());
            }
        }
        Ok(seen.len())
    }

    /// Word complexity `p(n) = |L_n|` for `n` in `0..=n_max`.
    pub fn complexity(&self, n_max: usize) -> Result<BTreeMap<usize, usize>> {
        (0..=n_max)
            .map(|n| Ok((n, enumerate_language(&self.lang, n)?.len())))
            .collect()
    }
}

/// Restricts a depth-`d+1` follower profile to depth `d` by dropping last letters.
pub fn truncate_follower(ext: &BTreeSet<Word>) -> BTreeSet<Word> {
    ext.iter()
        .map(|u| Word::from_letters(&u[..u.len().saturating_sub(1)]))
        .collect()
}
