use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::alphabet::{Alphabet, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Follower,
    Predecessor,
    Extender,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Follower => "follower",
            Side::Predecessor => "predecessor",
            Side::Extender => "extender",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Partition of the length-`n` words of a language into classes.
///
/// Class ids are assigned in order of each class's least word, so two tables
/// built from the same input are identical regardless of evaluation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTable<K> {
    pub n: usize,
    pub side: Side,
    pub assignments: BTreeMap<Word, usize>,
    /// Indexed by class id: the least word of the class and its key.
    pub representatives: Vec<(Word, K)>,
}

impl<K> ClassTable<K> {
    /// Builds a table from words and class labels produced by `label`.
    /// Words sharing a label share a class; the label type only needs equality
    /// via `same_class`, which lets callers plug in non-structural equivalences.
    pub fn build<I, F>(n: usize, side: Side, words: I, mut same_class: F) -> Self
    where
        I: IntoIterator<Item = (Word, K)>,
        F: FnMut(&K, &K) -> bool,
    {
        let mut words: Vec<(Word, K)> = words.into_iter().collect();
        words.sort_by(|a, b| a.0.cmp(&b.0));
        let mut assignments = BTreeMap::new();
        let mut representatives: Vec<(Word, K)> = Vec::new();
        for (w, key) in words {
            let id = match representatives.iter().position(|(_, k)| same_class(k, &key)) {
                Some(id) => id,
                None => {
                    representatives.push((w.clone(), key));
                    representatives.len() - 1
                }
            };
            assignments.insert(w, id);
        }
        ClassTable {
            n,
            side,
            assignments,
            representatives,
        }
    }

    /// Like [`ClassTable::build`] with structural equality of keys.
    pub fn build_keyed<I>(n: usize, side: Side, words: I) -> Self
    where
        I: IntoIterator<Item = (Word, K)>,
        K: Clone + Eq + std::hash::Hash,
    {
        let mut words: Vec<(Word, K)> = words.into_iter().collect();
        words.sort_by(|a, b| a.0.cmp(&b.0));
        let mut ids: std::collections::HashMap<K, usize> = std::collections::HashMap::new();
        let mut assignments = BTreeMap::new();
        let mut representatives = Vec::new();
        for (w, key) in words {
            let next = representatives.len();
            let id = *ids.entry(key.clone()).or_insert(next);
            if id == next {
                representatives.push((w.clone(), key));
            }
            assignments.insert(w, id);
        }
        ClassTable {
            n,
            side,
            assignments,
            representatives,
        }
    }

    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn class_of(&self, w: &Word) -> Option<usize> {
        self.assignments.get(w).copied()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.assignments.keys()
    }

    /// `n,side,count,rep1,rep2,...` with representatives in class-id order.
    pub fn csv_row(&self, alphabet: &Alphabet) -> String {
        let mut row = format!("{},{},{}", self.n, self.side, self.count());
        for (w, _) in &self.representatives {
            row.push(',');
            row.push_str(&render_or_empty(alphabet, w));
        }
        row
    }
}

/// Renders a word, spelling the empty word as `()` so it stays visible in CSV.
pub fn render_or_empty(alphabet: &Alphabet, w: &Word) -> String {
    if w.is_empty() {
        "()".to_string()
    } else {
        alphabet.render(w)
    }
}
