//! Alphabets of token letters and the words built from them.
//!
//! Letters are stored as indices into a sorted [`Alphabet`], so the numeric
//! order of [`Letter`] values is the canonical (lexicographic token) order.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Index of a token in its [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u8);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A nonempty, duplicate-free, sorted set of printable tokens.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    tokens: Vec<String>,
}

impl Alphabet {
    /// Builds an alphabet from tokens in any order; they are sorted canonically.
    pub fn new<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        if tokens.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        if tokens.len() > u8::MAX as usize {
            return Err(Error::InvalidAlphabet("more than 255 letters".into()));
        }
        for t in &tokens {
            if t.is_empty() || t.chars().any(|c| c.is_whitespace() || c.is_control() || c == '#') {
                return Err(Error::InvalidAlphabet(format!("bad token `{t}`")));
            }
        }
        tokens.sort();
        if let Some(w) = tokens.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidAlphabet(format!("duplicate token `{}`", w[0])));
        }
        Ok(Alphabet { tokens })
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + Clone {
        (0..self.tokens.len() as u8).map(Letter)
    }

    pub fn token(&self, letter: Letter) -> &str {
        &self.tokens[letter.index()]
    }

    pub fn letter(&self, token: &str) -> Result<Letter> {
        self.tokens
            .binary_search_by(|t| t.as_str().cmp(token))
            .map(|i| Letter(i as u8))
            .map_err(|_| Error::UnknownLetter(token.to_string()))
    }

    pub fn contains_token(&self, token: &str) -> bool {
        self.letter(token).is_ok()
    }

    fn single_char_tokens(&self) -> bool {
        self.tokens.iter().all(|t| t.chars().count() == 1)
    }

    /// Parses a word. Whitespace-separated tokens are always accepted; when
    /// every token is a single character the letters may also be run together.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        let letters = if text.contains(char::is_whitespace) || !self.single_char_tokens() {
            text.split_whitespace()
                .map(|t| self.letter(t))
                .collect::<Result<Vec<_>>>()?
        } else {
            let mut buf = [0u8; 4];
            text.chars()
                .map(|c| self.letter(c.encode_utf8(&mut buf)))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Word(letters))
    }

    /// Renders a word; single-character alphabets print letters run together,
    /// multi-character ones separate tokens with spaces.
    pub fn render(&self, word: &[Letter]) -> String {
        let sep = if self.single_char_tokens() { "" } else { " " };
        word.iter()
            .map(|&l| self.token(l))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

/// A finite word. Ordered shortlex: by length, then lexicographically.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn pushed(&self, letter: Letter) -> Word {
        let mut w = self.clone();
        w.0.push(letter);
        w
    }

    pub fn prepended(&self, letter: Letter) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(letter);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn prefixes(&self) -> impl Iterator<Item = &[Letter]> {
        (0..=self.0.len()).map(move |i| &self.0[..i])
    }

    pub fn suffixes(&self) -> impl Iterator<Item = &[Letter]> {
        (0..=self.0.len()).map(move |i| &self.0[i..])
    }

    /// All contiguous factors, including the empty word and the word itself.
    pub fn factors(&self) -> impl Iterator<Item = &[Letter]> {
        let n = self.0.len();
        (0..=n).flat_map(move |i| (i..=n).map(move |j| &self.0[i..j]))
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    /// Letter indices; use [`Alphabet::render`] for tokens.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{}", l.0)?;
        }
        Ok(())
    }
}

/// Every word of length `n` over an alphabet of `k` letters, in lexicographic order.
pub fn all_words(k: usize, n: usize) -> impl Iterator<Item = Word> {
    let total = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    (0..total).map(move |mut idx| {
        let mut v = vec![Letter(0); n];
        for slot in v.iter_mut().rev() {
            *slot = Letter((idx % k as u128) as u8);
            idx /= k as u128;
        }
        Word(v)
    })
}
