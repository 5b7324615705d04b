//! Symbols, words and the alphabet that names them.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A letter of the alphabet, identified by its position in alphabet order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u16);

impl Symbol {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite word. The empty word is the empty vector.
pub type Word = Vec<Symbol>;

/// Text used for the empty word in rendered output.
pub const EMPTY_WORD: &str = "ω";

/// Ordered, duplicate-free list of symbol names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    lookup: HashMap<String, Symbol>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::MalformedSpec("alphabet is empty".into()));
        }
        if names.len() > u16::MAX as usize {
            return Err(Error::MalformedSpec("alphabet is too large".into()));
        }
        let mut lookup = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::MalformedSpec(format!("alphabet[{i}] is an empty symbol")));
            }
            if name.chars().any(|c| c.is_whitespace() || "(),&|!*+-'.\"".contains(c)) {
                return Err(Error::MalformedSpec(format!(
                    "alphabet[{i}] = {name:?} contains a reserved character"
                )));
            }
            if lookup.insert(name.clone(), Symbol(i as u16)).is_some() {
                return Err(Error::MalformedSpec(format!("alphabet[{i}] = {name:?} is duplicated")));
            }
        }
        Ok(Alphabet { names, lookup })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.names.len()).map(|i| Symbol(i as u16))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, sym: Symbol) -> &str {
        &self.names[sym.index()]
    }

    pub fn symbol(&self, name: &str) -> Result<Symbol> {
        self.lookup.get(name).copied().ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    /// True when every symbol is a single character, so words can be written
    /// by plain concatenation.
    pub fn is_compact(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Parses a word written as concatenated symbols (greedy longest match)
    /// with optional `.` separators. `ω` is the empty word, as is `w` when `w`
    /// is not itself a symbol.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == EMPTY_WORD || (text == "w" && !self.lookup.contains_key("w")) {
            return Ok(Vec::new());
        }
        let mut word = Vec::new();
        for chunk in text.split('.') {
            let mut rest = chunk;
            while !rest.is_empty() {
                let best = self
                    .names
                    .iter()
                    .enumerate()
                    .filter(|(_, n)| rest.starts_with(n.as_str()))
                    .max_by_key(|(_, n)| n.len());
                match best {
                    Some((i, n)) => {
                        word.push(Symbol(i as u16));
                        rest = &rest[n.len()..];
                    }
                    None => {
                        let bad: String = rest.chars().take(1).collect();
                        return Err(Error::UnknownSymbol(bad));
                    }
                }
            }
        }
        Ok(word)
    }

    /// Parses a word given as a list of symbol names.
    pub fn word_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Word> {
        names.iter().map(|n| self.symbol(n.as_ref())).collect()
    }

    pub fn format_word(&self, word: &[Symbol]) -> String {
        if word.is_empty() {
            return EMPTY_WORD.to_string();
        }
        let sep = if self.is_compact() { "" } else { "." };
        word.iter().map(|&s| self.name(s)).collect::<Vec<_>>().join(sep)
    }

    pub fn display<'a>(&'a self, word: &'a [Symbol]) -> DisplayWord<'a> {
        DisplayWord { alphabet: self, word }
    }
}

pub struct DisplayWord<'a> {
    alphabet: &'a Alphabet,
    word: &'a [Symbol],
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.alphabet.format_word(self.word))
    }
}

/// True when the nonempty `needle` occurs as a contiguous factor of `hay`.
pub fn contains_factor(hay: &[Symbol], needle: &[Symbol]) -> bool {
    !needle.is_empty() && hay.windows(needle.len()).any(|w| w == needle)
}

/// The last `n` letters of `word` (the whole word when shorter).
pub fn suffix(word: &[Symbol], n: usize) -> &[Symbol] {
    &word[word.len().saturating_sub(n)..]
}

pub fn concat(a: &[Symbol], b: &[Symbol]) -> Word {
    let mut w = Vec::with_capacity(a.len() + b.len());
    w.extend_from_slice(a);
    w.extend_from_slice(b);
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_compact_and_dotted_words() {
        let ab = Alphabet::new(["0", "1"]).unwrap();
        assert_eq!(ab.parse_word("0110").unwrap(), vec![Symbol(0), Symbol(1), Symbol(1), Symbol(0)]);
        assert_eq!(ab.parse_word("w").unwrap(), Vec::<Symbol>::new());
        assert_eq!(ab.parse_word("ω").unwrap(), Vec::<Symbol>::new());
        assert!(matches!(ab.parse_word("012"), Err(Error::UnknownSymbol(_))));

        let long = Alphabet::new(["a", "ab", "b"]).unwrap();
        assert_eq!(long.parse_word("ab").unwrap(), vec![Symbol(1)]);
        assert_eq!(long.parse_word("a.b").unwrap(), vec![Symbol(0), Symbol(2)]);
        assert_eq!(long.format_word(&[Symbol(0), Symbol(2)]), "a.b");
    }

    #[test]
    fn alphabet_rejects_bad_symbols() {
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["a", ""]).is_err());
        assert!(Alphabet::new(["a'"]).is_err());
    }

    #[test]
    fn factors() {
        let w = [Symbol(0), Symbol(1), Symbol(1)];
        assert!(contains_factor(&w, &[Symbol(1), Symbol(1)]));
        assert!(!contains_factor(&w, &[Symbol(1), Symbol(0)]));
        assert_eq!(suffix(&w, 2), &[Symbol(1), Symbol(1)]);
        assert_eq!(suffix(&w, 5), &w);
    }
}
