//! Reduced words in the free group on the alphabet.

use std::fmt;

use crate::error::{Error, Result};
use crate::shift::Shift;
use crate::word::{Alphabet, Symbol, Word};

/// A generator `a` or its inverse `a⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub symbol: Symbol,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(symbol: Symbol) -> Self {
        Letter { symbol, inverse: false }
    }

    pub fn neg(symbol: Symbol) -> Self {
        Letter { symbol, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { symbol: self.symbol, inverse: !self.inverse }
    }
}

/// A free-group element in reduced form. The identity is the empty word.
///
/// Ordering is shortlex on the letter sequence, which keeps algebra output
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeGroupElement {
    letters: Vec<Letter>,
}

impl PartialOrd for FreeGroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FreeGroupElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.letters.len().cmp(&other.letters.len()).then_with(|| self.letters.cmp(&other.letters))
    }
}

/// The split `g = α·β⁻¹` of an element that is simple with respect to a
/// shift: both words lie in the language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleFactorization {
    pub alpha: Word,
    pub beta: Word,
}

impl FreeGroupElement {
    pub fn identity() -> Self {
        FreeGroupElement { letters: Vec::new() }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Self {
        let mut letters: Vec<Letter> = Vec::new();
        for l in raw {
            if letters.last() == Some(&l.inv()) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        FreeGroupElement { letters }
    }

    /// Like [`FreeGroupElement::reduce`], rejecting symbols outside `alphabet`.
    pub fn reduce_checked<I: IntoIterator<Item = Letter>>(alphabet: &Alphabet, raw: I) -> Result<Self> {
        let raw: Vec<Letter> = raw.into_iter().collect();
        if let Some(l) = raw.iter().find(|l| l.symbol.index() >= alphabet.len()) {
            return Err(Error::UnknownSymbol(format!("#{}", l.symbol.0)));
        }
        Ok(Self::reduce(raw))
    }

    /// The positive word `α`.
    pub fn word(word: &[Symbol]) -> Self {
        FreeGroupElement { letters: word.iter().map(|&s| Letter::pos(s)).collect() }
    }

    /// `α·β⁻¹`, reduced.
    pub fn from_pair(alpha: &[Symbol], beta: &[Symbol]) -> Self {
        Self::word(alpha).mul(&Self::word(beta).inverse())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeGroupElement { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::reduce(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// The split into a positive part followed by a negative part, when the
    /// reduced word has that shape. Unique when it exists.
    pub fn positive_negative_split(&self) -> Option<(Word, Word)> {
        let cut = self.letters.iter().position(|l| l.inverse).unwrap_or(self.letters.len());
        if self.letters[cut..].iter().any(|l| !l.inverse) {
            return None;
        }
        let alpha = self.letters[..cut].iter().map(|l| l.symbol).collect();
        let beta = self.letters[cut..].iter().rev().map(|l| l.symbol).collect();
        Some((alpha, beta))
    }

    /// `(α, β)` with `g = αβ⁻¹` reduced and `α, β` in the language, if `g` is
    /// simple with respect to `shift`. The identity factors as `(ω, ω)`.
    pub fn simple_factorization(&self, shift: &Shift) -> Result<Option<SimpleFactorization>> {
        shift.ensure_nonempty()?;
        Ok(self
            .positive_negative_split()
            .filter(|(a, b)| shift.in_language(a) && shift.in_language(b))
            .map(|(alpha, beta)| SimpleFactorization { alpha, beta }))
    }

    /// Literal syntax: space-separated letters with `'` marking inverses,
    /// `e` for the identity.
    pub fn to_literal(&self, alphabet: &Alphabet) -> String {
        if self.letters.is_empty() {
            return "e".into();
        }
        self.letters
            .iter()
            .map(|l| format!("{}{}", alphabet.name(l.symbol), if l.inverse { "'" } else { "" }))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        struct D<'a>(&'a FreeGroupElement, &'a Alphabet);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.to_literal(self.1))
            }
        }
        D(self, alphabet)
    }

    /// All reduced words of length at most `max_len`, shortlex ordered.
    pub fn enumerate(alphabet: &Alphabet, max_len: usize) -> Vec<Self> {
        let gens: Vec<Letter> =
            alphabet.symbols().flat_map(|s| [Letter::pos(s), Letter::neg(s)]).collect();
        let mut layer = vec![Self::identity()];
        let mut out = layer.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for g in &layer {
                for &l in &gens {
                    if g.letters.last() == Some(&l.inv()) {
                        continue;
                    }
                    let mut letters = g.letters.clone();
                    letters.push(l);
                    next.push(FreeGroupElement { letters });
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}
