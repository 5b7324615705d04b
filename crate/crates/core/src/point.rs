//! Eventually periodic points `u·v^∞`.

use std::fmt;

use crate::word::{Alphabet, Symbol, Word};

/// The one-sided sequence `prefix · period · period · …`, kept in canonical
/// form: the period is primitive and the prefix is as short as possible.
/// Two values are equal exactly when they describe the same sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EvPeriodicPoint {
    prefix: Word,
    period: Word,
}

impl EvPeriodicPoint {
    /// Builds `prefix · period^∞` in canonical form.
    ///
    /// # Panics
    ///
    /// Panics when `period` is empty.
    pub fn new(prefix: Word, period: Word) -> Self {
        assert!(!period.is_empty(), "period of an eventually periodic point must be nonempty");
        let root = primitive_root_len(&period);
        let mut period = period[..root].to_vec();
        let mut prefix = prefix;
        // Absorb trailing prefix letters into a rotation of the period.
        while let (Some(&a), Some(&b)) = (prefix.last(), period.last()) {
            if a != b {
                break;
            }
            prefix.pop();
            period.rotate_right(1);
        }
        EvPeriodicPoint { prefix, period }
    }

    /// The purely periodic point `period^∞`.
    pub fn periodic(period: Word) -> Self {
        Self::new(Vec::new(), period)
    }

    pub fn prefix(&self) -> &[Symbol] {
        &self.prefix
    }

    pub fn period(&self) -> &[Symbol] {
        &self.period
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.prefix.is_empty()
    }

    /// Letter at position `i`.
    pub fn at(&self, i: usize) -> Symbol {
        if i < self.prefix.len() {
            self.prefix[i]
        } else {
            self.period[(i - self.prefix.len()) % self.period.len()]
        }
    }

    /// The first `n` letters.
    pub fn take(&self, n: usize) -> Word {
        (0..n).map(|i| self.at(i)).collect()
    }

    /// Whether the sequence starts with `word`.
    pub fn starts_with(&self, word: &[Symbol]) -> bool {
        word.iter().enumerate().all(|(i, &s)| self.at(i) == s)
    }

    /// `σ^n` of the sequence, ignoring membership in any shift.
    pub fn drop_prefix(&self, n: usize) -> Self {
        if n <= self.prefix.len() {
            return Self::new(self.prefix[n..].to_vec(), self.period.clone());
        }
        let k = (n - self.prefix.len()) % self.period.len();
        let mut period = self.period.clone();
        period.rotate_left(k);
        Self::new(Vec::new(), period)
    }

    /// `word · self`.
    pub fn prepend(&self, word: &[Symbol]) -> Self {
        let mut prefix = word.to_vec();
        prefix.extend_from_slice(&self.prefix);
        Self::new(prefix, self.period.clone())
    }

    /// Number of letters that describe the point, `|u| + |v|`.
    pub fn size(&self) -> usize {
        self.prefix.len() + self.period.len()
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> DisplayPoint<'a> {
        DisplayPoint { point: self, alphabet }
    }

    /// Literal form `u|v` accepted by [`crate::syntax::parse_point`].
    pub fn to_literal(&self, alphabet: &Alphabet) -> String {
        let u = if self.prefix.is_empty() { String::new() } else { alphabet.format_word(&self.prefix) };
        format!("{}|{}", u, alphabet.format_word(&self.period))
    }
}

pub struct DisplayPoint<'a> {
    point: &'a EvPeriodicPoint,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayPoint<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.point.prefix.is_empty() {
            write!(f, "{}", self.alphabet.format_word(&self.point.prefix))?;
        }
        let v = self.alphabet.format_word(&self.point.period);
        if self.point.period.len() == 1 {
            write!(f, "{v}^∞")
        } else {
            write!(f, "({v})^∞")
        }
    }
}

/// Length of the shortest `r` with `word = r^k`, via the prefix function.
pub fn primitive_root_len(word: &[Symbol]) -> usize {
    let n = word.len();
    if n == 0 {
        return 0;
    }
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && word[i] != word[k] {
            k = fail[k - 1];
        }
        if word[i] == word[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let p = n - fail[n - 1];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}
