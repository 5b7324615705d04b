//! Shifts of finite type and their live-word automaton.
//!
//! A shift is given by an alphabet and a finite list of forbidden words.
//! With memory `m` (the longest forbidden length minus one, never below one)
//! a sequence lies in the shift exactly when each of its windows of length
//! `m + 1` avoids the forbidden words. The automaton's states are the
//! length-`m` words that occur in some point of the shift; a transition
//! `s --a--> t` exists when `s·a` is clean and `t`, the last `m` letters of
//! `s·a`, is again a state.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::point::EvPeriodicPoint;
use crate::word::{suffix, Alphabet, Symbol, Word};

/// Alphabet plus forbidden words, validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftSpec {
    alphabet: Alphabet,
    forbidden: Vec<Word>,
}

impl ShiftSpec {
    pub fn new(alphabet: Alphabet, forbidden: Vec<Word>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (i, w) in forbidden.iter().enumerate() {
            if w.is_empty() {
                return Err(Error::MalformedSpec(format!("forbidden[{i}] is the empty word")));
            }
            if let Some(s) = w.iter().find(|s| s.index() >= alphabet.len()) {
                return Err(Error::MalformedSpec(format!(
                    "forbidden[{i}] uses symbol #{} outside the alphabet",
                    s.0
                )));
            }
            if !seen.insert(w.clone()) {
                return Err(Error::MalformedSpec(format!(
                    "forbidden[{i}] = {} is duplicated",
                    alphabet.format_word(w)
                )));
            }
        }
        Ok(ShiftSpec { alphabet, forbidden })
    }

    /// Convenience constructor from symbol names and forbidden words written
    /// in the word syntax of [`Alphabet::parse_word`].
    pub fn from_strs(alphabet: &[&str], forbidden: &[&str]) -> Result<Self> {
        let alphabet = Alphabet::new(alphabet.iter().copied())?;
        let forbidden = forbidden
            .iter()
            .enumerate()
            .map(|(i, f)| {
                alphabet.parse_word(f).map_err(|e| match e {
                    Error::UnknownSymbol(s) => {
                        Error::MalformedSpec(format!("forbidden[{i}] uses unknown symbol {s:?}"))
                    }
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, forbidden)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn forbidden(&self) -> &[Word] {
        &self.forbidden
    }
}

#[derive(Debug)]
struct ShiftData {
    spec: ShiftSpec,
    forbidden: HashSet<Word>,
    longest_forbidden: usize,
    memory: usize,
    /// Live states in lexicographic order.
    states: Vec<Word>,
    index: HashMap<Word, usize>,
    /// `next[state][letter]`.
    next: Vec<Vec<Option<usize>>>,
    /// Prefixes of live states shorter than the memory, including the empty word.
    short_words: HashSet<Word>,
}

/// A compiled shift of finite type. Cloning is cheap; all clones share the
/// same automaton.
#[derive(Clone)]
pub struct Shift {
    data: Arc<ShiftData>,
}

impl PartialEq for Shift {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data.spec == other.data.spec
    }
}

impl Eq for Shift {}

impl fmt::Debug for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ab = self.alphabet();
        f.debug_struct("Shift")
            .field("alphabet", &ab.names())
            .field(
                "forbidden",
                &self.spec().forbidden().iter().map(|w| ab.format_word(w)).collect::<Vec<_>>(),
            )
            .field("memory", &self.memory())
            .field("states", &self.data.states.len())
            .finish()
    }
}

impl Shift {
    /// Compiles the live-word automaton of `spec`. An empty shift is a valid
    /// result; operations that need points reject it with
    /// [`Error::EmptyShift`].
    pub fn build(spec: ShiftSpec) -> Shift {
        let forbidden: HashSet<Word> = spec.forbidden.iter().cloned().collect();
        let longest_forbidden = spec.forbidden.iter().map(Vec::len).max().unwrap_or(0);
        let memory = longest_forbidden.saturating_sub(1).max(1);
        let letters = spec.alphabet.len();

        let ends_clean = |w: &[Symbol]| {
            (1..=longest_forbidden.min(w.len())).all(|l| !forbidden.contains(suffix(w, l)))
        };

        // Clean words of length `memory`, in lexicographic order.
        let mut candidates: Vec<Word> = vec![Vec::new()];
        for _ in 0..memory {
            let mut grown = Vec::with_capacity(candidates.len() * letters);
            for w in &candidates {
                for a in 0..letters {
                    let mut x = w.clone();
                    x.push(Symbol(a as u16));
                    if ends_clean(&x) {
                        grown.push(x);
                    }
                }
            }
            candidates = grown;
        }

        let cand_index: HashMap<&[Symbol], usize> =
            candidates.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
        let succ: Vec<Vec<Option<usize>>> = candidates
            .iter()
            .map(|w| {
                (0..letters)
                    .map(|a| {
                        let mut x = w.clone();
                        x.push(Symbol(a as u16));
                        if ends_clean(&x) {
                            cand_index.get(&x[1..]).copied()
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();

        // Repeatedly drop words without a live successor.
        let mut live = vec![true; candidates.len()];
        loop {
            let mut changed = false;
            for i in 0..candidates.len() {
                if live[i] && !succ[i].iter().flatten().any(|&j| live[j]) {
                    live[i] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }

        let states: Vec<Word> =
            candidates.iter().zip(&live).filter(|(_, &l)| l).map(|(w, _)| w.clone()).collect();
        let index: HashMap<Word, usize> =
            states.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let next: Vec<Vec<Option<usize>>> = states
            .iter()
            .map(|w| {
                let old = cand_index[w.as_slice()];
                succ[old]
                    .iter()
                    .map(|t| t.filter(|&j| live[j]).map(|j| index[&candidates[j]]))
                    .collect()
            })
            .collect();
        let mut short_words = HashSet::new();
        for s in &states {
            for l in 0..memory {
                short_words.insert(s[..l].to_vec());
            }
        }

        Shift {
            data: Arc::new(ShiftData {
                spec,
                forbidden,
                longest_forbidden,
                memory,
                states,
                index,
                next,
                short_words,
            }),
        }
    }

    pub fn spec(&self) -> &ShiftSpec {
        &self.data.spec
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.data.spec.alphabet
    }

    /// Memory `m`: longest forbidden length minus one, at least one.
    pub fn memory(&self) -> usize {
        self.data.memory
    }

    pub fn is_empty(&self) -> bool {
        self.data.states.is_empty()
    }

    pub fn ensure_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyShift)
        } else {
            Ok(())
        }
    }

    /// Live states: the length-`m` words of the language, in alphabet order.
    pub fn states(&self) -> &[Word] {
        &self.data.states
    }

    pub fn state_word(&self, state: usize) -> &[Symbol] {
        &self.data.states[state]
    }

    /// The state reached after reading `word` (its last `m` letters), if
    /// `word` is at least `m` long and those letters form a live state.
    pub fn state_of(&self, word: &[Symbol]) -> Option<usize> {
        if word.len() < self.memory() {
            return None;
        }
        self.data.index.get(suffix(word, self.memory())).copied()
    }

    pub fn step(&self, state: usize, letter: Symbol) -> Option<usize> {
        self.data.next[state][letter.index()]
    }

    /// Outgoing transitions of `state` in alphabet order.
    pub fn successors(&self, state: usize) -> impl Iterator<Item = (Symbol, usize)> + '_ {
        self.data.next[state].iter().enumerate().filter_map(|(a, t)| t.map(|t| (Symbol(a as u16), t)))
    }

    /// True when no forbidden word occurs in `word`.
    pub fn is_clean(&self, word: &[Symbol]) -> bool {
        let d = &self.data;
        (0..word.len()).all(|end| {
            (1..=d.longest_forbidden.min(end + 1)).all(|l| !d.forbidden.contains(&word[end + 1 - l..=end]))
        })
    }

    /// Language membership without the emptiness check; the empty shift has
    /// an empty language.
    pub(crate) fn in_language(&self, word: &[Symbol]) -> bool {
        if self.is_empty() {
            return false;
        }
        let m = self.memory();
        if word.len() < m {
            return self.data.short_words.contains(word);
        }
        let Some(mut state) = self.data.index.get(&word[..m]).copied() else {
            return false;
        };
        for &a in &word[m..] {
            match self.step(state, a) {
                Some(t) => state = t,
                None => return false,
            }
        }
        true
    }

    /// Whether `word` occurs in some point of the shift. The empty word
    /// always does.
    pub fn is_in_language(&self, word: &[Symbol]) -> Result<bool> {
        self.ensure_nonempty()?;
        Ok(self.in_language(word))
    }

    /// All words of length `n` in the language, in alphabet order.
    pub fn language(&self, n: usize) -> Result<Vec<Word>> {
        self.ensure_nonempty()?;
        Ok(self.extensions(&[], n))
    }

    /// Words of the language up to length `n`, shortest first.
    pub fn language_up_to(&self, n: usize) -> Result<Vec<Word>> {
        self.ensure_nonempty()?;
        Ok((0..=n).flat_map(|k| self.extensions(&[], k)).collect())
    }

    /// All length-`n` words of the language that start with `word`, in
    /// alphabet order. `word` must itself be in the language and `n ≥ |word|`.
    pub(crate) fn extensions(&self, word: &[Symbol], n: usize) -> Vec<Word> {
        debug_assert!(n >= word.len());
        let m = self.memory();
        let mut out = Vec::new();
        if word.len() >= m {
            if let Some(state) = self.state_of(word) {
                self.walk(word.to_vec(), state, n, &mut out);
            }
            return out;
        }
        for (i, s) in self.data.states.iter().enumerate() {
            if !s.starts_with(word) {
                continue;
            }
            if n <= m {
                let w = &s[..n];
                if out.last().map(|l: &Word| l.as_slice()) != Some(w) {
                    out.push(w.to_vec());
                }
            } else {
                self.walk(s.clone(), i, n, &mut out);
            }
        }
        out
    }

    fn walk(&self, word: Word, state: usize, n: usize, out: &mut Vec<Word>) {
        if word.len() == n {
            out.push(word);
            return;
        }
        for (a, t) in self.successors(state) {
            let mut w = word.clone();
            w.push(a);
            self.walk(w, t, n, out);
        }
    }

    /// Number of letters `a` with `word·a` in the language.
    pub(crate) fn child_count(&self, word: &[Symbol]) -> usize {
        if word.len() >= self.memory() {
            self.state_of(word).map_or(0, |s| self.successors(s).count())
        } else {
            let mut w = word.to_vec();
            self.alphabet()
                .symbols()
                .filter(|&a| {
                    w.push(a);
                    let ok = self.in_language(&w);
                    w.pop();
                    ok
                })
                .count()
        }
    }

    /// Whether `u·v^∞` avoids every forbidden word. Checks each window that
    /// starts within the first `|u| + |v|` positions.
    pub fn point_in_shift(&self, point: &EvPeriodicPoint) -> bool {
        let n = point.size() + self.data.longest_forbidden.max(1);
        self.is_clean(&point.take(n))
    }

    pub fn ensure_point(&self, point: &EvPeriodicPoint) -> Result<()> {
        if self.point_in_shift(point) {
            Ok(())
        } else {
            Err(Error::PointNotInShift(point.to_literal(self.alphabet())))
        }
    }

    /// The shift map `σ`.
    pub fn shift_point(&self, point: &EvPeriodicPoint) -> Result<EvPeriodicPoint> {
        self.ensure_point(point)?;
        Ok(point.drop_prefix(1))
    }

    /// Marks the live states reachable from any of `start`, including `start`.
    pub(crate) fn reachable_from(&self, start: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.data.states.len()];
        let mut stack: Vec<usize> = start.to_vec();
        while let Some(s) = stack.pop() {
            if std::mem::replace(&mut seen[s], true) {
                continue;
            }
            stack.extend(self.successors(s).map(|(_, t)| t));
        }
        seen
    }

    pub fn format_word(&self, word: &[Symbol]) -> String {
        self.alphabet().format_word(word)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.alphabet().parse_word(text)
    }
}
