//! The Boolean algebra generated by the sets `C(α,β)`.
//!
//! For a shift of finite type every such set is a finite union of cylinders,
//! so an element is stored as a set of language words of one common length
//! (its level). The canonical form uses the smallest level at which the set
//! is a union of cylinders; two sets are equal exactly when their canonical
//! forms coincide.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::point::EvPeriodicPoint;
use crate::shift::Shift;
use crate::word::{concat, Symbol, Word};

#[derive(Clone)]
pub struct ClopenSet {
    shift: Shift,
    level: usize,
    words: BTreeSet<Word>,
}

impl PartialEq for ClopenSet {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level && self.words == other.words && self.shift == other.shift
    }
}

impl Eq for ClopenSet {}

impl fmt::Debug for ClopenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClopenSet({self})")
    }
}

impl fmt::Display for ClopenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.words.is_empty() {
            return f.write_str("∅");
        }
        if self.level == 0 {
            return f.write_str("X");
        }
        let parts: Vec<String> =
            self.words.iter().map(|w| format!("Z({})", self.shift.format_word(w))).collect();
        f.write_str(&parts.join(" ∪ "))
    }
}

impl ClopenSet {
    pub fn empty(shift: &Shift) -> Self {
        ClopenSet { shift: shift.clone(), level: 0, words: BTreeSet::new() }
    }

    /// The whole space `X`.
    pub fn whole(shift: &Shift) -> Result<Self> {
        shift.ensure_nonempty()?;
        Ok(ClopenSet { shift: shift.clone(), level: 0, words: BTreeSet::from([Vec::new()]) })
    }

    /// Union of the cylinders of `words`, all of length `level`.
    pub fn from_words<I>(shift: &Shift, level: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = Word>,
    {
        shift.ensure_nonempty()?;
        let words: BTreeSet<Word> = words.into_iter().collect();
        for w in &words {
            if w.len() != level {
                return Err(Error::MalformedSpec(format!(
                    "word {} does not have length {level}",
                    shift.format_word(w)
                )));
            }
            if !shift.in_language(w) {
                return Err(Error::WordNotInLanguage(shift.format_word(w)));
            }
        }
        Ok(Self::canonical(shift, level, words))
    }

    /// Builds the canonical form from language words of length `level`.
    pub(crate) fn canonical(shift: &Shift, mut level: usize, mut words: BTreeSet<Word>) -> Self {
        while level > 0 && !words.is_empty() {
            let mut parents: BTreeMap<&[Symbol], usize> = BTreeMap::new();
            for w in &words {
                *parents.entry(&w[..level - 1]).or_default() += 1;
            }
            if !parents.iter().all(|(p, &c)| c == shift.child_count(p)) {
                break;
            }
            let merged: BTreeSet<Word> = parents.keys().map(|p| p.to_vec()).collect();
            words = merged;
            level -= 1;
        }
        if words.is_empty() {
            level = 0;
        }
        ClopenSet { shift: shift.clone(), level, words }
    }

    /// The cylinder `Z(w) = C(ω, w)`; empty when `w` is not in the language.
    pub fn cylinder(shift: &Shift, word: &[Symbol]) -> Result<Self> {
        shift.ensure_nonempty()?;
        if !shift.in_language(word) {
            return Ok(Self::empty(shift));
        }
        Ok(Self::canonical(shift, word.len(), BTreeSet::from([word.to_vec()])))
    }

    /// `C(α,β) = {βx ∈ X : αx ∈ X}`.
    ///
    /// Whether `αx` lies in `X` depends only on the first `m` letters of `x`,
    /// so the set is the union of `Z(β·y)` over the length-`m` words `y` for
    /// which both `β·y` and `α·y` are in the language.
    pub fn c_set(shift: &Shift, alpha: &[Symbol], beta: &[Symbol]) -> Result<Self> {
        shift.ensure_nonempty()?;
        if !shift.in_language(beta) {
            return Ok(Self::empty(shift));
        }
        let m = shift.memory();
        let level = beta.len() + m;
        let mut words = BTreeSet::new();
        for ext in shift.extensions(beta, level) {
            let joined = concat(alpha, &ext[beta.len()..]);
            if shift.in_language(&joined) {
                words.insert(ext);
            }
        }
        Ok(Self::canonical(shift, level, words))
    }

    /// Follower set `F_β = C(β, ω) = {x ∈ X : βx ∈ X}`.
    pub fn follower(shift: &Shift, beta: &[Symbol]) -> Result<Self> {
        Self::c_set(shift, beta, &[])
    }

    pub fn shift(&self) -> &Shift {
        &self.shift
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.level == 0 && !self.words.is_empty()
    }

    /// The same set written with words of length `level ≥ self.level()`.
    pub fn refine(&self, level: usize) -> BTreeSet<Word> {
        assert!(level >= self.level, "cannot refine to a coarser level");
        if level == self.level {
            return self.words.clone();
        }
        self.words.iter().flat_map(|w| self.shift.extensions(w, level)).collect()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.shift == other.shift {
            Ok(())
        } else {
            Err(Error::ShiftMismatch)
        }
    }

    fn combine<F>(&self, other: &Self, op: F) -> Result<Self>
    where
        F: Fn(&BTreeSet<Word>, &BTreeSet<Word>) -> BTreeSet<Word>,
    {
        self.check_same(other)?;
        let level = self.level.max(other.level);
        let words = op(&self.refine(level), &other.refine(level));
        Ok(Self::canonical(&self.shift, level, words))
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a.union(b).cloned().collect())
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a.intersection(b).cloned().collect())
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a.difference(b).cloned().collect())
    }

    /// Complement relative to `X`.
    pub fn complement(&self) -> Result<Self> {
        ClopenSet::whole(&self.shift)?.minus(self)
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        Ok(self == other)
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        Ok(self.minus(other)?.is_empty())
    }

    pub fn contains_point(&self, point: &EvPeriodicPoint) -> Result<bool> {
        self.shift.ensure_point(point)?;
        Ok(self.words.contains(&point.take(self.level)))
    }

    /// The unique point of the set, if it has exactly one.
    ///
    /// After refining to a level of at least `m`, a singleton is a single
    /// cylinder `Z(w)` from whose state the live graph never branches; the
    /// forced path is then eventually periodic.
    pub fn is_singleton(&self) -> Result<Option<EvPeriodicPoint>> {
        self.shift.ensure_nonempty()?;
        if self.is_empty() {
            return Ok(None);
        }
        let level = self.level.max(self.shift.memory());
        let refined = self.refine(level);
        if refined.len() != 1 {
            return Ok(None);
        }
        let word = refined.into_iter().next().expect("one word");
        let start = self.shift.state_of(&word).expect("language word has a live state");
        let reach = self.shift.reachable_from(&[start]);
        let deterministic = reach
            .iter()
            .enumerate()
            .filter(|(_, &r)| r)
            .all(|(s, _)| self.shift.successors(s).count() == 1);
        if !deterministic {
            return Ok(None);
        }
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        let mut letters = Vec::new();
        let mut state = start;
        while !seen.contains_key(&state) {
            seen.insert(state, letters.len());
            let (a, t) = self.shift.successors(state).next().expect("one successor");
            letters.push(a);
            state = t;
        }
        let loop_start = seen[&state];
        let prefix = concat(&word, &letters[..loop_start]);
        Ok(Some(EvPeriodicPoint::new(prefix, letters[loop_start..].to_vec())))
    }

    /// Set-expression text accepted by [`crate::syntax::parse_set_expr`].
    pub fn to_expr(&self) -> String {
        if self.words.is_empty() {
            return "0".into();
        }
        if self.level == 0 {
            return "X".into();
        }
        let parts: Vec<String> =
            self.words.iter().map(|w| format!("Z({})", self.shift.format_word(w))).collect();
        parts.join("|")
    }
}
