//! Locally constant functions `X → R` with finitely many values.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::Zero;

use crate::action;
use crate::clopen::ClopenSet;
use crate::error::{Error, Result};
use crate::group::FreeGroupElement;
use crate::point::EvPeriodicPoint;
use crate::ring::{format_scalar, Ring, Scalar};
use crate::shift::Shift;
use crate::word::{Symbol, Word};

/// `Σ c·1_U` over disjoint nonempty clopen sets with distinct nonzero
/// coefficients. The representation is canonical, so `==` is equality of
/// functions.
#[derive(Clone, PartialEq, Eq)]
pub struct LcFunction {
    shift: Shift,
    ring: Ring,
    parts: BTreeMap<Scalar, ClopenSet>,
}

impl fmt::Debug for LcFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LcFunction({self})")
    }
}

impl fmt::Display for LcFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.parts.iter().map(|(c, u)| format!("{}·1_{{{u}}}", format_scalar(c))).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl LcFunction {
    pub fn zero(shift: &Shift, ring: Ring) -> Self {
        LcFunction { shift: shift.clone(), ring, parts: BTreeMap::new() }
    }

    /// `c·1_U`.
    pub fn scaled_indicator(ring: Ring, c: Scalar, set: &ClopenSet) -> Self {
        let mut parts = BTreeMap::new();
        if !c.is_zero() && !set.is_empty() {
            parts.insert(c, set.clone());
        }
        LcFunction { shift: set.shift().clone(), ring, parts }
    }

    pub fn indicator(ring: Ring, set: &ClopenSet) -> Self {
        Self::scaled_indicator(ring, ring.one(), set)
    }

    pub fn constant(shift: &Shift, ring: Ring, c: Scalar) -> Result<Self> {
        Ok(Self::scaled_indicator(ring, c, &ClopenSet::whole(shift)?))
    }

    pub fn shift(&self) -> &Shift {
        &self.shift
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Coefficient to level set, in coefficient order.
    pub fn parts(&self) -> &BTreeMap<Scalar, ClopenSet> {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Where the function is nonzero.
    pub fn support(&self) -> ClopenSet {
        self.parts
            .values()
            .fold(ClopenSet::empty(&self.shift), |acc, u| acc.union(u).expect("same shift"))
    }

    fn level(&self) -> usize {
        self.parts.values().map(ClopenSet::level).max().unwrap_or(0)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.shift != other.shift {
            return Err(Error::ShiftMismatch);
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    fn table(&self, level: usize) -> BTreeMap<Word, Scalar> {
        let mut out = BTreeMap::new();
        for (c, u) in &self.parts {
            for w in u.refine(level) {
                out.insert(w, c.clone());
            }
        }
        out
    }

    fn from_table(shift: &Shift, ring: Ring, level: usize, table: BTreeMap<Word, Scalar>) -> Self {
        let mut groups: BTreeMap<Scalar, BTreeSet<Word>> = BTreeMap::new();
        for (w, c) in table {
            if !c.is_zero() {
                groups.entry(c).or_default().insert(w);
            }
        }
        let parts = groups
            .into_iter()
            .map(|(c, words)| (c, ClopenSet::canonical(shift, level, words)))
            .collect();
        LcFunction { shift: shift.clone(), ring, parts }
    }

    fn zip<F>(&self, other: &Self, op: F) -> Result<Self>
    where
        F: Fn(Option<&Scalar>, Option<&Scalar>) -> Option<Scalar>,
    {
        self.check_same(other)?;
        let level = self.level().max(other.level());
        let a = self.table(level);
        let b = other.table(level);
        let keys: BTreeSet<&Word> = a.keys().chain(b.keys()).collect();
        let table = keys
            .into_iter()
            .filter_map(|w| op(a.get(w), b.get(w)).map(|c| (w.clone(), c)))
            .collect();
        Ok(Self::from_table(&self.shift, self.ring, level, table))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let ring = self.ring;
        self.zip(other, |x, y| match (x, y) {
            (Some(x), Some(y)) => Some(ring.add(x, y)),
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let ring = self.ring;
        self.zip(other, |x, y| match (x, y) {
            (Some(x), Some(y)) => Some(ring.mul(x, y)),
            _ => None,
        })
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.ring.from_int(-1))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// `c·f`. The scalar must already be an element of the ring.
    pub fn scale(&self, c: &Scalar) -> Self {
        let level = self.level();
        let table = self.table(level).into_iter().map(|(w, x)| (w, self.ring.mul(c, &x))).collect();
        Self::from_table(&self.shift, self.ring, level, table)
    }

    /// `f·1_U`.
    pub fn restrict(&self, set: &ClopenSet) -> Result<Self> {
        self.mul(&Self::indicator(self.ring, set))
    }

    pub fn eval(&self, point: &EvPeriodicPoint) -> Result<Scalar> {
        self.shift.ensure_point(point)?;
        for (c, u) in &self.parts {
            if u.contains_point(point)? {
                return Ok(c.clone());
            }
        }
        Ok(self.ring.zero())
    }

    /// `θ_g(f) = f ∘ τ_{g⁻¹}` for `f` supported in `W_{g⁻¹}`.
    pub fn act(&self, g: &FreeGroupElement) -> Result<Self> {
        let parts = self
            .parts
            .iter()
            .map(|(c, u)| Ok((c.clone(), action::act_clopen(&self.shift, g, u)?)))
            .collect::<Result<_>>()?;
        Ok(LcFunction { shift: self.shift.clone(), ring: self.ring, parts })
    }

    /// [`LcFunction::act`] with a known factorization and no domain check.
    pub(crate) fn transport(&self, alpha: &[Symbol], beta: &[Symbol]) -> Self {
        let parts = self
            .parts
            .iter()
            .map(|(c, u)| (c.clone(), action::transport(&self.shift, alpha, beta, u)))
            .collect();
        LcFunction { shift: self.shift.clone(), ring: self.ring, parts }
    }
}
