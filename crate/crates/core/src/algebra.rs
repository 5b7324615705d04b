//! The unital subshift algebra, realized as the partial skew group ring
//! `Lc(X,R) ⋊ F` of the free group acting on the shift.
//!
//! An element is a finite sum `Σ f_g δ_g` over simple group elements, with
//! `f_g` supported in `W_g`. Products follow
//! `(f δ_g)(h δ_k) = θ_g(θ_{g⁻¹}(f)·h) δ_{gk}` and the involution is
//! `(f δ_g)* = θ_{g⁻¹}(f) δ_{g⁻¹}`.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One};
use serde_json::{json, Value};

use crate::action;
use crate::clopen::ClopenSet;
use crate::error::{Error, Result};
use crate::group::{FreeGroupElement, SimpleFactorization};
use crate::lcfun::LcFunction;
use crate::ring::{format_scalar, Ring, Scalar};
use crate::shift::Shift;
use crate::word::Symbol;

#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    shift: Shift,
    ring: Ring,
    terms: BTreeMap<FreeGroupElement, LcFunction>,
}

impl AlgebraElement {
    pub fn zero(shift: &Shift, ring: Ring) -> Self {
        AlgebraElement { shift: shift.clone(), ring, terms: BTreeMap::new() }
    }

    /// The unit `1_X δ_e`.
    pub fn unit(shift: &Shift, ring: Ring) -> Result<Self> {
        Self::gen_p(ring, &ClopenSet::whole(shift)?)
    }

    /// `c·1`, with `c` mapped into the ring.
    pub fn scalar(shift: &Shift, ring: Ring, c: &BigRational) -> Result<Self> {
        Self::unit(shift, ring)?.scalar_mul(c)
    }

    /// The single term `f δ_g`. Fails unless `g` is simple and `f` is
    /// supported in `W_g`.
    pub fn from_term(g: FreeGroupElement, f: LcFunction) -> Result<Self> {
        let shift = f.shift().clone();
        let ring = f.ring();
        let domain = action::domain_set(&shift, &g)?;
        if !f.support().is_subset(&domain)? {
            return Err(Error::NotInDomain(g.to_literal(shift.alphabet())));
        }
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(g, f);
        }
        Ok(AlgebraElement { shift, ring, terms })
    }

    /// `p_U = 1_U δ_e`.
    pub fn gen_p(ring: Ring, set: &ClopenSet) -> Result<Self> {
        set.shift().ensure_nonempty()?;
        Self::from_term(FreeGroupElement::identity(), LcFunction::indicator(ring, set))
    }

    fn check_symbol(shift: &Shift, a: Symbol) -> Result<()> {
        shift.ensure_nonempty()?;
        if a.index() >= shift.alphabet().len() {
            return Err(Error::UnknownSymbol(format!("#{}", a.0)));
        }
        Ok(())
    }

    /// `s_a = 1_{Z(a)} δ_a`.
    pub fn gen_s(shift: &Shift, ring: Ring, a: Symbol) -> Result<Self> {
        Self::check_symbol(shift, a)?;
        let set = ClopenSet::cylinder(shift, &[a])?;
        Self::from_term(FreeGroupElement::word(&[a]), LcFunction::indicator(ring, &set))
    }

    /// `s_a* = 1_{F_a} δ_{a⁻¹}`.
    pub fn gen_s_star(shift: &Shift, ring: Ring, a: Symbol) -> Result<Self> {
        Ok(Self::gen_s(shift, ring, a)?.star())
    }

    /// `s_α = s_{a₁}⋯s_{aₙ}`; the unit for the empty word.
    pub fn gen_s_word(shift: &Shift, ring: Ring, word: &[Symbol]) -> Result<Self> {
        let mut out = Self::unit(shift, ring)?;
        for &a in word {
            out = out.mul(&Self::gen_s(shift, ring, a)?)?;
        }
        Ok(out)
    }

    /// `s_α* = s_{aₙ}*⋯s_{a₁}*`.
    pub fn gen_s_star_word(shift: &Shift, ring: Ring, word: &[Symbol]) -> Result<Self> {
        Ok(Self::gen_s_word(shift, ring, word)?.star())
    }

    /// `π(g) = 1_{W_g} δ_g` for simple `g`, zero otherwise.
    pub fn pi(shift: &Shift, ring: Ring, g: &FreeGroupElement) -> Result<Self> {
        let domain = action::domain_set(shift, g)?;
        Self::from_term(g.clone(), LcFunction::indicator(ring, &domain))
    }

    pub fn shift(&self) -> &Shift {
        &self.shift
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Coefficient functions keyed by group element, shortlex ordered.
    pub fn terms(&self) -> &BTreeMap<FreeGroupElement, LcFunction> {
        &self.terms
    }

    pub fn coefficient(&self, g: &FreeGroupElement) -> Option<&LcFunction> {
        self.terms.get(g)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
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

    fn accumulate(
        terms: &mut BTreeMap<FreeGroupElement, LcFunction>,
        g: FreeGroupElement,
        f: LcFunction,
    ) -> Result<()> {
        use std::collections::btree_map::Entry;
        match terms.entry(g) {
            Entry::Vacant(e) => {
                if !f.is_zero() {
                    e.insert(f);
                }
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&f)?;
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (g, f) in &other.terms {
            Self::accumulate(&mut terms, g.clone(), f.clone())?;
        }
        Ok(AlgebraElement { shift: self.shift.clone(), ring: self.ring, terms })
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(g, f)| (g.clone(), f.neg())).collect();
        AlgebraElement { shift: self.shift.clone(), ring: self.ring, terms }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// `c·x`, with `c` mapped into the ring.
    pub fn scalar_mul(&self, c: &BigRational) -> Result<Self> {
        let c = self.ring.element(c)?;
        Ok(self.scale(&c))
    }

    fn scale(&self, c: &Scalar) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(g, f)| (g.clone(), f.scale(c)))
            .filter(|(_, f)| !f.is_zero())
            .collect();
        AlgebraElement { shift: self.shift.clone(), ring: self.ring, terms }
    }

    fn factor(&self, g: &FreeGroupElement) -> Result<SimpleFactorization> {
        g.simple_factorization(&self.shift)?.ok_or_else(|| {
            Error::InternalInvariantViolation(format!(
                "stored key {} is not simple",
                g.to_literal(self.shift.alphabet())
            ))
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut terms = BTreeMap::new();
        for (g, f) in &self.terms {
            let SimpleFactorization { alpha, beta } = self.factor(g)?;
            // θ_{g⁻¹}(f), supported in W_{g⁻¹}.
            let pulled = f.transport(&beta, &alpha);
            for (k, h) in &other.terms {
                let r = pulled.mul(h)?;
                if r.is_zero() {
                    continue;
                }
                let gk = g.mul(k);
                if gk.simple_factorization(&self.shift)?.is_none() {
                    return Err(Error::InternalInvariantViolation(format!(
                        "nonzero coefficient at non-simple {}",
                        gk.to_literal(self.shift.alphabet())
                    )));
                }
                let pushed = r.transport(&alpha, &beta);
                debug_assert!(pushed
                    .support()
                    .is_subset(&action::domain_set(&self.shift, &gk).expect("nonempty shift"))
                    .expect("same shift"));
                Self::accumulate(&mut terms, gk, pushed)?;
            }
        }
        Ok(AlgebraElement { shift: self.shift.clone(), ring: self.ring, terms })
    }

    pub fn star(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (g, f) in &self.terms {
            let SimpleFactorization { alpha, beta } = self.factor(g).expect("stored keys are simple");
            terms.insert(g.inverse(), f.transport(&beta, &alpha));
        }
        AlgebraElement { shift: self.shift.clone(), ring: self.ring, terms }
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.terms == other.terms)
    }

    /// Expression text accepted by [`crate::syntax::parse_algebra_expr`].
    pub fn to_expr(&self) -> String {
        let mut out = String::new();
        let alphabet = self.shift.alphabet();
        for (g, f) in &self.terms {
            for (c, u) in f.parts() {
                if !out.is_empty() {
                    out.push_str(" + ");
                }
                if !c.is_one() {
                    out.push_str(&format!("{}*", format_scalar(c)));
                }
                out.push_str(&format!("p({})", u.to_expr()));
                if !g.is_identity() {
                    out.push_str(&format!("*pi({})", g.to_literal(alphabet)));
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let alphabet = self.shift.alphabet();
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(g, f)| {
                let parts: Vec<Value> = f
                    .parts()
                    .iter()
                    .map(|(c, u)| {
                        let words: Vec<String> = u.words().iter().map(|w| alphabet.format_word(w)).collect();
                        json!({ "coeff": format_scalar(c), "level": u.level(), "words": words })
                    })
                    .collect();
                json!({ "g": g.to_literal(alphabet), "parts": parts })
            })
            .collect();
        json!({ "ring": self.ring.to_literal(), "terms": terms })
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let alphabet = self.shift.alphabet();
        let mut first = true;
        for (g, fun) in &self.terms {
            for (c, u) in fun.parts() {
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                write!(f, "{}·1_{{{u}}} δ_{{{}}}", format_scalar(c), g.to_literal(alphabet))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Letter;
    use crate::shift::ShiftSpec;

    fn gm() -> Shift {
        Shift::build(ShiftSpec::from_strs(&["0", "1"], &["11"]).unwrap())
    }

    const Q: Ring = Ring::Rationals;

    fn s(sh: &Shift, a: u16) -> AlgebraElement {
        AlgebraElement::gen_s(sh, Q, Symbol(a)).unwrap()
    }

    fn st(sh: &Shift, a: u16) -> AlgebraElement {
        AlgebraElement::gen_s_star(sh, Q, Symbol(a)).unwrap()
    }

    fn p(sh: &Shift, w: &str) -> AlgebraElement {
        AlgebraElement::gen_p(Q, &ClopenSet::cylinder(sh, &sh.parse_word(w).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn generators() {
        let sh = gm();
        let s1 = s(&sh, 1);
        let f = s1.coefficient(&FreeGroupElement::word(&[Symbol(1)])).unwrap();
        assert_eq!(f.support(), ClopenSet::cylinder(&sh, &[Symbol(1)]).unwrap());
        let s1s = st(&sh, 1);
        let f = s1s.coefficient(&FreeGroupElement::reduce([Letter::neg(Symbol(1))])).unwrap();
        assert_eq!(f.support(), ClopenSet::cylinder(&sh, &[Symbol(0)]).unwrap());
        assert_eq!(AlgebraElement::gen_p(Q, &ClopenSet::whole(&sh).unwrap()).unwrap(), AlgebraElement::unit(&sh, Q).unwrap());
        assert!(matches!(AlgebraElement::gen_s(&sh, Q, Symbol(5)), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn products() {
        let sh = gm();
        assert!(st(&sh, 0).mul(&s(&sh, 1)).unwrap().is_zero());
        assert_eq!(st(&sh, 1).mul(&s(&sh, 1)).unwrap(), p(&sh, "0"));
        assert_eq!(s(&sh, 0).mul(&st(&sh, 0)).unwrap(), p(&sh, "0"));
        let s0 = s(&sh, 0);
        assert_eq!(s0.mul(&st(&sh, 0)).unwrap().mul(&s0).unwrap(), s0);
        // s_β s_α* s_α s_β* = p_{C(α,β)} with α = 1, β = 0.
        let lhs = s(&sh, 0).mul(&st(&sh, 1)).unwrap().mul(&s(&sh, 1)).unwrap().mul(&st(&sh, 0)).unwrap();
        let c = ClopenSet::c_set(&sh, &[Symbol(1)], &[Symbol(0)]).unwrap();
        assert_eq!(lhs, AlgebraElement::gen_p(Q, &c).unwrap());
        assert!(s(&sh, 1).mul(&s(&sh, 1)).unwrap().is_zero());
    }

    #[test]
    fn involution() {
        let sh = gm();
        assert_eq!(s(&sh, 0).star(), st(&sh, 0));
        assert_eq!(p(&sh, "01").star(), p(&sh, "01"));
        let x = s(&sh, 0).add(&st(&sh, 1)).unwrap();
        let y = s(&sh, 1).mul(&p(&sh, "10")).unwrap();
        assert_eq!(x.mul(&y).unwrap().star(), y.star().mul(&x.star()).unwrap());
    }

    #[test]
    fn partial_representation_values() {
        let sh = gm();
        let g = FreeGroupElement::reduce([Letter::pos(Symbol(0)), Letter::neg(Symbol(1))]);
        let pg = AlgebraElement::pi(&sh, Q, &g).unwrap();
        assert_eq!(pg.coefficient(&g).unwrap().support(), ClopenSet::cylinder(&sh, &[Symbol(0), Symbol(0)]).unwrap());
        assert_eq!(pg, s(&sh, 0).mul(&st(&sh, 1)).unwrap());
        assert!(AlgebraElement::pi(&sh, Q, &FreeGroupElement::word(&[Symbol(1), Symbol(1)])).unwrap().is_zero());
        assert_eq!(AlgebraElement::pi(&sh, Q, &FreeGroupElement::identity()).unwrap(), AlgebraElement::unit(&sh, Q).unwrap());
    }

    #[test]
    fn rendering() {
        let sh = gm();
        let x = s(&sh, 0).scalar_mul(&BigRational::new(3.into(), 2.into())).unwrap();
        assert_eq!(x.to_expr(), "3/2*p(Z(0))*pi(0)");
        assert_eq!(x.to_string(), "3/2·1_{Z(0)} δ_{0}");
        assert_eq!(AlgebraElement::zero(&sh, Q).to_expr(), "0");
        assert_eq!(x.to_json()["terms"][0]["parts"][0]["coeff"], "3/2");
    }
}
