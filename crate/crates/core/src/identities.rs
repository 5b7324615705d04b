//! Exact verification of the defining relations of the algebra and of the
//! partial representation `π`, over all words or group elements up to a
//! length bound, plus a seeded sampler for the ε-identities.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::AlgebraElement;
use crate::clopen::ClopenSet;
use crate::error::Result;
use crate::group::FreeGroupElement;
use crate::ring::Ring;
use crate::shift::Shift;
use crate::word::{concat, Word};

/// Outcome of one identity over all its instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub statement: String,
    pub checked: usize,
    pub failed: usize,
    pub first_counterexample: Option<String>,
}

impl IdentityCheck {
    fn new(name: &str, statement: &str) -> Self {
        IdentityCheck {
            name: name.into(),
            statement: statement.into(),
            checked: 0,
            failed: 0,
            first_counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn merge(mut self, other: IdentityReport) -> Self {
        self.checks.extend(other.checks);
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

/// `s_α` and `s_α*` for every word of the language up to `max_len`.
struct WordGens {
    words: Vec<Word>,
    s: BTreeMap<Word, AlgebraElement>,
    st: BTreeMap<Word, AlgebraElement>,
}

impl WordGens {
    fn new(shift: &Shift, ring: Ring, max_len: usize) -> Result<Self> {
        let words = shift.language_up_to(max_len)?;
        let mut s = BTreeMap::new();
        let mut st = BTreeMap::new();
        for w in &words {
            let x = AlgebraElement::gen_s_word(shift, ring, w)?;
            st.insert(w.clone(), x.star());
            s.insert(w.clone(), x);
        }
        Ok(WordGens { words, s, st })
    }
}

fn fmt(shift: &Shift, w: &[crate::word::Symbol]) -> String {
    shift.format_word(w)
}

/// The generating relations of the algebra and the derived product rules,
/// for all words of length at most `max_len`.
pub fn check_relations(shift: &Shift, ring: Ring, max_len: usize) -> Result<IdentityReport> {
    let gens = WordGens::new(shift, ring, max_len)?;
    let one = AlgebraElement::unit(shift, ring)?;
    let zero = AlgebraElement::zero(shift, ring);
    let p = |u: &ClopenSet| AlgebraElement::gen_p(ring, u);

    let mut proj = IdentityCheck::new(
        "projections",
        "p_X = 1, p_∅ = 0, p_{A∩B} = p_A p_B, p_{A∪B} = p_A + p_B - p_{A∩B}",
    );
    proj.record(p(&ClopenSet::whole(shift)?)? == one, || "p_X ≠ 1".into());
    proj.record(p(&ClopenSet::empty(shift))?.is_zero(), || "p_∅ ≠ 0".into());
    let short: Vec<&Word> = gens.words.iter().filter(|w| w.len() <= max_len.min(2)).collect();
    let mut seen = BTreeSet::new();
    let mut sets = Vec::new();
    for a in &short {
        for b in &short {
            let c = ClopenSet::c_set(shift, a, b)?;
            if seen.insert(c.to_expr()) {
                sets.push(c);
            }
        }
    }
    for a in &sets {
        for b in &sets {
            let (pa, pb) = (p(a)?, p(b)?);
            let cap = a.intersect(b)?;
            let cup = a.union(b)?;
            proj.record(pa.mul(&pb)? == p(&cap)?, || format!("p_A p_B ≠ p_(A∩B) for A = {a}, B = {b}"));
            proj.record(p(&cup)? == pa.add(&pb)?.sub(&p(&cap)?)?, || {
                format!("p_(A∪B) ≠ p_A + p_B - p_(A∩B) for A = {a}, B = {b}")
            });
        }
    }

    let mut iso = IdentityCheck::new("partial_isometries", "s_a s_a* s_a = s_a and s_a* s_a s_a* = s_a*");
    let mut star_mul = IdentityCheck::new("star_products", "s_a* s_b = δ_{a,b} p_{F_a}");
    for a in shift.alphabet().symbols() {
        let sa = &gens.s.get(&vec![a]).cloned().unwrap_or_else(|| zero.clone());
        let sta = sa.star();
        iso.record(sa.mul(&sta)?.mul(sa)? == *sa, || format!("fails for a = {}", fmt(shift, &[a])));
        iso.record(sta.mul(sa)?.mul(&sta)? == sta, || format!("star form fails for a = {}", fmt(shift, &[a])));
        for b in shift.alphabet().symbols() {
            let sb = gens.s.get(&vec![b]).cloned().unwrap_or_else(|| zero.clone());
            let expected = if a == b { p(&ClopenSet::follower(shift, &[a])?)? } else { zero.clone() };
            star_mul.record(sta.mul(&sb)? == expected, || {
                format!("fails for a = {}, b = {}", fmt(shift, &[a]), fmt(shift, &[b]))
            });
        }
    }

    let mut cset = IdentityCheck::new("c_set_projections", "s_β s_α* s_α s_β* = p_{C(α,β)}");
    let mut src = IdentityCheck::new("source_projections_commute", "s_α* s_α and s_β* s_β commute");
    let mut mixed = IdentityCheck::new("source_range_commute", "s_α* s_α and s_β s_β* commute");
    let mut vanish = IdentityCheck::new("forbidden_products_vanish", "s_α s_β = 0 when αβ is not in the language");
    let source: BTreeMap<&Word, AlgebraElement> =
        gens.words.iter().map(|w| Ok((w, gens.st[w].mul(&gens.s[w])?))).collect::<Result<_>>()?;
    let range: BTreeMap<&Word, AlgebraElement> =
        gens.words.iter().map(|w| Ok((w, gens.s[w].mul(&gens.st[w])?))).collect::<Result<_>>()?;
    for a in &gens.words {
        for b in &gens.words {
            let lhs = gens.s[b].mul(&source[a])?.mul(&gens.st[b])?;
            cset.record(lhs == p(&ClopenSet::c_set(shift, a, b)?)?, || {
                format!("fails for α = {}, β = {}", fmt(shift, a), fmt(shift, b))
            });
            src.record(source[a].mul(&source[b])? == source[b].mul(&source[a])?, || {
                format!("fails for α = {}, β = {}", fmt(shift, a), fmt(shift, b))
            });
            mixed.record(source[a].mul(&range[b])? == range[b].mul(&source[a])?, || {
                format!("fails for α = {}, β = {}", fmt(shift, a), fmt(shift, b))
            });
            if !shift.in_language(&concat(a, b)) {
                vanish.record(gens.s[a].mul(&gens.s[b])?.is_zero(), || {
                    format!("fails for α = {}, β = {}", fmt(shift, a), fmt(shift, b))
                });
            }
        }
    }
    Ok(IdentityReport { checks: vec![proj, iso, cset, star_mul, src, mixed, vanish] })
}

/// Elements of reduced length at most `max_len` together with `π(g)`.
fn pi_table(shift: &Shift, ring: Ring, max_len: usize) -> Result<Vec<(FreeGroupElement, AlgebraElement)>> {
    FreeGroupElement::enumerate(shift.alphabet(), max_len)
        .into_iter()
        .map(|g| {
            let x = AlgebraElement::pi(shift, ring, &g)?;
            Ok((g, x))
        })
        .collect()
}

/// The partial-representation axioms for `π`, for all `g, h` of reduced
/// length at most `max_len`, and `π(αβ⁻¹) = s_α s_β*` for simple elements.
pub fn check_partial_representation(shift: &Shift, ring: Ring, max_len: usize) -> Result<IdentityReport> {
    let a = shift.alphabet();
    let pi = |g: &FreeGroupElement| AlgebraElement::pi(shift, ring, g);
    let table = pi_table(shift, ring, max_len)?;
    let inv: BTreeMap<&FreeGroupElement, AlgebraElement> =
        table.iter().map(|(g, _)| Ok((g, pi(&g.inverse())?))).collect::<Result<_>>()?;

    let mut unit = IdentityCheck::new("pi_unit", "π(e) = 1");
    unit.record(pi(&FreeGroupElement::identity())? == AlgebraElement::unit(shift, ring)?, || "π(e) ≠ 1".into());

    let mut right = IdentityCheck::new("pi_right", "π(g)π(h)π(h⁻¹) = π(gh)π(h⁻¹)");
    let mut left = IdentityCheck::new("pi_left", "π(g⁻¹)π(g)π(h) = π(g⁻¹)π(gh)");
    for (g, pg) in &table {
        for (h, ph) in &table {
            let gh = g.mul(h);
            let pgh = pi(&gh)?;
            let pinv_h = &inv[h];
            right.record(pg.mul(ph)?.mul(pinv_h)? == pgh.mul(pinv_h)?, || {
                format!("fails for g = {}, h = {}", g.to_literal(a), h.to_literal(a))
            });
            let pinv_g = &inv[g];
            left.record(pinv_g.mul(pg)?.mul(ph)? == pinv_g.mul(&pgh)?, || {
                format!("fails for g = {}, h = {}", g.to_literal(a), h.to_literal(a))
            });
        }
    }

    let mut words = IdentityCheck::new("pi_simple", "π(αβ⁻¹) = s_α s_β* for simple αβ⁻¹, and 0 otherwise");
    for (g, pg) in &table {
        let expected = match g.simple_factorization(shift)? {
            Some(f) => AlgebraElement::gen_s_word(shift, ring, &f.alpha)?
                .mul(&AlgebraElement::gen_s_star_word(shift, ring, &f.beta)?)?,
            None => AlgebraElement::zero(shift, ring),
        };
        words.record(*pg == expected, || format!("fails for g = {}", g.to_literal(a)));
    }
    Ok(IdentityReport { checks: vec![unit, right, left, words] })
}

/// Seeded random tuples `(g₁, …, gₙ)` with `n ≤ 4` and reduced lengths at
/// most `max_len`. Half the entries are drawn from the simple elements so
/// that `π` is rarely zero.
pub fn sample_tuples(shift: &Shift, max_len: usize, count: usize, seed: u64) -> Result<Vec<Vec<FreeGroupElement>>> {
    let all = FreeGroupElement::enumerate(shift.alphabet(), max_len);
    let mut simple = Vec::new();
    for g in &all {
        if g.simple_factorization(shift)?.is_some() {
            simple.push(g.clone());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| {
            let n = rng.gen_range(1..=4);
            (0..n)
                .map(|_| {
                    let pool = if rng.gen_bool(0.5) { &simple } else { &all };
                    pool.choose(&mut rng).expect("pools contain the identity").clone()
                })
                .collect()
        })
        .collect())
}

/// The ε-calculus of a partial representation on sampled tuples, where
/// `ε_g = π(g)π(g⁻¹)`.
pub fn check_epsilon_identities(shift: &Shift, ring: Ring, tuples: &[Vec<FreeGroupElement>]) -> Result<IdentityReport> {
    let a = shift.alphabet();
    let mut cache: BTreeMap<FreeGroupElement, AlgebraElement> = BTreeMap::new();
    let mut pi = |g: &FreeGroupElement| -> Result<AlgebraElement> {
        if let Some(x) = cache.get(g) {
            return Ok(x.clone());
        }
        let x = AlgebraElement::pi(shift, ring, g)?;
        cache.insert(g.clone(), x.clone());
        Ok(x)
    };
    let mut checks = [
        IdentityCheck::new("eps_absorb", "π(g)π(g⁻¹)π(g) = ε_g π(g) = π(g)"),
        IdentityCheck::new("eps_idempotent", "ε_g² = ε_g"),
        IdentityCheck::new("eps_commute", "ε_g ε_h = ε_h ε_g"),
        IdentityCheck::new("eps_covariance", "π(g) ε_h = ε_{gh} π(g)"),
        IdentityCheck::new("eps_expansion", "π(g₁)⋯π(gₙ) = ε_{g₁} ε_{g₁g₂} ⋯ ε_{g₁⋯gₙ₋₁} π(g₁⋯gₙ)"),
    ];
    let lit = |t: &[FreeGroupElement]| t.iter().map(|g| g.to_literal(a)).collect::<Vec<_>>().join(", ");
    for t in tuples {
        let g = &t[0];
        let h = t.get(1).unwrap_or(g);
        let pg = pi(g)?;
        let pgi = pi(&g.inverse())?;
        let eg = pg.mul(&pgi)?;
        let ph = pi(h)?;
        let eh = ph.mul(&pi(&h.inverse())?)?;
        let gh = g.mul(h);
        let egh = pi(&gh)?.mul(&pi(&gh.inverse())?)?;
        checks[0].record(pg.mul(&pgi)?.mul(&pg)? == pg && eg.mul(&pg)? == pg, || lit(t));
        checks[1].record(eg.mul(&eg)? == eg, || lit(t));
        checks[2].record(eg.mul(&eh)? == eh.mul(&eg)?, || lit(t));
        checks[3].record(pg.mul(&eh)? == egh.mul(&pg)?, || lit(t));

        let mut lhs = AlgebraElement::unit(shift, ring)?;
        let mut rhs = AlgebraElement::unit(shift, ring)?;
        let mut prefix = FreeGroupElement::identity();
        for (i, gi) in t.iter().enumerate() {
            lhs = lhs.mul(&pi(gi)?)?;
            prefix = prefix.mul(gi);
            if i + 1 < t.len() {
                rhs = rhs.mul(&pi(&prefix)?.mul(&pi(&prefix.inverse())?)?)?;
            }
        }
        rhs = rhs.mul(&pi(&prefix)?)?;
        checks[4].record(lhs == rhs, || lit(t));
    }
    Ok(IdentityReport { checks: checks.into() })
}

/// Every suite: relations and partial-representation axioms up to
/// `max_len`, and `samples` seeded ε-identity tuples of length up to 3.
pub fn check_all(shift: &Shift, ring: Ring, max_len: usize, samples: usize, seed: u64) -> Result<IdentityReport> {
    let tuples = sample_tuples(shift, max_len.min(3), samples, seed)?;
    Ok(check_relations(shift, ring, max_len)?
        .merge(check_partial_representation(shift, ring, max_len)?)
        .merge(check_epsilon_identities(shift, ring, &tuples)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shift::ShiftSpec;

    #[test]
    fn golden_mean_small() {
        let gm = Shift::build(ShiftSpec::from_strs(&["0", "1"], &["11"]).unwrap());
        for ring in [Ring::Rationals, Ring::IntegersMod(2)] {
            let r = check_all(&gm, ring, 2, 50, 7).unwrap();
            assert!(r.passed(), "{r:#?}");
            assert!(r.checks.iter().all(|c| c.checked > 0), "{r:#?}");
        }
    }

    #[test]
    fn sampler_is_deterministic() {
        let gm = Shift::build(ShiftSpec::from_strs(&["0", "1"], &["11"]).unwrap());
        assert_eq!(sample_tuples(&gm, 3, 20, 1).unwrap(), sample_tuples(&gm, 3, 20, 1).unwrap());
    }
}
