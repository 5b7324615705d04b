//! The partial action of the free group on the shift space.
//!
//! For `g = αβ⁻¹` simple, `τ_g` maps `W_{g⁻¹} = C(α,β)` onto
//! `W_g = C(β,α)` by `βy ↦ αy`. Every other element has empty domain. The
//! same convention is used throughout the crate.

use std::collections::BTreeSet;

use crate::clopen::ClopenSet;
use crate::error::{Error, Result};
use crate::group::{FreeGroupElement, SimpleFactorization};
use crate::point::EvPeriodicPoint;
use crate::shift::Shift;
use crate::word::concat;

/// `W_g`, the range of `τ_g`: `C(β,α)` for `g = αβ⁻¹`, empty otherwise.
pub fn domain_set(shift: &Shift, g: &FreeGroupElement) -> Result<ClopenSet> {
    match g.simple_factorization(shift)? {
        Some(SimpleFactorization { alpha, beta }) => ClopenSet::c_set(shift, &beta, &alpha),
        None => Ok(ClopenSet::empty(shift)),
    }
}

fn factor_or_err(shift: &Shift, g: &FreeGroupElement) -> Result<SimpleFactorization> {
    g.simple_factorization(shift)?
        .ok_or_else(|| Error::NonSimpleElement(g.to_literal(shift.alphabet())))
}

/// `τ_g(p)` for `p` in `W_{g⁻¹}`.
pub fn act_point(shift: &Shift, g: &FreeGroupElement, point: &EvPeriodicPoint) -> Result<EvPeriodicPoint> {
    shift.ensure_point(point)?;
    let SimpleFactorization { alpha, beta } = factor_or_err(shift, g)?;
    if !point.starts_with(&beta) {
        return Err(Error::NotInDomain(g.to_literal(shift.alphabet())));
    }
    let image = point.drop_prefix(beta.len()).prepend(&alpha);
    if !shift.point_in_shift(&image) {
        return Err(Error::NotInDomain(g.to_literal(shift.alphabet())));
    }
    Ok(image)
}

/// The image `τ_g(U)` of a clopen set contained in `W_{g⁻¹}`.
pub fn act_clopen(shift: &Shift, g: &FreeGroupElement, set: &ClopenSet) -> Result<ClopenSet> {
    shift.ensure_nonempty()?;
    if set.shift() != shift {
        return Err(Error::ShiftMismatch);
    }
    if set.is_empty() {
        return Ok(ClopenSet::empty(shift));
    }
    let not_in_domain = || Error::NotInDomain(g.to_literal(shift.alphabet()));
    let Some(SimpleFactorization { alpha, beta }) = g.simple_factorization(shift)? else {
        return Err(not_in_domain());
    };
    let source = ClopenSet::c_set(shift, &alpha, &beta)?;
    if !set.is_subset(&source)? {
        return Err(not_in_domain());
    }
    Ok(transport(shift, &alpha, &beta, set))
}

/// Rewrites `βw ↦ αw` on a set already known to lie in `C(α,β)`.
pub(crate) fn transport(shift: &Shift, alpha: &[crate::word::Symbol], beta: &[crate::word::Symbol], set: &ClopenSet) -> ClopenSet {
    if set.is_empty() {
        return ClopenSet::empty(shift);
    }
    let level = set.level().max(beta.len() + shift.memory());
    let words: BTreeSet<_> = set
        .refine(level)
        .into_iter()
        .map(|w| {
            debug_assert!(w.starts_with(beta));
            let image = concat(alpha, &w[beta.len()..]);
            debug_assert!(shift.in_language(&image));
            image
        })
        .collect();
    ClopenSet::canonical(shift, level - beta.len() + alpha.len(), words)
}

/// Whether `g ∈ ξ_p`, i.e. `g = βα⁻¹` with `p ∈ C(α,β)`; equivalently
/// `p ∈ W_g`.
pub fn xi_contains(shift: &Shift, point: &EvPeriodicPoint, g: &FreeGroupElement) -> Result<bool> {
    shift.ensure_point(point)?;
    domain_set(shift, g)?.contains_point(point)
}

/// Points `τ_g(p)` for simple `g = αβ⁻¹` with `|α|, |β| ≤ depth` and `p` in
/// the domain of `τ_g`. Always contains `p`.
pub fn orbit(shift: &Shift, point: &EvPeriodicPoint, depth: usize) -> Result<BTreeSet<EvPeriodicPoint>> {
    shift.ensure_point(point)?;
    let alphas = shift.language_up_to(depth)?;
    let mut out = BTreeSet::new();
    for k in 0..=depth {
        let beta = point.take(k);
        let tail = point.drop_prefix(k);
        for alpha in &alphas {
            let reduced = match (alpha.last(), beta.last()) {
                (Some(a), Some(b)) => a != b,
                _ => true,
            };
            if !reduced {
                continue;
            }
            let image = tail.prepend(alpha);
            if shift.point_in_shift(&image) {
                out.insert(image);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Letter;
    use crate::shift::ShiftSpec;
    use crate::word::{Symbol, Word};

    fn gm() -> Shift {
        Shift::build(ShiftSpec::from_strs(&["0", "1"], &["11"]).unwrap())
    }

    fn w(s: &Shift, t: &str) -> Word {
        s.parse_word(t).unwrap()
    }

    fn pt(s: &Shift, u: &str, v: &str) -> EvPeriodicPoint {
        EvPeriodicPoint::new(w(s, u), w(s, v))
    }

    fn z(s: &Shift, t: &str) -> ClopenSet {
        ClopenSet::cylinder(s, &w(s, t)).unwrap()
    }

    fn g01i() -> FreeGroupElement {
        FreeGroupElement::reduce([Letter::pos(Symbol(0)), Letter::neg(Symbol(1))])
    }

    #[test]
    fn domains() {
        let s = gm();
        assert_eq!(domain_set(&s, &g01i()).unwrap(), z(&s, "00"));
        assert!(domain_set(&s, &FreeGroupElement::identity()).unwrap().is_whole());
        assert!(domain_set(&s, &FreeGroupElement::word(&w(&s, "11"))).unwrap().is_empty());
    }

    #[test]
    fn points() {
        let s = gm();
        assert_eq!(act_point(&s, &g01i(), &pt(&s, "1", "0")).unwrap(), pt(&s, "", "0"));
        let one = FreeGroupElement::word(&w(&s, "1"));
        assert_eq!(act_point(&s, &one, &pt(&s, "", "0")).unwrap(), pt(&s, "1", "0"));
        let p = pt(&s, "", "01");
        assert_eq!(act_point(&s, &FreeGroupElement::identity(), &p).unwrap(), p);
        assert!(matches!(act_point(&s, &one, &pt(&s, "", "10")), Err(Error::NotInDomain(_))));
        let eleven = FreeGroupElement::word(&w(&s, "11"));
        assert!(matches!(act_point(&s, &eleven, &pt(&s, "", "0")), Err(Error::NonSimpleElement(_))));
    }

    #[test]
    fn clopen_images() {
        let s = gm();
        assert_eq!(act_clopen(&s, &g01i(), &z(&s, "10")).unwrap(), z(&s, "00"));
        assert_eq!(act_clopen(&s, &g01i(), &z(&s, "101")).unwrap(), z(&s, "001"));
        assert!(act_clopen(&s, &g01i(), &ClopenSet::empty(&s)).unwrap().is_empty());
        assert!(matches!(act_clopen(&s, &g01i(), &z(&s, "0")), Err(Error::NotInDomain(_))));
        let back = act_clopen(&s, &g01i().inverse(), &z(&s, "001")).unwrap();
        assert_eq!(back, z(&s, "101"));
    }

    #[test]
    fn xi_membership() {
        let s = gm();
        let zero = pt(&s, "", "0");
        assert!(xi_contains(&s, &zero, &g01i()).unwrap());
        assert!(!xi_contains(&s, &zero, &FreeGroupElement::word(&w(&s, "1"))).unwrap());
        assert!(xi_contains(&s, &zero, &FreeGroupElement::identity()).unwrap());
    }

    #[test]
    fn orbits() {
        let s = gm();
        let zero = pt(&s, "", "0");
        assert_eq!(orbit(&s, &zero, 0).unwrap(), BTreeSet::from([zero.clone()]));
        let o = orbit(&s, &zero, 1).unwrap();
        assert!(o.contains(&zero) && o.contains(&pt(&s, "1", "0")));
        let full = Shift::build(ShiftSpec::from_strs(&["0", "1"], &[]).unwrap());
        let o = orbit(&full, &pt(&full, "", "0"), 1).unwrap();
        assert!(o.contains(&pt(&full, "", "0")) && o.contains(&pt(&full, "1", "0")));
    }
}
