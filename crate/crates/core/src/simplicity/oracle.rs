//! Brute-force counterparts of the decision procedures, written straight
//! from the definitions. They use only point membership (forbidden-word
//! scanning of eventually periodic points), never the automaton or the
//! clopen algebra.
//!
//! A pass means "no counterexample within the bounds". A failure exhibits a
//! concrete counterexample found within the bounds.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::point::{primitive_root_len, EvPeriodicPoint};
use crate::shift::Shift;
use crate::simplicity::{Method, Verdict, Witness};
use crate::syntax::parse_point;
use crate::word::{Symbol, Word};

/// Search limits for the oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBounds {
    /// Longest word in `B`, longest `γ`, and largest `|u| + |v|` of the
    /// points whose cost is examined.
    pub bound: usize,
    /// Largest `|u| + |v|` of the points used to tell follower sets apart
    /// and to look for a second point in a follower set.
    pub point_bound: usize,
    /// Largest `|α| + |γ|` tried when computing a cost.
    pub cost_bound: usize,
}

impl OracleBounds {
    pub fn new(bound: usize) -> Self {
        OracleBounds { bound, point_bound: 2 * bound, cost_bound: 2 * bound }
    }
}

/// All words of length `n` over the first `k` symbols, lexicographic.
fn all_words(k: usize, n: usize) -> Vec<Word> {
    let mut out: Vec<Word> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |a| {
                    let mut w = w.clone();
                    w.push(Symbol(a as u16));
                    w
                })
            })
            .collect();
    }
    out
}

/// Every point `u·v^∞` of the shift with `|u| + |v| ≤ size`, in canonical
/// form and sorted.
pub fn bounded_points(shift: &Shift, size: usize) -> Vec<EvPeriodicPoint> {
    let k = shift.alphabet().len();
    let mut out = BTreeSet::new();
    for p in 1..=size {
        let periods: Vec<Word> = all_words(k, p).into_iter().filter(|v| primitive_root_len(v) == p).collect();
        for u_len in 0..=size - p {
            for u in all_words(k, u_len) {
                for v in &periods {
                    let x = EvPeriodicPoint::new(u.clone(), v.clone());
                    if x.size() == u_len + p && shift.point_in_shift(&x) {
                        out.insert(x);
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

fn in_follower(shift: &Shift, words: &[Word], y: &EvPeriodicPoint) -> bool {
    shift.point_in_shift(y) && words.iter().all(|b| shift.point_in_shift(&y.prepend(b)))
}

/// The least `|α| + |γ| ≤ max` with `x = αy` and `βγy ∈ X` for every `β`,
/// by exhaustive search.
pub fn brute_force_cost(shift: &Shift, words: &[Word], point: &EvPeriodicPoint, max: usize) -> Option<usize> {
    let k = shift.alphabet().len();
    let gammas: Vec<Vec<Word>> = (0..=max).map(|n| all_words(k, n)).collect();
    for c in 0..=max {
        for a in 0..=c {
            let y = point.drop_prefix(a);
            if gammas[c - a].iter().any(|g| in_follower(shift, words, &y.prepend(g))) {
                return Some(c);
            }
        }
    }
    None
}

fn labels(shift: &Shift, words: &[Word]) -> Vec<String> {
    words.iter().map(|w| shift.format_word(w)).collect()
}

/// Condition (L) by enumeration: for each periodic `γ^∞` with `|γ| ≤ bound`,
/// take the largest `B ⊆ A^{≤bound}` with `γ^∞ ∈ F_B` and look for a second
/// point of `F_B`.
pub fn oracle_condition_l(shift: &Shift, bounds: OracleBounds) -> Result<Verdict> {
    shift.ensure_nonempty()?;
    let k = shift.alphabet().len();
    let probe = bounded_points(shift, bounds.point_bound);
    let betas: Vec<Word> = (1..=bounds.bound).flat_map(|n| all_words(k, n)).collect();
    for n in 1..=bounds.bound {
        for gamma in all_words(k, n) {
            if primitive_root_len(&gamma) != n {
                continue;
            }
            let x = EvPeriodicPoint::periodic(gamma.clone());
            if !shift.point_in_shift(&x) {
                continue;
            }
            let b: Vec<Word> = betas.iter().filter(|b| shift.point_in_shift(&x.prepend(b))).cloned().collect();
            if !probe.iter().any(|y| *y != x && in_follower(shift, &b, y)) {
                return Ok(Verdict {
                    property: "condition_L".into(),
                    holds: false,
                    witness: Some(Witness::SingletonFollower {
                        suffixes: labels(shift, &b),
                        gamma: shift.format_word(&gamma),
                    }),
                    method: Method::Oracle,
                    bound: Some(bounds.bound),
                    notes: Vec::new(),
                });
            }
        }
    }
    Ok(pass("condition_L", bounds))
}

fn pass(property: &str, bounds: OracleBounds) -> Verdict {
    Verdict {
        property: property.into(),
        holds: true,
        witness: None,
        method: Method::Oracle,
        bound: Some(bounds.bound),
        notes: Vec::new(),
    }
}

/// Word sets `B ⊆ A^{≤bound}` with distinct, nonempty follower sets as seen
/// on the probe points. With `singletons`, only one-word sets.
fn word_sets(shift: &Shift, bounds: OracleBounds, singletons: bool) -> Vec<Vec<Word>> {
    let k = shift.alphabet().len();
    let probe = bounded_points(shift, bounds.point_bound);
    let mut seen: BTreeMap<Vec<bool>, Vec<Word>> = BTreeMap::new();
    let mut gens: Vec<(Word, Vec<bool>)> = Vec::new();
    let mut order: Vec<Vec<bool>> = Vec::new();
    for w in (0..=bounds.bound).flat_map(|n| all_words(k, n)) {
        let bits: Vec<bool> = probe.iter().map(|y| in_follower(shift, std::slice::from_ref(&w), y)).collect();
        if bits.iter().any(|&b| b) && !seen.contains_key(&bits) {
            seen.insert(bits.clone(), vec![w.clone()]);
            order.push(bits.clone());
            gens.push((w, bits));
        }
    }
    if !singletons {
        let mut frontier = order.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for bits in &frontier {
                for (w, g) in &gens {
                    let inter: Vec<bool> = bits.iter().zip(g).map(|(a, b)| *a && *b).collect();
                    if inter.iter().any(|&b| b) && !seen.contains_key(&inter) {
                        let mut label = seen[bits].clone();
                        label.push(w.clone());
                        seen.insert(inter.clone(), label);
                        order.push(inter.clone());
                        next.push(inter);
                    }
                }
            }
            frontier = next;
        }
    }
    order.into_iter().map(|bits| seen.remove(&bits).expect("recorded")).collect()
}

fn cofinal(shift: &Shift, bounds: OracleBounds, singletons: bool, property: &str) -> Result<Verdict> {
    shift.ensure_nonempty()?;
    let points = bounded_points(shift, bounds.bound);
    for b in word_sets(shift, bounds, singletons) {
        for x in &points {
            if brute_force_cost(shift, &b, x, bounds.cost_bound).is_none() {
                return Ok(Verdict {
                    property: property.into(),
                    holds: false,
                    witness: Some(Witness::Unreached {
                        suffixes: labels(shift, &b),
                        point: x.to_literal(shift.alphabet()),
                    }),
                    method: Method::Oracle,
                    bound: Some(bounds.bound),
                    notes: Vec::new(),
                });
            }
        }
    }
    Ok(pass(property, bounds))
}

/// Finite cost for every bounded point and every word set with nonempty
/// follower set.
pub fn oracle_cofinal(shift: &Shift, bounds: OracleBounds) -> Result<Verdict> {
    cofinal(shift, bounds, false, "hyper_cofinal")
}

/// [`oracle_cofinal`] restricted to one-word sets.
pub fn oracle_strongly_cofinal(shift: &Shift, bounds: OracleBounds) -> Result<Verdict> {
    cofinal(shift, bounds, true, "strongly_cofinal")
}

fn parse_words(shift: &Shift, words: &[String]) -> Result<Vec<Word>> {
    words.iter().map(|w| shift.parse_word(w)).collect()
}

/// Whether a failing verdict's witness reproduces under brute force.
pub fn replay(shift: &Shift, verdict: &Verdict, bounds: OracleBounds) -> Result<bool> {
    let Some(witness) = &verdict.witness else {
        return Ok(false);
    };
    match witness {
        Witness::SingletonFollower { suffixes, gamma } => {
            let b = parse_words(shift, suffixes)?;
            let gamma = shift.parse_word(gamma)?;
            if gamma.is_empty() {
                return Err(Error::MalformedSpec("empty period in witness".into()));
            }
            let x = EvPeriodicPoint::periodic(gamma);
            if !in_follower(shift, &b, &x) {
                return Ok(false);
            }
            let probe = bounded_points(shift, bounds.point_bound);
            Ok(!probe.iter().any(|y| *y != x && in_follower(shift, &b, y)))
        }
        Witness::TrappedPoint { suffixes, point } | Witness::Unreached { suffixes, point } => {
            let b = parse_words(shift, suffixes)?;
            let x = parse_point(shift.alphabet(), point)?;
            Ok(shift.point_in_shift(&x)
                && probe_nonempty(shift, &b, bounds)
                && brute_force_cost(shift, &b, &x, bounds.cost_bound).is_none())
        }
        Witness::Failed { details, .. } => {
            for d in details {
                if !replay(shift, d, bounds)? {
                    return Ok(false);
                }
            }
            Ok(!details.is_empty())
        }
    }
}

fn probe_nonempty(shift: &Shift, words: &[Word], bounds: OracleBounds) -> bool {
    bounded_points(shift, bounds.point_bound).iter().any(|y| in_follower(shift, words, y))
}
