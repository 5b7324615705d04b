//! Shared fixtures for the integration tests: the shift corpus, seeded
//! generators, and brute-force evaluators written from the definitions.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use subshift::simplicity::oracle::bounded_points;
use subshift::syntax::SetExpr;
use subshift::{AlgebraElement, ClopenSet, EvPeriodicPoint, Ring, Shift, ShiftSpec, Symbol, Word};

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn shift(alphabet: &[&str], forbidden: &[&str]) -> Shift {
    Shift::build(ShiftSpec::from_strs(alphabet, forbidden).unwrap())
}

pub fn full2() -> Shift {
    shift(&["0", "1"], &[])
}

pub fn golden_mean() -> Shift {
    shift(&["0", "1"], &["11"])
}

pub fn forbid_10() -> Shift {
    shift(&["0", "1"], &["10"])
}

pub fn one_point() -> Shift {
    shift(&["a"], &[])
}

/// The four named shifts.
pub fn named() -> Vec<(String, Shift)> {
    vec![
        ("full 2-shift".into(), full2()),
        ("golden mean".into(), golden_mean()),
        ("forbid 10".into(), forbid_10()),
        ("one point".into(), one_point()),
    ]
}

/// A nonempty shift with at most three symbols and forbidden words of length
/// two or three.
pub fn random_sft(rng: &mut ChaCha8Rng) -> Shift {
    loop {
        let k = rng.gen_range(2..=3);
        let names: Vec<String> = (0..k).map(|i| i.to_string()).collect();
        let count = rng.gen_range(1..=4);
        let mut forbidden: Vec<String> = Vec::new();
        for _ in 0..count {
            let len = rng.gen_range(2..=3);
            let w: String = (0..len).map(|_| char::from(b'0' + rng.gen_range(0..k) as u8)).collect();
            if !forbidden.contains(&w) {
                forbidden.push(w);
            }
        }
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        let forbidden: Vec<&str> = forbidden.iter().map(String::as_str).collect();
        let s = shift(&names, &forbidden);
        if !s.is_empty() {
            return s;
        }
    }
}

/// The named shifts followed by six seeded random ones.
pub fn corpus() -> Vec<(String, Shift)> {
    let mut out = named();
    let mut r = rng(2024);
    for i in 0..6 {
        let s = random_sft(&mut r);
        let forb: Vec<String> = s.spec().forbidden().iter().map(|w| s.format_word(w)).collect();
        out.push((format!("random #{i} |A|={} forbid {}", s.alphabet().len(), forb.join(",")), s));
    }
    out
}

pub fn sample_points(shift: &Shift, rng: &mut ChaCha8Rng, n: usize, size: usize) -> Vec<EvPeriodicPoint> {
    let all = bounded_points(shift, size);
    (0..n).map(|_| all.choose(rng).unwrap().clone()).collect()
}

pub fn random_word(shift: &Shift, rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| Symbol(rng.gen_range(0..shift.alphabet().len()) as u16)).collect()
}

pub fn random_set_expr(shift: &Shift, rng: &mut ChaCha8Rng, depth: usize) -> SetExpr {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..10) {
            0 => SetExpr::Whole,
            1 => SetExpr::Empty,
            2 => SetExpr::Cylinder(random_word(shift, rng, 3)),
            3 => SetExpr::Follower(random_word(shift, rng, 3)),
            _ => SetExpr::C(random_word(shift, rng, 3), random_word(shift, rng, 3)),
        };
    }
    match rng.gen_range(0..3) {
        0 => SetExpr::Not(Box::new(random_set_expr(shift, rng, depth - 1))),
        1 => SetExpr::And(
            Box::new(random_set_expr(shift, rng, depth - 1)),
            Box::new(random_set_expr(shift, rng, depth - 1)),
        ),
        _ => SetExpr::Or(
            Box::new(random_set_expr(shift, rng, depth - 1)),
            Box::new(random_set_expr(shift, rng, depth - 1)),
        ),
    }
}

/// Membership straight from the definitions: `x ∈ C(α,β)` iff `x = βy`
/// with `αy ∈ X`.
pub fn direct_member(shift: &Shift, e: &SetExpr, x: &EvPeriodicPoint) -> bool {
    let c = |a: &[Symbol], b: &[Symbol]| {
        x.starts_with(b) && shift.point_in_shift(&x.drop_prefix(b.len()).prepend(a))
    };
    match e {
        SetExpr::Whole => true,
        SetExpr::Empty => false,
        SetExpr::Cylinder(w) => c(&[], w),
        SetExpr::Follower(w) => c(w, &[]),
        SetExpr::C(a, b) => c(a, b),
        SetExpr::Not(e) => !direct_member(shift, e, x),
        SetExpr::And(a, b) => direct_member(shift, a, x) && direct_member(shift, b, x),
        SetExpr::Or(a, b) => direct_member(shift, a, x) || direct_member(shift, b, x),
    }
}

/// A random clopen set at a small level.
pub fn random_set(shift: &Shift, rng: &mut ChaCha8Rng) -> ClopenSet {
    random_set_expr(shift, rng, 2).eval(shift).unwrap()
}

/// A product of one to four generators `s_a`, `s_a*`, `p_U`.
pub fn random_monomial(shift: &Shift, ring: Ring, rng: &mut ChaCha8Rng) -> AlgebraElement {
    let n = rng.gen_range(1..=4);
    let mut x = AlgebraElement::unit(shift, ring).unwrap();
    for _ in 0..n {
        let a = Symbol(rng.gen_range(0..shift.alphabet().len()) as u16);
        let f = match rng.gen_range(0..3) {
            0 => AlgebraElement::gen_s(shift, ring, a).unwrap(),
            1 => AlgebraElement::gen_s_star(shift, ring, a).unwrap(),
            _ => AlgebraElement::gen_p(ring, &random_set(shift, rng)).unwrap(),
        };
        x = x.mul(&f).unwrap();
    }
    x
}

/// A combination of one or two monomials with small integer coefficients.
pub fn random_element(shift: &Shift, ring: Ring, rng: &mut ChaCha8Rng) -> AlgebraElement {
    let mut x = AlgebraElement::zero(shift, ring);
    for _ in 0..rng.gen_range(1..=2) {
        let c = num::BigRational::from_integer(rng.gen_range(-3..=3).into());
        x = x.add(&random_monomial(shift, ring, rng).scalar_mul(&c).unwrap()).unwrap();
    }
    x
}

/// Least `|α| + |γ| ≤ max` with `x ∈ C(βγ, α)` for every `β ∈ B`, searching
/// all words `α` and `γ`.
pub fn exhaustive_cost(shift: &Shift, b: &[Word], x: &EvPeriodicPoint, max: usize) -> Option<usize> {
    let k = shift.alphabet().len();
    let words = |n: usize| -> Vec<Word> {
        let mut out: Vec<Word> = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w| (0..k).map(move |a| [w.clone(), vec![Symbol(a as u16)]].concat()))
                .collect();
        }
        out
    };
    for total in 0..=max {
        for la in 0..=total {
            for alpha in words(la) {
                if !x.starts_with(&alpha) {
                    continue;
                }
                let rest = x.drop_prefix(la);
                for gamma in words(total - la) {
                    let ok = b.iter().all(|beta| {
                        let bg = [beta.clone(), gamma.clone()].concat();
                        shift.point_in_shift(&rest.prepend(&bg))
                    });
                    let gamma_ok = shift.point_in_shift(&rest.prepend(&gamma));
                    if ok && gamma_ok {
                        return Some(total);
                    }
                }
            }
        }
    }
    None
}
