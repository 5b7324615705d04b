mod common;

use proptest::prelude::*;

use common::*;
use subshift::syntax::eval_algebra_expr;
use subshift::{AlgebraElement, Ring};

fn rings() -> [Ring; 3] {
    [Ring::Rationals, Ring::Integers, Ring::IntegersMod(3)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(seed in any::<u64>(), which in 0usize..3) {
        let mut r = rng(seed);
        let s = random_sft(&mut r);
        let ring = rings()[which];
        let x = random_element(&s, ring, &mut r);
        let y = random_element(&s, ring, &mut r);
        let z = random_element(&s, ring, &mut r);
        let one = AlgebraElement::unit(&s, ring).unwrap();
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(
            x.mul(&y.add(&z).unwrap()).unwrap(),
            x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(
            x.add(&y).unwrap().mul(&z).unwrap(),
            x.mul(&z).unwrap().add(&y.mul(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(&one.mul(&x).unwrap(), &x);
        prop_assert_eq!(&x.mul(&one).unwrap(), &x);
        prop_assert!(x.sub(&x).unwrap().is_zero());
        prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
    }

    #[test]
    fn involution(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_sft(&mut r);
        let x = random_element(&s, Ring::Rationals, &mut r);
        let y = random_element(&s, Ring::Rationals, &mut r);
        prop_assert_eq!(&x.star().star(), &x);
        prop_assert_eq!(x.mul(&y).unwrap().star(), y.star().mul(&x.star()).unwrap());
        prop_assert_eq!(x.add(&y).unwrap().star(), x.star().add(&y.star()).unwrap());
    }

    #[test]
    fn expressions_round_trip(seed in any::<u64>(), which in 0usize..3) {
        let mut r = rng(seed);
        let s = random_sft(&mut r);
        let ring = rings()[which];
        let x = random_element(&s, ring, &mut r);
        let back = eval_algebra_expr(&s, ring, &x.to_expr()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn projections_form_a_boolean_algebra(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_sft(&mut r);
        let ring = Ring::Rationals;
        let a = random_set(&s, &mut r);
        let b = random_set(&s, &mut r);
        let p = |u: &subshift::ClopenSet| AlgebraElement::gen_p(ring, u).unwrap();
        prop_assert_eq!(p(&a).mul(&p(&b)).unwrap(), p(&a.intersect(&b).unwrap()));
        let cup = p(&a).add(&p(&b)).unwrap().sub(&p(&a.intersect(&b).unwrap())).unwrap();
        prop_assert_eq!(cup, p(&a.union(&b).unwrap()));
        prop_assert_eq!(p(&a).star(), p(&a));
    }
}
