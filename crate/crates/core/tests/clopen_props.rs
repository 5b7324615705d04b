mod common;

use proptest::prelude::*;

use common::*;
use subshift::syntax::{eval_set_expr, parse_set_expr};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_is_a_boolean_homomorphism(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_sft(&mut r);
        let a = random_set(&s, &mut r);
        let b = random_set(&s, &mut r);
        for p in sample_points(&s, &mut r, 20, 6) {
            let (x, y) = (a.contains_point(&p).unwrap(), b.contains_point(&p).unwrap());
            prop_assert_eq!(a.union(&b).unwrap().contains_point(&p).unwrap(), x || y);
            prop_assert_eq!(a.intersect(&b).unwrap().contains_point(&p).unwrap(), x && y);
            prop_assert_eq!(a.minus(&b).unwrap().contains_point(&p).unwrap(), x && !y);
            prop_assert_eq!(a.complement().unwrap().contains_point(&p).unwrap(), !x);
        }
        let lhs = a.union(&b).unwrap().complement().unwrap();
        let rhs = a.complement().unwrap().intersect(&b.complement().unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
        prop_assert_eq!(a.is_subset(&b).unwrap(), a.intersect(&b).unwrap().equals(&a).unwrap());
    }

    #[test]
    fn membership_matches_definition(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_sft(&mut r);
        let e = random_set_expr(&s, &mut r, 3);
        let set = e.eval(&s).unwrap();
        for p in sample_points(&s, &mut r, 20, 6) {
            prop_assert_eq!(set.contains_point(&p).unwrap(), direct_member(&s, &e, &p));
        }
    }

    #[test]
    fn canonical_form_is_unique(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_sft(&mut r);
        let a = random_set(&s, &mut r);
        // rebuilding from any finer level gives the same set
        let finer = subshift::ClopenSet::from_words(&s, a.level() + 2, a.refine(a.level() + 2)).unwrap();
        prop_assert_eq!(&finer, &a);
        let back = eval_set_expr(&s, &a.to_expr()).unwrap();
        prop_assert_eq!(&back, &a);
        let text = a.to_expr();
        prop_assert!(parse_set_expr(s.alphabet(), &text).is_ok());
    }
}
