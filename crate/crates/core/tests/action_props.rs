mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;

use common::*;
use subshift::action::{act_clopen, act_point, domain_set, orbit, xi_contains};
use subshift::simplicity::oracle::bounded_points;
use subshift::FreeGroupElement;

fn simple_elements(s: &subshift::Shift, len: usize) -> Vec<FreeGroupElement> {
    FreeGroupElement::enumerate(s.alphabet(), len)
        .into_iter()
        .filter(|g| g.simple_factorization(s).unwrap().is_some())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn clopen_images_invert(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_sft(&mut r);
        let g = simple_elements(&s, 4).choose(&mut r).unwrap().clone();
        let u = random_set(&s, &mut r).intersect(&domain_set(&s, &g.inverse()).unwrap()).unwrap();
        let image = act_clopen(&s, &g, &u).unwrap();
        prop_assert!(image.is_subset(&domain_set(&s, &g).unwrap()).unwrap());
        prop_assert_eq!(act_clopen(&s, &g.inverse(), &image).unwrap(), u.clone());
        for p in bounded_points(&s, 5) {
            if u.contains_point(&p).unwrap() {
                prop_assert!(image.contains_point(&act_point(&s, &g, &p).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn composition_extends(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_sft(&mut r);
        let pool = simple_elements(&s, 3);
        let g = pool.choose(&mut r).unwrap();
        let h = pool.choose(&mut r).unwrap();
        for p in bounded_points(&s, 5) {
            let Ok(q) = act_point(&s, h, &p) else { continue };
            let Ok(gq) = act_point(&s, g, &q) else { continue };
            prop_assert_eq!(act_point(&s, &g.mul(h), &p).unwrap(), gq);
        }
    }

    #[test]
    fn xi_is_equivariant(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_sft(&mut r);
        let t = simple_elements(&s, 3).choose(&mut r).unwrap().clone();
        let ks = FreeGroupElement::enumerate(s.alphabet(), 2);
        for p in bounded_points(&s, 4) {
            let Ok(q) = act_point(&s, &t, &p) else { continue };
            for k in &ks {
                prop_assert_eq!(
                    xi_contains(&s, &q, k).unwrap(),
                    xi_contains(&s, &p, &t.inverse().mul(k)).unwrap()
                );
            }
        }
    }

    #[test]
    fn orbits_are_closed_under_generators(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_sft(&mut r);
        let p = sample_points(&s, &mut r, 1, 4).pop().unwrap();
        let o = orbit(&s, &p, 2).unwrap();
        prop_assert!(o.contains(&p));
        for q in &o {
            prop_assert!(s.point_in_shift(q));
        }
        // one letter added or removed in front stays in the depth-one orbit
        let near = orbit(&s, &p, 1).unwrap();
        prop_assert!(near.is_subset(&o));
        let tail = p.drop_prefix(1);
        prop_assert!(near.contains(&tail));
    }
}
