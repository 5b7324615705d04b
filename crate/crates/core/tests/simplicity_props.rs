mod common;

use proptest::prelude::*;

use common::*;
use subshift::action::orbit;
use subshift::simplicity::oracle::{bounded_points, oracle_cofinal, oracle_condition_l, oracle_strongly_cofinal, OracleBounds};
use subshift::simplicity::{
    check_collectively_cofinal_bounded, check_condition_l, check_hyper_cofinal, check_strongly_cofinal, cost, follower_of_set, is_minimal,
    realizable_follower_classes, reachable_set,
};
use subshift::Word;

fn agree_on(seed: u64, bound: usize) {
    let s = random_sft(&mut rng(seed));
    let b = OracleBounds::new(bound);
    let forb: Vec<String> = s.spec().forbidden().iter().map(|w| s.format_word(w)).collect();
    assert_eq!(check_condition_l(&s).unwrap().holds, oracle_condition_l(&s, b).unwrap().holds, "L on {forb:?}");
    assert_eq!(check_hyper_cofinal(&s).unwrap().holds, oracle_cofinal(&s, b).unwrap().holds, "hyper on {forb:?}");
    assert_eq!(
        check_strongly_cofinal(&s).unwrap().holds,
        oracle_strongly_cofinal(&s, b).unwrap().holds,
        "strongly on {forb:?}"
    );
}

#[test]
#[ignore = "slow sweep"]
fn decisions_match_oracles_sweep() {
    for seed in 0..60 {
        agree_on(10_000 + seed, 4);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn decisions_match_oracles(seed in any::<u64>()) {
        agree_on(seed, 3);
    }

    #[test]
    fn cofinality_notions_agree(seed in any::<u64>()) {
        let s = random_sft(&mut rng(seed));
        let hyper = check_hyper_cofinal(&s).unwrap().holds;
        prop_assert_eq!(check_strongly_cofinal(&s).unwrap().holds, hyper);
        prop_assert_eq!(check_collectively_cofinal_bounded(&s, 3).unwrap().holds, hyper);
    }

    #[test]
    fn hyper_cofinal_implies_strongly(seed in any::<u64>()) {
        let s = random_sft(&mut rng(seed));
        if check_hyper_cofinal(&s).unwrap().holds {
            prop_assert!(check_strongly_cofinal(&s).unwrap().holds);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cost_is_monotone_and_zero_on_follower(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_sft(&mut r);
        let words: Vec<Word> = s.language_up_to(3).unwrap().into_iter().filter(|w| !w.is_empty()).collect();
        use rand::seq::SliceRandom;
        let b = vec![words.choose(&mut r).unwrap().clone()];
        let mut bigger = b.clone();
        bigger.push(words.choose(&mut r).unwrap().clone());
        for p in sample_points(&s, &mut r, 8, 6) {
            let c = cost(&s, &b, &p).unwrap();
            let c2 = cost(&s, &bigger, &p).unwrap();
            prop_assert!(c2.is_none() || c.is_some_and(|c| c <= c2.unwrap()));
            let f = follower_of_set(&s, &b).unwrap();
            prop_assert_eq!(c == Some(0), f.contains_point(&p).unwrap());
            // finite cost iff some tail of the point lies in G_F
            let g = reachable_set(&s, &f).unwrap();
            let tail_in_g = (0..=p.size()).any(|k| g.contains_point(&p.drop_prefix(k)).unwrap());
            prop_assert_eq!(c.is_some(), tail_in_g);
        }
    }

    #[test]
    fn follower_classes_are_distinct_and_nonempty(seed in any::<u64>()) {
        let s = random_sft(&mut rng(seed));
        let classes = realizable_follower_classes(&s).unwrap();
        for (i, a) in classes.iter().enumerate() {
            prop_assert!(!a.follower().is_empty());
            for b in &classes[i + 1..] {
                prop_assert!(!a.follower().equals(b.follower()).unwrap());
            }
        }
    }

    #[test]
    fn minimal_shifts_have_large_orbits(seed in any::<u64>()) {
        // in a minimal shift every orbit meets every cylinder of length one
        let s = random_sft(&mut rng(seed));
        if is_minimal(&s).unwrap().holds {
            let first: Vec<_> = s.language(1).unwrap();
            for p in bounded_points(&s, 3) {
                let o = orbit(&s, &p, 4).unwrap();
                for a in &first {
                    prop_assert!(o.iter().any(|q| q.starts_with(a)));
                }
            }
        }
    }
}
