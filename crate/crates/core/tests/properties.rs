//! Cross-module laws on seeded random hyperquasigroups.

use proptest::prelude::*;

use hyperq::random::{random_hyperquasigroup, random_ifs, seeded};
use hyperq::relations::Relation;
use hyperq::{
    beta_star, check_fuzzy_subhq, check_if_subquasigroup, check_ifsh, check_ifsh_via_cuts, check_ifsh_with, classify,
    enumerate_subs, finite_products, fundamental_quasigroup, ifs_box, ifs_diamond, is_sub_hyperquasigroup, pushforward,
    restrict, verify_equipotence, Grade, Hypergroupoid, IfshFamily, IntuitionisticFuzzySet, WitnessMode,
    DEFAULT_ORDER_LIMIT,
};

fn structure(seed: u64, order: usize, regular: bool) -> Hypergroupoid {
    random_hyperquasigroup(&mut seeded(seed), order, regular, 100_000)
        .unwrap()
        .0
}

fn instance(seed: u64, order: usize, denominator: u64) -> (Hypergroupoid, IntuitionisticFuzzySet) {
    let mut rng = seeded(seed);
    let (h, _) = random_hyperquasigroup(&mut rng, order, false, 100_000).unwrap();
    let a = random_ifs(&mut rng, order, denominator);
    (h, a)
}

/// A two-level IFSH on a random sub-hyperquasigroup of `h`.
fn random_ifsh(h: &Hypergroupoid, seed: u64) -> IntuitionisticFuzzySet {
    use rand::Rng;
    let mut rng = seeded(seed);
    let subs = enumerate_subs(h, DEFAULT_ORDER_LIMIT).unwrap();
    let k = subs[rng.random_range(0..subs.len())];
    let d = 8;
    let a0 = rng.random_range(1..=d);
    let a1 = rng.random_range(0..a0);
    let b0 = rng.random_range(0..=d - a0);
    let b1 = rng.random_range(b0 + 1..=d - a1);
    let g = |n| Grade::new(n, d).unwrap();
    hyperq::build_two_level(h, k, g(a0), g(a1), g(b0), g(b1)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn direct_and_cut_deciders_agree(seed in any::<u64>(), order in 1usize..=4) {
        let (h, a) = instance(seed, order, 4);
        let direct = check_ifsh(&h, &a).unwrap();
        let cuts = check_ifsh_via_cuts(&h, &a).unwrap();
        prop_assert_eq!(direct.holds, cuts.holds);
        prop_assert_eq!(direct.failed_condition, cuts.failed_condition);
    }

    #[test]
    fn modal_operators_and_components(seed in any::<u64>(), order in 1usize..=4) {
        let (h, a) = instance(seed, order, 4);
        let holds = check_ifsh(&h, &a).unwrap().holds;
        let boxed = check_ifsh(&h, &ifs_box(&a)).unwrap().holds;
        let diamond = check_ifsh(&h, &ifs_diamond(&a)).unwrap().holds;
        prop_assert_eq!(holds, boxed && diamond);
        let mu = check_fuzzy_subhq(&h, a.mu()).unwrap().holds;
        let lambda_c = check_fuzzy_subhq(&h, &a.lambda().complement()).unwrap().holds;
        prop_assert_eq!(holds, mu && lambda_c);
    }

    #[test]
    fn shared_witnesses_are_stricter(seed in any::<u64>(), order in 1usize..=4) {
        let (h, a) = instance(seed, order, 3);
        if check_ifsh_with(&h, &a, WitnessMode::Shared).unwrap().holds {
            prop_assert!(check_ifsh(&h, &a).unwrap().holds);
        }
        let built = random_ifsh(&h, seed);
        prop_assert!(check_ifsh(&h, &built).unwrap().holds);
    }

    #[test]
    fn subs_restrict_and_unions(seed in any::<u64>(), order in 1usize..=4) {
        let h = structure(seed, order, false);
        let subs = enumerate_subs(&h, DEFAULT_ORDER_LIMIT).unwrap();
        prop_assert!(subs.contains(&h.carrier()));
        for &k in &subs {
            prop_assert!(restrict(&h, k).unwrap().is_hyperquasigroup());
            for &l in &subs {
                if k.is_subset(l) {
                    prop_assert!(is_sub_hyperquasigroup(&h, k.union(l)).unwrap().holds);
                }
            }
        }
    }

    #[test]
    fn equipotence_on_random_structures(seed in any::<u64>(), order in 1usize..=4, alpha in 1u64..8) {
        let h = structure(seed, order, false);
        let r = verify_equipotence(&h, Grade::new(alpha, 8).unwrap(), DEFAULT_ORDER_LIMIT).unwrap();
        prop_assert!(r.passes(), "{:?}", r);
    }

    #[test]
    fn relation_classes_follow_components(seed in any::<u64>(), order in 1usize..=4, alpha in 1u64..8) {
        let h = structure(seed, order, false);
        let a = random_ifsh(&h, seed);
        let b = random_ifsh(&h, seed ^ 1);
        let alpha = Grade::new(alpha, 8).unwrap();
        let fam = IfshFamily::new(&h, vec![a.clone(), ifs_box(&a)]).unwrap();
        prop_assert_eq!(classify(&fam, alpha, Relation::U).len(), 1);
        let fam = IfshFamily::new(&h, vec![a.clone(), ifs_diamond(&a)]).unwrap();
        prop_assert_eq!(classify(&fam, alpha, Relation::L).len(), 1);
        let fam = IfshFamily::new(&h, vec![a, b]).unwrap();
        let same = |rel| classify(&fam, alpha, rel).len() == 1;
        if same(Relation::U) && same(Relation::L) {
            prop_assert!(same(Relation::R));
        }
    }

    #[test]
    fn products_lie_in_single_classes(seed in any::<u64>(), order in 1usize..=5, regular in any::<bool>()) {
        let h = structure(seed, order, regular);
        let family = finite_products(&h);
        let partition = beta_star(&h);
        for &u in family.subsets() {
            let first = u.least().unwrap();
            prop_assert!(u.iter().all(|x| partition.same_class(first, x)));
            for &v in family.subsets() {
                prop_assert!(family.contains(h.set_product(u, v)));
            }
        }
    }

    #[test]
    fn pushforward_is_valid_and_preserves_ifsh(seed in any::<u64>(), order in 1usize..=4) {
        let h = structure(seed, order, true);
        prop_assert!(h.is_regular());
        let f = fundamental_quasigroup(&h).unwrap();
        let q = &f.quasigroup;
        for x in 0..q.order() {
            for y in 0..q.order() {
                prop_assert_eq!(q.mul(x, q.ldiv(x, y)), y);
                prop_assert_eq!(q.mul(q.rdiv(x, y), y), x);
            }
        }
        let (_, pushed) = pushforward(&h, &random_ifs(&mut seeded(seed), order, 6)).unwrap();
        prop_assert_eq!(pushed.len(), f.partition.len());
        let a = random_ifsh(&h, seed);
        let (f, pushed) = pushforward(&h, &a).unwrap();
        prop_assert!(check_if_subquasigroup(&f.quasigroup, &pushed).unwrap().holds);
    }
}
