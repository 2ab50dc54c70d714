//! Cross-module invariant tests, including the property-based ones.

use proptest::prelude::*;

use heptasym_core::atlas::builtin_group;
use heptasym_core::group::brute_force_elements;
use heptasym_core::perm::Permutation;
use heptasym_core::PermGroup;

#[test]
fn membership_agrees_with_enumeration_on_random_permutations() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1000);
    for name in ["A:7", "PSL32@7", "AGL32", "S:6"] {
        let g = builtin_group(name).unwrap();
        let order = g.order_u64().unwrap();
        assert!(order <= 5040);
        let elems: std::collections::HashSet<Permutation> =
            brute_force_elements(g.gens(), g.degree(), 6000)
                .unwrap()
                .into_iter()
                .collect();
        for _ in 0..1000 {
            let mut images: Vec<usize> = (0..g.degree()).collect();
            images.shuffle(&mut rng);
            let p = Permutation::from_images(images).unwrap();
            assert_eq!(
                g.contains(&p).unwrap(),
                elems.contains(&p),
                "{name}: {p}"
            );
        }
    }
}

#[test]
fn certified_sampling_classes_regime() {
    // order 181440 is above the enumeration bound, so the certified-sampling
    // route runs: sizes must divide the order and sum to it
    let a9 = builtin_group("A:9").unwrap();
    let classes = a9.conjugacy_classes().unwrap();
    let order = a9.order_u64().unwrap();
    let total: u64 = classes.iter().map(|c| c.1).sum();
    assert_eq!(total, order);
    for (rep, size) in &classes {
        assert_eq!(order % size, 0);
        assert!(a9.contains(rep).unwrap());
    }
    // the class count of the degree-9 alternating group
    assert_eq!(classes.len(), 18);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(seed in 0u64..1_000_000) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = 1 + (seed % 9) as usize;
        let mut mk = || {
            let mut v: Vec<usize> = (0..n).collect();
            v.shuffle(&mut rng);
            Permutation::from_images(v).unwrap()
        };
        let (p, q, r) = (mk(), mk(), mk());
        prop_assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
        prop_assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn parse_display_round_trip(seed in 0u64..1_000_000) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = 2 + (seed % 12) as usize;
        let mut v: Vec<usize> = (0..n).collect();
        v.shuffle(&mut rng);
        let p = Permutation::from_images(v).unwrap();
        let q = Permutation::parse(&p.to_string(), n).unwrap();
        prop_assert_eq!(p, q);
    }

    #[test]
    fn class_sizes_divide_group_order(seed in 0u64..100_000) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let s6 = builtin_group("S:6").unwrap();
        let g = PermGroup::new(6, vec![
            s6.random_element(&mut rng),
            s6.random_element(&mut rng),
        ]).unwrap();
        let order = g.order_u64().unwrap();
        let classes = g.conjugacy_classes().unwrap();
        let total: u64 = classes.iter().map(|c| c.1).sum();
        prop_assert_eq!(total, order);
        for (_, size) in classes {
            prop_assert_eq!(order % size, 0);
        }
    }

    #[test]
    fn random_generator_words_pass_membership(seed in 0u64..1_000_000) {
        use rand::Rng as _;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g = builtin_group("A:7").unwrap();
        let mut w = Permutation::identity(7);
        for _ in 0..50 {
            let k = rng.gen_range(0..g.gens().len());
            w = w.compose(&g.gens()[k]);
        }
        prop_assert!(g.contains(&w).unwrap());
    }
}
