mod common;

use gforge::presentation::{find_theta, full_derivative};
use gforge::{Exec, Settings};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn settings() -> Settings {
    Settings::default().sequential().with_word_bound(3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn normalize_is_constant_on_move_orbits(seed in any::<u64>(), moves in 0usize..=20) {
        let p = common::random_connected(seed, 16, 6);
        let s = settings();
        let np = p.normalize(&s).unwrap();
        prop_assert_eq!(&np.normalize(&s).unwrap(), &np);
        let mut q = p.clone();
        let mut r = common::rng(seed ^ 0xabcd);
        for _ in 0..moves {
            let m = common::random_move(&mut r, &q);
            q = q.apply_move(&m).unwrap();
        }
        prop_assert_eq!(q.normalize(&s).unwrap(), np);
        prop_assert_eq!(q.compute_kns(&s).unwrap(), p.compute_kns(&s).unwrap());
    }

    #[test]
    fn k_characterizations_agree(seed in any::<u64>()) {
        let p = common::random_presentation(seed, 16, 8);
        let w = p.k_three_ways().unwrap();
        prop_assert_eq!(&w.stabilizer, &w.equal_frequency);
        prop_assert_eq!(&w.stabilizer, &w.factorization);
    }

    #[test]
    fn invariant_chain_is_nested(seed in any::<u64>()) {
        let p = common::random_connected(seed, 16, 6);
        let chain = p.compute_kns(&settings()).unwrap();
        let np = p.normalize(&settings()).unwrap();
        let h = np.subgroup();
        let sub = |a: &[usize], b: &[usize]| a.iter().all(|x| b.contains(x));
        prop_assert!(sub(h.elements(), &chain.s));
        prop_assert!(sub(&chain.s, &chain.k));
        prop_assert!(sub(&chain.k, h.normalizer()));
        prop_assert!(sub(&chain.n_sub, h.normalizer()));
        let c = p.classify(&settings()).unwrap();
        prop_assert!(!c.strongly_vp || c.division_form);
    }

    #[test]
    fn theta_exists_iff_full_derivatives_agree(seed in any::<u64>(), perturb in any::<bool>()) {
        let p = common::random_presentation(seed, 16, 6);
        let h = p.subgroup();
        let g = p.group();
        let mut r = common::rng(seed);
        let theta = *h.normalizer().choose(&mut r).unwrap();
        let mut hat: Vec<usize> = p
            .tuple()
            .iter()
            .map(|&x| g.mul(*h.elements().choose(&mut r).unwrap(), g.mul(theta, x)))
            .collect();
        if perturb {
            let i = r.gen_range(0..hat.len());
            hat[i] = r.gen_range(0..g.order());
        }
        let fits = |t: usize| p.tuple().iter().zip(&hat).all(|(&a, &b)| h.coset_id(g.mul(t, a)) == h.coset_id(b));
        let brute = h.normalizer().iter().copied().find(|&t| fits(t));
        let found = find_theta(h, p.tuple(), &hat).unwrap();
        prop_assert_eq!(found, brute);
        prop_assert_eq!(found.is_some(), full_derivative(h, p.tuple()) == full_derivative(h, &hat));
        if !perturb {
            prop_assert!(found.is_some());
        }
    }

    #[test]
    fn isomorphism_is_an_equivalence(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let p = common::random_connected(seed, 12, 4);
        let mut q = p.clone();
        for _ in 0..r.gen_range(0..6) {
            let m = common::random_move(&mut r, &q);
            q = q.apply_move(&m).unwrap();
        }
        let other = common::random_presentation(seed.rotate_left(7), 12, 4);
        let set = [p.clone(), q, other];
        let iso = |a: &gforge::Presentation, b: &gforge::Presentation| {
            a.group() == b.group() && a.iso_test(b, Exec::Sequential).unwrap()
        };
        prop_assert!(iso(&set[0], &set[1]));
        for a in &set {
            prop_assert!(iso(a, a));
            for b in &set {
                prop_assert_eq!(iso(a, b), iso(b, a));
                for c in &set {
                    if iso(a, b) && iso(b, c) {
                        prop_assert!(iso(a, c));
                    }
                }
            }
        }
    }
}
