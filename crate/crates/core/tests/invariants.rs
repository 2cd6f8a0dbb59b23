//! Properties of the invariant engines on random bottom tangles, each checked
//! against a second, independent computation.

use linkpass::braid;
use linkpass::catalog::random_tangle;
use linkpass::classify::InvariantProfile;
use linkpass::codec::{linking_number, parse, serialize, validate};
use linkpass::polyengine::{alexander_a2, conway_skein};
use linkpass::tangle_ops::{close, component_knot, connected_sum_insert, plat_closure, stack, StrandTemplate};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn tangle(seed: u64, n: usize, generators: usize) -> linkpass::Diagram {
    random_tangle(&mut ChaCha8Rng::seed_from_u64(seed), n, generators, 0.3).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn text_format_round_trips(seed in any::<u64>(), n in 1usize..=3) {
        let d = tangle(seed, n, 4);
        prop_assert!(validate(&d).ok);
        let back = parse(&serialize(&d).unwrap()).unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn magnus_linking_matches_crossing_count(seed in any::<u64>(), n in 2usize..=3) {
        let d = tangle(seed, n, 4);
        let p = InvariantProfile::of(&d).unwrap();
        let closed = close(&d).unwrap();
        for i in 1..=n {
            for j in (i + 1)..=n {
                prop_assert_eq!(p.lk(i, j), linking_number(&closed, i, j).unwrap());
                prop_assert_eq!(p.lk(i, j), p.lk(j, i));
            }
        }
    }

    #[test]
    fn pair_a2_matches_skein(seed in any::<u64>()) {
        let d = tangle(seed, 2, 2);
        let p = InvariantProfile::of(&d).unwrap();
        let skein = conway_skein(&plat_closure(&d, 1, 2).unwrap()).unwrap();
        prop_assert_eq!(p.a2(1, 2), skein.coeff(2));
        prop_assert_eq!(p.a2_i[0], conway_skein(&component_knot(&d, 1).unwrap()).unwrap().coeff(2));
    }

    #[test]
    fn a2_is_additive_under_knot_insertion(seed in any::<u64>(), n in 1usize..=3, which in 0usize..3) {
        let d = tangle(seed, n, 3);
        let i = which % n + 1;
        let five = braid::closure(2, &[1, 1, 1, 1, 1]).unwrap();
        let e = connected_sum_insert(&d, i, &five).unwrap();
        let before = alexander_a2(&component_knot(&d, i).unwrap()).unwrap();
        let after = alexander_a2(&component_knot(&e, i).unwrap()).unwrap();
        prop_assert_eq!(after, before + 3);
        // Tying a local knot into a band leaves every linking invariant alone.
        let (p, q) = (InvariantProfile::of(&d).unwrap(), InvariantProfile::of(&e).unwrap());
        prop_assert_eq!(&p.mu_ij, &q.mu_ij);
        prop_assert_eq!(&p.mu_ijk, &q.mu_ijk);
        prop_assert_eq!(&p.mu_jiij, &q.mu_jiij);
    }

    #[test]
    fn residue_invariant_is_in_range(seed in any::<u64>(), n in 2usize..=3) {
        let p = InvariantProfile::of(&tangle(seed, n, 5)).unwrap();
        for k in 0..p.phi_ij.len() {
            prop_assert!((0..8).contains(&p.phi_ij[k]));
            prop_assert_eq!(p.phi_ij[k], (4 * p.mu_jiij[k] + p.mu_ij[k]).rem_euclid(8));
        }
    }

    #[test]
    fn identity_stack_changes_nothing(seed in any::<u64>(), n in 1usize..=3) {
        let d = tangle(seed, n, 3);
        let s = stack(&d, &StrandTemplate::identity(n)).unwrap();
        prop_assert_eq!(InvariantProfile::of(&s).unwrap(), InvariantProfile::of(&d).unwrap());
    }
}

#[test]
fn mirror_pair_negates_linking_and_triple() {
    let p = InvariantProfile::of(&linkpass::catalog::get("borromean+.tangle").unwrap().diagram().unwrap().clone()).unwrap();
    let q = InvariantProfile::of(&linkpass::catalog::get("borromean-.tangle").unwrap().diagram().unwrap().clone()).unwrap();
    assert_eq!(p.triple(1, 2, 3), -q.triple(1, 2, 3));
    assert!(p.mu_ij.iter().chain(&q.mu_ij).all(|&v| v == 0));
}
