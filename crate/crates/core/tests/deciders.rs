//! Hand-checkable verdicts of the four deciders.

use linkpass::catalog::{self, templates};
use linkpass::classify::{decide_link, decide_link_z2split, decide_tangle, InvariantProfile, Relation};
use linkpass::tangle_ops::stack;
use linkpass::{Diagram, Kind};

fn entry(name: &str) -> Diagram {
    catalog::get(name).unwrap().diagram().unwrap().clone()
}

fn trivial(n: usize) -> Diagram {
    Diagram::trivial(Kind::BottomTangle, n)
}

fn verdicts(a: &Diagram, b: &Diagram) -> Vec<bool> {
    Relation::ALL.iter().map(|&r| decide_link(a, b, r).unwrap().equivalent).collect()
}

#[test]
fn linking_number_separates_everything() {
    assert_eq!(verdicts(&entry("hopf+.tangle"), &entry("hopf-.tangle")), vec![false; 4]);
    let v = decide_link(&entry("hopf+.tangle"), &trivial(2), Relation::BandSharp).unwrap();
    assert!(v.failed_precondition.unwrap().starts_with("mu(12)"));
}

#[test]
fn whitehead_is_separated_from_the_unlink() {
    // mu(2112) = 1 with lk = 0: nothing can absorb the difference.
    assert_eq!(verdicts(&entry("whitehead.tangle"), &trivial(2)), vec![false; 4]);
    assert!(!decide_link_z2split(&entry("whitehead.tangle"), &trivial(2)).unwrap().equivalent);
}

#[test]
fn odd_linking_absorbs_a_whitehead_twist() {
    let hopf = entry("hopf+.tangle");
    let twisted = stack(&hopf, &templates::template_whitehead(2, 1, 2, 1).unwrap()).unwrap();
    let v = decide_link(&hopf, &twisted, Relation::BandPass).unwrap();
    assert!(v.equivalent, "{v:?}");
    let w = v.witness.unwrap();
    // lk = 1, so the single mod-2 row asks for x12 + x21 odd.
    assert_eq!((w[0] + w[1]).rem_euclid(2), 1);
}

#[test]
fn local_knots_only_matter_up_to_casson_parity() {
    let plain = trivial(2);
    let knotted = linkpass::tangle_ops::connected_sum_insert(&plain, 2, &entry("trefoil+")).unwrap();
    assert_eq!(InvariantProfile::of(&knotted).unwrap().a2_i, vec![0, 1]);
    assert_eq!(verdicts(&plain, &knotted), vec![false, false, false, true]);
    let twice = linkpass::tangle_ops::connected_sum_insert(&knotted, 2, &entry("figure8")).unwrap();
    // a2 goes 1 + (-1) = 0: clasp-pass equivalent to the unlink again.
    assert_eq!(verdicts(&plain, &twice), vec![true; 4]);
}

#[test]
fn borromean_triple_number_survives_every_move() {
    let b = entry("borromean+.tangle");
    let u = trivial(3);
    assert_eq!(verdicts(&b, &u), vec![false; 4]);
    let pb = InvariantProfile::of(&b).unwrap();
    let pu = InvariantProfile::of(&u).unwrap();
    // The tangle decider compares residues only; mu(123) = 1 is odd.
    assert!(!decide_tangle(&pb, &pu, Relation::BandSharp).unwrap().equivalent);
}

#[test]
fn tangle_decider_matches_band_sharp_generators() {
    let p = InvariantProfile::of(&trivial(2)).unwrap();
    let sq = stack(&trivial(2), &templates::template_tau(2, 1, 2, 1).unwrap()).unwrap();
    let sq = stack(&sq, &templates::template_tau(2, 1, 2, 1).unwrap()).unwrap();
    let q = InvariantProfile::of(&sq).unwrap();
    assert!(decide_tangle(&p, &q, Relation::BandSharp).unwrap().equivalent);
}
