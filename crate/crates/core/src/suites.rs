//! Randomized verification suites behind `linkpass verify`. Each suite is
//! deterministic in its seed.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid;
use crate::catalog::verify::{random_matrices, variation_contracts, Tally};
use crate::catalog::{
    self, build_sigma, misrouted_tau_word, random_tangle, template_borromean, template_clasp, template_whitehead,
    verify_templates, verify_templates_with, zero_matrix, ContractCheck, Item,
};
use crate::classify::profile::pairs;
use crate::classify::{decide_link_profiles, decide_z2split_profiles, InvariantProfile, Relation};
use crate::codec::{linking_number, Diagram, Kind};
use crate::error::Result;
use crate::polyengine::{alexander_a2, conway_skein};
use crate::tangle_ops::{connected_sum_insert, stack};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Variation,
    Templates,
    Oracle,
    Hierarchy,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Variation, Suite::Templates, Suite::Oracle, Suite::Hierarchy];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Variation => "variation",
            Suite::Templates => "templates",
            Suite::Oracle => "oracle",
            Suite::Hierarchy => "hierarchy",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}` (expected variation, templates, oracle or hierarchy)"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub checks: Vec<ContractCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(ContractCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&ContractCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn run(suite: Suite, seed: u64) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Variation => variation(seed, 60)?,
        Suite::Templates => templates(seed)?,
        Suite::Oracle => oracle(seed)?,
        Suite::Hierarchy => hierarchy(seed)?,
    };
    Ok(SuiteReport { suite, seed, checks })
}

pub const STACKED_CLASP_PASS: &str = "stacking loops and doubled clasps keeps the clasp-pass class";
pub const STACKED_BAND_PASS: &str = "stacking loops keeps the band-pass class";
pub const STACKED_BAND_SHARP: &str = "stacking single loops and doubled clasps keeps the band-# class";

/// Variation laws and the stacking contract of the deciders on `cases`
/// random `(σ, ω, v)` at two and three components, entries in `[-2, 2]`.
pub fn variation(seed: u64, cases: usize) -> Result<Vec<ContractCheck>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    for k in 0..cases {
        let n = 2 + k % 2;
        let gens = rng.gen_range(1..=4);
        let sigma = random_tangle(&mut rng, n, gens, 0.3)?;
        let (omega, v) = random_matrices(&mut rng, n, 2);
        variation_contracts(&mut tally, &sigma, &omega, &v, catalog::tau_word)?;

        let p = InvariantProfile::of(&sigma)?;
        let case = |what: &str| format!("n={n} omega={omega:?} v={v:?} base={p:?}: {what}");
        let full = InvariantProfile::of(&build_sigma(&sigma, &omega, &v)?)?;
        let verdict = decide_link_profiles(&p, &full, Relation::ClaspPass)?;
        tally.record(STACKED_CLASP_PASS, verdict.equivalent, || case(&format!("{:?}", verdict.failed_precondition)));

        let no_v = InvariantProfile::of(&build_sigma(&sigma, &omega, &zero_matrix(n))?)?;
        let verdict = decide_link_profiles(&p, &no_v, Relation::BandPass)?;
        tally.record(STACKED_BAND_PASS, verdict.equivalent, || case(&format!("{:?}", verdict.failed_precondition)));

        let binary: Vec<Vec<i64>> = omega.iter().map(|r| r.iter().map(|x| x.rem_euclid(2)).collect()).collect();
        let q = InvariantProfile::of(&build_sigma(&sigma, &binary, &v)?)?;
        let verdict = decide_link_profiles(&p, &q, Relation::BandSharp)?;
        tally.record(STACKED_BAND_SHARP, verdict.equivalent, || case(&format!("{:?}", verdict.failed_precondition)));
    }
    Ok(tally.into_checks())
}

pub const NEGATIVE_CONTROL: &str = "mis-routed tau is caught by the exact triple law";

fn templates(seed: u64) -> Result<Vec<ContractCheck>> {
    let mut out = Vec::new();
    for (n, trials) in [(2, 20), (3, 20), (4, 6)] {
        let r = verify_templates(n, seed.wrapping_add(n as u64), trials)?;
        out.extend(r.checks.into_iter().map(|mut c| {
            c.name = format!("n={n}: {}", c.name);
            c
        }));
    }
    let control = verify_templates_with(3, seed, 10, misrouted_tau_word)?;
    let caught = control.checks.iter().any(|c| c.name.contains("exact mu(ijk)") && !c.passed());
    let mut tally = Tally::default();
    tally.record(NEGATIVE_CONTROL, caught, || "the mis-routed variant passed every contract".into());
    out.extend(tally.into_checks());
    Ok(out)
}

pub const ORACLE_SKEIN: &str = "skein z^2 coefficient equals Fox-calculus a2";
pub const ORACLE_ANNOTATIONS: &str = "catalog annotations re-derive";
pub const ORACLE_LINKING: &str = "mu(ij) equals the crossing-count linking number";

/// Knot diagrams of the catalog with at most this many crossings enter the
/// skein oracle.
pub const ORACLE_CROSSINGS: usize = 10;

fn oracle(seed: u64) -> Result<Vec<ContractCheck>> {
    let mut tally = Tally::default();
    for name in catalog::list()? {
        let entry = catalog::get(&name)?;
        for c in entry.check()? {
            tally.record(ORACLE_ANNOTATIONS, c.ok, || format!("{name}: {} expected {} got {}", c.key, c.expected, c.actual));
        }
        if let Item::Diagram(d) = &entry.item {
            if d.kind == Kind::Link && d.n() == 1 && d.crossing_count() <= ORACLE_CROSSINGS {
                let skein = conway_skein(d)?.coeff(2);
                let fox = alexander_a2(d)?;
                tally.record(ORACLE_SKEIN, skein == fox, || format!("{name}: skein {skein}, Fox {fox}"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..20 {
        let n = 2 + k % 3;
        let gens = rng.gen_range(1..=5);
        let d = random_tangle(&mut rng, n, gens, 0.2)?;
        let p = InvariantProfile::of(&d)?;
        for (i, j) in pairs(n) {
            let lk = linking_number(&d, i, j)?;
            tally.record(ORACLE_LINKING, p.lk(i, j) == lk, || format!("lk({i},{j}) = {lk}, profile {p:?}"));
        }
    }
    Ok(tally.into_checks())
}

/// Named pair of bottom tangles with the same component count.
pub struct Pair {
    pub label: String,
    pub left: Diagram,
    pub right: Diagram,
}

fn stacked_template(d: &Diagram, word: &[i32]) -> Result<Diagram> {
    stack(d, &braid::template(2 * d.n(), word)?)
}

/// Pairs mixing equivalent and inequivalent tangles for every relation:
/// random tangles against stacked and knotted variants of themselves and
/// against each other, plus the catalog's linked pairs.
pub fn corpus(seed: u64) -> Result<Vec<Pair>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let trefoil = braid::closure(2, &[1, 1, 1])?;
    let figure8 = braid::closure(3, &[1, -2, 1, -2])?;
    for k in 0..16 {
        let n = 2 + k % 2;
        let gens = rng.gen_range(1..=4);
        let sigma = random_tangle(&mut rng, n, gens, 0.2)?;
        let (omega, v) = random_matrices(&mut rng, n, 2);
        let mut push = |label: String, right: Diagram| out.push(Pair { label, left: sigma.clone(), right });
        push(format!("#{k} sigma_w,v"), build_sigma(&sigma, &omega, &v)?);
        push(format!("#{k} sigma_w,0"), build_sigma(&sigma, &omega, &zero_matrix(n))?);
        let c = rng.gen_range(1..=n);
        push(format!("#{k} trefoil on {c}"), connected_sum_insert(&sigma, c, &trefoil)?);
        let twice = connected_sum_insert(&connected_sum_insert(&sigma, c, &trefoil)?, c, &figure8)?;
        push(format!("#{k} trefoil and figure-eight on {c}"), twice);
        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i + 1..=n);
        push(format!("#{k} whitehead {i}{j}"), stack(&sigma, &template_whitehead(n, i, j, 1)?)?);
        let clasp = catalog::clasp_word(n, i, j)?;
        push(format!("#{k} clasp {i}{j}"), stacked_template(&sigma, &clasp)?);
        let four = braid::power(&clasp, 4);
        push(format!("#{k} four clasps {i}{j}"), stacked_template(&sigma, &four)?);
        let tau2 = braid::power(&catalog::tau_word(n, j, i)?, 2);
        push(format!("#{k} tau_{j}{i} squared"), stacked_template(&sigma, &tau2)?);
        if n == 3 {
            push(format!("#{k} borromean"), stack(&sigma, &template_borromean(3, 1, 2, 3, 1)?)?);
            let bb = braid::power(&catalog::borromean_word(3, 1, 2, 3)?, 2);
            push(format!("#{k} borromean twice"), stacked_template(&sigma, &bb)?);
        }
        let gens = rng.gen_range(1..=4);
        let other = random_tangle(&mut rng, n, gens, 0.3)?;
        push(format!("#{k} unrelated"), other);
    }
    let get = |name: &str| -> Result<Diagram> {
        Ok(catalog::get(name)?.diagram().cloned().expect("catalog tangle entries are diagrams"))
    };
    for (a, b) in [
        ("trivial_tangle(2)", "whitehead.tangle"),
        ("trivial_tangle(2)", "hopf+.tangle"),
        ("hopf+.tangle", "hopf-.tangle"),
        ("trivial_tangle(3)", "borromean+.tangle"),
        ("borromean+.tangle", "borromean-.tangle"),
        ("unknot.tangle", "trefoil+.tangle"),
        ("unknot.tangle", "figure8.tangle"),
        ("trefoil+.tangle", "5_2.tangle"),
    ] {
        out.push(Pair { label: format!("{a} vs {b}"), left: get(a)?, right: get(b)? });
    }
    let hopf = stack(&Diagram::trivial(Kind::BottomTangle, 2), &template_clasp(2, 1, 2, 1)?)?;
    out.push(Pair { label: "hopf+ vs hopf+ with trefoil".into(), right: connected_sum_insert(&hopf, 1, &trefoil)?, left: hopf });
    Ok(out)
}

pub const HIERARCHY: &str = "clasp-pass => band-pass => band-p# => band-#";
pub const SYMMETRY: &str = "verdicts are symmetric in the two inputs";
pub const FAST_PATH: &str = "Z/2-split fast path agrees with the band-# system";

/// Verdicts of all four relations on one ordered pair.
pub fn verdicts(p: &InvariantProfile, q: &InvariantProfile) -> Result<[bool; 4]> {
    let mut out = [false; 4];
    for (k, r) in [Relation::ClaspPass, Relation::BandPass, Relation::BandPSharp, Relation::BandSharp].into_iter().enumerate() {
        out[k] = decide_link_profiles(p, q, r)?.equivalent;
    }
    Ok(out)
}

fn hierarchy(seed: u64) -> Result<Vec<ContractCheck>> {
    let mut tally = Tally::default();
    for pair in corpus(seed)? {
        let p = InvariantProfile::of(&pair.left)?;
        let q = InvariantProfile::of(&pair.right)?;
        let forward = verdicts(&p, &q)?;
        let backward = verdicts(&q, &p)?;
        let chain = forward.windows(2).all(|w| !w[0] || w[1]);
        tally.record(HIERARCHY, chain, || format!("{}: {forward:?}", pair.label));
        tally.record(SYMMETRY, forward == backward, || format!("{}: {forward:?} vs {backward:?}", pair.label));
        let even = |x: &InvariantProfile| x.mu_ij.iter().all(|v| v % 2 == 0);
        if even(&p) && even(&q) {
            let fast = decide_z2split_profiles(&p, &q)?.equivalent;
            tally.record(FAST_PATH, fast == forward[3], || format!("{}: fast {fast}, full {}", pair.label, forward[3]));
        }
    }
    Ok(tally.into_checks())
}
