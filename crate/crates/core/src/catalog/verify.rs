//! Behavioural contracts for the generator templates, checked on random base
//! tangles. The templates are only defined through these contracts, so this
//! is their release gate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::random_tangle;
use super::templates::{build_sigma_with, nu_word, tau_word, zero_matrix, Matrix, WordFn};
use crate::braid;
use crate::classify::profile::{pairs, triples};
use crate::classify::{decide_tangle, InvariantProfile, Relation};
use crate::codec::Diagram;
use crate::error::Result;
use crate::tangle_ops::stack;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContractCheck {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    /// Description of the first failing case.
    pub first_failure: Option<String>,
}

impl ContractCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TemplateReport {
    pub n: usize,
    pub seed: u64,
    pub trials: usize,
    pub checks: Vec<ContractCheck>,
}

impl TemplateReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(ContractCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&ContractCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Accumulates pass/fail per named contract, in first-seen order.
#[derive(Default)]
pub(crate) struct Tally {
    checks: Vec<ContractCheck>,
}

impl Tally {
    pub(crate) fn record(&mut self, name: &str, ok: bool, case: impl FnOnce() -> String) {
        let idx = match self.checks.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                self.checks.push(ContractCheck { name: name.to_string(), cases: 0, failures: 0, first_failure: None });
                self.checks.len() - 1
            }
        };
        let c = &mut self.checks[idx];
        c.cases += 1;
        if !ok {
            c.failures += 1;
            if c.first_failure.is_none() {
                c.first_failure = Some(case());
            }
        }
    }

    pub(crate) fn into_checks(self) -> Vec<ContractCheck> {
        self.checks
    }
}

pub(crate) const TAU_INVARIANT: &str = "tau keeps a2(i) and mu(ij)";
pub(crate) const NU_INVARIANT: &str = "nu keeps a2(i), mu(ij) and mu(ijk)";
pub(crate) const NU_SHIFT: &str = "nu shifts a2(ij) by 2v";
pub(crate) const TAU_TRIPLE: &str = "tau: exact mu(ijk) variation law";
pub(crate) const TAU_A2_PARITY: &str = "tau: a2(ij) mod 2 variation law";
pub(crate) const TAU_SL_PARITY: &str = "tau: mu(jiij) mod 2 variation law";
const ORDER: &str = "stacking order does not change the profile";
const NU_SWAP: &str = "nu_ij and nu_ji give the same profile";
const TAU_SQUARED: &str = "tau squared is band-# trivial";
const CANCEL: &str = "tau then its inverse changes nothing";

pub(crate) fn random_matrices(rng: &mut impl Rng, n: usize, range: i64) -> (Matrix, Matrix) {
    let mut omega = zero_matrix(n);
    let mut v = zero_matrix(n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                omega[i][j] = rng.gen_range(-range..=range);
            }
            if i < j {
                v[i][j] = rng.gen_range(-range..=range);
            }
        }
    }
    (omega, v)
}

/// Exact and mod-2 variation laws of `σ → σ_{ω,0} → σ_{ω,v}`.
pub(crate) fn variation_contracts(
    tally: &mut Tally,
    sigma: &Diagram,
    omega: &Matrix,
    v: &Matrix,
    tau: WordFn,
) -> Result<()> {
    let n = sigma.n();
    let so = build_sigma_with(sigma, omega, &zero_matrix(n), tau)?;
    let sov = build_sigma_with(sigma, omega, v, tau)?;
    let p = InvariantProfile::of(sigma)?;
    let po = InvariantProfile::of(&so)?;
    let pov = InvariantProfile::of(&sov)?;
    let case = || format!("n={n} omega={omega:?} v={v:?} base={p:?}");

    tally.record(TAU_INVARIANT, p.a2_i == po.a2_i && p.mu_ij == po.mu_ij, case);
    tally.record(
        NU_INVARIANT,
        po.a2_i == pov.a2_i && po.mu_ij == pov.mu_ij && po.mu_ijk == pov.mu_ijk,
        case,
    );
    let shift_ok = pairs(n).all(|(i, j)| pov.a2(i, j) - po.a2(i, j) == 2 * v[i - 1][j - 1]);
    tally.record(NU_SHIFT, shift_ok, case);

    let w = |a: usize, b: usize| omega[a - 1][b - 1];
    let triple_ok = triples(n).all(|(i, j, k)| {
        let expect = p.lk(i, j) * (w(k, j) - w(k, i)) + p.lk(j, k) * (w(i, k) - w(i, j)) + p.lk(k, i) * (w(j, i) - w(j, k));
        po.triple(i, j, k) - p.triple(i, j, k) == expect
    });
    tally.record(TAU_TRIPLE, triple_ok, case);
    let parity = |d: i64, i: usize, j: usize| (d - p.lk(i, j) * (w(i, j) + w(j, i))).rem_euclid(2) == 0;
    tally.record(TAU_A2_PARITY, pairs(n).all(|(i, j)| parity(po.a2(i, j) - p.a2(i, j), i, j)), case);
    tally.record(
        TAU_SL_PARITY,
        pairs(n).all(|(i, j)| parity(po.sato_levine(i, j) - p.sato_levine(i, j), i, j)),
        case,
    );
    Ok(())
}

/// The part of the profile preserved by the moves the templates model.
fn core_profile(p: &InvariantProfile) -> (Vec<i64>, Vec<i64>, Vec<i64>, Vec<i64>, Vec<i64>) {
    (
        p.a2_i.clone(),
        p.a2_ij.clone(),
        p.mu_ij.clone(),
        p.mu_ijk.clone(),
        p.mu_jiij.iter().map(|v| v.rem_euclid(2)).collect(),
    )
}

fn stacked(sigma: &Diagram, word: &[i32]) -> Result<InvariantProfile> {
    let n = sigma.n();
    InvariantProfile::of(&stack(sigma, &braid::template(2 * n, word)?)?)
}

fn random_generator(rng: &mut impl Rng, n: usize, tau: WordFn) -> Result<(String, Vec<i32>)> {
    let i = rng.gen_range(1..=n);
    let j = (i + rng.gen_range(1..n) - 1) % n + 1;
    let e = if rng.gen_bool(0.5) { 1 } else { -1 };
    Ok(if rng.gen_bool(0.5) || i > j {
        (format!("tau_{i}{j}^{e}"), braid::power(&tau(n, i, j)?, e))
    } else {
        (format!("nu_{i}{j}^{e}"), braid::power(&nu_word(n, i, j)?, e))
    })
}

/// Checks every template contract with the shipped `τ`.
pub fn verify_templates(n: usize, seed: u64, trials: usize) -> Result<TemplateReport> {
    verify_templates_with(n, seed, trials, tau_word)
}

/// Same as [`verify_templates`] with a replacement `τ` word.
pub fn verify_templates_with(n: usize, seed: u64, trials: usize, tau: WordFn) -> Result<TemplateReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    for _ in 0..trials {
        let gens = rng.gen_range(1..=4);
        let sigma = random_tangle(&mut rng, n, gens, 0.3)?;
        let (omega, v) = random_matrices(&mut rng, n, 2);
        variation_contracts(&mut tally, &sigma, &omega, &v, tau)?;

        let p = InvariantProfile::of(&sigma)?;
        let (xn, x) = random_generator(&mut rng, n, tau)?;
        let (yn, y) = random_generator(&mut rng, n, tau)?;
        let xy: Vec<i32> = y.iter().chain(&x).copied().collect();
        let yx: Vec<i32> = x.iter().chain(&y).copied().collect();
        let ok = core_profile(&stacked(&sigma, &xy)?) == core_profile(&stacked(&sigma, &yx)?);
        tally.record(ORDER, ok, || format!("n={n} x={xn} y={yn} base={p:?}"));

        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i + 1..=n);
        let a = stacked(&sigma, &nu_word(n, i, j)?)?;
        let b = stacked(&sigma, &nu_word(n, j, i)?)?;
        tally.record(NU_SWAP, core_profile(&a) == core_profile(&b), || format!("n={n} pair {i}{j} base={p:?}"));

        let (i, j) = if rng.gen_bool(0.5) { (i, j) } else { (j, i) };
        let t = tau(n, i, j)?;
        let sq = stacked(&sigma, &braid::power(&t, 2))?;
        let ok = decide_tangle(&p, &sq, Relation::BandSharp)?.equivalent;
        tally.record(TAU_SQUARED, ok, || format!("n={n} tau_{i}{j} base={p:?} after={sq:?}"));

        let mut w = t.clone();
        w.extend(braid::inverse(&t));
        let ok = stacked(&sigma, &w)? == p;
        tally.record(CANCEL, ok, || format!("n={n} tau_{i}{j} base={p:?}"));
    }
    Ok(TemplateReport { n, seed, trials, checks: tally.into_checks() })
}
