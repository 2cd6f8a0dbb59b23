use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::profile::{pairs, triples, InvariantProfile};
use super::system::{pair_variables, solve_congruence, variable_index, CongruenceSystem, Row};
use crate::codec::Diagram;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    ClaspPass,
    BandPass,
    BandSharp,
    #[serde(rename = "band-psharp")]
    BandPSharp,
}

impl Relation {
    pub const ALL: [Relation; 4] = [Relation::ClaspPass, Relation::BandPass, Relation::BandPSharp, Relation::BandSharp];

    pub fn name(self) -> &'static str {
        match self {
            Relation::ClaspPass => "clasp-pass",
            Relation::BandPass => "band-pass",
            Relation::BandSharp => "band-sharp",
            Relation::BandPSharp => "band-psharp",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Relation {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Relation::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown relation `{s}` (expected clasp-pass, band-pass, band-sharp or band-psharp)"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub description: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub relation: Relation,
    pub equivalent: bool,
    pub failed_precondition: Option<String>,
    pub preconditions: Vec<Check>,
    /// Unknown names; empty when no system was solved.
    pub variables: Vec<String>,
    pub rows: usize,
    pub solvable: Option<bool>,
    pub witness: Option<Vec<i64>>,
}

impl Verdict {
    fn from_checks(relation: Relation, preconditions: Vec<Check>) -> Self {
        let failed = preconditions.iter().find(|c| !c.holds).map(|c| c.description.clone());
        Verdict {
            relation,
            equivalent: failed.is_none(),
            failed_precondition: failed,
            preconditions,
            variables: Vec::new(),
            rows: 0,
            solvable: None,
            witness: None,
        }
    }
}

fn same_size(p: &InvariantProfile, q: &InvariantProfile) -> Result<usize> {
    if p.n != q.n {
        return Err(Error::SizeMismatch(p.n, q.n));
    }
    Ok(p.n)
}

/// `a ≡ b (mod m)`, with `m = 0` meaning equality.
fn congruent(a: i64, b: i64, m: i64) -> bool {
    if m == 0 {
        a == b
    } else {
        (a - b).rem_euclid(m) == 0
    }
}

fn describe(name: &str, m: i64) -> String {
    if m == 0 {
        format!("{name} equal")
    } else {
        format!("{name} equal mod {m}")
    }
}

fn compare_knots(p: &InvariantProfile, q: &InvariantProfile, m: i64, out: &mut Vec<Check>) {
    for i in 1..=p.n {
        let (a, b) = (p.a2_i[i - 1], q.a2_i[i - 1]);
        out.push(Check { description: describe(&format!("a2({i}) [{a} vs {b}]"), m), holds: congruent(a, b, m) });
    }
}

fn lk_label(i: usize, j: usize) -> String {
    format!("mu({i}{j})")
}

fn compare_pairs(
    p: &InvariantProfile,
    q: &InvariantProfile,
    label: impl Fn(usize, usize) -> String,
    field: impl Fn(&InvariantProfile) -> &Vec<i64>,
    m: i64,
    out: &mut Vec<Check>,
) {
    for (k, (i, j)) in pairs(p.n).enumerate() {
        let (a, b) = (field(p)[k], field(q)[k]);
        let label = label(i, j);
        out.push(Check { description: describe(&format!("{label} [{a} vs {b}]"), m), holds: congruent(a, b, m) });
    }
}

fn compare_triples(p: &InvariantProfile, q: &InvariantProfile, m: i64, out: &mut Vec<Check>) {
    for (k, (i, j, l)) in triples(p.n).enumerate() {
        let (a, b) = (p.mu_ijk[k], q.mu_ijk[k]);
        out.push(Check { description: describe(&format!("mu({i}{j}{l}) [{a} vs {b}]"), m), holds: congruent(a, b, m) });
    }
}

/// Classification of bottom tangles up to each relation: a direct
/// comparison of invariants, no unknowns involved.
pub fn decide_tangle(p: &InvariantProfile, q: &InvariantProfile, relation: Relation) -> Result<Verdict> {
    same_size(p, q)?;
    let mut c = Vec::new();
    match relation {
        Relation::ClaspPass => {
            compare_knots(p, q, 0, &mut c);
            compare_pairs(p, q, lk_label, |x| &x.mu_ij, 0, &mut c);
            compare_pairs(p, q, |i, j| format!("a2({i}{j})"), |x| &x.a2_ij, 0, &mut c);
            compare_triples(p, q, 0, &mut c);
        }
        Relation::BandPass | Relation::BandPSharp => {
            compare_knots(p, q, 2, &mut c);
            compare_pairs(p, q, lk_label, |x| &x.mu_ij, 0, &mut c);
            compare_pairs(p, q, |i, j| format!("mu({j}{i}{i}{j})"), |x| &x.mu_jiij, 2, &mut c);
            compare_triples(p, q, if relation == Relation::BandPass { 0 } else { 2 }, &mut c);
        }
        Relation::BandSharp => {
            compare_pairs(p, q, lk_label, |x| &x.mu_ij, 4, &mut c);
            compare_pairs(p, q, |i, j| format!("phi({i}{j})"), |x| &x.phi_ij, 8, &mut c);
            compare_triples(p, q, 2, &mut c);
        }
    }
    Ok(Verdict::from_checks(relation, c))
}

/// Preconditions and congruence system deciding whether the closures of two
/// bottom tangles are related. Coefficients use the linking numbers of `p`.
pub fn build_link_system(
    p: &InvariantProfile,
    q: &InvariantProfile,
    relation: Relation,
) -> Result<(Vec<Check>, CongruenceSystem)> {
    let n = same_size(p, q)?;
    let mut checks = Vec::new();
    match relation {
        Relation::ClaspPass => {
            compare_knots(p, q, 0, &mut checks);
            compare_pairs(p, q, lk_label, |x| &x.mu_ij, 0, &mut checks);
        }
        Relation::BandPass | Relation::BandPSharp => {
            compare_knots(p, q, 2, &mut checks);
            compare_pairs(p, q, lk_label, |x| &x.mu_ij, 0, &mut checks);
        }
        Relation::BandSharp => compare_pairs(p, q, lk_label, |x| &x.mu_ij, 4, &mut checks),
    }

    let vars = pair_variables(n);
    let width = vars.len();
    let mut sys = CongruenceSystem::new(vars);
    let x = |i: usize, j: usize| variable_index(n, i, j);

    for (k, (i, j)) in pairs(n).enumerate() {
        let lk = p.mu_ij[k];
        let mut c = vec![0; width];
        c[x(i, j)] += lk;
        c[x(j, i)] += lk;
        let d_mu = q.mu_ij[k] - p.mu_ij[k];
        let d_sl = q.mu_jiij[k] - p.mu_jiij[k];
        sys.rows.push(match relation {
            Relation::ClaspPass => Row::new(c, q.a2_ij[k] - p.a2_ij[k], 2),
            Relation::BandPass | Relation::BandPSharp => Row::new(c, d_sl, 2),
            Relation::BandSharp => Row::new(c.iter().map(|v| 4 * v).collect(), 4 * d_sl + d_mu, 8),
        });
    }

    let triple_modulus = match relation {
        Relation::ClaspPass | Relation::BandPass => 0,
        Relation::BandSharp | Relation::BandPSharp => 2,
    };
    for (k, (i, j, l)) in triples(n).enumerate() {
        let mut c = vec![0; width];
        let mut add = |lk: i64, plus: (usize, usize), minus: (usize, usize)| {
            c[x(plus.0, plus.1)] += lk;
            c[x(minus.0, minus.1)] -= lk;
        };
        add(p.lk(i, j), (l, j), (l, i));
        add(p.lk(j, l), (i, l), (i, j));
        add(p.lk(l, i), (j, i), (j, l));
        sys.rows.push(Row::new(c, q.mu_ijk[k] - p.mu_ijk[k], triple_modulus));
    }
    Ok((checks, sys))
}

/// Decides whether the closures of the tangles profiled by `p` and `q` are
/// related: preconditions first, then the congruence system.
pub fn decide_link_profiles(p: &InvariantProfile, q: &InvariantProfile, relation: Relation) -> Result<Verdict> {
    let (checks, sys) = build_link_system(p, q, relation)?;
    let mut v = Verdict::from_checks(relation, checks);
    v.variables = sys.variables.clone();
    v.rows = sys.rows.len();
    if v.equivalent {
        let sol = solve_congruence(&sys)?;
        v.equivalent = sol.solvable;
        v.solvable = Some(sol.solvable);
        v.witness = sol.witness;
    }
    Ok(v)
}

pub fn decide_link(sigma: &Diagram, sigma2: &Diagram, relation: Relation) -> Result<Verdict> {
    decide_link_profiles(&InvariantProfile::of(sigma)?, &InvariantProfile::of(sigma2)?, relation)
}

fn require_even_linking(p: &InvariantProfile) -> Result<()> {
    for (k, (i, j)) in pairs(p.n).enumerate() {
        if p.mu_ij[k] % 2 != 0 {
            return Err(Error::OddLinking { i, j, lk: p.mu_ij[k] });
        }
    }
    Ok(())
}

/// Band-# decision for links whose linking numbers are all even: the system
/// collapses to a comparison of residues, so nothing is solved.
pub fn decide_z2split_profiles(p: &InvariantProfile, q: &InvariantProfile) -> Result<Verdict> {
    same_size(p, q)?;
    require_even_linking(p)?;
    require_even_linking(q)?;
    decide_tangle(p, q, Relation::BandSharp)
}

pub fn decide_link_z2split(sigma: &Diagram, sigma2: &Diagram) -> Result<Verdict> {
    decide_z2split_profiles(&InvariantProfile::of(sigma)?, &InvariantProfile::of(sigma2)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(n: usize) -> InvariantProfile {
        let m = n * (n - 1) / 2;
        let t = n * (n - 1) * (n.saturating_sub(2)) / 6;
        InvariantProfile {
            n,
            a2_i: vec![0; n],
            a2_ij: vec![0; m],
            mu_ij: vec![0; m],
            mu_ijk: vec![0; t],
            mu_jiij: vec![0; m],
            phi_ij: vec![0; m],
        }
    }

    #[test]
    fn relation_names_round_trip() {
        for r in Relation::ALL {
            assert_eq!(r.name().parse::<Relation>().unwrap(), r);
        }
        assert!("band".parse::<Relation>().is_err());
        assert_eq!(serde_json::to_string(&Relation::BandPSharp).unwrap(), "\"band-psharp\"");
    }

    #[test]
    fn knots_reduce_to_a2() {
        let u = profile(1);
        let mut k = profile(1);
        k.a2_i[0] = 1;
        for r in Relation::ALL {
            let (_, sys) = build_link_system(&u, &k, r).unwrap();
            assert!(sys.rows.is_empty());
            assert!(decide_link_profiles(&u, &u, r).unwrap().equivalent);
        }
        assert!(!decide_link_profiles(&u, &k, Relation::ClaspPass).unwrap().equivalent);
        assert!(!decide_link_profiles(&u, &k, Relation::BandPass).unwrap().equivalent);
        assert!(decide_link_profiles(&u, &k, Relation::BandSharp).unwrap().equivalent);
        k.a2_i[0] = 2;
        assert!(decide_link_profiles(&u, &k, Relation::BandPass).unwrap().equivalent);
    }

    #[test]
    fn linked_pair_row() {
        let mut p = profile(2);
        p.mu_ij[0] = 1;
        let mut q = p.clone();
        q.a2_ij[0] = 1;
        let (_, sys) = build_link_system(&p, &q, Relation::ClaspPass).unwrap();
        assert_eq!(sys.variables, ["x12", "x21"]);
        assert_eq!(sys.rows, vec![Row::new(vec![1, 1], 1, 2)]);
        let v = decide_link_profiles(&p, &q, Relation::ClaspPass).unwrap();
        assert!(v.equivalent);
        assert!(sys.is_satisfied_by(&v.witness.unwrap()));
        // As tangles they differ.
        assert!(!decide_tangle(&p, &q, Relation::ClaspPass).unwrap().equivalent);
    }

    #[test]
    fn triple_row_coefficients() {
        let mut p = profile(3);
        p.mu_ij = vec![1, 2, 3]; // lk12, lk13, lk23
        let (_, sys) = build_link_system(&p, &p, Relation::ClaspPass).unwrap();
        // lk12 (x32 - x31) + lk23 (x13 - x12) + lk31 (x21 - x23)
        // over x12 x13 x21 x23 x31 x32
        assert_eq!(sys.rows[3], Row::new(vec![-3, 3, 2, -2, -1, 1], 0, 0));
    }

    #[test]
    fn borromean_sign_pair() {
        let mut p = profile(3);
        p.mu_ijk[0] = 1;
        let mut q = p.clone();
        q.mu_ijk[0] = -1;
        let v = decide_link_profiles(&p, &q, Relation::ClaspPass).unwrap();
        assert_eq!((v.equivalent, v.solvable), (false, Some(false)));
        assert!(decide_link_profiles(&p, &q, Relation::BandSharp).unwrap().equivalent);
        assert!(decide_z2split_profiles(&p, &q).unwrap().equivalent);
    }

    #[test]
    fn z2split_rejects_odd_linking() {
        let mut p = profile(2);
        p.mu_ij[0] = 1;
        assert!(matches!(decide_z2split_profiles(&p, &profile(2)), Err(Error::OddLinking { .. })));
        assert!(matches!(decide_tangle(&p, &profile(3), Relation::BandPass), Err(Error::SizeMismatch(2, 3))));
    }

    #[test]
    fn failed_precondition_is_reported() {
        let p = profile(2);
        let mut q = profile(2);
        q.mu_ij[0] = 4;
        let v = decide_link_profiles(&p, &q, Relation::BandPass).unwrap();
        assert!(!v.equivalent);
        assert!(v.failed_precondition.unwrap().starts_with("mu(12)"));
        assert_eq!(v.solvable, None);
    }
}
