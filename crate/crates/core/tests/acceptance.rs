//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//! Runs without the libtest harness so the lines print on every run.

use std::process::ExitCode;

use linkpass::catalog::{self, Item};
use linkpass::classify::{
    decide_link, decide_link_profiles, decide_z2split_profiles, solve_congruence, CongruenceSystem, InvariantProfile,
    Relation, Row,
};
use linkpass::codec::{linking_number, Diagram, Kind};
use linkpass::magnus::MilnorEngine;
use linkpass::polyengine::{alexander_a2, conway_skein, LaurentPolynomial};
use linkpass::suites;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn diagram(name: &str) -> Diagram {
    catalog::get(name).unwrap().diagram().cloned().unwrap()
}

fn annotated(name: &str, key: &str) -> String {
    let e = catalog::get(name).unwrap();
    e.annotations.iter().find(|a| a.key == key).map(|a| a.value.clone()).unwrap()
}

fn golden_values() -> Outcome {
    let e = |x: linkpass::Error| x.to_string();
    ensure(alexander_a2(&diagram("trefoil+")).map_err(e)? == 1, "a2(trefoil) != 1")?;
    ensure(alexander_a2(&diagram("unknot")).map_err(e)? == 0, "a2(unknot) != 0")?;
    ensure(conway_skein(&diagram("hopf+")).map_err(e)? == LaurentPolynomial::monomial(1, 1), "conway(hopf+) != z")?;
    let by_crossings = linking_number(&diagram("hopf+"), 1, 2).map_err(e)?;
    let by_magnus = MilnorEngine::new(&diagram("hopf+.tangle"), 4).map_err(e)?.mu(&[1, 2]).map_err(e)?;
    ensure(by_crossings == 1 && by_magnus == 1, format!("lk(hopf+): crossings {by_crossings}, magnus {by_magnus}"))?;
    let b = InvariantProfile::of(&diagram("borromean+.tangle")).map_err(e)?;
    ensure(b.triple(1, 2, 3) == 1, format!("mu(123) of Borromean = {}", b.triple(1, 2, 3)))?;
    let w = InvariantProfile::of(&diagram("whitehead.tangle")).map_err(e)?;
    ensure(w.sato_levine(1, 2).rem_euclid(2) == 1, "mu(2112) of Whitehead is even")?;
    ensure(w.phi(1, 2) == 4, format!("phi(12) of Whitehead = {}", w.phi(1, 2)))?;
    Ok("a2(trefoil)=1, a2(unknot)=0, conway(hopf+)=z, lk=1 twice, mu(123)=1, mu(2112) odd, phi(12)=4".into())
}

fn oracle_equivalence() -> Outcome {
    let mut n = 0;
    for name in catalog::list().map_err(|e| e.to_string())? {
        let entry = catalog::get(&name).map_err(|e| e.to_string())?;
        let Item::Diagram(d) = &entry.item else { continue };
        if d.kind != Kind::Link || d.n() != 1 || d.crossing_count() > 10 {
            continue;
        }
        let skein = conway_skein(d).map_err(|e| e.to_string())?.coeff(2);
        let fox = alexander_a2(d).map_err(|e| e.to_string())?;
        ensure(skein == fox, format!("{name}: skein {skein}, Fox {fox}"))?;
        n += 1;
    }
    ensure(n >= 10, format!("only {n} catalog knots"))?;
    Ok(format!("{n} catalog knots agree"))
}

fn suite_checks(checks: &[linkpass::catalog::ContractCheck], names: &[&str], min_cases: usize) -> Outcome {
    for name in names {
        let c = checks.iter().find(|c| c.name == *name).ok_or(format!("missing check `{name}`"))?;
        ensure(c.cases >= min_cases, format!("`{name}` ran {} cases", c.cases))?;
        ensure(c.passed(), format!("`{name}` failed: {:?}", c.first_failure))?;
    }
    Ok(format!("{} laws on {min_cases}+ random cases", names.len()))
}

const VARIATION_LAWS: [&str; 6] = [
    "tau keeps a2(i) and mu(ij)",
    "nu keeps a2(i), mu(ij) and mu(ijk)",
    "nu shifts a2(ij) by 2v",
    "tau: exact mu(ijk) variation law",
    "tau: a2(ij) mod 2 variation law",
    "tau: mu(jiij) mod 2 variation law",
];

fn knot_reductions() -> Outcome {
    let corpus = ["unknot", "trefoil+", "trefoil-", "figure8", "5_1", "5_2", "6_1", "6_2", "6_3", "7_2"];
    let mut pairs = 0;
    for a in corpus {
        for b in corpus {
            let (ta, tb) = (format!("{a}.tangle"), format!("{b}.tangle"));
            // Table values shipped with the closed knots, not engine output.
            let (x, y): (i64, i64) = (annotated(a, "a2").parse().unwrap(), annotated(b, "a2").parse().unwrap());
            let (da, db) = (diagram(&ta), diagram(&tb));
            let d = |r| decide_link(&da, &db, r).map(|v| v.equivalent).map_err(|e| e.to_string());
            ensure(d(Relation::ClaspPass)? == (x == y), format!("clasp-pass {a} vs {b}"))?;
            ensure(d(Relation::BandPass)? == ((x - y) % 2 == 0), format!("band-pass {a} vs {b}"))?;
            ensure(d(Relation::BandSharp)?, format!("band-# {a} vs {b}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} ordered knot pairs"))
}

/// Exhaustive search over residues mod 8.
fn brute_force(rows: &[Row], k: usize) -> bool {
    let total = 8usize.pow(k as u32);
    (0..total).any(|mut code| {
        let x: Vec<i64> = (0..k)
            .map(|_| {
                let v = (code % 8) as i64;
                code /= 8;
                v
            })
            .collect();
        satisfies(rows, &x)
    })
}

fn satisfies(rows: &[Row], x: &[i64]) -> bool {
    rows.iter().all(|r| {
        let lhs: i64 = r.coefficients.iter().zip(x).map(|(a, b)| a * b).sum();
        let d = lhs - r.rhs;
        if r.modulus == 0 {
            d == 0
        } else {
            d % r.modulus == 0
        }
    })
}

fn solver() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut solvable = 0;
    for case in 0..200 {
        let k = rng.gen_range(1..=6);
        let rows: Vec<Row> = (0..rng.gen_range(1..=6))
            .map(|_| {
                let m = if rng.gen_bool(0.5) { 2 } else { 8 };
                Row::new((0..k).map(|_| rng.gen_range(-8..=8)).collect(), rng.gen_range(-8..=8), m)
            })
            .collect();
        let s = CongruenceSystem { variables: (1..=k).map(|i| format!("x{i}")).collect(), rows };
        let sol = solve_congruence(&s).map_err(|e| e.to_string())?;
        ensure(sol.solvable == brute_force(&s.rows, k), format!("modular case {case} disagrees with brute force"))?;
        if let Some(w) = &sol.witness {
            ensure(satisfies(&s.rows, w), format!("modular case {case}: witness fails"))?;
            solvable += 1;
        }
    }
    for case in 0..200 {
        let k = rng.gen_range(1..=6);
        let x: Vec<i64> = (0..k).map(|_| rng.gen_range(-6..=6)).collect();
        let rows: Vec<Row> = (0..rng.gen_range(1..=6))
            .map(|_| {
                let c: Vec<i64> = (0..k).map(|_| rng.gen_range(-6..=6)).collect();
                let rhs = c.iter().zip(&x).map(|(a, b)| a * b).sum();
                Row::new(c, rhs, [0, 2, 8][rng.gen_range(0..3)])
            })
            .collect();
        let s = CongruenceSystem { variables: (1..=k).map(|i| format!("x{i}")).collect(), rows };
        let sol = solve_congruence(&s).map_err(|e| e.to_string())?;
        ensure(sol.solvable, format!("constructed case {case} reported unsolvable"))?;
        ensure(satisfies(&s.rows, sol.witness.as_ref().unwrap()), format!("constructed case {case}: witness fails"))?;
    }
    Ok(format!("200 modular systems ({solvable} solvable) match brute force, 200 constructed systems solved"))
}

fn negative_controls() -> Outcome {
    let e = |x: linkpass::Error| x.to_string();
    let v = decide_link(&diagram("borromean+.tangle"), &diagram("borromean-.tangle"), Relation::ClaspPass).map_err(e)?;
    ensure(!v.equivalent, "Borromean pair is clasp-pass equivalent")?;
    let trivial = InvariantProfile::of(&Diagram::trivial(Kind::BottomTangle, 2)).map_err(e)?;
    let white = InvariantProfile::of(&diagram("whitehead.tangle")).map_err(e)?;
    ensure(!decide_z2split_profiles(&trivial, &white).map_err(e)?.equivalent, "Whitehead ~ trivial on the fast path")?;
    let mut agreed = 0;
    for pair in suites::corpus(11).map_err(e)? {
        let p = InvariantProfile::of(&pair.left).map_err(e)?;
        let q = InvariantProfile::of(&pair.right).map_err(e)?;
        if p.mu_ij.iter().chain(&q.mu_ij).all(|v| v % 2 == 0) {
            let fast = decide_z2split_profiles(&p, &q).map_err(e)?.equivalent;
            let full = decide_link_profiles(&p, &q, Relation::BandSharp).map_err(e)?.equivalent;
            ensure(fast == full, format!("{}: fast {fast}, full {full}", pair.label))?;
            agreed += 1;
        }
    }
    ensure(agreed > 0, "no Z/2-split pairs in the corpus")?;
    Ok(format!("Borromean +/- and Whitehead separated; fast path agrees on {agreed} split pairs"))
}

fn hierarchy() -> Outcome {
    let e = |x: linkpass::Error| x.to_string();
    let mut counts = [0usize; 4];
    let pairs = suites::corpus(11).map_err(e)?;
    for pair in &pairs {
        let p = InvariantProfile::of(&pair.left).map_err(e)?;
        let q = InvariantProfile::of(&pair.right).map_err(e)?;
        let v = suites::verdicts(&p, &q).map_err(e)?;
        ensure(v.windows(2).all(|w| !w[0] || w[1]), format!("{}: {v:?}", pair.label))?;
        for (c, &b) in counts.iter_mut().zip(&v) {
            *c += b as usize;
        }
    }
    Ok(format!(
        "{} pairs; equivalent counts clasp-pass {}, band-pass {}, band-p# {}, band-# {}",
        pairs.len(),
        counts[0],
        counts[1],
        counts[2],
        counts[3]
    ))
}

fn main() -> ExitCode {
    let variation = suites::variation(7, 60);
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("golden values", Box::new(golden_values)),
        ("skein and Fox a2 agree on catalog knots", Box::new(oracle_equivalence)),
        (
            "variation laws",
            Box::new(|| suite_checks(variation.as_ref().map_err(|e| e.to_string())?, &VARIATION_LAWS, 50)),
        ),
        (
            "stacking contract of the deciders",
            Box::new(|| {
                suite_checks(
                    variation.as_ref().map_err(|e| e.to_string())?,
                    &[suites::STACKED_CLASP_PASS, suites::STACKED_BAND_PASS, suites::STACKED_BAND_SHARP],
                    50,
                )
            }),
        ),
        ("one-component reductions", Box::new(knot_reductions)),
        ("congruence solver", Box::new(solver)),
        ("negative controls", Box::new(negative_controls)),
        ("move hierarchy", Box::new(hierarchy)),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
