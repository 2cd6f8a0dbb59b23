//! Builders for the shipped catalog files. The files under `catalog/` are the
//! data of record; these builders regenerate them and a golden test keeps the
//! two identical.

use crate::braid;
use crate::codec::{serialize, Diagram, Kind};
use crate::error::Result;
use crate::tangle_ops::{stack, StrandTemplate};

use super::templates::{template_borromean, template_clasp, template_nu, template_nu_swapped, template_tau, template_whitehead};

/// Knots as braid closures with their Casson invariant and Conway polynomial
/// taken from standard knot tables.
const KNOTS: &[(&str, &str, usize, &[i32], i64, &str)] = &[
    ("unknot", "round circle", 1, &[], 0, "1"),
    ("unknot_braid", "unknot drawn as the closure of a 3-braid", 3, &[1, -2], 0, "1"),
    ("trefoil+", "positive trefoil", 2, &[1, 1, 1], 1, "1 + z^2"),
    ("trefoil-", "negative trefoil", 2, &[-1, -1, -1], 1, "1 + z^2"),
    ("figure8", "figure-eight knot", 3, &[1, -2, 1, -2], -1, "1 - z^2"),
    ("5_1", "cinquefoil, the (2,5) torus knot", 2, &[1, 1, 1, 1, 1], 3, "1 + 3z^2 + z^4"),
    ("5_2", "three-twist knot", 3, &[1, 1, 1, 2, -1, 2], 2, "1 + 2z^2"),
    ("6_1", "stevedore knot", 4, &[1, 1, 2, -1, -3, 2, -3], -2, "1 - 2z^2"),
    ("6_2", "knot 6_2", 3, &[1, 1, 1, -2, 1, -2], -1, "1 - z^2 - z^4"),
    ("6_3", "knot 6_3", 3, &[1, 1, -2, 1, -2, -2], 1, "1 + z^2 + z^4"),
    ("7_1", "the (2,7) torus knot", 2, &[1, 1, 1, 1, 1, 1, 1], 6, "1 + 6z^2 + 5z^4 + z^6"),
    ("7_2", "knot 7_2", 4, &[1, 1, 1, 2, -1, 2, 3, -2, 3], 3, "1 + 3z^2"),
    ("torus3_4", "the (3,4) torus knot", 3, &[1, 2, 1, 2, 1, 2, 1, 2], 5, "1 + 5z^2 + 5z^4 + z^6"),
    ("granny", "granny knot, trefoil+ # trefoil+", 3, &[1, 1, 1, 2, 2, 2], 2, "1 + 2z^2 + z^4"),
    ("square", "square knot, trefoil+ # trefoil-", 3, &[1, 1, 1, -2, -2, -2], 2, "1 + 2z^2 + z^4"),
];

/// Closed links as braid closures: name, description, strands, word,
/// linking number of the first two components, Conway polynomial.
const LINKS: &[(&str, &str, usize, &[i32], i64, &str)] = &[
    ("hopf+", "positive Hopf link", 2, &[1, 1], 1, "z"),
    ("hopf-", "negative Hopf link", 2, &[-1, -1], -1, "-z"),
    ("whitehead", "Whitehead link", 3, &[1, -2, 1, -2, -2], 0, "z^3"),
    ("borromean+", "Borromean rings", 3, &[1, -2, 1, -2, 1, -2], 0, "z^4"),
    ("borromean-", "Borromean rings, mirror diagram", 3, &[-1, 2, -1, 2, -1, 2], 0, "z^4"),
];

fn header(name: &str, description: &str, notes: &[(String, String)]) -> String {
    let mut s = format!("# {name}: {description}\n");
    for (k, v) in notes {
        s.push_str(&format!("# expect {k} = {v}\n"));
    }
    s
}

fn entry(name: String, description: &str, notes: Vec<(String, String)>, body: String) -> (String, String) {
    let text = header(&name, description, &notes) + &body;
    (name, text)
}

fn note(k: impl Into<String>, v: impl ToString) -> (String, String) {
    (k.into(), v.to_string())
}

fn diagram_entry(name: String, description: &str, mut notes: Vec<(String, String)>, d: &Diagram) -> Result<(String, String)> {
    notes.insert(0, note("crossings", d.crossing_count()));
    Ok(entry(name, description, notes, serialize(d)?))
}

fn template_entry(name: String, description: &str, mut notes: Vec<(String, String)>, t: &StrandTemplate) -> Result<(String, String)> {
    notes.insert(0, note("crossings", t.crossing_count()));
    Ok(entry(name, description, notes, t.serialize()?))
}

fn trivial(n: usize) -> Diagram {
    Diagram::trivial(Kind::BottomTangle, n)
}

/// Every shipped file as `(name, text)`.
pub(super) fn standard_files() -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for &(name, description, strands, word, a2, conway) in KNOTS {
        let d = braid::closure(strands, word)?;
        out.push(diagram_entry(name.into(), description, vec![note("a2", a2), note("conway", conway)], &d)?);
        let t = braid::knot_tangle(strands, word)?;
        let what = format!("bottom tangle closing up to the {name} knot");
        out.push(diagram_entry(format!("{name}.tangle"), &what, vec![note("a2(1)", a2)], &t)?);
    }
    for &(name, description, strands, word, lk, conway) in LINKS {
        let d = braid::closure(strands, word)?;
        out.push(diagram_entry(
            name.into(),
            description,
            vec![note("lk(12)", lk), note("conway", conway)],
            &d,
        )?);
    }

    let tangles: Vec<(&str, &str, Diagram, Vec<(String, String)>)> = vec![
        (
            "hopf+",
            "clasp between two bands",
            stack(&trivial(2), &template_clasp(2, 1, 2, 1)?)?,
            vec![note("mu(12)", 1), note("phi(12)", 1)],
        ),
        (
            "hopf-",
            "clasp between two bands, mirrored",
            stack(&trivial(2), &template_clasp(2, 1, 2, -1)?)?,
            vec![note("mu(12)", -1), note("phi(12)", 7)],
        ),
        (
            "whitehead",
            "band 2 threaded through a doubled clasp with band 1",
            stack(&trivial(2), &template_whitehead(2, 1, 2, 1)?)?,
            vec![note("mu(12)", 0), note("mu(2112)", 1), note("mu(1122)", 1), note("phi(12)", 4)],
        ),
        (
            "borromean+",
            "Borromean bottom tangle",
            stack(&trivial(3), &template_borromean(3, 1, 2, 3, 1)?)?,
            vec![note("mu(12)", 0), note("mu(13)", 0), note("mu(23)", 0), note("mu(123)", 1)],
        ),
        (
            "borromean-",
            "Borromean bottom tangle of opposite chirality",
            stack(&trivial(3), &template_borromean(3, 1, 2, 3, -1)?)?,
            vec![note("mu(12)", 0), note("mu(13)", 0), note("mu(23)", 0), note("mu(123)", -1)],
        ),
    ];
    for (name, description, d, notes) in tangles {
        out.push(diagram_entry(format!("{name}.tangle"), description, notes, &d)?);
    }

    for n in 2..=3 {
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                for (sign, s) in [(1, '+'), (-1, '-')] {
                    let t = template_tau(n, i, j, sign)?;
                    let what = format!("strand of component {i} looping once around band {j}");
                    let notes = vec![note(format!("mu({i}{j})"), 0), note(format!("a2({i})"), 0)];
                    out.push(template_entry(format!("tau_{i}{j}{s}.n{n}"), &what, notes, &t)?);
                }
            }
        }
        for i in 1..=n {
            for j in (i + 1)..=n {
                for (sign, s) in [(1i64, '+'), (-1, '-')] {
                    let notes = vec![note(format!("mu({i}{j})"), 0), note(format!("a2({i}{j})"), 2 * sign)];
                    let t = template_nu(n, i, j, sign)?;
                    let what = format!("doubled clasp tree with two leaves on {i} and one on {j}");
                    out.push(template_entry(format!("nu_{i}{j}{s}.n{n}"), &what, notes.clone(), &t)?);
                    let t = template_nu_swapped(n, i, j, sign)?;
                    let what = format!("doubled clasp tree with two leaves on {j} and one on {i}");
                    out.push(template_entry(format!("nu_{j}{i}{s}.n{n}"), &what, notes, &t)?);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}
