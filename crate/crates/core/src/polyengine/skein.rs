//! Conway polynomial by the skein relation `∇(D+) - ∇(D-) = z ∇(D0)`.
//!
//! Exponential in the crossing count; kept as an independent check on the
//! Fox-calculus route and not used by the invariant engines.

use std::collections::{HashMap, HashSet};

use super::laurent::LaurentPolynomial;
use crate::codec::{serialize, validate, Crossing, Diagram, Kind, Passage, Role};
use crate::error::{Error, Result};
use crate::tangle_ops::canonical_ids;

/// Conway polynomial of a link diagram.
pub fn conway_skein(d: &Diagram) -> Result<LaurentPolynomial> {
    if d.kind != Kind::Link {
        return Err(Error::KindMismatch { expected: "link" });
    }
    validate(d).into_result()?;
    let mut memo = HashMap::new();
    Ok(conway(d.clone(), &mut memo))
}

/// First crossing met Under before Over, walking components in index order
/// from their first passage.
fn first_ascending(d: &Diagram) -> Option<u32> {
    let mut seen = HashSet::new();
    for comp in &d.components {
        for p in comp {
            if seen.insert(p.crossing) && p.role == Role::Under {
                return Some(p.crossing);
            }
        }
    }
    None
}

fn position(comp: &[Passage], id: u32) -> Option<usize> {
    comp.iter().position(|p| p.crossing == id)
}

fn switch(d: &Diagram, id: u32) -> Diagram {
    let mut out = d.clone();
    for c in out.crossings.iter_mut().filter(|c| c.id == id) {
        c.sign = c.sign.flip();
    }
    for p in out.components.iter_mut().flatten().filter(|p| p.crossing == id) {
        p.role = p.role.flip();
    }
    out
}

/// Oriented smoothing of crossing `id`.
fn smooth(d: &Diagram, id: u32) -> Diagram {
    let crossings: Vec<Crossing> = d.crossings.iter().copied().filter(|c| c.id != id).collect();
    let holders: Vec<usize> = (0..d.n()).filter(|&k| position(&d.components[k], id).is_some()).collect();
    let mut components = d.components.clone();
    match holders.as_slice() {
        [k] => {
            let s = &d.components[*k];
            let p = position(s, id).unwrap();
            let q = p + 1 + position(&s[p + 1..], id).unwrap();
            let mut outer = s[q + 1..].to_vec();
            outer.extend_from_slice(&s[..p]);
            components[*k] = outer;
            components.push(s[p + 1..q].to_vec());
        }
        [a, b] => {
            let (sa, sb) = (&d.components[*a], &d.components[*b]);
            let p = position(sa, id).unwrap();
            let q = position(sb, id).unwrap();
            let mut merged = sa[p + 1..].to_vec();
            merged.extend_from_slice(&sa[..p]);
            merged.extend_from_slice(&sb[q + 1..]);
            merged.extend_from_slice(&sb[..q]);
            components[*a] = merged;
            components.remove(*b);
        }
        _ => unreachable!("validated diagrams carry each crossing on one or two components"),
    }
    Diagram { kind: Kind::Link, crossings, components }
}

fn conway(d: Diagram, memo: &mut HashMap<String, LaurentPolynomial>) -> LaurentPolynomial {
    let Some(id) = first_ascending(&d) else {
        return if d.n() == 1 { LaurentPolynomial::one() } else { LaurentPolynomial::zero() };
    };
    let key = serialize(&canonical_ids(&d)).expect("skein diagrams stay valid");
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let sign = d.sign_map()[&id].value();
    let switched = conway(switch(&d, id), memo);
    let smoothed = conway(smooth(&d, id), memo);
    let v = &switched + &(&smoothed * &LaurentPolynomial::monomial(sign, 1));
    memo.insert(key, v.clone());
    v
}
