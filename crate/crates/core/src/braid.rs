//! Diagrams from braid words.
//!
//! A word is a list of nonzero integers read bottom to top: `k` is the
//! generator in which the strand at position `k` moves to position `k + 1`
//! passing over its neighbour, `-k` its inverse. Positions are 1-based.

use crate::codec::{Crossing, Diagram, Kind, Passage, Sign};
use crate::error::{Error, Result};
use crate::tangle_ops::StrandTemplate;

/// Per-strand passage lists (indexed by starting position, listed bottom to
/// top), the crossing list, and where each strand ends.
struct Traced {
    crossings: Vec<Crossing>,
    passages: Vec<Vec<Passage>>,
    end: Vec<usize>,
}

/// `orient(label)` is +1 for a strand running upward and -1 for downward.
fn trace(strands: usize, word: &[i32], orient: impl Fn(usize) -> i64) -> Result<Traced> {
    let mut at: Vec<usize> = (0..strands).collect();
    let mut passages = vec![Vec::new(); strands];
    let mut crossings = Vec::with_capacity(word.len());
    for (n, &g) in word.iter().enumerate() {
        let k = g.unsigned_abs() as usize;
        if g == 0 || k >= strands {
            return Err(Error::Shape(format!("generator {g} on {strands} strands")));
        }
        let (a, b) = (at[k - 1], at[k]);
        let id = n as u32 + 1;
        let positive = g > 0;
        let (over, under) = if positive { (a, b) } else { (b, a) };
        let braid_sign = if positive { 1 } else { -1 };
        crossings.push(Crossing { id, sign: Sign::from_value(braid_sign * orient(a) * orient(b)) });
        passages[over].push(Passage::over(id));
        passages[under].push(Passage::under(id));
        at.swap(k - 1, k);
    }
    let mut end = vec![0; strands];
    for (pos, &label) in at.iter().enumerate() {
        end[label] = pos;
    }
    Ok(Traced { crossings, passages, end })
}

/// `2n`-strand template of a pure braid. Odd positions run upward and even
/// positions downward, as they do once stacked below a bottom tangle.
pub fn template(strands: usize, word: &[i32]) -> Result<StrandTemplate> {
    if strands == 0 || strands % 2 != 0 {
        return Err(Error::Shape(format!("template needs an even strand count, got {strands}")));
    }
    let t = trace(strands, word, |l| if l % 2 == 0 { 1 } else { -1 })?;
    if t.end.iter().enumerate().any(|(l, &e)| l != e) {
        return Err(Error::Shape("braid word is not pure".into()));
    }
    let strands = t
        .passages
        .into_iter()
        .enumerate()
        .map(|(l, mut p)| {
            if l % 2 == 1 {
                p.reverse();
            }
            p
        })
        .collect();
    Ok(StrandTemplate { crossings: t.crossings, strands })
}

/// Closure of the braid, all strands oriented upward.
pub fn closure(strands: usize, word: &[i32]) -> Result<Diagram> {
    let t = trace(strands, word, |_| 1)?;
    let mut seen = vec![false; strands];
    let mut components = Vec::new();
    for start in 0..strands {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut l = start;
        while !seen[l] {
            seen[l] = true;
            comp.extend_from_slice(&t.passages[l]);
            l = t.end[l];
        }
        components.push(comp);
    }
    Ok(Diagram { kind: Kind::Link, crossings: t.crossings, components })
}

/// One-component bottom tangle whose closure is the closure of the braid,
/// cut open at the bottom of the first strand.
pub fn knot_tangle(strands: usize, word: &[i32]) -> Result<Diagram> {
    let d = closure(strands, word)?;
    if d.n() != 1 {
        return Err(Error::NotAKnot(d.n()));
    }
    Ok(Diagram { kind: Kind::BottomTangle, ..d })
}

pub fn inverse(word: &[i32]) -> Vec<i32> {
    word.iter().rev().map(|g| -g).collect()
}

/// `u v u^-1 v^-1`.
pub fn commutator(u: &[i32], v: &[i32]) -> Vec<i32> {
    let mut w = u.to_vec();
    w.extend_from_slice(v);
    w.extend(inverse(u));
    w.extend(inverse(v));
    w
}

pub fn power(word: &[i32], e: i64) -> Vec<i32> {
    let base = if e < 0 { inverse(word) } else { word.to_vec() };
    base.iter().copied().cycle().take(base.len() * e.unsigned_abs() as usize).collect()
}

/// Standard pure braid generator in which strand `q` winds once around
/// strand `p` (`p < q`), passing behind the strands between them.
pub fn pure_generator(p: usize, q: usize) -> Vec<i32> {
    assert!(0 < p && p < q, "pure generator needs 0 < p < q");
    let mut w: Vec<i32> = ((p + 1)..q).rev().map(|k| k as i32).collect();
    let mut conj = w.clone();
    w.push(p as i32);
    w.push(p as i32);
    conj.reverse();
    w.extend(conj.iter().map(|&k| -k));
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::{linking_number, self_writhe, validate};
    use crate::tangle_ops::stack;

    #[test]
    fn trefoil_closure() {
        let k = closure(2, &[1, 1, 1]).unwrap();
        assert_eq!(k.n(), 1);
        assert!(validate(&k).ok);
        assert_eq!(self_writhe(&k, 1).unwrap(), 3);
        assert!(k.crossings.iter().all(|c| c.sign == Sign::Pos));
    }

    #[test]
    fn hopf_closure() {
        let h = closure(2, &[1, 1]).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(linking_number(&h, 1, 2).unwrap(), 1);
        let m = closure(2, &[-1, -1]).unwrap();
        assert_eq!(linking_number(&m, 1, 2).unwrap(), -1);
    }

    #[test]
    fn pure_generators_are_pure() {
        for q in 2..=6 {
            for p in 1..q {
                let t = template(6, &pure_generator(p, q)).unwrap();
                assert!(t.validate().ok);
            }
        }
        assert!(template(4, &[1]).is_err());
        assert!(template(3, &[]).is_err());
    }

    #[test]
    fn clasp_template_links_components() {
        // Strand 3 (upward, component 2) around strand 2 (downward, component 1).
        let t = template(4, &pure_generator(2, 3)).unwrap();
        let d = stack(&Diagram::trivial(Kind::BottomTangle, 2), &t).unwrap();
        assert_eq!(linking_number(&d, 1, 2).unwrap(), -1);
        assert_eq!(linking_number(&d, 2, 1).unwrap(), -1);
    }

    #[test]
    fn word_helpers() {
        assert_eq!(inverse(&[1, -2, 3]), vec![-3, 2, -1]);
        assert_eq!(commutator(&[1], &[2]), vec![1, 2, -1, -2]);
        assert_eq!(power(&[1, 2], -2), vec![-2, -1, -2, -1]);
        assert_eq!(pure_generator(1, 3), vec![2, 1, 1, -2]);
    }

    #[test]
    fn knot_tangle_requires_one_component() {
        assert!(knot_tangle(2, &[1, 1, 1]).is_ok());
        assert!(matches!(knot_tangle(2, &[1, 1]), Err(Error::NotAKnot(2))));
    }
}
