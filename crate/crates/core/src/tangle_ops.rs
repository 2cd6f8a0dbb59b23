//! Closures, component deletion, connected sums and the stacking product.
//!
//! A [`StrandTemplate`] is a `2n`-strand string link drawn below a bottom
//! tangle. Its strands are stored in the orientation they acquire once the
//! stack is formed: odd strands run upward (listed bottom to top), even
//! strands run downward (listed top to bottom), and crossing signs are taken
//! with respect to those orientations.

use std::collections::HashMap;

use crate::codec::{
    pairing_issues, parse_document, write_document, Crossing, Diagram, Kind, Passage,
    ValidationReport,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrandTemplate {
    pub crossings: Vec<Crossing>,
    /// `strands[k]` is boundary position `k + 1`.
    pub strands: Vec<Vec<Passage>>,
}

impl StrandTemplate {
    /// Crossing-free template on `2n` strands.
    pub fn identity(n: usize) -> Self {
        StrandTemplate { crossings: Vec::new(), strands: vec![Vec::new(); 2 * n] }
    }

    /// Number of bottom-tangle components this template acts on.
    pub fn n(&self) -> usize {
        self.strands.len() / 2
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut issues = pairing_issues(&self.crossings, &self.strands, "strand");
        if self.strands.is_empty() || self.strands.len() % 2 != 0 {
            issues.push(crate::codec::Issue {
                severity: crate::codec::Severity::Error,
                message: format!("template needs a positive even strand count, has {}", self.strands.len()),
                location: "header".into(),
            });
        }
        let ok = !issues.iter().any(|i| i.severity == crate::codec::Severity::Error);
        ValidationReport { ok, issues }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let doc = parse_document(text, "strands", "strand")?;
        if doc.kind != "template" {
            return Err(Error::KindMismatch { expected: "template" });
        }
        if doc.count % 2 != 0 {
            return Err(Error::Syntax {
                line: 3,
                column: 1,
                message: format!("strand count {} is odd", doc.count),
            });
        }
        let t = StrandTemplate { crossings: doc.crossings, strands: doc.seqs };
        t.validate().into_result()?;
        Ok(t)
    }

    pub fn serialize(&self) -> Result<String> {
        self.validate().into_result()?;
        let mut out = String::new();
        write_document(&mut out, "template", "strands", &self.crossings, "strand", &self.strands);
        Ok(out)
    }

    /// Template with every crossing id shifted by `offset`.
    fn shifted(&self, offset: u32) -> Self {
        StrandTemplate {
            crossings: self
                .crossings
                .iter()
                .map(|c| Crossing { id: c.id + offset, sign: c.sign })
                .collect(),
            strands: self
                .strands
                .iter()
                .map(|s| s.iter().map(|p| Passage { crossing: p.crossing + offset, role: p.role }).collect())
                .collect(),
        }
    }

    fn max_crossing_id(&self) -> u32 {
        self.crossings.iter().map(|c| c.id).max().unwrap_or(0)
    }
}

/// Relabels ids of `crossings` to `base + 1, base + 2, ...` in declaration
/// order, returning the renaming.
fn fresh_ids(crossings: &[Crossing], base: u32) -> HashMap<u32, u32> {
    crossings
        .iter()
        .enumerate()
        .map(|(k, c)| (c.id, base + k as u32 + 1))
        .collect()
}

fn rename(seq: &[Passage], map: &HashMap<u32, u32>) -> Vec<Passage> {
    seq.iter()
        .map(|p| Passage { crossing: map[&p.crossing], role: p.role })
        .collect()
}

fn expect_tangle(d: &Diagram) -> Result<()> {
    if d.kind != Kind::BottomTangle {
        return Err(Error::KindMismatch { expected: "bottom tangle" });
    }
    Ok(())
}

/// Closure: every component is joined to itself by a crossing-free arc.
pub fn close(d: &Diagram) -> Result<Diagram> {
    expect_tangle(d)?;
    crate::codec::validate(d).into_result()?;
    Ok(Diagram { kind: Kind::Link, ..d.clone() })
}

/// Keeps the components listed in `keep` (1-based, any order, duplicates
/// ignored). Crossings touching a dropped component disappear together with
/// their surviving passage. Returns the diagram and, for every original
/// component, its new index if kept.
pub fn delete_components(d: &Diagram, keep: &[usize]) -> Result<(Diagram, Vec<Option<usize>>)> {
    if keep.is_empty() {
        return Err(Error::EmptySelection);
    }
    for &k in keep {
        d.check_index(k)?;
    }
    crate::codec::validate(d).into_result()?;
    let mut kept = vec![false; d.n()];
    for &k in keep {
        kept[k - 1] = true;
    }
    let mut map = vec![None; d.n()];
    let mut next = 1;
    for (k, &flag) in kept.iter().enumerate() {
        if flag {
            map[k] = Some(next);
            next += 1;
        }
    }
    let cc = d.crossing_components();
    let survives = |id: u32| {
        let (o, u) = cc[&id];
        kept[o] && kept[u]
    };
    let crossings = d.crossings.iter().copied().filter(|c| survives(c.id)).collect();
    let components = d
        .components
        .iter()
        .enumerate()
        .filter(|(k, _)| kept[*k])
        .map(|(_, comp)| comp.iter().copied().filter(|p| survives(p.crossing)).collect())
        .collect();
    Ok((Diagram { kind: d.kind, crossings, components }, map))
}

/// The knot obtained by closing component `i` alone.
pub fn component_knot(d: &Diagram, i: usize) -> Result<Diagram> {
    expect_tangle(d)?;
    d.check_index(i)?;
    let (only, _) = delete_components(d, &[i])?;
    close(&only)
}

/// Plat closure of components `i < j`: the arcs `p_{2i} -> p_{2j-1}` and
/// `p_{2j} -> p_{2i-1}` are nested and crossing-free, so the knot is the
/// passage list of `i` followed by that of `j`, oriented by `i`.
pub fn plat_closure(d: &Diagram, i: usize, j: usize) -> Result<Diagram> {
    expect_tangle(d)?;
    d.check_index(i)?;
    d.check_index(j)?;
    if i >= j {
        return Err(Error::IndexOrder(i, j));
    }
    let (pair, _) = delete_components(d, &[i, j])?;
    let mut seq = pair.components[0].clone();
    seq.extend_from_slice(&pair.components[1]);
    Ok(Diagram { kind: Kind::Link, crossings: pair.crossings, components: vec![seq] })
}

/// Ties the knot `k` into component `i` of `d` just after its starting point.
pub fn connected_sum_insert(d: &Diagram, i: usize, k: &Diagram) -> Result<Diagram> {
    if k.n() != 1 {
        return Err(Error::NotAKnot(k.n()));
    }
    d.check_index(i)?;
    crate::codec::validate(d).into_result()?;
    crate::codec::validate(k).into_result()?;
    let map = fresh_ids(&k.crossings, d.max_crossing_id());
    let mut out = d.clone();
    out.crossings.extend(k.crossings.iter().map(|c| Crossing { id: map[&c.id], sign: c.sign }));
    let mut comp = rename(&k.components[0], &map);
    comp.extend_from_slice(&d.components[i - 1]);
    out.components[i - 1] = comp;
    Ok(out)
}

/// Stacks the bottom tangle `d` on top of `t`: component `i` becomes strand
/// `2i-1` of `t`, then component `i` of `d`, then strand `2i` of `t`.
pub fn stack(d: &Diagram, t: &StrandTemplate) -> Result<Diagram> {
    expect_tangle(d)?;
    if t.strands.len() != 2 * d.n() {
        return Err(Error::StrandCount { expected: 2 * d.n(), got: t.strands.len() });
    }
    crate::codec::validate(d).into_result()?;
    t.validate().into_result()?;
    let map = fresh_ids(&t.crossings, d.max_crossing_id());
    let mut crossings = d.crossings.clone();
    crossings.extend(t.crossings.iter().map(|c| Crossing { id: map[&c.id], sign: c.sign }));
    let components = d
        .components
        .iter()
        .enumerate()
        .map(|(k, comp)| {
            let mut seq = rename(&t.strands[2 * k], &map);
            seq.extend_from_slice(comp);
            seq.extend(rename(&t.strands[2 * k + 1], &map));
            seq
        })
        .collect();
    Ok(Diagram { kind: Kind::BottomTangle, crossings, components })
}

/// Template product `t1 · t2` with `t2` drawn below `t1`, so that
/// `stack(stack(d, t1), t2)` equals `stack(d, compose(t1, t2))` up to ids.
pub fn compose(t1: &StrandTemplate, t2: &StrandTemplate) -> Result<StrandTemplate> {
    if t1.strands.len() != t2.strands.len() {
        return Err(Error::StrandCount { expected: t1.strands.len(), got: t2.strands.len() });
    }
    let lower = t2.shifted(t1.max_crossing_id());
    let mut crossings = t1.crossings.clone();
    crossings.extend_from_slice(&lower.crossings);
    let strands = (0..t1.strands.len())
        .map(|k| {
            let (first, second) = if k % 2 == 0 {
                (&lower.strands[k], &t1.strands[k])
            } else {
                (&t1.strands[k], &lower.strands[k])
            };
            let mut s = first.clone();
            s.extend_from_slice(second);
            s
        })
        .collect();
    Ok(StrandTemplate { crossings, strands })
}

/// Relabels crossings `1..=c` in order of first appearance along the
/// components. Two diagrams equal up to renaming have equal canonical forms.
pub fn canonical_ids(d: &Diagram) -> Diagram {
    let mut map = HashMap::new();
    for comp in &d.components {
        for p in comp {
            let next = map.len() as u32 + 1;
            map.entry(p.crossing).or_insert(next);
        }
    }
    let mut crossings: Vec<Crossing> = d
        .crossings
        .iter()
        .filter_map(|c| map.get(&c.id).map(|&id| Crossing { id, sign: c.sign }))
        .collect();
    crossings.sort_by_key(|c| c.id);
    Diagram {
        kind: d.kind,
        crossings,
        components: d.components.iter().map(|c| rename(c, &map)).collect(),
    }
}
