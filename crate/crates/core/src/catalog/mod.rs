//! Shipped diagrams and generator templates, and builders for the stacked
//! tangles `σ_ω` and `σ_{ω,v}`.
//!
//! Entries are `.btt` files. Leading comment lines carry a description and
//! `# expect <key> = <value>` annotations which [`CatalogEntry::check`]
//! re-derives with the engines. The files are compiled in; setting
//! `LINKPASS_CATALOG` to a directory makes [`get`] and [`list`] read that
//! directory instead.

mod embedded;
#[cfg(test)]
mod standard;
pub mod templates;
pub mod verify;

use std::path::PathBuf;

use rand::Rng;
use serde::Serialize;

pub use templates::*;
pub use verify::{verify_templates, verify_templates_with, ContractCheck, TemplateReport};

use crate::braid;
use crate::classify::InvariantProfile;
use crate::codec::{self, Diagram, Kind};
use crate::error::{Error, Result};
use crate::magnus::MilnorEngine;
use crate::polyengine::{alexander_a2, conway_skein};
use crate::tangle_ops::{connected_sum_insert, stack, StrandTemplate};

pub const CATALOG_ENV: &str = "LINKPASS_CATALOG";

/// Largest component count accepted by `trivial_tangle(n)`.
pub const MAX_TRIVIAL: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Diagram(Diagram),
    Template(StrandTemplate),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Annotation {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub item: Item,
    pub annotations: Vec<Annotation>,
    /// The file as shipped, comments included.
    pub text: String,
}

/// One annotation compared against the engines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnnotationCheck {
    pub key: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

fn parse_trivial(name: &str) -> Option<usize> {
    name.strip_prefix("trivial_tangle(")?.strip_suffix(')')?.parse().ok()
}

/// Parses a catalog file; diagrams and templates are told apart by their
/// `kind` line.
pub fn parse_entry(name: &str, text: &str) -> Result<CatalogEntry> {
    let mut description = String::new();
    let mut annotations = Vec::new();
    for line in text.lines().take_while(|l| l.starts_with('#')) {
        let body = line.trim_start_matches('#').trim();
        if let Some(rest) = body.strip_prefix("expect ") {
            let (k, v) = rest
                .split_once('=')
                .ok_or_else(|| Error::Shape(format!("{name}: annotation `{rest}` lacks `=`")))?;
            annotations.push(Annotation { key: k.trim().to_string(), value: v.trim().to_string() });
        } else if description.is_empty() {
            description = body.split_once(": ").map_or(body, |(_, d)| d).to_string();
        }
    }
    let is_template = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .any(|l| l == "kind template");
    let item = if is_template {
        Item::Template(StrandTemplate::parse(text)?)
    } else {
        Item::Diagram(codec::parse(text)?)
    };
    Ok(CatalogEntry { name: name.to_string(), description, item, annotations, text: text.to_string() })
}

fn catalog_dir() -> Option<PathBuf> {
    std::env::var_os(CATALOG_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

/// Looks up a shipped entry, or `trivial_tangle(n)` for `1 <= n <= 8`.
pub fn get(name: &str) -> Result<CatalogEntry> {
    if let Some(n) = parse_trivial(name) {
        if n == 0 || n > MAX_TRIVIAL {
            return Err(Error::UnknownEntry(name.to_string()));
        }
        let d = Diagram::trivial(Kind::BottomTangle, n);
        let text = format!("# {name}: {n} unknotted, unlinked bands\n") + &codec::serialize(&d)?;
        return parse_entry(name, &text);
    }
    let text = match catalog_dir() {
        Some(dir) => {
            if name.contains('/') || name.contains('\\') {
                return Err(Error::UnknownEntry(name.to_string()));
            }
            match std::fs::read_to_string(dir.join(format!("{name}.btt"))) {
                Ok(t) => t,
                Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                    return Err(Error::UnknownEntry(name.to_string()))
                }
                Err(e) => return Err(e.into()),
            }
        }
        None => embedded::FILES
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, t)| t.to_string())
            .ok_or_else(|| Error::UnknownEntry(name.to_string()))?,
    };
    parse_entry(name, &text)
}

/// Names of the file-backed entries, sorted.
pub fn list() -> Result<Vec<String>> {
    let mut names = match catalog_dir() {
        Some(dir) => {
            let mut v = Vec::new();
            for e in std::fs::read_dir(dir)? {
                let p = e?.path();
                if p.extension().is_some_and(|x| x == "btt") {
                    if let Some(stem) = p.file_stem().and_then(|s| s.to_str()) {
                        v.push(stem.to_string());
                    }
                }
            }
            v
        }
        None => embedded::FILES.iter().map(|(n, _)| n.to_string()).collect(),
    };
    names.sort();
    Ok(names)
}

/// Parses keys like `mu(2112)` into name and digit list.
fn split_key(key: &str) -> Option<(&str, Vec<usize>)> {
    let (name, rest) = key.split_once('(')?;
    let digits = rest.strip_suffix(')')?;
    let idx = digits.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<Vec<_>>>()?;
    Some((name, idx))
}

impl CatalogEntry {
    pub fn diagram(&self) -> Option<&Diagram> {
        match &self.item {
            Item::Diagram(d) => Some(d),
            Item::Template(_) => None,
        }
    }

    pub fn template(&self) -> Option<&StrandTemplate> {
        match &self.item {
            Item::Template(t) => Some(t),
            Item::Diagram(_) => None,
        }
    }

    /// Diagram the tangle-level annotations refer to: the entry itself, or
    /// for a template, the trivial tangle with the template stacked below.
    fn subject(&self) -> Result<Diagram> {
        match &self.item {
            Item::Diagram(d) => Ok(d.clone()),
            Item::Template(t) => stack(&Diagram::trivial(Kind::BottomTangle, t.n()), t),
        }
    }

    fn evaluate(&self, key: &str, subject: &Diagram, milnor: &mut Option<MilnorEngine>) -> Result<String> {
        if key == "crossings" {
            return Ok(match &self.item {
                Item::Diagram(d) => d.crossing_count(),
                Item::Template(t) => t.crossing_count(),
            }
            .to_string());
        }
        if key == "a2" {
            return Ok(alexander_a2(subject)?.to_string());
        }
        if key == "conway" {
            return Ok(conway_skein(subject)?.to_string());
        }
        let (name, idx) = split_key(key).ok_or_else(|| Error::Shape(format!("unknown annotation key `{key}`")))?;
        Ok(match (name, idx.as_slice()) {
            ("lk", &[i, j]) => codec::linking_number(subject, i, j)?,
            ("a2", &[i]) => crate::polyengine::a2_i(subject, i)?,
            ("a2", &[i, j]) => crate::polyengine::a2_ij(subject, i, j)?,
            ("mu", seq) => {
                if milnor.is_none() {
                    *milnor = Some(MilnorEngine::new(subject, crate::magnus::DEFAULT_DEGREE)?);
                }
                milnor.as_ref().expect("engine just built").mu(seq)?
            }
            ("phi", &[i, j]) => InvariantProfile::of(subject)?.phi(i, j),
            _ => return Err(Error::Shape(format!("unknown annotation key `{key}`"))),
        }
        .to_string())
    }

    /// Recomputes every annotation.
    pub fn check(&self) -> Result<Vec<AnnotationCheck>> {
        let subject = self.subject()?;
        let mut milnor = None;
        self.annotations
            .iter()
            .map(|a| {
                let actual = self.evaluate(&a.key, &subject, &mut milnor)?;
                Ok(AnnotationCheck { key: a.key.clone(), expected: a.value.clone(), ok: actual == a.value, actual })
            })
            .collect()
    }
}

/// Random bottom tangle on `n` components: the trivial tangle with a random
/// product of pure braid generators stacked below, and with probability
/// `knot_rate` a trefoil or figure-eight tied into one component.
pub fn random_tangle(rng: &mut impl Rng, n: usize, generators: usize, knot_rate: f64) -> Result<Diagram> {
    let mut word = Vec::new();
    if n > 0 {
        for _ in 0..generators {
            let p = rng.gen_range(1..2 * n);
            let q = rng.gen_range(p + 1..=2 * n);
            let e = if rng.gen_bool(0.5) { 1 } else { -1 };
            word.extend(braid::power(&braid::pure_generator(p, q), e));
        }
    }
    let mut d = Diagram::trivial(Kind::BottomTangle, n);
    if !word.is_empty() {
        d = stack(&d, &braid::template(2 * n, &word)?)?;
    }
    if n > 0 && rng.gen_bool(knot_rate) {
        let k = rng.gen_range(1..=n);
        let knot = if rng.gen_bool(0.5) {
            braid::closure(2, &[1, 1, 1])?
        } else {
            braid::closure(3, &[1, -2, 1, -2])?
        };
        d = connected_sum_insert(&d, k, &knot)?;
    }
    Ok(d)
}
