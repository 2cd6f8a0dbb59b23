//! Diagram data model and the `.btt` text format.
//!
//! A diagram is a signed Gauss code: a list of crossings with signs and, for
//! every component, the ordered list of passages through those crossings.
//! Components of a bottom tangle are open and run from `p_{2i-1}` to `p_{2i}`;
//! components of a link are cyclic.
//!
//! ```text
//! btt 1
//! kind link
//! n 2
//! crossings 1:+ 2:+
//! comp 1: O1 U2
//! comp 2: U1 O2
//! ```

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    BottomTangle,
    Link,
}

impl Kind {
    pub fn keyword(self) -> &'static str {
        match self {
            Kind::BottomTangle => "tangle",
            Kind::Link => "link",
        }
    }
}

/// Crossing sign. `Pos` is a right-handed crossing: looking along the
/// over-strand, the under-strand passes from right to left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_value(v: i64) -> Sign {
        if v >= 0 {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn flip(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub id: u32,
    pub sign: Sign,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Passage {
    pub crossing: u32,
    pub role: Role,
}

impl Passage {
    pub fn over(crossing: u32) -> Self {
        Passage { crossing, role: Role::Over }
    }

    pub fn under(crossing: u32) -> Self {
        Passage { crossing, role: Role::Under }
    }
}

impl fmt::Display for Passage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.role {
            Role::Over => 'O',
            Role::Under => 'U',
        };
        write!(f, "{c}{}", self.crossing)
    }
}

/// Signed Gauss code of a bottom tangle or a link.
///
/// Fields are public so that malformed diagrams can be represented and
/// reported on by [`validate`]; every engine entry point validates first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    pub kind: Kind,
    pub crossings: Vec<Crossing>,
    /// `components[i]` is component `i + 1` in traversal order.
    pub components: Vec<Vec<Passage>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Issue {
    pub severity: Severity,
    pub message: String,
    pub location: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    fn from_issues(issues: Vec<Issue>) -> Self {
        let ok = !issues.iter().any(|i| i.severity == Severity::Error);
        ValidationReport { ok, issues }
    }

    pub fn errors(&self) -> impl Iterator<Item = &Issue> {
        self.issues.iter().filter(|i| i.severity == Severity::Error)
    }

    pub fn summary(&self) -> String {
        let msgs: Vec<String> = self
            .errors()
            .map(|i| format!("{} ({})", i.message, i.location))
            .collect();
        if msgs.is_empty() {
            "no errors".to_string()
        } else {
            msgs.join("; ")
        }
    }

    pub fn into_result(self) -> Result<()> {
        if self.ok {
            Ok(())
        } else {
            Err(Error::Invalid(self))
        }
    }
}

/// Pairing checks shared by diagrams and strand templates. `label` names a
/// sequence in issue locations ("comp" or "strand").
pub(crate) fn pairing_issues(
    crossings: &[Crossing],
    seqs: &[Vec<Passage>],
    label: &str,
) -> Vec<Issue> {
    let mut issues = Vec::new();
    let mut declared: HashMap<u32, usize> = HashMap::new();
    for c in crossings {
        *declared.entry(c.id).or_default() += 1;
    }
    for (&id, &count) in &declared {
        if count > 1 {
            issues.push(Issue {
                severity: Severity::Error,
                message: format!("crossing {id} declared {count} times"),
                location: format!("crossing {id}"),
            });
        }
    }

    let mut overs: HashMap<u32, usize> = HashMap::new();
    let mut unders: HashMap<u32, usize> = HashMap::new();
    for (k, seq) in seqs.iter().enumerate() {
        for (pos, p) in seq.iter().enumerate() {
            if !declared.contains_key(&p.crossing) {
                issues.push(Issue {
                    severity: Severity::Error,
                    message: format!("crossing {} has no sign", p.crossing),
                    location: format!("{label} {}, position {}", k + 1, pos + 1),
                });
            }
            match p.role {
                Role::Over => *overs.entry(p.crossing).or_default() += 1,
                Role::Under => *unders.entry(p.crossing).or_default() += 1,
            }
        }
    }

    let mut ids: Vec<u32> = declared.keys().copied().collect();
    ids.extend(overs.keys().copied());
    ids.extend(unders.keys().copied());
    ids.sort_unstable();
    ids.dedup();
    for id in ids {
        let o = overs.get(&id).copied().unwrap_or(0);
        let u = unders.get(&id).copied().unwrap_or(0);
        if o != 1 || u != 1 {
            issues.push(Issue {
                severity: Severity::Error,
                message: format!(
                    "crossing {id} must be passed once Over and once Under (found {o} Over, {u} Under)"
                ),
                location: format!("crossing {id}"),
            });
        }
    }

    // Adjacent Over/Under of one crossing on one sequence is a kink; legal,
    // but worth reporting.
    for (k, seq) in seqs.iter().enumerate() {
        for w in seq.windows(2) {
            if w[0].crossing == w[1].crossing {
                issues.push(Issue {
                    severity: Severity::Warning,
                    message: format!("crossing {} is a kink", w[0].crossing),
                    location: format!("{label} {}", k + 1),
                });
            }
        }
    }
    issues
}

/// Checks every structural invariant of a diagram. Never fails; problems are
/// reported as issues.
pub fn validate(d: &Diagram) -> ValidationReport {
    let mut issues = Vec::new();
    if d.components.is_empty() {
        issues.push(Issue {
            severity: Severity::Error,
            message: "a diagram needs at least one component".into(),
            location: "header".into(),
        });
    }
    issues.extend(pairing_issues(&d.crossings, &d.components, "comp"));
    ValidationReport::from_issues(issues)
}

impl Diagram {
    pub fn new(kind: Kind, crossings: Vec<Crossing>, components: Vec<Vec<Passage>>) -> Result<Self> {
        let d = Diagram { kind, crossings, components };
        validate(&d).into_result()?;
        Ok(d)
    }

    /// Crossing-free diagram with `n` components.
    pub fn trivial(kind: Kind, n: usize) -> Self {
        Diagram {
            kind,
            crossings: Vec::new(),
            components: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn sign_map(&self) -> HashMap<u32, Sign> {
        self.crossings.iter().map(|c| (c.id, c.sign)).collect()
    }

    /// For each crossing id, the component (0-based) carrying its Over and
    /// its Under passage.
    pub fn crossing_components(&self) -> HashMap<u32, (usize, usize)> {
        let mut over = HashMap::new();
        let mut under = HashMap::new();
        for (k, comp) in self.components.iter().enumerate() {
            for p in comp {
                match p.role {
                    Role::Over => over.insert(p.crossing, k),
                    Role::Under => under.insert(p.crossing, k),
                };
            }
        }
        over.into_iter()
            .filter_map(|(id, o)| under.get(&id).map(|&u| (id, (o, u))))
            .collect()
    }

    pub fn max_crossing_id(&self) -> u32 {
        self.crossings.iter().map(|c| c.id).max().unwrap_or(0)
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            Err(Error::IndexOutOfRange { index: i, n: self.n() })
        } else {
            Ok(())
        }
    }

    pub fn is_valid(&self) -> bool {
        validate(self).ok
    }
}

/// Sum of signs of crossings whose two passages both lie on component `i`
/// (1-based).
pub fn self_writhe(d: &Diagram, i: usize) -> Result<i64> {
    d.check_index(i)?;
    validate(d).into_result()?;
    let signs = d.sign_map();
    Ok(d.crossing_components()
        .into_iter()
        .filter(|&(_, (o, u))| o == i - 1 && u == i - 1)
        .map(|(id, _)| signs[&id].value())
        .sum())
}

/// Linking number of components `i` and `j` (1-based).
///
/// For a bottom tangle this is the signed count of crossings where `i` passes
/// over `j`; for a link it is half the signed count of all crossings between
/// the two components.
pub fn linking_number(d: &Diagram, i: usize, j: usize) -> Result<i64> {
    d.check_index(i)?;
    d.check_index(j)?;
    if i == j {
        return Err(Error::EqualIndices);
    }
    validate(d).into_result()?;
    let signs = d.sign_map();
    let cc = d.crossing_components();
    let (a, b) = (i - 1, j - 1);
    match d.kind {
        Kind::BottomTangle => Ok(cc
            .iter()
            .filter(|(_, &(o, u))| o == a && u == b)
            .map(|(id, _)| signs[id].value())
            .sum()),
        Kind::Link => {
            let sum: i64 = cc
                .iter()
                .filter(|(_, &(o, u))| (o == a && u == b) || (o == b && u == a))
                .map(|(id, _)| signs[id].value())
                .sum();
            if sum % 2 != 0 {
                Err(Error::OddLinkingSum { i, j, sum })
            } else {
                Ok(sum / 2)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

/// Raw content of a `.btt` file before it is turned into a diagram or a
/// template.
pub(crate) struct Document {
    pub kind: String,
    pub count: usize,
    pub crossings: Vec<Crossing>,
    pub seqs: Vec<Vec<Passage>>,
    pub seq_lines: Vec<usize>,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

/// Lines with comments stripped, paired with their 1-based line number.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        if line.trim().is_empty() {
            None
        } else {
            Some((k + 1, line))
        }
    })
}

/// Column (1-based) of the first occurrence of `tok` within `line`.
fn column_of(line: &str, tok: &str) -> usize {
    line.find(tok).map(|p| p + 1).unwrap_or(1)
}

/// Parses the common layout: `btt 1`, `kind <k>`, `<count_key> <m>`,
/// `crossings ...`, then `<seq_key> <k>: tokens` lines.
pub(crate) fn parse_document(text: &str, count_key: &str, seq_key: &str) -> Result<Document> {
    let mut lines = content_lines(text);
    let mut header = |expect: &str| -> Result<(usize, &str, Vec<&str>)> {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| syntax(0, 0, format!("unexpected end of input, expected `{expect}`")))?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.first() != Some(&expect) {
            return Err(syntax(ln, column_of(line, toks[0]), format!("expected `{expect}`")));
        }
        Ok((ln, line, toks[1..].to_vec()))
    };

    let (ln, line, rest) = header("btt")?;
    if rest != ["1"] {
        return Err(syntax(ln, column_of(line, "btt") + 4, "unsupported format version"));
    }
    let (ln, line, rest) = header("kind")?;
    if rest.len() != 1 {
        return Err(syntax(ln, column_of(line, "kind"), "expected `kind <tangle|link|template>`"));
    }
    let kind = rest[0].to_string();
    let (ln, line, rest) = header(count_key)?;
    let count: usize = match rest.as_slice() {
        [v] => v
            .parse()
            .map_err(|_| syntax(ln, column_of(line, v), format!("`{v}` is not a count")))?,
        _ => return Err(syntax(ln, 1, format!("expected `{count_key} <integer>`"))),
    };
    if count == 0 {
        return Err(syntax(ln, column_of(line, count_key), "count must be positive"));
    }

    let (ln, line, rest) = header("crossings")?;
    let mut crossings = Vec::new();
    let mut declared = HashMap::new();
    for tok in rest {
        let col = column_of(line, tok);
        let (id, sign) = tok
            .split_once(':')
            .ok_or_else(|| syntax(ln, col, format!("crossing `{tok}` must be `<id>:<+|->`")))?;
        let id: u32 = id
            .parse()
            .ok()
            .filter(|&v| v > 0)
            .ok_or_else(|| syntax(ln, col, format!("`{id}` is not a positive crossing id")))?;
        let sign = match sign {
            "+" => Sign::Pos,
            "-" => Sign::Neg,
            _ => return Err(syntax(ln, col, format!("sign `{sign}` must be + or -"))),
        };
        if declared.insert(id, ()).is_some() {
            return Err(Error::DuplicateCrossing(id));
        }
        crossings.push(Crossing { id, sign });
    }

    let mut seqs = vec![Vec::new(); count];
    let mut seq_lines = vec![0; count];
    let mut seen = vec![false; count];
    for (ln, line) in lines {
        let (head, body) = line
            .split_once(':')
            .ok_or_else(|| syntax(ln, 1, format!("expected `{seq_key} <i>: ...`")))?;
        let head_toks: Vec<&str> = head.split_whitespace().collect();
        let idx: usize = match head_toks.as_slice() {
            [k, v] if *k == seq_key => v
                .parse()
                .map_err(|_| syntax(ln, column_of(line, v), format!("`{v}` is not an index")))?,
            _ => return Err(syntax(ln, 1, format!("expected `{seq_key} <i>: ...`"))),
        };
        if idx == 0 || idx > count {
            return Err(syntax(ln, column_of(line, head_toks[1]), format!("{seq_key} index {idx} out of range")));
        }
        if seen[idx - 1] {
            return Err(syntax(ln, 1, format!("{seq_key} {idx} listed twice")));
        }
        seen[idx - 1] = true;
        seq_lines[idx - 1] = ln;
        let offset = head.len() + 1;
        for tok in body.split_whitespace() {
            let col = offset + column_of(body, tok);
            let (role, id) = match tok.split_at(1) {
                ("O", id) => (Role::Over, id),
                ("U", id) => (Role::Under, id),
                _ => return Err(syntax(ln, col, format!("token `{tok}` must be O<id> or U<id>"))),
            };
            let id: u32 = id
                .parse()
                .map_err(|_| syntax(ln, col, format!("`{id}` is not a crossing id")))?;
            if !declared.contains_key(&id) {
                return Err(Error::UnknownCrossing { line: ln, id });
            }
            seqs[idx - 1].push(Passage { crossing: id, role });
        }
    }
    Ok(Document { kind, count, crossings, seqs, seq_lines })
}

pub(crate) fn write_document(
    out: &mut String,
    kind: &str,
    count_key: &str,
    crossings: &[Crossing],
    seq_key: &str,
    seqs: &[Vec<Passage>],
) {
    let _ = writeln!(out, "btt 1");
    let _ = writeln!(out, "kind {kind}");
    let _ = writeln!(out, "{count_key} {}", seqs.len());
    out.push_str("crossings");
    for c in crossings {
        let s = match c.sign {
            Sign::Pos => '+',
            Sign::Neg => '-',
        };
        let _ = write!(out, " {}:{s}", c.id);
    }
    out.push('\n');
    for (k, seq) in seqs.iter().enumerate() {
        if seq.is_empty() {
            continue;
        }
        let _ = write!(out, "{seq_key} {}:", k + 1);
        for p in seq {
            let _ = write!(out, " {p}");
        }
        out.push('\n');
    }
}

/// Parses a `.btt` diagram (`kind tangle` or `kind link`).
pub fn parse(text: &str) -> Result<Diagram> {
    let doc = parse_document(text, "n", "comp")?;
    let kind = match doc.kind.as_str() {
        "tangle" => Kind::BottomTangle,
        "link" => Kind::Link,
        other => {
            return Err(syntax(2, 6, format!("kind `{other}` is not a diagram kind")));
        }
    };
    debug_assert_eq!(doc.count, doc.seqs.len());
    let d = Diagram { kind, crossings: doc.crossings, components: doc.seqs };
    let report = validate(&d);
    if let Some(issue) = report.errors().next() {
        // Point at the first line of the offending component when known.
        let line = doc.seq_lines.iter().copied().find(|&l| l > 0).unwrap_or(4);
        return Err(syntax(line, 1, format!("{} ({})", issue.message, issue.location)));
    }
    Ok(d)
}

/// Canonical text form. Components with no passages are omitted, so the
/// crossing-free one-component tangle is four lines long.
pub fn serialize(d: &Diagram) -> Result<String> {
    validate(d).into_result()?;
    let mut out = String::new();
    write_document(&mut out, d.kind.keyword(), "n", &d.crossings, "comp", &d.components);
    Ok(out)
}
