//! Command-line front end. Exit codes: 0 equivalent / solvable / passed,
//! 1 not equivalent / unsolvable / failed, 2 on any error.

use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog;
use crate::classify::profile::{pairs, triples};
use crate::classify::{
    decide_link_profiles, decide_tangle, decide_z2split_profiles, solve_congruence, CongruenceSystem, InvariantProfile,
    Relation, Row, Verdict,
};
use crate::codec::{self, validate, Diagram};
use crate::error::{Error, Result};
use crate::magnus::{DEFAULT_DEGREE, MAX_DEGREE};
use crate::suites::{self, Suite};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "linkpass", version, about = "Casson and Milnor invariants of bottom tangles, and clasp-pass, band-pass, band-# and band-p# classification of their closures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Degree bound of the truncated Magnus expansion (4 to 6).
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE)]
    pub degree: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate a diagram file.
    Validate {
        /// `.btt` file, or `@name` for a catalog entry.
        input: String,
    },
    /// Print a2(i), a2(ij), mu(ij), mu(ijk), mu(jiij) and phi(ij) of a bottom tangle.
    Invariants {
        /// Bottom-tangle `.btt` file, or `@name`.
        input: String,
    },
    /// Decide whether the closures of two bottom tangles are related.
    Decide {
        /// First bottom tangle: a `.btt` file or `@name`.
        a: String,
        /// Second bottom tangle, with the same number of components.
        b: String,
        /// clasp-pass, band-pass, band-sharp or band-psharp.
        #[arg(long)]
        relation: Relation,
        /// Compare the bottom tangles themselves instead of their closures.
        #[arg(long, conflicts_with = "z2split")]
        tangles: bool,
        /// Band-# shortcut for inputs whose linking numbers are all even.
        #[arg(long)]
        z2split: bool,
    },
    /// Run a randomized verification suite: variation, templates, oracle or hierarchy.
    Verify {
        /// variation, templates, oracle or hierarchy.
        suite: Suite,
        /// Seed of the random cases; a seed reproduces its run exactly.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Solve a congruence system given as JSON.
    Solve {
        /// File holding `{"variables": [...], "rows": [{"coefficients": [...], "rhs": r, "modulus": m}]}`;
        /// `variables` is optional and `rows` may be given as a bare array.
        file: String,
    },
    /// Inspect the shipped catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// List entry names.
    List,
    /// Print an entry as a `.btt` file.
    Emit {
        /// Entry name as printed by `catalog list`.
        name: String,
    },
    /// Recompute every annotation of every entry.
    Check,
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        // A closed reader (`| head`) is not worth a diagnostic.
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Error::Invalid(report) = &e {
                for issue in &report.issues {
                    let _ = writeln!(err, "  {:?} at {}: {}", issue.severity, issue.location, issue.message);
                }
            }
            2
        }
    }
}

fn read_input(input: &str) -> Result<Diagram> {
    let text = match input.strip_prefix('@') {
        Some(name) => {
            let entry = catalog::get(name)?;
            return entry
                .diagram()
                .cloned()
                .ok_or_else(|| Error::Shape(format!("catalog entry `{name}` is a template, not a diagram")));
        }
        None => read_file(input)?,
    };
    codec::parse(&text)
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(Path::new(path)).map_err(|source| Error::Read { path: path.to_string(), source })
}

fn profile(input: &str, degree: usize) -> Result<InvariantProfile> {
    if !(4..=MAX_DEGREE).contains(&degree) {
        return Err(Error::Shape(format!("--degree must lie in 4..={MAX_DEGREE}")));
    }
    InvariantProfile::with_degree(&read_input(input)?, degree)
}

fn json(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Validate { input } => {
            let text = match input.strip_prefix('@') {
                Some(name) => catalog::get(name)?.text,
                None => read_file(input)?,
            };
            let d = codec::parse(&text)?;
            let report = validate(&d);
            match cli.format {
                Format::Json => json(out, &report)?,
                Format::Human => {
                    writeln!(out, "{} with {} components and {} crossings: {}", d.kind.keyword(), d.n(), d.crossing_count(), report.summary())?;
                    for issue in &report.issues {
                        writeln!(out, "  {:?} at {}: {}", issue.severity, issue.location, issue.message)?;
                    }
                }
            }
            Ok(if report.ok { 0 } else { 1 })
        }
        Command::Invariants { input } => {
            let p = profile(input, cli.degree)?;
            match cli.format {
                Format::Json => json(out, &p)?,
                Format::Human => print_profile(out, &p)?,
            }
            Ok(0)
        }
        Command::Decide { a, b, relation, tangles, z2split } => {
            let (p, q) = std::thread::scope(|s| {
                let left = s.spawn(|| profile(a, cli.degree));
                let right = profile(b, cli.degree);
                (left.join().expect("profile thread panicked"), right)
            });
            let (p, q) = (p?, q?);
            let verdict = if *tangles {
                decide_tangle(&p, &q, *relation)?
            } else if *z2split {
                if *relation != Relation::BandSharp {
                    return Err(Error::Shape("--z2split applies to --relation band-sharp only".into()));
                }
                decide_z2split_profiles(&p, &q)?
            } else {
                decide_link_profiles(&p, &q, *relation)?
            };
            match cli.format {
                Format::Json => json(out, &verdict)?,
                Format::Human => print_verdict(out, &verdict, *tangles)?,
            }
            Ok(if verdict.equivalent { 0 } else { 1 })
        }
        Command::Verify { suite, seed } => {
            let report = suites::run(*suite, *seed)?;
            match cli.format {
                Format::Json => json(out, &report)?,
                Format::Human => {
                    writeln!(out, "suite {} (seed {})", report.suite, report.seed)?;
                    for c in &report.checks {
                        let mark = if c.passed() { "PASS" } else { "FAIL" };
                        writeln!(out, "{mark} {} ({}/{} cases)", c.name, c.cases - c.failures, c.cases)?;
                        if let Some(f) = &c.first_failure {
                            writeln!(out, "     first failure: {f}")?;
                        }
                    }
                }
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Solve { file } => {
            let system = read_system(&read_file(file)?)?;
            let sol = solve_congruence(&system)?;
            match cli.format {
                Format::Json => json(out, &sol)?,
                Format::Human => {
                    writeln!(out, "{} variables, {} rows", system.variables.len(), system.rows.len())?;
                    writeln!(out, "solvable: {}", if sol.solvable { "yes" } else { "no" })?;
                    if let Some(w) = &sol.witness {
                        writeln!(out, "witness: {}", witness_text(&system.variables, w))?;
                    }
                }
            }
            Ok(if sol.solvable { 0 } else { 1 })
        }
        Command::Catalog { action } => catalog_command(action, cli.format, out),
    }
}

fn read_system(text: &str) -> Result<CongruenceSystem> {
    #[derive(serde::Deserialize)]
    #[serde(untagged)]
    enum Input {
        Full(CongruenceSystem),
        Rows(Vec<Row>),
    }
    let system = match serde_json::from_str::<Input>(text)? {
        Input::Full(s) => s,
        Input::Rows(rows) => CongruenceSystem { variables: Vec::new(), rows },
    };
    system.normalized()
}

fn catalog_command(action: &CatalogAction, format: Format, out: &mut dyn Write) -> Result<i32> {
    match action {
        CatalogAction::List => {
            let names = catalog::list()?;
            match format {
                Format::Json => json(out, &names)?,
                Format::Human => {
                    for name in names {
                        let e = catalog::get(&name)?;
                        writeln!(out, "{name:<20} {}", e.description)?;
                    }
                    writeln!(out, "{:<20} generated on request for 1 <= n <= {}", "trivial_tangle(n)", catalog::MAX_TRIVIAL)?;
                }
            }
            Ok(0)
        }
        CatalogAction::Emit { name } => {
            write!(out, "{}", catalog::get(name)?.text)?;
            Ok(0)
        }
        CatalogAction::Check => {
            let mut all = Vec::new();
            for name in catalog::list()? {
                for c in catalog::get(&name)?.check()? {
                    all.push((name.clone(), c));
                }
            }
            let ok = all.iter().all(|(_, c)| c.ok);
            match format {
                Format::Json => json(out, &all)?,
                Format::Human => {
                    for (name, c) in all.iter().filter(|(_, c)| !c.ok) {
                        writeln!(out, "FAIL {name}: {} expected {} got {}", c.key, c.expected, c.actual)?;
                    }
                    writeln!(out, "{} annotations checked, {}", all.len(), if ok { "all hold" } else { "some fail" })?;
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn print_profile(out: &mut dyn Write, p: &InvariantProfile) -> Result<()> {
    writeln!(out, "components: {}", p.n)?;
    for (i, v) in p.a2_i.iter().enumerate() {
        writeln!(out, "a2({}) = {v}", i + 1)?;
    }
    for (k, (i, j)) in pairs(p.n).enumerate() {
        writeln!(out, "a2({i}{j}) = {}", p.a2_ij[k])?;
    }
    for (k, (i, j)) in pairs(p.n).enumerate() {
        writeln!(out, "mu({i}{j}) = {}", p.mu_ij[k])?;
    }
    for (k, (i, j, l)) in triples(p.n).enumerate() {
        writeln!(out, "mu({i}{j}{l}) = {}", p.mu_ijk[k])?;
    }
    for (k, (i, j)) in pairs(p.n).enumerate() {
        writeln!(out, "mu({j}{i}{i}{j}) = {}", p.mu_jiij[k])?;
    }
    for (k, (i, j)) in pairs(p.n).enumerate() {
        writeln!(out, "phi({i}{j}) = {} (mod 8)", p.phi_ij[k])?;
    }
    Ok(())
}

fn witness_text(vars: &[String], w: &[i64]) -> String {
    if w.is_empty() {
        return "(no unknowns)".into();
    }
    vars.iter().zip(w).map(|(n, v)| format!("{n}={v}")).collect::<Vec<_>>().join(" ")
}

fn print_verdict(out: &mut dyn Write, v: &Verdict, tangles: bool) -> Result<()> {
    if tangles {
        writeln!(out, "comparing the bottom tangles themselves")?;
    } else {
        writeln!(out, "inputs are bottom-tangle representatives; the verdict concerns their closures")?;
    }
    writeln!(out, "relation: {}", v.relation)?;
    if !v.preconditions.is_empty() {
        writeln!(out, "checks:")?;
        for c in &v.preconditions {
            writeln!(out, "  [{}] {}", if c.holds { "ok" } else { "FAIL" }, c.description)?;
        }
    }
    if let Some(solvable) = v.solvable {
        writeln!(out, "system: {} unknowns, {} rows, {}", v.variables.len(), v.rows, if solvable { "solvable" } else { "unsolvable" })?;
        if let Some(w) = &v.witness {
            writeln!(out, "witness: {}", witness_text(&v.variables, w))?;
        }
    }
    writeln!(out, "verdict: {}", if v.equivalent { "equivalent" } else { "not equivalent" })?;
    Ok(())
}
