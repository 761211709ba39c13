//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input, 2 cap or budget exhausted,
//! 3 internal invariant violation.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::alternating::alternating_divisions_by_type;
use crate::analysis::{analyze_with, certificate, conjecture_scan, Comparison};
use crate::catalog::{catalog, standard_catalog};
use crate::classes::{divisions, divisions_json};
use crate::divgraph::{division_graph_with_lattice, verify_lagarias_with_lattice};
use crate::error::{AnalysisError, GroupError, LatticeError};
use crate::group::Group;
use crate::io::{load_group, load_group_file};
use crate::lattice::all_subgroups;
use crate::Limits;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "divgraph", version, about = "Divisions and division graphs of finite groups")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Catalog descriptor, e.g. symmetric:4 or product:cyclic:2:cyclic:4.
    #[arg(long, global = true)]
    pub catalog: Vec<String>,
    /// JSON group file.
    #[arg(long, global = true)]
    pub input: Vec<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 5040, value_parser = clap::value_parser!(u64).range(1..))]
    pub order_cap: u64,
    #[arg(long, global = true, default_value_t = 384, value_parser = clap::value_parser!(u64).range(1..))]
    pub lattice_cap: u64,
    /// Node budget for canonical labeling.
    #[arg(long, global = true, default_value_t = 200_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Restrict output to the division of this element (by name).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub division: Option<String>,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a group input and report its order.
    Validate { sources: Vec<String> },
    /// Subgroup lattice.
    Subgroups { sources: Vec<String> },
    /// Divisions of the group.
    Divisions { sources: Vec<String> },
    /// Division graph.
    DivisionGraph { sources: Vec<String> },
    /// Properties recovered from the division graph, checked against direct computation.
    Analyze { sources: Vec<String> },
    /// Compare the division graphs of two groups.
    Compare { sources: Vec<String> },
    /// Check that divisions coincide with orbit-length data on every coset space.
    VerifyLagarias { sources: Vec<String> },
    /// Number of alternating-group divisions per even cycle type of n.
    AnDivisions { n: usize },
    /// Look for non-isomorphic catalog groups with equal certificates.
    ConjectureScan {
        #[arg(long, default_value_t = 15)]
        max_order: usize,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        let code = if matches!(e, GroupError::OrderCapExceeded { .. }) { EXIT_CAP } else { EXIT_INVALID };
        Failure { code, message: e.to_string() }
    }
}

impl From<LatticeError> for Failure {
    fn from(e: LatticeError) -> Self {
        Failure { code: EXIT_CAP, message: e.to_string() }
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        let code = match e {
            AnalysisError::MalformedGraph(_) => EXIT_INTERNAL,
            AnalysisError::CanonicalizationBudgetExceeded { .. } | AnalysisError::Lattice(_) => EXIT_CAP,
        };
        Failure { code, message: e.to_string() }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INVALID, message: message.into() }
}

impl RunConfig {
    pub fn limits(&self) -> Limits {
        Limits {
            order_cap: self.order_cap as usize,
            lattice_order_cap: self.lattice_cap as usize,
            search_budget: self.budget as usize,
            ..Limits::default()
        }
    }

    fn groups(&self, positional: &[String]) -> Result<Vec<Group>, Failure> {
        let limits = self.limits();
        let mut out = Vec::new();
        for s in positional {
            out.push(load_group(s, &limits)?);
        }
        for s in &self.catalog {
            out.push(crate::catalog::catalog_str(s, &limits)?);
        }
        for p in &self.input {
            out.push(load_group_file(p, &limits)?);
        }
        Ok(out)
    }

    fn one_group(&self, positional: &[String]) -> Result<Group, Failure> {
        let mut gs = self.groups(positional)?;
        match gs.len() {
            1 => Ok(gs.pop().unwrap()),
            k => Err(invalid(format!("expected exactly one group input, got {k}"))),
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ValidateOut<'a> {
    group: &'a str,
    order: usize,
    valid: bool,
}

#[derive(Serialize)]
struct DivisionsOut {
    group: String,
    order: usize,
    count: usize,
    divisions: Vec<crate::classes::DivisionJson>,
}

#[derive(Serialize)]
struct CompareOut {
    groups: [String; 2],
    fingerprints: [String; 2],
    result: Comparison,
}

#[derive(Serialize)]
struct AnTypeOut {
    cycle_type: Vec<usize>,
    divisions: usize,
}

/// Executes one command, returning the text to emit and the exit code.
pub fn execute(cfg: &RunConfig) -> Result<(String, i32), Failure> {
    let limits = cfg.limits();
    match &cfg.command {
        Command::Validate { sources } => {
            let gs = cfg.groups(sources)?;
            if gs.is_empty() {
                return Err(invalid("no group input"));
            }
            let text: String = gs
                .iter()
                .map(|g| json(&ValidateOut { group: g.name(), order: g.order(), valid: true }))
                .collect();
            Ok((text, EXIT_OK))
        }
        Command::Subgroups { sources } => {
            let g = cfg.one_group(sources)?;
            let l = all_subgroups(&g, &limits)?;
            let text = match cfg.format {
                Format::Json => json(&l.to_json(&g)),
                Format::Dot => l.to_dot(g.name()),
            };
            Ok((text, EXIT_OK))
        }
        Command::Divisions { sources } => {
            let g = cfg.one_group(sources)?;
            let mut divs = divisions(&g);
            if let Some(name) = &cfg.division {
                let x = element(&g, name)?;
                divs.retain(|d| d.members.contains(&x));
            }
            let out = DivisionsOut {
                group: g.name().to_string(),
                order: g.order(),
                count: divs.len(),
                divisions: divisions_json(&g, &divs),
            };
            Ok((json(&out), EXIT_OK))
        }
        Command::DivisionGraph { sources } => {
            let g = cfg.one_group(sources)?;
            let l = all_subgroups(&g, &limits)?;
            let mut dg = division_graph_with_lattice(&g, &l);
            for c in &dg.components {
                c.check_invariants(l.covers()).map_err(|m| Failure { code: EXIT_INTERNAL, message: m })?;
            }
            if let Some(name) = &cfg.division {
                let x = element(&g, name)?;
                let keep: Vec<bool> = dg.divisions.iter().map(|d| d.members.contains(&x)).collect();
                let mut it = keep.iter();
                dg.components.retain(|_| *it.next().unwrap());
                dg.divisions.retain(|d| d.members.contains(&x));
            }
            let text = match cfg.format {
                Format::Json => {
                    let mut s = dg.to_json();
                    s.push('\n');
                    s
                }
                Format::Dot => dg.to_dot(),
            };
            Ok((text, EXIT_OK))
        }
        Command::Analyze { sources } => {
            let g = cfg.one_group(sources)?;
            let l = all_subgroups(&g, &limits)?;
            let dg = division_graph_with_lattice(&g, &l);
            let report = analyze_with(&g, &l, &dg)?;
            let code = if report.all_agree() { EXIT_OK } else { EXIT_INTERNAL };
            Ok((json(&report), code))
        }
        Command::Compare { sources } => {
            let gs = cfg.groups(sources)?;
            if gs.len() != 2 {
                return Err(invalid(format!("compare needs two group inputs, got {}", gs.len())));
            }
            let cert = |g: &Group| -> Result<_, Failure> {
                let l = all_subgroups(g, &limits)?;
                Ok(certificate(&division_graph_with_lattice(g, &l), limits.search_budget)?)
            };
            let (a, b) = (cert(&gs[0])?, cert(&gs[1])?);
            let out = CompareOut {
                groups: [gs[0].name().to_string(), gs[1].name().to_string()],
                fingerprints: [a.fingerprint(), b.fingerprint()],
                result: if a == b { Comparison::Same } else { Comparison::Different },
            };
            Ok((json(&out), EXIT_OK))
        }
        Command::VerifyLagarias { sources } => {
            let g = cfg.one_group(sources)?;
            let l = all_subgroups(&g, &limits)?;
            let report = verify_lagarias_with_lattice(&g, &l);
            let code = if report.passed() { EXIT_OK } else { EXIT_INTERNAL };
            Ok((json(&report), code))
        }
        Command::AnDivisions { n } => {
            if *n > limits.alternating_cap {
                return Err(Failure {
                    code: EXIT_CAP,
                    message: format!("n = {n} exceeds the alternating cap {}", limits.alternating_cap),
                });
            }
            let map = alternating_divisions_by_type(*n, limits.alternating_cap)
                .map_err(|e| Failure { code: EXIT_INTERNAL, message: e.to_string() })?;
            let rows: Vec<AnTypeOut> =
                map.into_iter().map(|(cycle_type, divisions)| AnTypeOut { cycle_type, divisions }).collect();
            Ok((json(&rows), EXIT_OK))
        }
        Command::ConjectureScan { max_order } => {
            let mut groups = Vec::new();
            for d in standard_catalog(*max_order) {
                groups.push(catalog(&d, &limits)?);
            }
            let report = conjecture_scan(&groups, &limits)?;
            let code = if report.collisions.is_empty() && report.invariance_failures.is_empty() {
                EXIT_OK
            } else {
                EXIT_INTERNAL
            };
            Ok((json(&report), code))
        }
    }
}

fn element(g: &Group, name: &str) -> Result<usize, Failure> {
    g.find_element(name).ok_or_else(|| invalid(format!("no element named {name:?} in {}", g.name())))
}

/// Parses `args` (program name first), runs, and writes to the given streams.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INVALID,
            };
            let _ = if code == EXIT_OK { write!(stdout, "{e}") } else { write!(stderr, "{e}") };
            return code;
        }
    };
    match execute(&cfg) {
        Ok((text, code)) => {
            let written = match &cfg.out {
                Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
                None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(m) = written {
                let _ = writeln!(stderr, "error: {m}");
                return EXIT_INVALID;
            }
            if code != EXIT_OK {
                let _ = writeln!(stderr, "error: verification failed; see report");
            }
            code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("divgraph").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn q8_divisions() {
        let (code, out, _) = run_str(&["divisions", "--catalog", "quaternion8", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["count"], 5);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["validate", "--catalog", "nonsense"]).0, EXIT_INVALID);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_INVALID);
        assert_eq!(run_str(&["validate", "--catalog", "symmetric:8"]).0, EXIT_CAP);
        assert_eq!(run_str(&["subgroups", "--catalog", "symmetric:6"]).0, EXIT_CAP);
        assert_eq!(run_str(&["an-divisions", "30"]).0, EXIT_CAP);
        assert_eq!(run_str(&["--order-cap", "0", "validate", "--catalog", "cyclic:2"]).0, EXIT_INVALID);
    }

    #[test]
    fn division_filter() {
        let (code, out, _) = run_str(&["division-graph", "--catalog", "cyclic:4", "--division", "3"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["components"].as_array().unwrap().len(), 1);
        assert_eq!(run_str(&["division-graph", "--catalog", "cyclic:4", "--division", "x"]).0, EXIT_INVALID);
    }
}
