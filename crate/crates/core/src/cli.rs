//! Command-line front end. [`run`] is in-process and returns the captured
//! output and exit status, so the binary is a one-line wrapper.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::branching::{enumerate_generating_vectors, PairDescriptor, Signature};
use crate::catalog::{published_parity, reproduce_row, verify_main_theorem, ParityAnnotation, RowReport};
use crate::chartab::{character_table, CharTableReport};
use crate::fundgroup::{h1_surface, surface_group_presentation, AbelianInvariants};
use crate::parity::parity_verdict;
use crate::permgroup::{construct_group, GroupLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "isoprod", version, about = "Checks surfaces isogenous to a product with p_g = q = 0: generating vectors, character tables, H1 and parity")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Deterministic output only (the default behaviour; accepted for scripts).
    #[arg(long, global = true)]
    pub seedless: bool,
    /// Do not count skipped table rows as failures.
    #[arg(long, global = true)]
    pub allow_skip: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full check of the A5 family [2,5,5] / [3,3,3,3].
    VerifyMain,
    /// Reproduce the classification table.
    Table {
        #[arg(long)]
        row: Option<usize>,
    },
    /// Character table of a catalog group (A5, SL(2,5), S4, "Z5^2", ...).
    Chartab { group: String },
    /// First homology of the surface of a pair file.
    H1 {
        #[arg(long)]
        pair: String,
    },
    /// Parity verdict for a pair file.
    Parity {
        #[arg(long)]
        pair: String,
    },
    /// Enumerate generating vectors of a signature.
    Genvec {
        group: String,
        signature: String,
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CliOutput {
    fn ok(stdout: String, pass: bool) -> Self {
        CliOutput { stdout, stderr: String::new(), code: if pass { 0 } else { 1 } }
    }

    fn usage(stderr: String) -> Self {
        CliOutput { stdout: String::new(), stderr, code: 2 }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn load_pair(path: &str) -> Result<PairDescriptor, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    PairDescriptor::parse(&text).map_err(|e| format!("{path}: {e}"))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { CliOutput { stdout: text, stderr: String::new(), code } } else { CliOutput::usage(text) };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(msg) => CliOutput::usage(format!("error: {msg}\n")),
    }
}

fn execute(cli: &Cli) -> Result<CliOutput, String> {
    let fmt = cli.format;
    match &cli.command {
        Command::VerifyMain => {
            let report = verify_main_theorem();
            let out = match fmt {
                Format::Json => json(&report),
                Format::Text => format!("{report}\n"),
            };
            Ok(CliOutput::ok(out, report.passed()))
        }
        Command::Table { row } => {
            let rows: Vec<usize> = match row {
                Some(k) => vec![*k],
                None => (1..=12).collect(),
            };
            let reports = rows.iter().map(|&k| reproduce_row(k)).collect::<Result<Vec<RowReport>, _>>().map_err(|e| e.to_string())?;
            let pass = reports.iter().all(|r| r.all_match() || (cli.allow_skip && r.skipped.is_some()));
            let out = match (fmt, row) {
                (Format::Json, Some(_)) => json(&reports[0]),
                (Format::Json, None) => json(&serde_json::json!({ "rows": reports })),
                (Format::Text, _) => {
                    let mut s: String = reports.iter().map(|r| r.to_string()).collect();
                    let _ = writeln!(s, "{}", if pass { "all rows match" } else { "MISMATCH" });
                    s
                }
            };
            Ok(CliOutput::ok(out, pass))
        }
        Command::Chartab { group } => {
            let label: GroupLabel = group.parse().map_err(|e| format!("{e}"))?;
            let g = construct_group(&label).map_err(|e| e.to_string())?;
            let t = character_table(&g).map_err(|e| e.to_string())?;
            let degrees = t.degrees();
            let degree_line = degrees.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
            #[derive(Serialize)]
            struct Doc {
                degrees: Vec<u64>,
                table: CharTableReport,
            }
            let out = match fmt {
                Format::Json => json(&Doc { degrees, table: t.report() }),
                Format::Text => format!("{}degrees: {degree_line}\n", t.report()),
            };
            Ok(CliOutput::ok(out, true))
        }
        Command::H1 { pair } => {
            let d = load_pair(pair)?;
            let p = d.certify().map_err(|e| format!("{pair}: {e}"))?;
            let sp = surface_group_presentation(&p).map_err(|e| e.to_string())?;
            let h1 = h1_surface(&p);
            #[derive(Serialize)]
            struct Doc {
                group: String,
                schreier_generators: usize,
                relators: usize,
                h1: Option<AbelianInvariants>,
                h1_text: String,
                torsion_order: Option<u64>,
            }
            let doc = Doc {
                group: d.group.to_string(),
                schreier_generators: sp.presentation.generator_count(),
                relators: sp.presentation.relators.len(),
                h1: h1.as_ref().ok().cloned(),
                h1_text: match &h1 {
                    Ok(h) => h.to_string(),
                    Err(e) => e.to_string(),
                },
                torsion_order: h1.as_ref().ok().and_then(|h| u64::try_from(h.torsion_order()).ok()),
            };
            let out = match fmt {
                Format::Json => json(&doc),
                Format::Text => format!(
                    "group: {}\npresentation: {} generators, {} relators\nH1(S, Z) = {}\n{}",
                    doc.group,
                    doc.schreier_generators,
                    doc.relators,
                    doc.h1_text,
                    doc.h1.as_ref().map_or(String::new(), |h| format!("invariant factors: {:?}, order {}\n", h.torsion, h.torsion_order()))
                ),
            };
            Ok(CliOutput::ok(out, h1.is_ok()))
        }
        Command::Parity { pair } => {
            let d = load_pair(pair)?;
            let p = d.certify().map_err(|e| format!("{pair}: {e}"))?;
            let h1 = h1_surface(&p).map_err(|e| e.to_string())?;
            let note = published_parity(&d.group, p.gv1.signature(), p.gv2.signature()).map(|a| match a {
                ParityAnnotation::Even => "even",
                ParityAnnotation::Odd => "odd",
                ParityAnnotation::Unknown => "open (?)",
            });
            let v = parity_verdict(&p, &h1, note);
            let out = match fmt {
                Format::Json => json(&v),
                Format::Text => format!("H1 = {h1}\n{v}\n"),
            };
            Ok(CliOutput::ok(out, true))
        }
        Command::Genvec { group, signature, limit } => {
            let label: GroupLabel = group.parse().map_err(|e| format!("{e}"))?;
            let sig: Signature = signature.parse().map_err(|e| format!("{e}"))?;
            let g = Arc::new(construct_group(&label).map_err(|e| e.to_string())?);
            let found = enumerate_generating_vectors(&g, &sig, *limit);
            let lines: Vec<String> = found.iter().map(|v| v.to_cycle_string()).collect();
            let out = match fmt {
                Format::Json => json(&serde_json::json!({ "group": label.to_string(), "signature": sig.to_string(), "vectors": lines })),
                Format::Text => {
                    let mut s = format!("{} generating vector(s) of {} with signature {}\n", lines.len(), label, sig);
                    for l in &lines {
                        let _ = writeln!(s, "{l}");
                    }
                    s
                }
            };
            Ok(CliOutput::ok(out, !found.is_empty()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_nonzero() {
        let out = run(["isoprod", "frobnicate"]);
        assert_eq!(out.code, 2);
        assert!(!out.stderr.is_empty() && out.stdout.is_empty());
        let out = run(["isoprod", "chartab", "M24"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("M24"));
    }

    #[test]
    fn chartab_degree_line() {
        let out = run(["isoprod", "chartab", "A5"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("degrees: 1,3,3,4,5"));
    }

    #[test]
    fn genvec_json() {
        let out = run(["isoprod", "--format", "json", "genvec", "A5", "[2,5,5]", "--limit", "2"]);
        assert_eq!(out.code, 0);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["vectors"].as_array().unwrap().len(), 2);
    }
}
