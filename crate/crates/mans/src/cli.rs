//! Command-line surface. Parsing lives here (not in `main.rs`) so the
//! commands can be driven from tests without spawning a process.

use std::fmt::Write;

use clap::{Parser, Subcommand, ValueEnum};
use mans_core::{
    apery_set, build_tree_with, is_mans, is_mans_recursive, mans3_apery, mans3_frobenius,
    mans3_genus, mans3_is_pseudo_symmetric, mans3_is_symmetric, mans3_params,
    mans3_pseudo_frobenius, residues_monotone, Generators, Mans3Params, MansViolation, Profile,
    TreeOptions,
};
use serde_json::{json, Value};

use crate::error::Result;
use crate::export::{export_dot, export_json};
use crate::verify::{run_suite, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "mans",
    version,
    about = "Numerical semigroups with monotone Apery sets"
)]
pub struct Cli {
    /// Emit a JSON envelope instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Suppress standard output; only the exit code is reported
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TreeFormat {
    Dot,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of the semigroup generated by GENS
    Analyze {
        #[arg(required = true)]
        gens: Vec<u64>,
        /// Also report (m, a, b, t) when e = 3 and the semigroup is MANS
        #[arg(long)]
        params: bool,
    },
    /// Apery set with respect to an element of the semigroup
    Apery {
        #[arg(required = true)]
        gens: Vec<u64>,
        #[arg(long = "mod", value_name = "N")]
        modulus: u64,
    },
    /// Direct and recursive monotone-Apery checks
    MansCheck {
        #[arg(required = true)]
        gens: Vec<u64>,
    },
    /// Parameters and closed-form invariants for embedding dimension 3
    Params {
        #[arg(required_unless_present = "expand", conflicts_with = "expand")]
        gens: Vec<u64>,
        /// Start from (m, a, b, t) instead of generators
        #[arg(long, num_args = 4, value_names = ["M", "A", "B", "T"])]
        expand: Option<Vec<u64>>,
    },
    /// Tree of MANS-semigroups with multiplicity M and ratio R
    Tree {
        m: u64,
        r: u64,
        #[arg(long, value_enum, default_value_t = TreeFormat::Json)]
        format: TreeFormat,
        #[arg(long)]
        max_depth: Option<usize>,
    },
    /// Compare closed forms and the tree against brute force
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        max_m: Option<u64>,
        #[arg(long)]
        max_a: Option<u64>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Apery { .. } => "apery",
            Command::MansCheck { .. } => "mans-check",
            Command::Params { .. } => "params",
            Command::Tree { .. } => "tree",
            Command::Verify { .. } => "verify",
        }
    }

    fn inputs(&self) -> Value {
        match self {
            Command::Analyze { gens, params } => json!({ "gens": gens, "params": params }),
            Command::Apery { gens, modulus } => json!({ "gens": gens, "mod": modulus }),
            Command::MansCheck { gens } => json!({ "gens": gens }),
            Command::Params { gens, expand } => json!({ "gens": gens, "expand": expand }),
            Command::Tree {
                m,
                r,
                format,
                max_depth,
            } => json!({
                "m": m,
                "r": r,
                "format": match format { TreeFormat::Dot => "dot", TreeFormat::Json => "json" },
                "max_depth": max_depth,
            }),
            Command::Verify {
                suite,
                max_m,
                max_a,
            } => json!({ "suite": suite.as_str(), "max_m": max_m, "max_a": max_a }),
        }
    }
}

/// What a command produced, before deciding how to print it.
struct Produced {
    result: Value,
    text: String,
    /// Printed verbatim instead of text or envelope (DOT output).
    raw: Option<String>,
    /// Forces the JSON envelope even without `--json`.
    json_only: bool,
    exit: u8,
}

impl Produced {
    fn new(result: Value, text: String) -> Self {
        Produced {
            result,
            text,
            raw: None,
            json_only: false,
            exit: 0,
        }
    }
}

/// Captured output and exit code of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

pub fn run(cli: &Cli) -> Outcome {
    let name = cli.command.name();
    let inputs = cli.command.inputs();
    let mut out = Outcome {
        stdout: String::new(),
        stderr: String::new(),
        code: 0,
    };
    match execute(&cli.command) {
        Ok(produced) => {
            out.code = produced.exit;
            out.stdout = if let Some(raw) = produced.raw {
                raw
            } else if cli.json || produced.json_only {
                envelope_line(json!({
                    "command": name,
                    "inputs": inputs,
                    "status": "ok",
                    "result": produced.result,
                }))
            } else {
                produced.text
            };
        }
        Err(err) => {
            out.code = 2;
            if cli.json {
                out.stdout = envelope_line(json!({
                    "command": name,
                    "inputs": inputs,
                    "status": "error",
                    "error_detail": err.to_string(),
                }));
            } else {
                out.stderr = format!("error: {err}\n");
            }
        }
    }
    if cli.quiet {
        out.stdout.clear();
    }
    out
}

fn envelope_line(value: Value) -> String {
    // serde_json's default map is ordered, so keys come out sorted
    let mut line = value.to_string();
    line.push('\n');
    line
}

fn execute(command: &Command) -> Result<Produced> {
    match command {
        Command::Analyze { gens, params } => analyze(gens, *params),
        Command::Apery { gens, modulus } => apery(gens, *modulus),
        Command::MansCheck { gens } => mans_check(gens),
        Command::Params { gens, expand } => match expand {
            Some(v) => params_report(&Mans3Params::new(v[0], v[1], v[2], v[3])?),
            None => params_report(&mans3_params(&Generators::new(gens)?)?),
        },
        Command::Tree {
            m,
            r,
            format,
            max_depth,
        } => tree(*m, *r, *format, *max_depth),
        Command::Verify {
            suite,
            max_m,
            max_a,
        } => verify(*suite, *max_m, *max_a),
    }
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn params_value(p: &Mans3Params) -> Value {
    json!({
        "m": p.m(),
        "a": p.a(),
        "b": p.b(),
        "t": p.t(),
        "q": p.q(),
        "r": p.r(),
        "symmetric": mans3_is_symmetric(p),
        "pseudo_symmetric": mans3_is_pseudo_symmetric(p),
    })
}

fn analyze(gens: &[u64], with_params: bool) -> Result<Produced> {
    let s = Generators::new(gens)?;
    let profile = Profile::compute(&s)?;
    let irreducibility = profile.irreducibility.map(|i| i.as_str());
    let type_count = (!s.is_naturals()).then_some(profile.type_count);
    let mut result = json!({
        "msg": s.as_slice(),
        "m": s.multiplicity(),
        "r": s.ratio(),
        "M": s.max_generator(),
        "e": s.embedding_dimension(),
        "F": profile.frobenius,
        "g": profile.genus,
        "PF": profile.pf,
        "type": type_count,
        "is_mans": profile.is_mans,
        "irreducibility": irreducibility,
    });

    let mut text = String::new();
    let _ = writeln!(text, "msg: {s}");
    let _ = writeln!(text, "multiplicity: {}", s.multiplicity());
    if let Some(r) = s.ratio() {
        let _ = writeln!(text, "ratio: {r}");
    }
    let _ = writeln!(text, "max generator: {}", s.max_generator());
    let _ = writeln!(text, "embedding dimension: {}", s.embedding_dimension());
    let _ = writeln!(text, "frobenius: {}", profile.frobenius);
    let _ = writeln!(text, "genus: {}", profile.genus);
    let _ = writeln!(text, "pseudo-frobenius: [{}]", join(&profile.pf));
    if let Some(t) = type_count {
        let _ = writeln!(text, "type: {t}");
    }
    let _ = writeln!(text, "mans: {}", profile.is_mans);
    if let Some(i) = irreducibility {
        let _ = writeln!(text, "irreducibility: {i}");
    }

    if with_params {
        let params = if s.embedding_dimension() == 3 && profile.is_mans {
            Some(mans3_params(&s)?)
        } else {
            None
        };
        result["params"] = params.as_ref().map_or(Value::Null, params_value);
        match params {
            Some(p) => {
                let _ = writeln!(
                    text,
                    "params: m={} a={} b={} t={} q={} r={}",
                    p.m(),
                    p.a(),
                    p.b(),
                    p.t(),
                    p.q(),
                    p.r()
                );
                let _ = writeln!(text, "symmetric: {}", mans3_is_symmetric(&p));
                let _ = writeln!(text, "pseudo-symmetric: {}", mans3_is_pseudo_symmetric(&p));
            }
            None => text.push_str("params: none (needs a MANS semigroup with e = 3)\n"),
        }
    }
    Ok(Produced::new(result, text))
}

fn apery(gens: &[u64], modulus: u64) -> Result<Produced> {
    let s = Generators::new(gens)?;
    let ap = apery_set(&s, modulus)?;
    let monotone = ap.is_strictly_increasing();
    let text = format!(
        "Ap({s}, {modulus}) = [{}]\nmonotone: {monotone}\n",
        join(ap.values())
    );
    Ok(Produced::new(
        json!({ "modulus": modulus, "apery": ap.values(), "monotone": monotone }),
        text,
    ))
}

fn mans_check(gens: &[u64]) -> Result<Produced> {
    let s = Generators::new(gens)?;
    let report = is_mans(&s)?;
    let recursive = is_mans_recursive(&s)?;
    let residues = residues_monotone(&s);
    let violation = match report.violation() {
        None => Value::Null,
        Some(MansViolation::RatioForm) => json!("ratio_form"),
        Some(MansViolation::Descent(_)) => json!("descent"),
    };
    let mut text = format!("{s}: mans = {}\n", report.is_mans);
    match report.violation() {
        Some(MansViolation::RatioForm) => text.push_str("ratio is not 1 modulo the multiplicity\n"),
        Some(MansViolation::Descent(i)) => {
            let _ = writeln!(text, "Apery set descends at w({i}) >= w({})", i + 1);
        }
        None => {}
    }
    let _ = writeln!(text, "recursive check: {recursive}");
    let _ = writeln!(text, "generator residues increasing: {residues}");
    Ok(Produced::new(
        json!({
            "is_mans": report.is_mans,
            "failing_index": report.failing_index,
            "ratio_coefficient": report.ratio_coefficient,
            "violation": violation,
            "recursive": recursive,
            "residues_monotone": residues,
        }),
        text,
    ))
}

fn params_report(p: &Mans3Params) -> Result<Produced> {
    let s = mans_core::mans3_from_params(p);
    let ap = mans3_apery(p)?;
    let frob = mans3_frobenius(p)?;
    let genus = mans3_genus(p)?;
    let pf = mans3_pseudo_frobenius(p)?;
    let mut result = params_value(p);
    result["gens"] = json!(s.as_slice());
    result["apery"] = json!(ap.values());
    result["frobenius"] = json!(frob);
    result["genus"] = json!(genus);
    result["pf"] = json!(pf);

    let mut text = String::new();
    let _ = writeln!(text, "semigroup: {s}");
    let _ = writeln!(
        text,
        "m={} a={} b={} t={} q={} r={}",
        p.m(),
        p.a(),
        p.b(),
        p.t(),
        p.q(),
        p.r()
    );
    let _ = writeln!(text, "apery: [{}]", join(ap.values()));
    let _ = writeln!(text, "frobenius: {frob}");
    let _ = writeln!(text, "genus: {genus}");
    let _ = writeln!(text, "pseudo-frobenius: [{}]", join(&pf));
    let _ = writeln!(text, "symmetric: {}", mans3_is_symmetric(p));
    let _ = writeln!(text, "pseudo-symmetric: {}", mans3_is_pseudo_symmetric(p));
    Ok(Produced::new(result, text))
}

fn tree(m: u64, r: u64, format: TreeFormat, max_depth: Option<usize>) -> Result<Produced> {
    let tree = build_tree_with(m, r, &TreeOptions { max_depth })?;
    match format {
        TreeFormat::Dot => {
            let mut produced = Produced::new(Value::Null, String::new());
            produced.raw = Some(export_dot(&tree));
            Ok(produced)
        }
        TreeFormat::Json => {
            let document: Value = serde_json::from_str(&export_json(&tree)?)?;
            let mut produced = Produced::new(document, String::new());
            produced.json_only = true;
            Ok(produced)
        }
    }
}

fn verify(suite: Suite, max_m: Option<u64>, max_a: Option<u64>) -> Result<Produced> {
    let (default_m, default_a) = suite.default_bounds();
    let report = run_suite(
        suite,
        max_m.unwrap_or(default_m),
        max_a.unwrap_or(default_a),
    )?;
    let mut text = format!(
        "suite {}: {} checked, {} passed, {} failed\n",
        report.suite, report.checked, report.passed, report.failed
    );
    if let Some(c) = &report.first_counterexample {
        let _ = writeln!(text, "first counterexample: {c}");
    }
    let mut produced = Produced::new(serde_json::to_value(&report)?, text);
    produced.exit = if report.all_passed() { 0 } else { 1 };
    Ok(produced)
}
