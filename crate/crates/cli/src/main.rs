//! `metacyclic`: validate presentations, analyze commutation semigroups,
//! cross-check them against the brute-force oracles and run surveys.
//!
//! Every invocation writes at most one report to stdout and signals its
//! outcome through the exit code alone.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use metacyclic::oracle::{
    differential_check, DifferentialReport, Generators, TableStatus, DEFAULT_TABLE_CAP,
};
use metacyclic::survey::{
    flagged_moduli, scan, verify_minimal_prime_index, verify_prime_m, verify_prime_n,
    verify_prime_square_m, ScanRecord, TheoremReport,
};
use metacyclic::{analyze, analyze_side, BaseSet, Error, Presentation, Side, SigmaAnalysis};

const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Exit {
    Ok = 0,
    Usage = 1,
    InvalidPresentation = 2,
    InvalidBase = 3,
    Mismatch = 4,
    CapExceeded = 5,
}

impl From<Exit> for ExitCode {
    fn from(e: Exit) -> Self {
        ExitCode::from(e as u8)
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "metacyclic",
    version,
    about = "Commutation semigroups of metacyclic groups G(m, n, k)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Right,
    Left,
    Both,
}

impl SideArg {
    fn sides(self) -> &'static [Side] {
        match self {
            SideArg::Right => &[Side::Right],
            SideArg::Left => &[Side::Left],
            SideArg::Both => &Side::BOTH,
        }
    }
}

#[derive(clap::Args, Debug)]
struct GroupArgs {
    #[arg(long)]
    m: u64,
    #[arg(long)]
    k: u64,
}

#[derive(clap::Args, Debug)]
struct Target {
    #[command(flatten)]
    group: GroupArgs,
    /// Commutation side; defaults to right.
    #[arg(long, value_enum, conflicts_with = "base")]
    side: Option<SideArg>,
    /// Explicit base residues, comma-separated.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    base: Option<Vec<u64>>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that (m, k) presents a non-abelian group with trivial centre.
    Validate(GroupArgs),
    /// Decompose P(G), Λ(G) or Σ_G(S) into orbits and x-families.
    Analyze(Target),
    /// Compare the engine with the pair and table closures.
    Oracle {
        #[command(flatten)]
        target: Target,
        /// Largest group order for which the table closure runs.
        #[arg(long, default_value_t = DEFAULT_TABLE_CAP)]
        oracle_cap: u64,
    },
    /// Analyze both sides of every valid (m, k) with m in [from, to].
    Scan {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check a completeness theorem over a range.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Check {
    /// Prime m, for primes up to --to.
    PrimeM {
        #[arg(long, default_value_t = 97)]
        to: u64,
    },
    /// m = p^2, for primes p up to --to.
    PrimeSquareM {
        #[arg(long, default_value_t = 11)]
        to: u64,
    },
    /// Prime n, for m up to --to.
    PrimeN {
        #[arg(long, default_value_t = 200)]
        to: u64,
    },
    /// Minimal prime index s divides n, for m up to --to.
    #[command(name = "lemma-6-4")]
    MinimalPrimeIndex {
        #[arg(long, default_value_t = 200)]
        to: u64,
    },
}

/// One machine-readable result document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub payload: Value,
}

struct Outcome {
    report: Report,
    table: String,
    exit: Exit,
}

struct Failure {
    exit: Exit,
    message: String,
}

impl Failure {
    fn new(exit: Exit, message: impl Into<String>) -> Self {
        Failure {
            exit,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let exit = match e {
            Error::ResidueOutOfRange { .. }
            | Error::BaseMissingZero
            | Error::BaseWithoutUnit { .. }
            | Error::ModulusMismatch { .. } => Exit::InvalidBase,
            Error::InvalidModulus(_)
            | Error::KOutOfRange { .. }
            | Error::NotCoprimeK { .. }
            | Error::NonTrivialCentre { .. }
            | Error::Abelian { .. } => Exit::InvalidPresentation,
            Error::CapExceeded { .. } => Exit::CapExceeded,
            _ => Exit::Usage,
        };
        Failure::new(exit, e.to_string())
    }
}

fn reason(e: &Error) -> &'static str {
    match e {
        Error::InvalidModulus(_) => "InvalidModulus",
        Error::KOutOfRange { .. } => "KOutOfRange",
        Error::NotCoprimeK { .. } => "NotCoprimeK",
        Error::NonTrivialCentre { .. } => "NonTrivialCentre",
        Error::Abelian { .. } => "Abelian",
        _ => "Other",
    }
}

fn report(command: &str, parameters: Value, payload: Value) -> Report {
    let parameters = match parameters {
        Value::Object(map) => map.into_iter().filter(|(_, v)| !v.is_null()).collect(),
        _ => BTreeMap::new(),
    };
    Report {
        schema_version: SCHEMA_VERSION.to_string(),
        command: command.to_string(),
        parameters,
        payload,
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn side_label(side: Option<Side>) -> &'static str {
    side.map_or("base", Side::as_str)
}

fn presentation(g: &GroupArgs) -> Result<Presentation, Failure> {
    Ok(Presentation::validate(g.m, g.k)?)
}

/// Each requested side paired with its base, or the explicit base alone.
fn bases(p: &Presentation, t: &Target) -> Result<Vec<(Option<Side>, BaseSet)>, Failure> {
    match &t.base {
        Some(residues) => Ok(vec![(
            None,
            BaseSet::new(p.modulus(), residues.iter().copied())?,
        )]),
        None => Ok(t
            .side
            .unwrap_or(SideArg::Right)
            .sides()
            .iter()
            .map(|&s| (Some(s), metacyclic::sigma::base_for(p, s)))
            .collect()),
    }
}

fn side_name(s: SideArg) -> String {
    s.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn target_parameters(t: &Target) -> Value {
    json!({
        "m": t.group.m,
        "k": t.group.k,
        "side": t.base.is_none().then(|| side_name(t.side.unwrap_or(SideArg::Right))),
        "base": t.base.as_ref().map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b.dedup();
            b
        }),
    })
}

fn cmd_validate(g: &GroupArgs) -> Outcome {
    let parameters = json!({ "m": g.m, "k": g.k });
    match Presentation::validate(g.m, g.k) {
        Ok(p) => Outcome {
            report: report(
                "validate",
                parameters,
                json!({ "valid": true, "m": p.m(), "n": p.n(), "k": p.k() }),
            ),
            table: format!(
                "G({}, {}, {}) is valid, n = {}\n",
                p.m(),
                p.n(),
                p.k(),
                p.n()
            ),
            exit: Exit::Ok,
        },
        Err(e) => {
            eprintln!("invalid presentation: {e}");
            Outcome {
                report: report(
                    "validate",
                    parameters,
                    json!({ "valid": false, "reason": reason(&e), "message": e.to_string() }),
                ),
                table: format!("invalid: {} ({e})\n", reason(&e)),
                exit: Exit::InvalidPresentation,
            }
        }
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn analysis_table(out: &mut String, label: &str, a: &SigmaAnalysis) {
    let pi = a.presentation;
    let _ = writeln!(out, "G({}, {}, {}) {label}", pi.m, pi.n, pi.k);
    let _ = writeln!(out, "  base  {{{}}}", join(a.base.elements()));
    let _ = writeln!(
        out,
        "  S*    {{{}}} ({} elements)",
        join(a.closure.elements()),
        a.closure.len()
    );
    let _ = writeln!(out, "  orbits");
    for o in &a.orbits {
        let kind = if o.basic { "basic" } else { "non-basic" };
        let _ = writeln!(
            out,
            "    {:>6}  {kind:<9}  {{{}}}",
            o.representative,
            join(&o.elements)
        );
    }
    let _ = writeln!(out, "  families");
    for f in &a.families {
        let _ = writeln!(
            out,
            "    x = {:>6}  |Y| = {:>6}  {}  {}",
            f.x,
            f.y_set_size,
            if f.complete {
                "complete  "
            } else {
                "incomplete"
            },
            join(&f.maximal_containers)
        );
    }
    let _ = writeln!(out, "  order {}  complete {}", a.total_order, a.complete);
}

fn cmd_analyze(t: &Target) -> Result<Outcome, Failure> {
    let p = presentation(&t.group)?;
    let mut payload = serde_json::Map::new();
    let mut table = String::new();
    for (side, base) in bases(&p, t)? {
        let a = match side {
            Some(s) => analyze_side(&p, s),
            None => analyze(&p, &base)?,
        };
        analysis_table(&mut table, side_label(side), &a);
        payload.insert(side_label(side).to_string(), to_value(&a));
    }
    Ok(Outcome {
        report: report("analyze", target_parameters(t), Value::Object(payload)),
        table,
        exit: Exit::Ok,
    })
}

fn oracle_line(label: &str, r: &DifferentialReport) -> String {
    let table = match (r.table_status, r.table_order) {
        (TableStatus::Checked, Some(t)) => t.to_string(),
        (TableStatus::CapExceeded, _) => "cap exceeded".to_string(),
        _ => "n/a".to_string(),
    };
    let mut line = format!(
        "{label:<5}  engine {}  pair {}  table {table}  {}",
        r.engine_order,
        r.pair_order,
        if r.agree { "agree" } else { "MISMATCH" }
    );
    if let Some(w) = &r.witness {
        let _ = write!(line, "  witness ({},{})", w.map.x, w.map.y);
    }
    line.push('\n');
    line
}

fn cmd_oracle(t: &Target, cap: u64) -> Result<Outcome, Failure> {
    let p = presentation(&t.group)?;
    let mut payload = serde_json::Map::new();
    let mut table = String::new();
    let mut exit = Exit::Ok;
    for (side, base) in bases(&p, t)? {
        let generators = match side {
            Some(s) => Generators::Side(s),
            None => Generators::Base(base),
        };
        let r = differential_check(&p, &generators, cap)?;
        let label = side_label(side);
        if !r.agree {
            if let Some(w) = &r.witness {
                eprintln!("{label}: oracle mismatch at ({},{})", w.map.x, w.map.y);
            }
            exit = Exit::Mismatch;
        } else if r.table_status == TableStatus::CapExceeded && exit == Exit::Ok {
            eprintln!(
                "{label}: group order {} exceeds the table oracle cap {cap}",
                p.order()
            );
            exit = Exit::CapExceeded;
        }
        table.push_str(&oracle_line(label, &r));
        payload.insert(label.to_string(), to_value(&r));
    }
    let mut parameters = target_parameters(t);
    parameters["oracle_cap"] = json!(cap);
    Ok(Outcome {
        report: report("oracle", parameters, Value::Object(payload)),
        table,
        exit,
    })
}

fn scan_table(records: &[ScanRecord], flagged: &[u64]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>6} {:>6} {:>4} {:<5} {:>9}  non-basic",
        "m", "k", "n", "side", "order"
    );
    for r in records {
        let _ = writeln!(
            out,
            "{:>6} {:>6} {:>4} {:<5} {:>9}  {{{}}}",
            r.m,
            r.k,
            r.n,
            r.side,
            r.order,
            join(&r.non_basic_reps)
        );
    }
    let _ = writeln!(out, "flagged m: {{{}}}", join(flagged));
    out
}

fn cmd_scan(from: u64, to: u64, jobs: usize) -> Result<Outcome, Failure> {
    if from > to {
        return Err(Failure::new(
            Exit::Usage,
            format!("empty range: --from {from} > --to {to}"),
        ));
    }
    let records = scan(from, to, jobs);
    let flagged = flagged_moduli(&records);
    let summary: Vec<u64> = flagged.iter().map(|f| f.m).collect();
    Ok(Outcome {
        table: scan_table(&records, &summary),
        report: report(
            "scan",
            json!({ "from": from, "to": to }),
            json!({ "records": to_value(&records), "flagged": to_value(&flagged), "summary": summary }),
        ),
        exit: Exit::Ok,
    })
}

fn cmd_verify(check: Check) -> Outcome {
    let (r, to): (TheoremReport, u64) = match check {
        Check::PrimeM { to } => (verify_prime_m(to), to),
        Check::PrimeSquareM { to } => (verify_prime_square_m(to), to),
        Check::PrimeN { to } => (verify_prime_n(to), to),
        Check::MinimalPrimeIndex { to } => (verify_minimal_prime_index(to), to),
    };
    let mut table = format!(
        "{}: {} cases, {} violations\n",
        r.check,
        r.cases,
        r.violations.len()
    );
    for v in &r.violations {
        let _ = writeln!(table, "  G({}, k = {}): {}", v.m, v.k, v.detail);
        eprintln!("{}: (m, k) = ({}, {}): {}", r.check, v.m, v.k, v.detail);
    }
    Outcome {
        exit: if r.passed() { Exit::Ok } else { Exit::Mismatch },
        report: report(
            "verify",
            json!({ "check": r.check, "to": to }),
            to_value(&r),
        ),
        table,
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Validate(g) => Ok(cmd_validate(g)),
        Command::Analyze(t) => cmd_analyze(t),
        Command::Oracle { target, oracle_cap } => cmd_oracle(target, *oracle_cap),
        Command::Scan { from, to, jobs } => cmd_scan(*from, *to, *jobs),
        Command::Verify { check } => Ok(cmd_verify(*check)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                Exit::Usage
            } else {
                Exit::Ok
            }
            .into();
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            match cli.format {
                Format::Json => {
                    // a Value object keeps its keys sorted
                    let text = serde_json::to_string_pretty(&to_value(&outcome.report))
                        .expect("report serializes");
                    println!("{text}");
                }
                Format::Table => print!("{}", outcome.table),
            }
            outcome.exit.into()
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.exit.into()
        }
    }
}
