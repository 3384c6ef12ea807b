//! Command-line front end: parses an arrangement document, dispatches to the
//! library, and prints one structured JSON report per invocation.
//!
//! Subcommands mirror the library modules: `classify`, `graph`,
//! `presentation`, `alexander` (optionally twisted by a representation file
//! and cross-checked against the Fox-calculus gcd oracle), `norm-ball`,
//! `bns`, `cohomology`, `holonomy`, `loci`, `formality`, and `all`.  Output
//! is a single JSON document on standard out — compact by default,
//! pretty-printed with `--human` — and byte-identical for identical input
//! and seed.
//!
//! Exit codes: 0 success; 1 input error; 2 internal-consistency failure (a
//! computed invariant disagreed with its independent cross-check); 3 work
//! cap exceeded (the report still contains the partial results).

mod repfile;
mod report;

use std::io::Read;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use linarr_core::arrangement::Arrangement;
use linarr_core::{Error, Result};
use serde_json::{json, Value};

/// Default seed for randomized checks, fixed so reports are reproducible.
const DEFAULT_SEED: u64 = 17711;

#[derive(Parser)]
#[command(
    name = "linarr",
    version,
    about = "Topological invariants of the boundary manifold of a complex projective line arrangement"
)]
struct Cli {
    /// Input document path; `-` reads standard input.
    #[arg(long, global = true, default_value = "-")]
    input: String,

    /// Pretty-print the JSON report.
    #[arg(long, global = true)]
    human: bool,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Combinatorial class (pencil / near-pencil / general) and asphericity.
    Classify,
    /// Weighted graph underlying the boundary manifold.
    Graph,
    /// Finite presentation of the fundamental group of the boundary manifold.
    Presentation,
    /// Multivariable Alexander polynomial in closed form.
    Alexander {
        /// Twist by the representation in this JSON file.
        #[arg(long, value_name = "REP-FILE")]
        twisted: Option<String>,

        /// Cross-check the closed form against the Fox-calculus gcd oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Vertices of the Newton polytope defining the Alexander norm.
    NormBall,
    /// Component count of the BNS invariant with the secondary-arrangement data.
    Bns,
    /// Cohomology of the boundary manifold: Betti numbers, 3-form, duality.
    Cohomology,
    /// Graded ranks of the holonomy Lie algebras of complement and boundary.
    Holonomy {
        /// Largest degree to compute.
        #[arg(long, value_name = "D")]
        max_degree: usize,
    },
    /// Characteristic-variety subtori with randomized rank checks, and R¹₁.
    Loci {
        /// Number of sample points per subtorus.
        #[arg(long, value_name = "N", default_value_t = 3)]
        samples: usize,
    },
    /// Formality verdict from the tangent-cone comparison.
    Formality,
    /// Every section in one report.
    All,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0u8,
                _ => 1u8,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

/// Exit code for a library error: input problems are 1, broken internal
/// invariants are 2, resource caps are 3.
fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse(_)
        | Error::InvalidArrangement(_)
        | Error::VarMismatch(..)
        | Error::ZeroEvaluation(_)
        | Error::InvalidRepresentation(_)
        | Error::NotARepresentation { .. }
        | Error::ZeroPolynomial
        | Error::ZeroVector => 1,
        Error::InexactDivision | Error::Internal(_) => 2,
        Error::CapExceeded(_) => 3,
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let text = read_input(&cli.input)?;
    let arr = Arrangement::parse(&text)?;
    let (name, outcome) = match &cli.command {
        Command::Classify => ("classify", report::Outcome::plain(report::classify(&arr))),
        Command::Graph => ("graph", report::Outcome::plain(report::graph(&arr)?)),
        Command::Presentation => (
            "presentation",
            report::Outcome::plain(report::presentation(&arr)),
        ),
        Command::Alexander { twisted, oracle } => {
            let rep = match twisted {
                None => None,
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::Parse(format!("reading {path}: {e}")))?;
                    Some(repfile::parse(&text, &arr)?)
                }
            };
            ("alexander", report::alexander(&arr, *oracle, rep.as_ref())?)
        }
        Command::NormBall => ("norm-ball", report::Outcome::plain(report::norm_ball(&arr)?)),
        Command::Bns => ("bns", report::Outcome::plain(report::bns(&arr)?)),
        Command::Cohomology => ("cohomology", report::cohomology(&arr)),
        Command::Holonomy { max_degree } => ("holonomy", report::holonomy(&arr, *max_degree)),
        Command::Loci { samples } => ("loci", report::loci(&arr, *samples, cli.seed)?),
        Command::Formality => ("formality", report::Outcome::plain(report::formality(&arr)?)),
        Command::All => ("all", report::all(&arr, cli.seed)?),
    };
    let doc = envelope(name, &arr, cli.seed, outcome.value);
    print_document(&doc, cli.human);
    if outcome.consistency_failed {
        eprintln!("internal-consistency failure: a computed invariant disagreed with its cross-check; see the report");
        return Ok(2);
    }
    if outcome.capped {
        eprintln!("work cap exceeded: the report contains partial results");
        return Ok(3);
    }
    Ok(0)
}

/// The fixed outer structure every report shares: schema and tool versions,
/// the command, the seed, and an echo of the normalized input.
fn envelope(command: &str, arr: &Arrangement, seed: u64, report: Value) -> Value {
    let lines: Value = match arr.lines() {
        None => Value::Null,
        Some(ls) => json!(ls
            .iter()
            .map(|l| l.iter().map(|c| c.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>()),
    };
    let points: Vec<Vec<usize>> = arr.multiple_points().map(|p| p.lines.clone()).collect();
    json!({
        "schema_version": 1,
        "tool": {"name": "linarr", "version": env!("CARGO_PKG_VERSION")},
        "command": command,
        "seed": seed,
        "input": {
            "n_lines": arr.num_lines(),
            "n": arr.n(),
            "lines": lines,
            "permutation": arr.permutation(),
            "multiple_points": points,
        },
        "report": report,
    })
}

fn print_document(doc: &Value, human: bool) {
    let rendered = if human {
        serde_json::to_string_pretty(doc)
    } else {
        serde_json::to_string(doc)
    };
    println!("{}", rendered.expect("report serialization cannot fail"));
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("reading standard input: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {path}: {e}")))
    }
}
