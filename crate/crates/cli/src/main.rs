//! Command-line front end: build and export graphs, analyze one graph,
//! test isomorphism, run the census and the verification suites.
//!
//! Exit codes: 0 all pass, 1 any failure, 2 usage error, 3 unknown verdicts.

use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use dihedrants::analysis::{analyze, classify_dihedrant, CayleyVerdict, DEFAULT_BUDGET};
use dihedrants::census::{census, CensusKind};
use dihedrants::graphs::{are_isomorphic, Graph};
use dihedrants::groups::FcGroup;
use dihedrants::parse::GraphSpec;
use dihedrants::suites::{run_suite, SUITES};
use dihedrants::Error;

const AFTER_HELP: &str = "\
Graph specs:
  cl:<m>                          cross ladder CL_{4m}
  mcl:<m>                         multi-cross ladder MCL_{4m,2}
  gp:<n>:<t>                      generalized Petersen graph P(n,t)
  cay:<group>:<n>:<S>             Cayley graph, e.g. cay:dihedral:6:b,b.a,b.a^3
  bicay:<group>:<n>:<R>|<L>|<S>   bi-Cayley graph, e.g. bicay:dihedral:10:b,b.a|b,b.a^4|1
  family:<k>:<params>             family:1:n,l  family:2:n,l  family:3:m  family:4:l
Groups: dihedral, mclgroup, cyclic, cyclic2. Elements are words such as b.a^3, c.a, a^-1, 1.

Graph files use the edge-list format `p <n> <m>` followed by `e <u> <v>` lines.

Exit codes: 0 all pass, 1 any failure, 2 usage error, 3 unknown verdicts present.";

#[derive(Parser)]
#[command(name = "dihedrants", version, about = "Cayley and bi-Cayley graphs over dihedral groups", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and write it as an edge list (or JSON with --json).
    Build {
        spec: String,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Automorphism group order, transitivity and Cayley verdict as JSON.
    Analyze {
        /// A graph spec or the path of an edge-list file.
        graph: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Decide isomorphism of two graphs; prints the map when one exists.
    Iso { a: String, b: String },
    /// Exhaustive census of trivalent dihedrants or bi-dihedrants.
    Census {
        /// `dihedrant` or `bidihedrant`.
        kind: String,
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Also write the classification table as TSV to this file.
        #[arg(long)]
        tsv: Option<PathBuf>,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        /// One of thm1.1, thm1.2, thm1.3, lemma4.1, lemma5.1, lemma6.1, lemma6.2, prop2.3, prop2.4.
        suite: String,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidParameter(_)
            | Error::InvalidElement(_)
            | Error::InvalidConnectionSet(_)
            | Error::InvalidTriple(_)
            | Error::NotAUnit { .. } => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn load(arg: &str) -> Result<(String, Graph, Option<GraphSpec>), Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        let file = fs::File::open(path).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?;
        let g = Graph::read_edge_list(BufReader::new(file))?;
        return Ok((arg.to_string(), g, None));
    }
    let spec: GraphSpec = arg.parse()?;
    let g = spec.build()?;
    Ok((spec.to_string(), g, Some(spec)))
}

fn print_json(value: &impl serde::Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Runtime(e.to_string()))?;
    write_out(None, &format!("{text}\n"))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Runtime(e.to_string())),
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Build { spec, output, json } => {
            let spec: GraphSpec = spec.parse()?;
            let g = spec.build()?;
            let text = if json {
                let mut v = g.to_json();
                v["spec"] = json!(spec.to_string());
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&v)
                        .map_err(|e| Failure::Runtime(e.to_string()))?
                )
            } else {
                format!("c {spec}\n{}", g.to_edge_list_string())
            };
            write_out(output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Analyze { graph, budget } => {
            let (id, g, spec) = load(&graph)?;
            let report = match spec {
                Some(GraphSpec::Cayley(set))
                    if matches!(set.group, FcGroup::Dihedral(_))
                        && set.elements().len() == 3
                        && g.is_connected() =>
                {
                    classify_dihedrant(&set)?
                }
                _ => analyze(&id, &g, budget)?,
            };
            print_json(&report)?;
            Ok(if matches!(report.cayley, CayleyVerdict::Unknown { .. }) {
                3
            } else {
                0
            })
        }
        Command::Iso { a, b } => {
            let (ida, ga, _) = load(&a)?;
            let (idb, gb, _) = load(&b)?;
            let iso = are_isomorphic(&ga, &gb)?;
            if let Some(w) = &iso {
                if !w.validate(&ga, &gb) {
                    return Err(Failure::Runtime(
                        "isomorphism found by search does not validate".into(),
                    ));
                }
            }
            print_json(&json!({
                "a": ida,
                "b": idb,
                "isomorphic": iso.is_some(),
                "map": iso.map(|w| w.map),
            }))?;
            Ok(0)
        }
        Command::Census {
            kind,
            n_min,
            n_max,
            budget,
            tsv,
        } => {
            let kind: CensusKind = kind.parse()?;
            if n_min > n_max {
                return Err(Failure::Usage(format!(
                    "--n-min {n_min} exceeds --n-max {n_max}"
                )));
            }
            let c = census(kind, n_min, n_max, budget)?;
            if let Some(path) = tsv {
                write_out(Some(&path), &c.to_tsv())?;
            }
            let report = c.report();
            print_json(&report)?;
            Ok(report.exit_code() as u8)
        }
        Command::Verify { suite } => {
            if !SUITES.contains(&suite.as_str()) {
                return Err(Failure::Usage(format!(
                    "unknown suite `{suite}`; expected one of {}",
                    SUITES.join(", ")
                )));
            }
            let report = run_suite(&suite)?;
            print_json(&report)?;
            Ok(report.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
