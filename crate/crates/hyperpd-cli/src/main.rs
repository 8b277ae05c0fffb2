//! `hyperpd` — projective dimension of square-free monomial ideals from the
//! command line.
//!
//! Inputs are ideal text files or hypergraph JSON (auto-detected); see the
//! `hyperpd` library crate for both formats. Exit codes: 0 success,
//! 1 usage or input error, 2 a verification sweep found a mismatch,
//! 3 an oracle budget was exceeded.

mod input;
mod report;
mod sweeps;

use std::process::exit;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use hyperpd::classify::{classify_shape, pd_auto, ClassifyError, Shape};
use hyperpd::formulas::reg_open_string;
use hyperpd::oracle::{betti_table_with, FieldChar, OracleError, OracleOptions};

use input::Input;
use report::print_shape;
use sweeps::{conjecture_search, verify_family, ConjectureArgs, Family, SweepBounds};

const EXIT_USAGE: i32 = 1;
const EXIT_MISMATCH: i32 = 2;
const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(
    name = "hyperpd",
    about = "Projective dimension of square-free monomial ideals via dual hypergraphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Projective dimension of an ideal or hypergraph.
    Pd {
        /// Ideal text or hypergraph JSON; `-` reads standard input.
        input: String,
        /// Skip the formulas and ask the oracle directly.
        #[arg(long)]
        oracle: bool,
        /// Print the reduction and classification trace.
        #[arg(long)]
        explain: bool,
        /// Largest variable count the oracle fallback may use.
        #[arg(long)]
        budget: Option<usize>,
        /// Emit a JSON object instead of text lines.
        #[arg(long)]
        json: bool,
    },
    /// Full multigraded Betti table of an ideal or hypergraph.
    Betti {
        /// Ideal text or hypergraph JSON; `-` reads standard input.
        input: String,
        /// Coefficient field characteristic: 0 or a prime.
        #[arg(long, default_value = "0")]
        field: FieldChar,
        /// Largest variable count the scan may use.
        #[arg(long)]
        budget: Option<usize>,
        /// Emit a JSON object instead of TSV.
        #[arg(long)]
        json: bool,
    },
    /// Report which recognized shape the dual hypergraph has, if any.
    Classify {
        /// Ideal text or hypergraph JSON; `-` reads standard input.
        input: String,
        /// Emit the shape as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Sweep a family, comparing closed formulas against the oracle.
    ///
    /// Exits 0 when every instance matches and 2 otherwise.
    Verify {
        /// Which family to sweep.
        #[arg(value_enum)]
        family: FamilyArg,
        /// Largest μ to include (default depends on the family).
        #[arg(long)]
        max_mu: Option<usize>,
        /// Restrict `lemmas` to one case.
        #[arg(long, value_enum)]
        case: Option<LemmaFamilyArg>,
        /// Coefficient field characteristic for the oracle runs.
        #[arg(long, default_value = "0")]
        field: FieldChar,
        /// Emit the outcome as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate open cycles with several extra edges and compare the oracle
    /// against the plain cycle formula. Reports evidence; never asserts.
    ConjectureSearch {
        /// Largest cycle length to enumerate.
        #[arg(long, default_value_t = 6)]
        max_mu: usize,
        /// Largest number of extra edges per cycle (at least 2).
        #[arg(long, default_value_t = 2)]
        max_edges: usize,
        /// Coefficient field characteristic for the oracle runs.
        #[arg(long, default_value = "0")]
        field: FieldChar,
        /// Largest variable count an instance may use.
        #[arg(long)]
        budget: Option<usize>,
        /// Write each mismatching instance to this directory as JSON.
        #[arg(long)]
        dump: Option<std::path::PathBuf>,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Strings,
    Cycles,
    StringEdge,
    CycleEdge,
    Lemmas,
    Splitting,
    Reductions,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LemmaFamilyArg {
    EdgeAtOpenEnd,
    EdgeSpansEnds,
    EdgeSpansEndsReduced,
    OuterResiduesOne,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            exit(code);
        }
    };
    let started = Instant::now();
    let outcome = run(cli.command);
    eprintln!("elapsed: {:.2?}", started.elapsed());
    match outcome {
        Ok(code) => exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            exit(exit_code_for(&err));
        }
    }
}

/// Budget problems get their own exit code so sweep scripts can tell
/// "too big" apart from "wrong input".
fn exit_code_for(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        if let Some(oracle) = cause.downcast_ref::<OracleError>() {
            if matches!(
                oracle,
                OracleError::TooManyVariables { .. } | OracleError::TooManyGenerators { .. }
            ) {
                return EXIT_BUDGET;
            }
        }
        if let Some(classify) = cause.downcast_ref::<ClassifyError>() {
            if matches!(classify, ClassifyError::BudgetExceeded { .. }) {
                return EXIT_BUDGET;
            }
        }
    }
    EXIT_USAGE
}

fn run(command: Command) -> anyhow::Result<i32> {
    match command {
        Command::Pd {
            input,
            oracle,
            explain,
            budget,
            json,
        } => cmd_pd(&input, oracle, explain, budget, json),
        Command::Betti {
            input,
            field,
            budget,
            json,
        } => cmd_betti(&input, field, budget, json),
        Command::Classify { input, json } => cmd_classify(&input, json),
        Command::Verify {
            family,
            max_mu,
            case,
            field,
            json,
        } => {
            let family = match family {
                FamilyArg::Strings => Family::Strings,
                FamilyArg::Cycles => Family::Cycles,
                FamilyArg::StringEdge => Family::StringEdge,
                FamilyArg::CycleEdge => Family::CycleEdge,
                FamilyArg::Lemmas => Family::Lemmas { only: case },
                FamilyArg::Splitting => Family::Splitting,
                FamilyArg::Reductions => Family::Reductions,
            };
            let outcome = verify_family(family, SweepBounds { max_mu, field })?;
            outcome.print(json)?;
            Ok(if outcome.mismatches.is_empty() {
                0
            } else {
                EXIT_MISMATCH
            })
        }
        Command::ConjectureSearch {
            max_mu,
            max_edges,
            field,
            budget,
            dump,
            json,
        } => {
            let report = conjecture_search(&ConjectureArgs {
                max_mu,
                max_edges,
                field,
                budget,
                dump,
            })?;
            report.print(json)?;
            // Evidence either way is a successful run.
            Ok(0)
        }
    }
}

fn cmd_pd(
    input: &str,
    force_oracle: bool,
    explain: bool,
    budget: Option<usize>,
    json: bool,
) -> anyhow::Result<i32> {
    let loaded = Input::load(input)?;
    let hypergraph = loaded.hypergraph()?;

    if explain {
        println!("input: {}", loaded.describe());
        println!("dual: {hypergraph}");
        let reduced = hypergraph.remove_union_edges();
        let removed = report::removed_labels(&hypergraph, &reduced);
        if removed.is_empty() {
            println!("union edges removed: none");
        } else {
            println!("union edges removed: {}", removed.join(", "));
        }
        let comps = reduced.connected_components();
        println!("components: {}", comps.len());
        for (idx, comp) in comps.iter().enumerate() {
            let shape = classify_shape(&comp.hypergraph);
            println!(
                "component {}: vertices {:?}, shape {}",
                idx + 1,
                comp.vertices,
                report::shape_summary(&shape)
            );
        }
    }

    let (pd, method, reg) = if force_oracle {
        let options = OracleOptions {
            variable_limit: budget.unwrap_or(OracleOptions::default().variable_limit),
            ..OracleOptions::default()
        };
        let ideal = hypergraph.to_ideal_unchecked();
        let table = betti_table_with(&ideal, FieldChar::Zero, &options)?;
        (table.pd(), "oracle".to_string(), Some(table.reg()))
    } else {
        let outcome = pd_auto(&hypergraph, budget)?;
        let reg = formula_reg(&hypergraph);
        (outcome.pd, outcome.method, reg)
    };

    if json {
        let mut object = serde_json::json!({ "pd": pd, "method": method });
        if let Some(reg) = reg {
            object["reg"] = serde_json::json!(reg);
        }
        println!("{object}");
    } else {
        println!("pd {pd}");
        println!("method {method}");
        if let Some(reg) = reg {
            println!("reg {reg}");
        }
    }
    Ok(0)
}

/// Exact regularity when every component is formula-covered (open strings
/// are the only shape with a pinned regularity; disjoint unions add).
fn formula_reg(h: &hyperpd::hypergraph::Hypergraph) -> Option<u32> {
    let reduced = h.remove_union_edges();
    let mut total = 0u32;
    for comp in reduced.connected_components() {
        match classify_shape(&comp.hypergraph) {
            Shape::OpenString { mu } => total += reg_open_string(mu).ok()?,
            Shape::DisjointOpenStrings { lengths } => {
                for n in lengths {
                    total += reg_open_string(n).ok()?;
                }
            }
            _ => return None,
        }
    }
    Some(total)
}

fn cmd_betti(
    input: &str,
    field: FieldChar,
    budget: Option<usize>,
    json: bool,
) -> anyhow::Result<i32> {
    let loaded = Input::load(input)?;
    let ideal = loaded.ideal()?;
    let options = OracleOptions {
        variable_limit: budget.unwrap_or(OracleOptions::default().variable_limit),
        ..OracleOptions::default()
    };
    let table = betti_table_with(&ideal, field, &options)?;
    if json {
        let mut object = table.to_json();
        object["pd"] = serde_json::json!(table.pd());
        object["reg"] = serde_json::json!(table.reg());
        println!("{object}");
    } else {
        print!("{}", table.to_tsv());
        println!("pd\t{}", table.pd());
        println!("reg\t{}", table.reg());
    }
    Ok(0)
}

fn cmd_classify(input: &str, json: bool) -> anyhow::Result<i32> {
    let loaded = Input::load(input)?;
    let hypergraph = loaded.hypergraph()?;
    let shape = classify_shape(&hypergraph);
    print_shape(&hypergraph, &shape, json)?;
    Ok(0)
}
