use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use cyclic_cutwidth::bounds::bounds_report;
use cyclic_cutwidth::format::{parse_graph, parse_numbering};
use cyclic_cutwidth::isoperimetric::ThetaTable;
use cyclic_cutwidth::metrics::{all_metrics, DEFAULT_ROUTING_BUDGET};
use cyclic_cutwidth::search::{bb_ccw, exhaustive_lcw, local_search_ccw, BbOptions, LEAF_ROUTING_BUDGET};
use cyclic_cutwidth::split::split_report;
use cyclic_cutwidth::verify::verify;
use cyclic_cutwidth::{build_hypercube, gray_numbering, Error, Graph, Host, Numbering};

#[derive(Parser)]
#[command(name = "ccw", version, about = "Cutwidth, wirelength and bandwidth reports for graphs and hypercubes")]
struct Cli {
    /// Output encoding; csv is available for theta, bounds and verify.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// All six metrics of one numbering.
    Metrics(MetricsArgs),
    /// Edge-isoperimetric table θₙ(ℓ) for ℓ = 0..2ⁿ.
    Theta(ThetaArgs),
    /// Facet diameter sweeps of a cyclic layout of Qₙ.
    Split(SplitArgs),
    /// Closed-form values and bounds for n = 2..n-max.
    Bounds(BoundsArgs),
    /// Minimise cyclic or linear cutwidth over numberings.
    Search(SearchArgs),
    /// Run the reproduction battery.
    Verify(VerifyArgs),
}

#[derive(Args, Serialize)]
struct MetricsArgs {
    /// Graph file ("m e" then 1-based "u v" lines).
    #[arg(long, conflicts_with = "n", required_unless_present = "n")]
    graph: Option<PathBuf>,
    /// Use Qₙ instead of a graph file.
    #[arg(long)]
    n: Option<u32>,
    /// Numbering file; defaults to the Gray layout when --n is given.
    #[arg(long)]
    numbering: Option<PathBuf>,
    /// Node budget for the routing search.
    #[arg(long, default_value_t = DEFAULT_ROUTING_BUDGET)]
    budget: u64,
}

#[derive(Args, Serialize)]
struct ThetaArgs {
    #[arg(long)]
    n: u32,
    /// Minimise over all subsets instead of using the recursion (n ≤ 4).
    #[arg(long)]
    exact: bool,
}

#[derive(Args, Serialize)]
struct SplitArgs {
    #[arg(long)]
    n: u32,
    /// Cyclic numbering file; defaults to the Gray layout.
    #[arg(long)]
    numbering: Option<PathBuf>,
}

#[derive(Args, Serialize)]
struct BoundsArgs {
    #[arg(long)]
    n_max: u32,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Objective {
    Ccw,
    Lcw,
}

#[derive(Args, Serialize)]
struct SearchArgs {
    #[arg(value_enum)]
    objective: Objective,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, conflicts_with = "n", required_unless_present = "n")]
    graph: Option<PathBuf>,
    /// Placement nodes for the ccw branch and bound.
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Pair-swap steps of seeded local search run before the branch and
    /// bound to improve its starting layout.
    #[arg(long, default_value_t = 0)]
    local_steps: u64,
    /// Prune layouts related by a coordinate permutation of the cube.
    #[arg(long)]
    cube_symmetry: bool,
}

#[derive(Args, Serialize)]
struct VerifyArgs {
    #[arg(long)]
    n_max: u32,
}

enum Failure {
    Lib(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Io(e.to_string()),
            other => Failure::Lib(other),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load_numbering(path: &Path) -> Result<Numbering, Failure> {
    Ok(parse_numbering(&read(path)?)?)
}

fn load_input(graph: &Option<PathBuf>, n: Option<u32>) -> Result<Graph, Failure> {
    match (graph, n) {
        (Some(path), _) => Ok(parse_graph(&read(path)?)?),
        (None, Some(n)) => Ok(build_hypercube(n)?),
        (None, None) => Err(Failure::Usage("one of --graph or --n is required".into())),
    }
}

struct Output {
    command: &'static str,
    parameters: serde_json::Value,
    payload: serde_json::Value,
    csv: Option<String>,
    ok: bool,
}

fn to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("flat rows serialize");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}

fn value<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn run(command: Command) -> Result<Output, Failure> {
    let out = match command {
        Command::Metrics(args) => {
            let graph = load_input(&args.graph, args.n)?;
            let eta = match (&args.numbering, args.n) {
                (Some(path), _) => load_numbering(path)?,
                (None, Some(n)) => gray_numbering(n)?,
                (None, None) => return Err(Failure::Usage("--numbering is required with --graph".into())),
            };
            let report = all_metrics(&graph, &eta, args.budget)?;
            Output { command: "metrics", parameters: value(&args), payload: value(&report), csv: None, ok: true }
        }
        Command::Theta(args) => {
            let table = if args.exact { ThetaTable::exact(args.n)? } else { ThetaTable::recursive(args.n)? };
            #[derive(Serialize)]
            struct Row {
                l: usize,
                theta: u64,
            }
            let rows: Vec<Row> = table.values.iter().enumerate().map(|(l, &theta)| Row { l, theta }).collect();
            Output {
                command: "theta",
                parameters: value(&args),
                payload: json!({ "n": args.n, "values": table.values }),
                csv: Some(to_csv(&rows)),
                ok: true,
            }
        }
        Command::Split(args) => {
            let graph = build_hypercube(args.n)?;
            let eta = match &args.numbering {
                Some(path) => load_numbering(path)?,
                None => gray_numbering(args.n)?,
            };
            let report = split_report(&graph, &eta)?;
            Output { command: "split", parameters: value(&args), payload: value(&report), csv: None, ok: true }
        }
        Command::Bounds(args) => {
            let rows = (2..=args.n_max).map(bounds_report).collect::<Result<Vec<_>, _>>()?;
            if rows.is_empty() {
                return Err(Failure::Lib(Error::OutOfRange("--n-max must be at least 2".into())));
            }
            Output {
                command: "bounds",
                parameters: value(&args),
                payload: value(&rows),
                csv: Some(to_csv(&rows)),
                ok: true,
            }
        }
        Command::Search(args) => {
            let graph = load_input(&args.graph, args.n)?;
            let payload = match args.objective {
                Objective::Lcw => value(&exhaustive_lcw(&graph)?),
                Objective::Ccw => {
                    let mut opts = BbOptions { budget: args.budget, cube_symmetry: args.cube_symmetry, ..BbOptions::default() };
                    if args.local_steps > 0 {
                        let start = match graph.cube_dimension() {
                            Some(n) if n >= 1 => gray_numbering(n)?,
                            _ => Numbering::identity(Host::Cyclic, graph.vertex_count())?,
                        };
                        let improved = local_search_ccw(&graph, &start, args.local_steps, args.seed, LEAF_ROUTING_BUDGET)?;
                        opts.seed_numbering = Some(improved.numbering);
                    }
                    value(&bb_ccw(&graph, &opts)?)
                }
            };
            Output { command: "search", parameters: value(&args), payload, csv: None, ok: true }
        }
        Command::Verify(args) => {
            let report = verify(args.n_max)?;
            Output {
                command: "verify",
                parameters: value(&args),
                payload: value(&report),
                csv: Some(to_csv(&report.checks)),
                ok: report.passed,
            }
        }
    };
    Ok(out)
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::ArgumentConflict, msg).exit()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            usage_error("--threads must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .expect("thread pool configured once");
    }
    let tabular = matches!(cli.command, Command::Theta(_) | Command::Bounds(_) | Command::Verify(_));
    let format = cli.format.unwrap_or(if matches!(cli.command, Command::Theta(_)) { Format::Csv } else { Format::Json });
    if format == Format::Csv && !tabular {
        usage_error("csv output is available for theta, bounds and verify only");
    }

    let out = match run(cli.command) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => usage_error(msg),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(4);
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };

    let text = match (format, out.csv) {
        (Format::Csv, Some(csv)) => csv,
        _ => {
            let envelope = json!({
                "command": out.command,
                "parameters": out.parameters,
                "version": env!("CARGO_PKG_VERSION"),
                "payload": out.payload,
                "status": if out.ok { "ok" } else { "fail" },
            });
            serde_json::to_string_pretty(&envelope).expect("json value") + "\n"
        }
    };
    if let Err(e) = io::stdout().write_all(text.as_bytes()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(4);
        }
    }
    if out.ok { ExitCode::SUCCESS } else { ExitCode::from(1) }
}
