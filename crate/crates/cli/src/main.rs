//! `tk`: command-line front end for the tk-core verification toolkit.
//!
//! Every command prints one JSON document on stdout. Exit status is 0 on a
//! positive verdict, 1 on a negative one and 2 on usage or I/O errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use sha2::{Digest, Sha256};

use tk_core::constructions::{alpha_clique_extension, build, NamedGraph};
use tk_core::feasibility::{tower_scan, ScanOptions};
use tk_core::io::{parse_graph, write_edge_list};
use tk_core::mu_bound::{mu_bound_check, MuBoundError};
use tk_core::reference::verify_reference;
use tk_core::report::{
    DrgVerdict, InputIdentity, MuBoundOutcome, ReportDocument, TerwilligerOutcome, Verdict,
};
use tk_core::terwilliger::is_terwilliger;
use tk_core::Graph;

#[derive(Parser)]
#[command(name = "tk", version, about = "Amply regular graph and mu-bound verification")]
struct Cli {
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    /// Print single-line JSON.
    #[arg(long, global = true)]
    compact: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph and write it as an edge list.
    Construct {
        /// pentagon, petersen, icosahedron, hoffman-singleton, doro,
        /// conway-smith, complete:N or cliques:R,S
        name: String,
        /// Replace every vertex by a clique of this size.
        #[arg(long, default_value_t = 1)]
        alpha: usize,
        /// Output file; the edge list goes to stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute the intersection array of a graph file.
    CheckDrg { file: PathBuf },
    /// Decide whether a graph file is a Terwilliger graph.
    CheckTerwilliger { file: PathBuf },
    /// Compute c and check the mu-bound on a graph file.
    #[command(visible_alias = "kp")]
    MuBound { file: PathBuf },
    /// Enumerate quotient towers for all (k, lambda, mu) with k <= max-k.
    Scan {
        /// Largest degree k in the grid.
        #[arg(long)]
        max_k: u64,
        /// Also require the quadratic discriminant condition at every level.
        #[arg(long)]
        strict_discriminant: bool,
    },
    /// Recompute the bundled table of graphs attaining equality.
    #[command(visible_alias = "verify-paper")]
    VerifyReference,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    if let Err(Failure(msg)) = configure_threads() {
        eprintln!("tk: {msg}");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("tk: {msg}");
            ExitCode::from(2)
        }
    }
}

/// `TK_THREADS` sets the worker count; unset or 0 lets rayon decide.
fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("TK_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| Failure(format!("TK_THREADS must be a non-negative integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    Ok(())
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    let start = Instant::now();
    let doc = match &cli.command {
        Command::Construct { name, alpha, output } => {
            let id: NamedGraph = name.parse()?;
            let g = alpha_clique_extension(&build(&id)?, *alpha)?;
            let text = write_edge_list(&g);
            let Some(path) = output else {
                io::stdout().write_all(text.as_bytes())?;
                return Ok(ExitCode::SUCCESS);
            };
            fs::write(path, &text)
                .map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))?;
            let label = if *alpha == 1 { id.to_string() } else { format!("{id} alpha={alpha}") };
            ReportDocument::new(
                InputIdentity::Named { name: label },
                Verdict::Construct {
                    vertices: g.order(),
                    edges: g.edge_count(),
                    output: Some(path.display().to_string()),
                },
            )
        }
        Command::CheckDrg { file } => {
            let (g, input) = load(file)?;
            let verdict = match g.intersection_array() {
                Ok(a) => DrgVerdict::DistanceRegular {
                    array: a.to_string(),
                    diameter: a.diameter(),
                    layer_sizes: a.layer_sizes().unwrap_or_default(),
                    feasibility: a.feasibility(),
                },
                Err(error) => DrgVerdict::NotDistanceRegular { error },
            };
            ReportDocument::new(input, Verdict::CheckDrg(verdict))
        }
        Command::CheckTerwilliger { file } => {
            let (g, input) = load(file)?;
            let outcome = match is_terwilliger(&g) {
                Ok(verdict) => TerwilligerOutcome::Checked { verdict },
                Err(e) => TerwilligerOutcome::Undefined { reason: e.to_string() },
            };
            ReportDocument::new(input, Verdict::CheckTerwilliger(outcome))
        }
        Command::MuBound { file } => {
            let (g, input) = load(file)?;
            let outcome = match mu_bound_check(&g) {
                Ok(report) => MuBoundOutcome::Checked { report: Box::new(report) },
                Err(MuBoundError::NotAmplyRegular(e)) => {
                    MuBoundOutcome::NotAmplyRegular { reason: e.to_string() }
                }
                Err(e) => MuBoundOutcome::CUndefined {
                    params: g.amply_regular_params().ok(),
                    reason: e.to_string(),
                },
            };
            ReportDocument::new(input, Verdict::MuBound(outcome))
        }
        Command::Scan { max_k, strict_discriminant } => {
            let options = ScanOptions { strict_discriminant: *strict_discriminant };
            let report = tower_scan(*max_k, options);
            ReportDocument::new(
                InputIdentity::Parameters {
                    description: format!("max_k={max_k} strict_discriminant={strict_discriminant}"),
                },
                Verdict::Scan(Box::new(report)),
            )
        }
        Command::VerifyReference => {
            let rows = verify_reference();
            let passed = rows.iter().all(|r| r.passed());
            ReportDocument::new(
                InputIdentity::Named { name: "reference-table".into() },
                Verdict::Reference { passed, rows },
            )
        }
    };
    emit(cli, doc, start)
}

fn emit(cli: &Cli, mut doc: ReportDocument, start: Instant) -> Result<ExitCode, Failure> {
    if cli.timing {
        doc.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    let mut json = if cli.compact {
        serde_json::to_string(&doc)?
    } else {
        serde_json::to_string_pretty(&doc)?
    };
    json.push('\n');
    io::stdout().write_all(json.as_bytes())?;
    Ok(if doc.succeeded() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

/// Reads a graph from `file` (`-` for stdin) and records its identity.
fn load(file: &PathBuf) -> Result<(Graph, InputIdentity), Failure> {
    let bytes = if file.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        buf
    } else {
        fs::read(file).map_err(|e| Failure(format!("cannot read {}: {e}", file.display())))?
    };
    let text = String::from_utf8(bytes)
        .map_err(|_| Failure(format!("{} is not UTF-8", file.display())))?;
    let g = parse_graph(&text).map_err(|e| Failure(format!("{}: {e}", file.display())))?;
    let identity = InputIdentity::File {
        path: file.display().to_string(),
        sha256: hex::encode(Sha256::digest(text.as_bytes())),
        vertices: g.order(),
        edges: g.edge_count(),
    };
    Ok((g, identity))
}
