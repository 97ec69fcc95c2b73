//! `chordalpoly` command-line tool.
//!
//! Exit codes: 0 success, 2 input error, 3 a checked property failed.

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use chordalpoly::SubgraphKind;
use clap::{Parser, Subcommand, ValueEnum};

use commands::{DecomposeArgs, Outcome, SystemArgs};
use input::Source;

#[derive(Parser)]
#[command(
    name = "chordalpoly",
    version,
    about = "Induced tree and path polyhedra of chordal graphs"
)]
struct Cli {
    /// Master seed; embedded in every report and drives `verify`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Tree,
    Path,
}

impl From<Kind> for SubgraphKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Tree => SubgraphKind::Tree,
            Kind::Path => SubgraphKind::Path,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Chordality, a perfect elimination order and the maximal cliques, or a hole.
    Check { graph: PathBuf },
    /// Write the linear system of the induced tree/path cone or polytope.
    System {
        kind: Kind,
        graph: PathBuf,
        /// Path kind: one row per clique of N(w) instead of per orbit-defining clique.
        #[arg(long)]
        all_cliques: bool,
        /// Add the hyperplane x(V) - y(E) = 1.
        #[arg(long)]
        polytope: bool,
        /// Output file (default: stdout, with the report on stderr).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Maximum-weight induced tree/path by exact linear programming.
    Solve {
        kind: Kind,
        graph: PathBuf,
        /// Lines `v <id> <rational>` and `e <u> <v> <rational>`.
        weights: PathBuf,
    },
    /// Orbit-defining cliques of every vertex and whether their path rows are facets.
    Facets {
        graph: PathBuf,
        /// Cross-check every verdict with the affine-rank computation.
        #[arg(long)]
        rank: bool,
    },
    /// Integer decomposition of a cone point into induced trees/paths.
    Decompose {
        kind: Kind,
        graph: PathBuf,
        /// Lines `v <id> <int>` and `e <u> <v> <int>`.
        point: PathBuf,
        /// Re-check the bookkeeping after every move.
        #[arg(long)]
        check_invariants: bool,
        /// Node budget of the exhaustive fallback search.
        #[arg(long, default_value_t = 1_000_000)]
        oracle_nodes: usize,
    },
    /// Run a property suite over generated instances.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest graph size.
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

fn run(cli: Cli) -> Result<Outcome> {
    let seed = cli.seed;
    match cli.command {
        Command::Check { graph } => commands::check(&Source::read(&graph)?, seed),
        Command::System {
            kind,
            graph,
            all_cliques,
            polytope,
            output,
        } => commands::system(
            SystemArgs {
                kind: kind.into(),
                graph: &Source::read(&graph)?,
                all_cliques,
                polytope,
                output: output.as_deref(),
            },
            seed,
        ),
        Command::Solve { kind, graph, weights } => {
            commands::solve(kind.into(), &Source::read(&graph)?, &Source::read(&weights)?, seed)
        }
        Command::Facets { graph, rank } => commands::facets(&Source::read(&graph)?, rank, seed),
        Command::Decompose {
            kind,
            graph,
            point,
            check_invariants,
            oracle_nodes,
        } => commands::decompose(
            DecomposeArgs {
                kind: kind.into(),
                graph: &Source::read(&graph)?,
                point: &Source::read(&point)?,
                check_invariants,
                oracle_nodes,
            },
            seed,
        ),
        Command::Verify { suite, n, trials } => commands::verify(&suite, n, trials, seed),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    let theory = err
        .chain()
        .filter_map(|e| e.downcast_ref::<chordalpoly::Error>())
        .any(chordalpoly::Error::is_theory_violation);
    if theory {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(out) => {
            match &out.payload {
                Some(text) => {
                    print!("{text}");
                    eprint!("{}", out.report);
                }
                None => print!("{}", out.report),
            }
            ExitCode::from(if out.violated { 3 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
