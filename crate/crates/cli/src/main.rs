//! Command-line front end: row verification against the manifest, the
//! admissible-degree list, Cayley normality reports, covering-group checks,
//! and the self-test suites.
//!
//! Exit status: 0 when every computed verdict matches its expectation, 2
//! when any verdict is unknown, 1 on a mismatch or failed suite.

mod commands;
mod output;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use heptasym_core::search::SearchBudget;

#[derive(Parser)]
#[command(name = "heptasym", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Directory holding witness files and rows.manifest.
    #[arg(long, global = true, default_value = "data")]
    witness_dir: PathBuf,

    /// Output format for record-producing commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,

    /// Worker threads for row-level and in-row parallelism (0 = default).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Seed for randomized subroutines (the suites are seed-deterministic).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Backtrack node limit before a search aborts as unknown.
    #[arg(long, global = true, default_value_t = 20_000_000)]
    node_limit: u64,

    /// Wall-clock limit in seconds per search (0 = none).
    #[arg(long, global = true, default_value_t = 0)]
    time_limit: u64,

    /// Rescan feasibility without the normalizer-generation gate and compare.
    #[arg(long, global = true)]
    paranoid: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Verify manifest rows and compare against the expected verdicts.
    Table3 {
        /// Comma-separated row ids (default: all rows in the manifest).
        #[arg(long)]
        rows: Option<String>,
    },
    /// Verify a single row id; optionally export the first feasible coset
    /// graph as an edge list.
    Row {
        id: u32,
        #[arg(long)]
        emit_graph: Option<PathBuf>,
    },
    /// Print the admissible-degree list.
    Nlist,
    /// Build 7-valent connected Cayley graphs on a group and report the
    /// normality and normalizer cross-checks.
    Cayley {
        /// Group descriptor (builtin name or witness file).
        #[arg(long, default_value = "A:5")]
        group: String,
        /// Number of connection sets to test.
        #[arg(long, default_value_t = 3)]
        sets: usize,
    },
    /// Covering-group index-7 subgroup checks.
    Covers,
    /// Run the module invariant suites (brute-force oracles included).
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    #[cfg(feature = "parallel")]
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .expect("thread pool");
    }
    let budget = SearchBudget {
        node_limit: cli.node_limit,
        time_limit: (cli.time_limit > 0).then(|| Duration::from_secs(cli.time_limit)),
    };
    let outcome = match &cli.command {
        Command::Table3 { rows } => commands::table3(&cli, rows.as_deref(), &budget),
        Command::Row { id, emit_graph } => {
            commands::row(&cli, *id, emit_graph.as_deref(), &budget)
        }
        Command::Nlist => commands::nlist(&cli),
        Command::Cayley { group, sets } => commands::cayley(&cli, group, *sets, &budget),
        Command::Covers => commands::covers(&cli, &budget),
        Command::Selftest => selftest::run(&cli, &budget),
    };
    match outcome {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

