//! `cmv`: experiment runner for the weighted-particle filter.
//!
//! Four subcommands: `simulate` exports trajectories, `verify` runs the
//! weak-form checks, `oracle` compares against the closed-form linear filter,
//! `sweep` fits convergence slopes. All outputs are CSV and JSON stamped with
//! the config hash; the seed comes from the config (or `--seed`) and nothing
//! reads the wall clock, so reruns are byte-identical at any worker count.

// NaN-rejecting guards, as in the library crate.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod config;
mod error;

use clap::{Args, Parser, Subcommand, ValueEnum};
use config::RunConfig;
use error::{CliError, CliResult};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "cmv",
    version,
    about = "Weighted-particle filter runner and verifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Run configuration file (JSON).
    #[arg(long, value_name = "PATH")]
    config: PathBuf,
    /// Override the seed in the config file.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory, created if missing.
    #[arg(long, default_value = "out", value_name = "DIR")]
    out: PathBuf,
    /// Worker threads. Defaults to the available cores; results do not
    /// depend on this.
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the particle scheme and export the trajectory table.
    Simulate {
        #[command(flatten)]
        common: Common,
    },
    /// Run selected checks and write one report per check plus a summary.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated list: ks, martingale, zakai, cfpe, rinf,
        /// lyapunov, roundtrip, regularity, assumptions. Overrides the
        /// config's `checks`.
        #[arg(long, value_delimiter = ',')]
        check: Vec<String>,
    },
    /// Compare particle estimates against the closed-form linear filter.
    Oracle {
        #[command(flatten)]
        common: Common,
    },
    /// Error-vs-axis convergence table with a fitted log-log slope.
    Sweep {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        axis: SweepAxis,
        /// Comma-separated, strictly increasing axis values.
        #[arg(long, value_delimiter = ',')]
        values: Vec<String>,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum SweepAxis {
    /// Ensemble size.
    N,
    /// Step size.
    Dt,
    /// Metric truncation depth.
    K,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(e) => {
            eprintln!("cmv: {e}");
            std::process::exit(i32::from(e.exit_code()));
        }
    }
}

fn run(cli: Cli) -> CliResult<bool> {
    let common = match &cli.command {
        Command::Simulate { common }
        | Command::Verify { common, .. }
        | Command::Oracle { common }
        | Command::Sweep { common, .. } => common,
    };

    let workers = match common.workers {
        Some(0) => return Err(CliError::Config("workers must be at least 1".into())),
        Some(w) => w,
        None => std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1),
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build_global()
        .map_err(|e| CliError::Config(format!("thread pool: {e}")))?;

    let mut config = RunConfig::load(&common.config)?;
    if let Some(seed) = common.seed {
        config.seed = seed;
    }
    std::fs::create_dir_all(&common.out).map_err(|e| {
        CliError::Config(format!(
            "cannot create output dir {}: {e}",
            common.out.display()
        ))
    })?;

    match &cli.command {
        Command::Simulate { .. } => commands::simulate(&config, &common.out),
        Command::Verify { check, .. } => commands::verify(&config, &common.out, check),
        Command::Oracle { .. } => commands::oracle(&config, &common.out),
        Command::Sweep { axis, values, .. } => commands::sweep(&config, &common.out, *axis, values),
    }
}
