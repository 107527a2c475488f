//! `mkls`: invariants of matroid specs, closed forms, verification sweeps,
//! relaxations and random exploration.
//!
//! Exit codes: 0 when everything checked passes, 1 when a theorem or
//! conjecture check fails, 2 on usage or spec errors.

mod cache;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

/// Ground sets larger than this need `--unsafe-large`.
pub const SIZE_CAP: u32 = 16;

#[derive(Parser, Debug)]
#[command(name = "mkls", version, about = "Kazhdan-Lusztig-Stanley invariants of matroids, exactly")]
pub struct Cli {
    /// Emit canonical JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,
    /// Allow ground sets beyond the size cap.
    #[arg(long, global = true)]
    pub unsafe_large: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct SpecSource {
    /// Matroid spec file (JSON).
    #[arg(long, value_name = "FILE")]
    pub spec: Option<PathBuf>,
    /// Matroid spec given inline as JSON.
    #[arg(long, value_name = "JSON")]
    pub inline: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Characteristic polynomial, P, Q, Z and Y of a matroid.
    Compute {
        #[command(flatten)]
        source: SpecSource,
    },
    /// Evaluate a closed form, e.g. `mkls formula equiv_Y_uniform k=2 n=3`.
    Formula {
        id: String,
        /// Parameters as name=value; `lambda` takes size:count pairs.
        params: Vec<String>,
    },
    /// Run theorem sweeps (all ids when none are given).
    Verify {
        ids: Vec<String>,
        /// Range overrides, e.g. `k=2..4,n=..9`.
        #[arg(long, default_value = "")]
        range: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random matroids for the conjecture sweep.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Write golden oracle fixtures to this file instead of verifying.
        #[arg(long, value_name = "FILE")]
        freeze: Option<PathBuf>,
    },
    /// Relax stressed hyperplanes and compare with the predicted change of Y.
    Relax {
        #[command(flatten)]
        source: SpecSource,
        /// Elements of one hyperplane, comma separated; default is every
        /// stressed hyperplane in turn.
        #[arg(long, value_delimiter = ',')]
        hyperplane: Option<Vec<usize>>,
    },
    /// Test unimodality and log-concavity of Y on random sparse paving matroids.
    Explore {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Ground set sizes, e.g. `n=4..8`.
        #[arg(long, default_value = "n=4..9")]
        range: String,
    },
}

/// Errors that map to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.into())
    }
}

/// A rendered result and whether every check in it passed.
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = match commands::run(&cli) {
        Ok(o) => o,
        Err(UsageError(e)) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let mut text = outcome.text;
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: writing {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
