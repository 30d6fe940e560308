//! Config-driven experiment runner and verification suite for the
//! equilibrium analyses.
//!
//! Two subcommands:
//! - `run --config <file>` executes one analysis and writes its CSV;
//!   exit 0 when the analysis passed (or is descriptive), 1 when an
//!   equilibrium check failed, 2 on a bad config.
//! - `verify --scale small|full` runs the built-in verification suite,
//!   writing artifacts and a deterministic summary; timings go to
//!   stderr so repeated runs compare bytewise.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub mod config;
pub mod csvfmt;
pub mod oracle;
pub mod runner;
pub mod verify;

use runner::RunStatus;
use verify::Scale;

#[derive(Parser)]
#[command(
    name = "neareq",
    about = "equilibrium analyses for networked-system games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute one experiment config and write its CSV output.
    Run {
        /// Path to the JSON experiment config.
        #[arg(long)]
        config: PathBuf,
        /// Override the config's seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Override the config's output path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite and write its artifacts.
    Verify {
        #[arg(long, value_enum, default_value_t = ScaleArg::Small)]
        scale: ScaleArg,
        /// Base seed for the randomized checks.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Directory for CSV artifacts.
        #[arg(long, default_value = "neareq-verify")]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScaleArg {
    Small,
    Full,
}

impl From<ScaleArg> for Scale {
    fn from(scale: ScaleArg) -> Self {
        match scale {
            ScaleArg::Small => Scale::Small,
            ScaleArg::Full => Scale::Full,
        }
    }
}

pub fn cli_main() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { config, seed, out } => {
            let result = (|| -> anyhow::Result<RunStatus> {
                let mut experiment = config::ExperimentConfig::load(&config)?;
                if let Some(seed) = seed {
                    experiment.seed = Some(seed);
                }
                runner::run(&experiment, out.as_deref())
            })();
            match result {
                Ok(RunStatus::Clean) => 0,
                Ok(RunStatus::CheckFailed) => 1,
                Err(err) => {
                    eprintln!("error: {err:#}");
                    2
                }
            }
        }
        Command::Verify { scale, seed, out } => match verify::run_all(scale.into(), seed, &out) {
            Ok(reports) => {
                for line in verify::summary_lines(&reports) {
                    println!("{line}");
                }
                for report in &reports {
                    eprintln!("# C{} {:.2}s", report.id, report.seconds);
                    for detail in &report.details {
                        eprintln!("#   {detail}");
                    }
                }
                if reports.iter().all(|r| r.passed) {
                    0
                } else {
                    1
                }
            }
            Err(err) => {
                eprintln!("error: {err:#}");
                2
            }
        },
    }
}
