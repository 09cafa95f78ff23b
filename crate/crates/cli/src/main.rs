//! `hallkit`: checks on Hall relations, finite semigroups and their
//! constructions, emitting one JSON report per run.
//!
//! Exit status is 0 when the check passes, 1 when it fails and 2 for usage
//! or input errors.

mod commands;
mod input;
mod report;

use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;
use std::thread;
use std::time::Instant;

use clap::{Parser, Subcommand};

use hallkit::semigroup::DIVISION_MAX_GENERATORS;
use input::GroupSpec;
use report::Report;

#[derive(Debug, Parser)]
#[command(name = "hallkit", version, about = "Hall relations and finite semigroup checks")]
struct Cli {
    /// Leave `elapsed_ms` out so reports are byte-identical across runs.
    #[arg(long, global = true)]
    no_timing: bool,

    /// Render an aligned text table instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Look for a permutation inside a relation (relmat v1 file).
    CheckHall { file: PathBuf },
    /// Compose two relations, first then second.
    Compose { left: PathBuf, right: PathBuf },
    /// Green's classes, idempotents and the block-group test for a Cayley table.
    Analyze { file: PathBuf },
    /// Build the power semigroup of a group and run the block-group test.
    PowerGroup {
        #[arg(long)]
        group: GroupSpec,
    },
    /// Verify that subsets of a group embed into the Hall relations.
    Embed {
        #[arg(long)]
        group: GroupSpec,
        /// Also print the relation of one subset, e.g. `--subset 1,3`.
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<usize>>,
    },
    /// Verify that reflexive relations twisted by permutations cover the Hall relations.
    Semidirect {
        #[arg(long)]
        n: usize,
    },
    /// Count Hall relations on n points by exhaustive enumeration.
    CountHall {
        #[arg(long)]
        n: usize,
        /// Defaults to the available parallelism.
        #[arg(long, env = "HALLKIT_WORKERS", value_parser = clap::value_parser!(u64).range(1..=1024))]
        workers: Option<u64>,
        /// Also run both independent counting methods and compare.
        #[arg(long)]
        check_oracle: bool,
    },
    /// Run every structural check on ground sets of size n.
    Campaign {
        #[arg(long)]
        n: usize,
    },
    /// Search for the first table as a quotient of a subsemigroup of the second.
    Divide {
        quotient: PathBuf,
        target: PathBuf,
        #[arg(long, default_value_t = DIVISION_MAX_GENERATORS)]
        max_generators: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::CheckHall { .. } => "check-hall",
            Command::Compose { .. } => "compose",
            Command::Analyze { .. } => "analyze",
            Command::PowerGroup { .. } => "power-group",
            Command::Embed { .. } => "embed",
            Command::Semidirect { .. } => "semidirect",
            Command::CountHall { .. } => "count-hall",
            Command::Campaign { .. } => "campaign",
            Command::Divide { .. } => "divide",
        }
    }

    fn run(&self) -> Result<Report, input::InputError> {
        match self {
            Command::CheckHall { file } => commands::check_hall(file),
            Command::Compose { left, right } => commands::compose(left, right),
            Command::Analyze { file } => commands::analyze(file),
            Command::PowerGroup { group } => commands::power_group(group),
            Command::Embed { group, subset } => commands::embed(group, subset.as_deref()),
            Command::Semidirect { n } => commands::semidirect(*n),
            Command::CountHall {
                n,
                workers,
                check_oracle,
            } => {
                let workers = workers.map(|w| w as usize).unwrap_or_else(|| {
                    thread::available_parallelism().map_or(1, NonZeroUsize::get)
                });
                commands::count_hall(*n, workers, *check_oracle)
            }
            Command::Campaign { n } => commands::campaign(*n),
            Command::Divide {
                quotient,
                target,
                max_generators,
            } => commands::divide(quotient, target, *max_generators),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = cli.command.run().unwrap_or_else(|e| {
        eprintln!("hallkit: {e}");
        Report::error(cli.command.name(), e.to_string())
    });
    if !cli.no_timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    if cli.pretty {
        print!("{}", report.render_text());
    } else {
        println!("{}", report.to_json());
    }
    ExitCode::from(report.status.exit_code() as u8)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn parses_flags() {
        let cli = Cli::try_parse_from(["hallkit", "count-hall", "--n", "3", "--workers", "2", "--no-timing"]).unwrap();
        assert!(cli.no_timing);
        match cli.command {
            Command::CountHall { n, workers, .. } => assert_eq!((n, workers), (3, Some(2))),
            other => panic!("{other:?}"),
        }
        let cli = Cli::try_parse_from(["hallkit", "embed", "--group", "cyclic:3"]).unwrap();
        assert_eq!(cli.command.name(), "embed");
    }

    #[test]
    fn rejects_bad_usage() {
        for argv in [
            vec!["hallkit", "frobnicate"],
            vec!["hallkit", "count-hall"],
            vec!["hallkit", "count-hall", "--n", "3", "--workers", "0"],
            vec!["hallkit", "embed", "--group", "dihedral:4"],
            vec!["hallkit", "check-hall", "a", "--bogus"],
        ] {
            let err = Cli::try_parse_from(&argv).unwrap_err();
            assert_eq!(err.exit_code(), 2, "{argv:?}");
        }
    }
}
