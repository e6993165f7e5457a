use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use seifert_core::cli::{self, report, tables};
use seifert_core::Error;

#[derive(Parser)]
#[command(name = "seifert", version, about = "Invariants of Seifert links and their cyclic branched covers")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classical invariants and classification of a link.
    Classify {
        /// Link expression, e.g. `L(2,3;1,1;-)`, `T(3,4)` or `#2 H+ # 1 H-`.
        link: String,
        #[arg(long)]
        json: bool,
    },
    /// Cyclic branched cover of a prime link.
    Cover {
        link: String,
        /// Cover degree.
        #[arg(long)]
        n: i64,
        /// Branching weights, one per component. Defaults to the canonical cover.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weights: Option<Vec<i64>>,
        #[arg(long)]
        json: bool,
    },
    /// Regenerate a reference table.
    Table {
        /// One of ade-2fold, spherical, euclidean, higher-finite, canonical-status.
        name: String,
        #[arg(long)]
        json: bool,
    },
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn print_json<T: serde::Serialize>(v: &T) {
    emit(&serde_json::to_string_pretty(&report::to_json(v)).expect("json values serialize"));
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Classify { link, json } => {
            let l = cli::parse_and_normalize(&link)?;
            let r = report::classify_report(&link, &l);
            if json {
                print_json(&r);
            } else {
                emit(&report::classify_text(&r));
            }
        }
        Command::Cover { link, n, weights, json } => {
            let l = cli::parse_and_normalize(&link)?;
            let r = report::cover_report(&link, &l, n, weights)?;
            if json {
                print_json(&r);
            } else {
                emit(&report::cover_text(&r));
            }
        }
        Command::Table { name, json } => {
            let t = tables::table(&name)?;
            if json {
                print_json(&t);
            } else {
                emit(&t.to_text());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match std::panic::catch_unwind(|| run(args.command)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
        Err(_) => ExitCode::from(3),
    }
}
