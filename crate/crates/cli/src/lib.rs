//! Command-line front end for the `invseq` library.

mod commands;
mod syntax;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub use syntax::{parse_classes, parse_class, parse_range};

#[derive(Debug, Parser)]
#[command(name = "invseq", version, about = "Pattern-avoiding inversion sequences")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Largest n for brute-force enumeration (at most 11).
    #[arg(long, global = true, default_value_t = invseq::counting::DEFAULT_BRUTE_CAP)]
    pub brute_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count avoiders of a pattern class for a range of lengths.
    Count(commands::CountArgs),
    /// Print the (srpt, last) triangle f_n(k, l).
    Table(commands::TableArgs),
    /// Expand a generating function as a truncated series.
    Series(commands::SeriesArgs),
    /// Check generating-function identities by exact residuals.
    Verify(commands::VerifyArgs),
    /// Compare avoider counts across pattern classes.
    Wilf(commands::WilfArgs),
}

/// Rendered output and whether every requested cross-check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub ok: bool,
    /// Diagnostics for stderr.
    pub notes: Vec<String>,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    if cli.global.brute_cap > invseq::counting::MAX_BRUTE_CAP {
        bail!(
            "--brute-cap {} exceeds the maximum {}",
            cli.global.brute_cap,
            invseq::counting::MAX_BRUTE_CAP
        );
    }
    match &cli.command {
        Command::Count(a) => commands::count(a, &cli.global),
        Command::Table(a) => commands::table(a, &cli.global),
        Command::Series(a) => commands::series(a, &cli.global),
        Command::Verify(a) => commands::verify(a, &cli.global),
        Command::Wilf(a) => commands::wilf(a, &cli.global),
    }
}

/// Parses, runs and writes output. Returns the process exit code: 0 when all
/// cross-checks pass, 1 on a failed check, 2 on usage or runtime errors.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli).and_then(|outcome| emit(&cli.global, &outcome).map(|_| outcome)) {
        Ok(outcome) => {
            for note in &outcome.notes {
                eprintln!("{note}");
            }
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

fn emit(global: &GlobalOpts, outcome: &Outcome) -> Result<()> {
    match &global.out {
        Some(path) => fs::write(path, &outcome.text)
            .with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(outcome.text.as_bytes())?;
            Ok(())
        }
    }
}
