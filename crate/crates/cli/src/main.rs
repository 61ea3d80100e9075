mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Usage errors (sysexits `EX_USAGE`).
pub const EXIT_USAGE: u8 = 64;
/// I/O errors (sysexits `EX_IOERR`).
pub const EXIT_IO: u8 = 74;
pub const EXIT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "pgx", version, about = "Finite p-group engine: d-maximality checks, census and theorem verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Exhaustive,
    Reduced,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a group is d-maximal (exit 0 if so, 1 if not).
    Check {
        file: PathBuf,
        /// Operator group: `aut <images of g1..gn>` lines plus an optional `pgroup` line.
        #[arg(long)]
        action: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "exhaustive")]
        method: MethodArg,
    },
    /// Print the characteristic series and basic invariants.
    Info { file: PathBuf },
    /// Test two groups for isomorphism (exit 0 iff isomorphic).
    Iso { a: PathBuf, b: PathBuf },
    /// Analyse every corpus group up to an order and write a CSV report.
    Census {
        dir: PathBuf,
        #[arg(long, value_parser = parse_order_arg)]
        max_order: usize,
        #[arg(long)]
        out: PathBuf,
        /// Also write a JSON mirror next to the CSV.
        #[arg(long)]
        json: bool,
        /// Worker threads (0 picks the number of CPUs).
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Run every theorem and property check over a corpus (exit 0 iff none fails).
    Verify {
        dir: PathBuf,
        #[arg(long, value_parser = parse_order_arg)]
        max_order: usize,
    },
    /// Emit the presentation of a named construction, e.g. `blackburn32` or `cp2_star_s:3`.
    Named {
        key: String,
        /// Output file; stdout when omitted.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

fn parse_order_arg(s: &str) -> Result<usize, String> {
    pgx_core::limits::parse_order(s).ok_or_else(|| format!("`{s}` is not an order like 64 or 2^6"))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Check { file, action, method } => commands::check(&file, action.as_deref(), method),
        Command::Info { file } => commands::info(&file),
        Command::Iso { a, b } => commands::iso(&a, &b),
        Command::Census { dir, max_order, out, json, workers } => {
            commands::census(&dir, max_order, &out, json, workers)
        }
        Command::Verify { dir, max_order } => commands::verify(&dir, max_order),
        Command::Named { key, emit } => commands::named(&key, emit.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("pgx: {e}");
            ExitCode::from(match e {
                pgx_core::Error::Io { .. } => EXIT_IO,
                pgx_core::Error::UnknownKey(_) | pgx_core::Error::UnsupportedParameter(_) => EXIT_USAGE,
                _ => EXIT_ERROR,
            })
        }
    }
}
