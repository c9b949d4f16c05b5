//! `netted`: build generalized Fibonacci matrices and run the verifiers
//! over parameter grids.

mod commands;
mod output;
mod sweep;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::Grid;
use crate::output::Sink;

#[derive(Parser, Debug)]
#[command(name = "netted", version, about = "Exact checks for netted matrices and generalized Fibonacci matrices")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Matrix dimension (repeatable)
    #[arg(long = "n", global = true)]
    n: Vec<usize>,

    /// Largest dimension when --n is not given
    #[arg(long, global = true)]
    n_max: Option<usize>,

    /// Integer parameter m (repeatable)
    #[arg(long = "m", global = true, allow_negative_numbers = true)]
    m: Vec<i64>,

    /// Largest power
    #[arg(long, global = true)]
    e_max: Option<u64>,

    /// Prime modulus (repeatable)
    #[arg(long = "p", global = true)]
    p: Vec<u64>,

    /// Largest l and p in the index-translation identities
    #[arg(long, global = true)]
    l_max: Option<u64>,

    /// Seed for tableau sampling
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Work in Z[m] with m symbolic
    #[arg(long, global = true)]
    symbolic: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print T_n(m), its inverse, or a power
    Build {
        #[arg(long)]
        power: Option<u64>,
        #[arg(long, conflicts_with = "power")]
        inverse: bool,
    },
    /// Netted relations of powers, coefficient recurrences, sampled tableaux
    Netted,
    /// Power-vector, closed-form, inverse and sum identities for T_n(m)
    Fib,
    /// Generating-function window identity
    Genfunc,
    /// Entry points, orders and congruences mod p
    Mod {
        /// Only print entry points of U(m) mod p
        #[arg(long)]
        entry_point: bool,
        /// Only print orders of T_n(m) mod p
        #[arg(long, conflicts_with = "entry_point")]
        order: bool,
    },
    /// Characteristic polynomial against the Lucas-factor product
    Charpoly,
    /// Every verifier on the default grids
    All,
}

pub enum CliError {
    Usage(String),
    Core(netted_core::Error),
    Io(io::Error),
}

impl From<netted_core::Error> for CliError {
    fn from(e: netted_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let grid = Grid::from_opts(&cli.opts)?;
    let writer: Box<dyn Write> = match &cli.opts.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let mut sink = Sink::new(writer, cli.opts.format);
    match cli.command {
        Command::Build { power, inverse } => {
            commands::build(&grid, power, inverse, &mut sink)?;
            sink.finish()?;
            return Ok(true);
        }
        Command::Mod { entry_point: true, .. } => {
            commands::entry_points(&grid, &mut sink)?;
            sink.finish()?;
            return Ok(true);
        }
        Command::Mod { order: true, .. } => {
            commands::orders(&grid, &mut sink)?;
            sink.finish()?;
            return Ok(true);
        }
        _ => {}
    }
    let tasks = match cli.command {
        Command::Netted => commands::netted(&grid)?,
        Command::Fib => commands::fib(&grid)?,
        Command::Genfunc => commands::genfunc(&grid)?,
        Command::Mod { .. } => commands::modular(&grid)?,
        Command::Charpoly => commands::charpoly(&grid)?,
        Command::All => commands::all(&grid)?,
        Command::Build { .. } => unreachable!(),
    };
    let reports = sweep::run(tasks, grid.jobs)?;
    for r in &reports {
        sink.report(r)?;
    }
    let ok = sink.summary(&reports)?;
    sink.finish()?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
