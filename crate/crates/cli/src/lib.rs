//! Command implementations behind the `megs` binary.
//!
//! Exit codes: 0 success, 2 usage or validation error, 3 I/O error,
//! 4 capacity exceeded.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub mod commands;
pub mod json;
pub mod statefile;

pub use statefile::StateFile;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Capacity(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::Capacity(_) => 4,
        }
    }
}

impl From<megs_core::Error> for CliError {
    fn from(e: megs_core::Error) -> Self {
        match e {
            megs_core::Error::Domain(_) => CliError::Usage(e.to_string()),
            megs_core::Error::Capacity { .. } => CliError::Capacity(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StateKind {
    Bell,
    Ghz,
    W,
    Product,
    Random,
}

/// Concurrence classes of pure multipartite states.
///
/// Subsystems are numbered from 0: subsystem j here is Q_{j+1} in the
/// usual 1-based notation. The environment variable MEGS_DENSE_CAP
/// overrides the dense matrix size cap (default 4096).
#[derive(Debug, Parser)]
#[command(name = "megs", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the minimal entanglement generating set for m subsystems.
    List(ListArgs),
    /// Write a Bell, GHZ, W, product or random state file.
    MakeState(MakeStateArgs),
    /// Evaluate class concurrences of a state file.
    Concurrence(ConcurrenceArgs),
    /// Dump a class operator (or one of its parts) as a dense matrix.
    Operator(OperatorArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Output file (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ListArgs {
    /// Number of subsystems.
    #[arg(long, short)]
    pub m: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct MakeStateArgs {
    #[arg(long, value_enum)]
    pub kind: StateKind,
    /// Number of qubits for GHZ and W states.
    #[arg(long, short)]
    pub m: Option<usize>,
    /// Comma-separated subsystem dimensions for product and random states.
    #[arg(long, value_delimiter = ',')]
    pub dims: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Accepted for symmetry with other commands; state files are always JSON.
    #[arg(long, value_enum, default_value_t = Format::Machine)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ConcurrenceArgs {
    /// State file to evaluate.
    #[arg(long)]
    pub state: PathBuf,
    /// `ALL`, or a label such as `EPR(0,1)` or `GHZ3(0,1,2)`.
    #[arg(long, default_value = "ALL")]
    pub label: String,
    /// Include per-operator values and their U/L or P_i parts.
    #[arg(long, short)]
    pub verbose: bool,
    /// Rescale unnormalized amplitudes instead of rejecting them.
    #[arg(long)]
    pub normalize: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OperatorArgs {
    /// Comma-separated subsystem dimensions.
    #[arg(long, value_delimiter = ',', required = true)]
    pub dims: Vec<usize>,
    /// Class label, e.g. `EPR(0,1)` or `GHZ3(0,1,2)`.
    #[arg(long)]
    pub label: String,
    /// Subsystems carrying the pi/2 blocks, as `a,b`.
    #[arg(long)]
    pub pair: Option<String>,
    /// One `k,l` index pair per active subsystem, separated by `;`.
    #[arg(long)]
    pub lambda: Option<String>,
    /// `FULL`, `U`, `L` or `P_i` (0-based).
    #[arg(long, default_value = "FULL")]
    pub part: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Writes `text` to `out`, or to `stdout` when no path is given.
pub fn emit(out: Option<&Path>, stdout: &mut dyn Write, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write output: {e}"))),
    }
}

/// Dispatches a parsed command line.
pub fn run(cli: Cli, cfg: &megs_core::Config, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::List(a) => commands::cmd_list(&a, cfg, stdout),
        Command::MakeState(a) => commands::cmd_make_state(&a, stdout),
        Command::Concurrence(a) => commands::cmd_concurrence(&a, cfg, stdout),
        Command::Operator(a) => commands::cmd_operator_dump(&a, cfg, stdout),
    }
}

/// Parses `args`, runs, and returns the process exit code. Errors go to
/// `stderr`.
pub fn main_with<I, T>(args: I, cfg: &megs_core::Config, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 2;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    match run(cli, cfg, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "megs: {e}");
            e.exit_code()
        }
    }
}

/// Convenience for binaries: real stdout/stderr and the environment config.
pub fn main_from_env() -> i32 {
    let cfg = megs_core::Config::from_env();
    let stdout = io::stdout();
    let stderr = io::stderr();
    main_with(std::env::args_os(), &cfg, &mut stdout.lock(), &mut stderr.lock())
}
