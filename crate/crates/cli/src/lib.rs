//! CLI companion to `jchmf`: configuration parsing, the reproduction
//! subcommands, deterministic parallel sweeps, and CSV/PGM emission.

pub mod commands;
pub mod config;
pub mod output;
pub mod parallel;

use std::fmt;

use config::ConfigError;

/// Relative tolerance of the spectrum subcommand's analytic-vs-numeric
/// comparison.
pub const SPECTRUM_TOL: f64 = 1e-9;

/// Process exit codes: 0 success, 2 config error, 3 numerical failure,
/// 1 anything else (I/O).
#[derive(Debug)]
pub enum CliError {
    Config(ConfigError),
    /// A numerical contract failed; the message echoes the failing cell or
    /// parameter.
    Numerical(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(e) => write!(f, "config error: {e}"),
            CliError::Numerical(m) => write!(f, "numerical failure: {m}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Config(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Sweep-layer errors keep their origin: spec problems are config errors,
/// everything else is a numerical failure with the cell echoed.
impl From<jchmf::sweep::SweepError> for CliError {
    fn from(e: jchmf::sweep::SweepError) -> Self {
        match e {
            jchmf::sweep::SweepError::Spec(p) => CliError::Config(ConfigError::Invalid(p)),
            other => CliError::Numerical(other.to_string()),
        }
    }
}
