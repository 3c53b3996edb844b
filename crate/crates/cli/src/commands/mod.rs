//! The five reproduction subcommands.

pub mod boundary;
pub mod derive;
pub mod phase_diagram;
pub mod repulsion;
pub mod spectrum;

use std::path::Path;

/// Shared run-header lines: command, config path, defaulted keys, warnings.
pub fn print_run_header(
    command: &str,
    config_path: &Path,
    defaulted: &[(String, String)],
    flagged_alpha: Option<f64>,
) {
    println!("# jchmf {command}");
    println!("# config: {}", config_path.display());
    for (key, value) in defaulted {
        println!("# default: {key} = {value}");
    }
    if let Some(alpha) = flagged_alpha {
        println!("# warning: alpha = {alpha} lies outside the reproduction interval [0, 1/4]");
    }
}
