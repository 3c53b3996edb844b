use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use jchmf::model::Sector;
use jchmf_cli::commands::{self, print_run_header};
use jchmf_cli::config::{ConfigError, GeometryConfig, RunConfig};
use jchmf_cli::CliError;

/// Mean-field Mott-insulator/superfluid phase diagrams for a lattice of
/// microwave resonators, each coupled to an NV center through a
/// persistent-current qubit.
#[derive(Parser)]
#[command(name = "jchmf", version, about)]
struct Cli {
    /// Run configuration file (`key = value` lines, `#` comments).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Output file prefix; each subcommand appends its extension.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for sweeps (0 or absent: all cores). Output files are
    /// byte-identical for every value.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analytic dressed spectrum against numeric diagonalization (CSV).
    Spectrum {
        /// NV spin sector: -1, 0, or +1.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        sector: i64,
        /// Excitation numbers: comma-separated values and inclusive ranges,
        /// e.g. `0,1..10`.
        #[arg(long = "n", default_value = "0,1..10")]
        n_list: String,
    },
    /// On-site repulsion against photon number for a detuning family (CSV).
    Repulsion {
        /// NV spin sector: -1, 0, or +1.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        sector: i64,
        /// Detuning family; defaults to the config's delta.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        deltas: Vec<f64>,
        /// Largest photon number plotted.
        #[arg(long, default_value_t = 100)]
        n_max_plot: usize,
    },
    /// Sweep the (mu, k) window of the config (CSV + PGM heatmap).
    PhaseDiagram,
    /// Phase boundaries for a family of parameter overrides (CSV).
    Boundary {
        /// Override set per variant, e.g. `--var delta=-1 --var delta=-2`;
        /// comma-separate multiple keys inside one variant.
        #[arg(long = "var")]
        variants: Vec<String>,
    },
    /// Coupling rates from circuit geometry (text report).
    Derive {
        /// Electronic gyromagnetic ratio in rad/s/T.
        #[arg(long, default_value_t = jchmf::model::NV_GAMMA_E_SI)]
        gamma_e_si: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .map_err(|e| CliError::Numerical(format!("cannot build thread pool: {e}")))?;
    pool.install(|| run_command(&cli))
}

fn missing(flag: &str) -> CliError {
    CliError::Config(ConfigError::Syntax {
        line: 0,
        message: format!("missing required --{flag}"),
    })
}

fn run_command(cli: &Cli) -> Result<(), CliError> {
    let config_path = cli.config.as_deref().ok_or_else(|| missing("config"))?;

    match &cli.command {
        Command::Spectrum { sector, n_list } => {
            let out = cli.out.as_deref().ok_or_else(|| missing("out"))?;
            let config = RunConfig::from_path(config_path)?;
            print_header("spectrum", cli, &config, config_path);
            let sector = Sector::from_int(*sector).map_err(ConfigError::Invalid)?;
            let ns = commands::spectrum::parse_n_list(n_list).map_err(|message| {
                CliError::Config(ConfigError::Syntax { line: 0, message })
            })?;
            commands::spectrum::run(&config, sector, &ns, out)
        }
        Command::Repulsion { sector, deltas, n_max_plot } => {
            let out = cli.out.as_deref().ok_or_else(|| missing("out"))?;
            let config = RunConfig::from_path(config_path)?;
            print_header("repulsion", cli, &config, config_path);
            let sector = Sector::from_int(*sector).map_err(ConfigError::Invalid)?;
            let family = if deltas.is_empty() { vec![config.params.delta] } else { deltas.clone() };
            commands::repulsion::run(&config, sector, &family, *n_max_plot, out)
        }
        Command::PhaseDiagram => {
            let out = cli.out.as_deref().ok_or_else(|| missing("out"))?;
            let config = RunConfig::from_path(config_path)?;
            print_header("phase-diagram", cli, &config, config_path);
            commands::phase_diagram::run(&config, out)
        }
        Command::Boundary { variants } => {
            let out = cli.out.as_deref().ok_or_else(|| missing("out"))?;
            let config = RunConfig::from_path(config_path)?;
            print_header("boundary", cli, &config, config_path);
            commands::boundary::run(&config, variants, out)
        }
        Command::Derive { gamma_e_si } => {
            let config = GeometryConfig::from_path(config_path)?;
            print_run_header("derive", config_path, &config.defaulted, None);
            commands::derive::run(&config, *gamma_e_si, cli.out.as_deref())
        }
    }
}

fn print_header(command: &str, cli: &Cli, config: &RunConfig, path: &std::path::Path) {
    let flagged = config
        .params
        .alpha_outside_reproduction_range()
        .then_some(config.params.alpha);
    print_run_header(command, path, &config.defaulted, flagged);
    if cli.threads > 0 {
        println!("# threads: {}", cli.threads);
    }
}
