//! Effective on-site repulsion against photon number for a detuning family.
//!
//! Columns: n, delta, u_plus, u_minus, u_plus_nonlinear, u_minus_nonlinear.
//! Both the raw level spacing U_±(n) and its nonlinear part U_±(n) − ω_r
//! are emitted; the latter is the anharmonicity that decays with n.

use std::path::Path;

use jchmf::model::{onsite_repulsion, Branch, Sector};

use crate::config::RunConfig;
use crate::output::{fmt_f64, CsvWriter};
use crate::CliError;

pub fn run(
    config: &RunConfig,
    sector: Sector,
    deltas: &[f64],
    n_max_plot: usize,
    out_prefix: &Path,
) -> Result<(), CliError> {
    let csv_path = out_prefix.with_extension("csv");
    let mut csv = CsvWriter::create(
        &csv_path,
        &["n", "delta", "u_plus", "u_minus", "u_plus_nonlinear", "u_minus_nonlinear"],
    )?;

    for &delta in deltas {
        let mut params = config.params.clone();
        params.delta = delta;
        params
            .validate()
            .map_err(|e| CliError::Config(crate::config::ConfigError::Invalid(e)))?;
        for n in 1..=n_max_plot {
            let plus = onsite_repulsion(&params, sector, Branch::Plus, n)
                .map_err(|e| CliError::Numerical(e.to_string()))?;
            let minus = onsite_repulsion(&params, sector, Branch::Minus, n)
                .map_err(|e| CliError::Numerical(e.to_string()))?;
            csv.row(&[
                n.to_string(),
                fmt_f64(delta),
                fmt_f64(plus.total),
                fmt_f64(minus.total),
                fmt_f64(plus.nonlinear),
                fmt_f64(minus.nonlinear),
            ])?;
        }
    }
    csv.finish()?;
    println!("# wrote {}", csv_path.display());
    Ok(())
}
