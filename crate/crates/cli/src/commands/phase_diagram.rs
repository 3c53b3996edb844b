//! (μ, k) phase-diagram sweep: full-precision CSV plus a PGM heatmap of ψ*
//! for eyeballing the Mott lobes.

use std::path::Path;

use crate::config::RunConfig;
use crate::output::{fmt_f64, write_pgm, CsvWriter};
use crate::parallel::sweep_grid_parallel;
use crate::CliError;

pub fn run(config: &RunConfig, out_prefix: &Path) -> Result<(), CliError> {
    config.validate_sweep()?;
    let spec = &config.sweep;
    let result = sweep_grid_parallel(spec)?;

    let csv_path = out_prefix.with_extension("csv");
    let mut csv = CsvWriter::create(
        &csv_path,
        &["mu", "k", "psi_star", "sector", "energy", "phase"],
    )?;
    for point in &result.grid {
        csv.row(&[
            fmt_f64(point.mu),
            fmt_f64(point.k),
            fmt_f64(point.psi_star),
            point.sector.s_int().to_string(),
            fmt_f64(point.energy),
            point.phase.label().to_string(),
        ])?;
    }
    csv.finish()?;

    let pgm_path = out_prefix.with_extension("pgm");
    let psi: Vec<f64> = result.grid.iter().map(|p| p.psi_star).collect();
    write_pgm(&pgm_path, spec.k_points, spec.mu_points, &psi)?;

    println!("# wrote {}", csv_path.display());
    println!("# wrote {}", pgm_path.display());
    println!("# mott_area_fraction: {}", fmt_f64(result.mott_area_fraction));
    println!("# boundary points: {}", result.boundary.len());
    Ok(())
}
