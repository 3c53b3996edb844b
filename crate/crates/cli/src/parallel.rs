//! Rayon-backed sweep driver with a deterministic reduction.
//!
//! Cells are evaluated in parallel and collected index-addressed, then
//! assembled by `jchmf::sweep::from_cells`; the output is byte-identical to
//! the serial driver for any worker count. On error, the failing cell with
//! the smallest row-major index is reported, again independent of thread
//! count.

use jchmf::sweep::{evaluate_cell, from_cells, SweepError, SweepResult, SweepSpec};
use rayon::prelude::*;

pub fn sweep_grid_parallel(spec: &SweepSpec) -> Result<SweepResult, SweepError> {
    spec.validate()?;
    let k_points = spec.k_points;
    let outcomes: Vec<_> = (0..spec.cells())
        .into_par_iter()
        .map(|idx| evaluate_cell(spec, idx / k_points, idx % k_points))
        .collect();
    let mut cells = Vec::with_capacity(outcomes.len());
    for outcome in outcomes {
        cells.push(outcome?);
    }
    from_cells(spec.clone(), cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use jchmf::meanfield::MinimizeSettings;
    use jchmf::model::SystemParams;
    use jchmf::sweep::sweep_grid;

    #[test]
    fn parallel_matches_serial_bitwise() {
        let mut settings = MinimizeSettings::default();
        settings.coarse_points = 31;
        settings.refine_tol = 1e-6;
        let spec = SweepSpec {
            mu_min: 199.1,
            mu_max: 199.5,
            mu_points: 3,
            k_min: 1e-3,
            k_max: 0.05,
            k_points: 4,
            base_params: SystemParams::default(),
            settings,
        };
        let serial = sweep_grid(&spec).unwrap();
        for workers in [1usize, 4] {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .unwrap();
            let parallel = pool.install(|| sweep_grid_parallel(&spec)).unwrap();
            assert_eq!(serial.grid.len(), parallel.grid.len());
            for (a, b) in serial.grid.iter().zip(parallel.grid.iter()) {
                assert_eq!(a.psi_star.to_bits(), b.psi_star.to_bits());
                assert_eq!(a.energy.to_bits(), b.energy.to_bits());
                assert_eq!(a.a_expect.to_bits(), b.a_expect.to_bits());
            }
            for (a, b) in serial.boundary.iter().zip(parallel.boundary.iter()) {
                assert_eq!(a.k_c.to_bits(), b.k_c.to_bits());
            }
        }
    }
}
