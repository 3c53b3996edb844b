//! Grid sweeps over the (μ, k) plane, phase-boundary extraction, and
//! Mott-lobe metrics.
//!
//! Every grid cell is an independent pure computation, so sweeps
//! parallelize trivially; the result is assembled index-addressed and is a
//! pure function of the spec regardless of execution order or degree of
//! parallelism. This crate provides the serial driver ([`sweep_grid`]) and
//! the assembly entry point ([`from_cells`]) used by parallel drivers.

use alloc::vec::Vec;
use core::fmt;

use crate::meanfield::{order_parameter, MeanfieldError, MinimizeSettings, Phase, PhasePoint};
use crate::model::{ParamError, SystemParams};

/// A rectangular (μ, k) window with its resolution, base parameters, and
/// minimizer settings.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub mu_min: f64,
    pub mu_max: f64,
    pub mu_points: usize,
    pub k_min: f64,
    pub k_max: f64,
    pub k_points: usize,
    /// μ and k of these are overridden cell by cell.
    pub base_params: SystemParams,
    pub settings: MinimizeSettings,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), ParamError> {
        if self.mu_points < 2 {
            return Err(ParamError::new("mu_points", "must be at least 2"));
        }
        if self.k_points < 2 {
            return Err(ParamError::new("k_points", "must be at least 2"));
        }
        if !(self.mu_min.is_finite() && self.mu_max.is_finite() && self.mu_min < self.mu_max) {
            return Err(ParamError::new("mu_min", "must satisfy mu_min < mu_max, both finite"));
        }
        if !(self.k_min.is_finite() && self.k_max.is_finite()) || self.k_min < 0.0 {
            return Err(ParamError::new("k_min", "must be nonnegative and finite"));
        }
        if self.k_min >= self.k_max {
            return Err(ParamError::new("k_max", "must exceed k_min"));
        }
        self.base_params.validate()?;
        self.settings.validate()
    }

    /// Bit-exact coordinate contract:
    /// μ_i = mu_min + i·(mu_max − mu_min)/(mu_points − 1).
    #[inline]
    pub fn mu_at(&self, i: usize) -> f64 {
        self.mu_min + i as f64 * (self.mu_max - self.mu_min) / (self.mu_points - 1) as f64
    }

    /// k_j = k_min + j·(k_max − k_min)/(k_points − 1).
    #[inline]
    pub fn k_at(&self, j: usize) -> f64 {
        self.k_min + j as f64 * (self.k_max - self.k_min) / (self.k_points - 1) as f64
    }

    /// Total number of grid cells.
    #[inline]
    pub fn cells(&self) -> usize {
        self.mu_points * self.k_points
    }

    /// Parameters of cell (i, j).
    pub fn params_at(&self, i: usize, j: usize) -> SystemParams {
        let mut p = self.base_params.clone();
        p.mu = self.mu_at(i);
        p.k = self.k_at(j);
        p
    }

    /// Boundary bisection tolerance in k: (k_max − k_min)/(50·k_points).
    #[inline]
    pub fn boundary_tol(&self) -> f64 {
        (self.k_max - self.k_min) / (50.0 * self.k_points as f64)
    }
}

/// One row's Mott-to-superfluid crossing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint {
    pub mu: f64,
    /// Critical hopping rate, refined by bisection.
    pub k_c: f64,
    /// Set on the second and later crossings of a row (re-entrant
    /// boundary); the physical windows here are single-valued, so extra
    /// crossings deserve a flag rather than silence.
    pub reentrant: bool,
}

/// A filled sweep: the grid of phase points, the extracted boundary
/// polyline, and the Mott area fraction.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub spec: SweepSpec,
    /// Row-major: cell (i, j) at `grid[i · k_points + j]`.
    pub grid: Vec<PhasePoint>,
    pub boundary: Vec<BoundaryPoint>,
    /// (number of MI cells) / (total cells).
    pub mott_area_fraction: f64,
}

impl SweepResult {
    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &PhasePoint {
        &self.grid[i * self.spec.k_points + j]
    }
}

/// Lobe-tip positions and the grid Mott fraction.
#[derive(Debug, Clone, PartialEq)]
pub struct LobeMetrics {
    /// Local maxima of k_c(μ) along the boundary polyline, as
    /// (μ_tip, k_tip); plateau ties resolve to the smaller μ.
    pub tips: Vec<(f64, f64)>,
    pub mott_area_fraction: f64,
}

/// Errors from the sweep layer.
#[derive(Debug, Clone, PartialEq)]
pub enum SweepError {
    /// A grid cell failed; the sweep aborts rather than returning partial
    /// results.
    Cell { mu_index: usize, k_index: usize, mu: f64, k: f64, source: MeanfieldError },
    /// A boundary-bisection evaluation failed.
    Boundary { mu: f64, k: f64, source: MeanfieldError },
    Spec(ParamError),
    /// `from_cells` received the wrong number of cells.
    WrongCellCount { expected: usize, got: usize },
    /// No MI-to-SF crossing anywhere in the grid.
    EmptyBoundary,
}

impl fmt::Display for SweepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepError::Cell { mu_index, k_index, mu, k, source } => write!(
                f,
                "sweep cell ({mu_index}, {k_index}) at mu = {mu}, k = {k} failed: {source}"
            ),
            SweepError::Boundary { mu, k, source } => {
                write!(f, "boundary bisection at mu = {mu}, k = {k} failed: {source}")
            }
            SweepError::Spec(e) => write!(f, "invalid sweep spec: {e}"),
            SweepError::WrongCellCount { expected, got } => {
                write!(f, "expected {expected} cells, got {got}")
            }
            SweepError::EmptyBoundary => write!(f, "no MI-to-SF crossing in the grid"),
        }
    }
}

impl From<ParamError> for SweepError {
    fn from(e: ParamError) -> Self {
        SweepError::Spec(e)
    }
}

/// Evaluate one grid cell. Pure; any error carries the cell coordinate.
pub fn evaluate_cell(spec: &SweepSpec, i: usize, j: usize) -> Result<PhasePoint, SweepError> {
    let params = spec.params_at(i, j);
    order_parameter(&params, &spec.settings).map_err(|source| SweepError::Cell {
        mu_index: i,
        k_index: j,
        mu: params.mu,
        k: params.k,
        source,
    })
}

/// Serial sweep driver: every cell in row-major order, then assembly.
pub fn sweep_grid(spec: &SweepSpec) -> Result<SweepResult, SweepError> {
    spec.validate()?;
    let mut cells = Vec::with_capacity(spec.cells());
    for i in 0..spec.mu_points {
        for j in 0..spec.k_points {
            cells.push(evaluate_cell(spec, i, j)?);
        }
    }
    from_cells(spec.clone(), cells)
}

/// Assemble a sweep from row-major cells (the entry point for parallel
/// drivers: evaluate cells in any order, collect them index-addressed, then
/// assemble here for a result identical to the serial driver's).
pub fn from_cells(spec: SweepSpec, cells: Vec<PhasePoint>) -> Result<SweepResult, SweepError> {
    spec.validate()?;
    if cells.len() != spec.cells() {
        return Err(SweepError::WrongCellCount { expected: spec.cells(), got: cells.len() });
    }
    let mott = cells.iter().filter(|c| c.phase == Phase::MottInsulator).count();
    let mott_area_fraction = mott as f64 / cells.len() as f64;
    let boundary = boundary_from_grid(&spec, &cells)?;
    Ok(SweepResult { spec, grid: cells, boundary, mott_area_fraction })
}

/// Re-extract the boundary polyline from a filled sweep.
///
/// For each μ row with an MI→SF crossing between adjacent grid cells, the
/// critical k is refined by bisection on `order_parameter` between the
/// bracketing cells down to [`SweepSpec::boundary_tol`]. Rows that are
/// entirely one phase contribute nothing; second and later crossings in a
/// row come back flagged re-entrant.
pub fn extract_boundary(result: &SweepResult) -> Result<Vec<BoundaryPoint>, SweepError> {
    boundary_from_grid(&result.spec, &result.grid)
}

fn boundary_from_grid(
    spec: &SweepSpec,
    cells: &[PhasePoint],
) -> Result<Vec<BoundaryPoint>, SweepError> {
    let tol = spec.boundary_tol();
    let mut out = Vec::new();
    for i in 0..spec.mu_points {
        let row = &cells[i * spec.k_points..(i + 1) * spec.k_points];
        let mu = spec.mu_at(i);
        let mut crossings_seen = 0usize;
        for j in 0..spec.k_points - 1 {
            let lo_is_mi = row[j].phase == Phase::MottInsulator;
            let hi_is_sf = row[j + 1].phase == Phase::Superfluid;
            if lo_is_mi && hi_is_sf {
                let k_c = bisect_crossing(spec, mu, spec.k_at(j), spec.k_at(j + 1), tol)?;
                out.push(BoundaryPoint { mu, k_c, reentrant: crossings_seen > 0 });
                crossings_seen += 1;
            }
        }
    }
    Ok(out)
}

/// Bisection for the phase crossing in [k_lo, k_hi]; k_lo must be MI-side
/// and k_hi SF-side on the grid.
fn bisect_crossing(
    spec: &SweepSpec,
    mu: f64,
    mut k_lo: f64,
    mut k_hi: f64,
    tol: f64,
) -> Result<f64, SweepError> {
    let phase_at = |k: f64| -> Result<Phase, SweepError> {
        let mut p = spec.base_params.clone();
        p.mu = mu;
        p.k = k;
        order_parameter(&p, &spec.settings)
            .map(|pt| pt.phase)
            .map_err(|source| SweepError::Boundary { mu, k, source })
    };
    while k_hi - k_lo > tol {
        let mid = 0.5 * (k_lo + k_hi);
        match phase_at(mid)? {
            Phase::MottInsulator => k_lo = mid,
            Phase::Superfluid => k_hi = mid,
        }
    }
    Ok(0.5 * (k_lo + k_hi))
}

/// Lobe tips and Mott area of a filled sweep.
///
/// Tips are discrete local maxima of k_c over the per-row first crossings;
/// a plateau counts once, at its smallest μ. Requires a nonempty boundary.
pub fn lobe_metrics(result: &SweepResult) -> Result<LobeMetrics, SweepError> {
    let polyline: Vec<&BoundaryPoint> =
        result.boundary.iter().filter(|b| !b.reentrant).collect();
    if polyline.is_empty() {
        return Err(SweepError::EmptyBoundary);
    }
    let kc: Vec<f64> = polyline.iter().map(|b| b.k_c).collect();
    let mut tips = Vec::new();
    for p in 0..kc.len() {
        // Plateau tie-break: only the first element of a flat run counts.
        if p > 0 && kc[p - 1] == kc[p] {
            continue;
        }
        let left_lower = (0..p).rev().find(|&q| kc[q] != kc[p]).is_none_or(|q| kc[q] < kc[p]);
        let right_lower =
            (p + 1..kc.len()).find(|&q| kc[q] != kc[p]).is_none_or(|q| kc[q] < kc[p]);
        if left_lower && right_lower {
            tips.push((polyline[p].mu, kc[p]));
        }
    }
    Ok(LobeMetrics { tips, mott_area_fraction: result.mott_area_fraction })
}
