//! Analytic dressed spectrum and effective on-site repulsion.
//!
//! At fixed excitation number n ≥ 1 the site Hamiltonian restricts to the
//! two-state block {|g, n⟩, |e, n−1⟩}, giving the dressed eigenvalues
//!
//!   E(s, ±, n) = n·ω_r + χ(s) ± ½·√(4n·g² + Δ_eff²),   Δ_eff = Δ − η·s.
//!
//! Offset convention: these energies include the zero-point constants
//! ω_r(a⁺a + ½) and (ω₀/2)σ_z of `build_site_hamiltonian`, whose block mean
//! is exactly n·ω_r + χ(s); the values therefore match `eig_sym` of the
//! site matrix with no additional shift. The sector enters solely through
//! the effective detuning Δ_eff = Δ − η·s (so s = ±1 selects the two inner
//! signs of a √(4ng² + Δ² ∓ 2Δη + η²) splitting, and s = 0 has no η
//! contribution at all).
//!
//! The n = 0 ground level is the single state |g, 0⟩ with energy
//! Δ/2 − (η/2)s + χ(s); the two-branch formula does not apply there and
//! `dressed_energy` refuses n = 0 rather than extrapolating.

use core::fmt;

#[allow(unused_imports)] // resolves float math in no_std builds; shadowed when std is linked
use num_traits::Float;

use super::hamiltonian::chi;
use super::params::{Branch, Sector, SystemParams};

/// Error from the analytic dressed-spectrum operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DressedError {
    /// The two-branch formula applies only for n ≥ 1.
    GroundLevelNotDressed,
}

impl fmt::Display for DressedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DressedError::GroundLevelNotDressed => write!(
                f,
                "n = 0 is not a dressed doublet: the ground level is the single \
                 state |g, 0⟩ with energy Δ/2 − (η/2)s + χ(s); request n ≥ 1"
            ),
        }
    }
}

/// Effective detuning Δ_eff = Δ − η·s seen by the qubit in sector s.
#[inline]
pub fn effective_detuning(params: &SystemParams, s: Sector) -> f64 {
    params.delta - params.eta * s.s()
}

/// Energy of the n = 0 level |g, 0⟩, including the zero-point constants.
pub fn ground_level_energy(params: &SystemParams, s: Sector) -> f64 {
    0.5 * params.delta - 0.5 * params.eta * s.s() + chi(s, params)
}

/// Analytic dressed eigenvalue E(s, ±, n) for n ≥ 1.
pub fn dressed_energy(
    params: &SystemParams,
    s: Sector,
    branch: Branch,
    n: usize,
) -> Result<f64, DressedError> {
    if n == 0 {
        return Err(DressedError::GroundLevelNotDressed);
    }
    let delta_eff = effective_detuning(params, s);
    let split = (4.0 * n as f64 * params.g * params.g + delta_eff * delta_eff).sqrt();
    Ok(n as f64 * params.omega_r + chi(s, params) + branch.sign() * 0.5 * split)
}

/// Effective on-site repulsion U_±(n) = E(s, ±, n+1) − E(s, ±, n) and its
/// nonlinear part U_±(n) − ω_r.
///
/// The total difference tends to ω_r for large n; the nonlinear part is the
/// anharmonicity that drives photon blockade and vanishes as n grows (and
/// Δ_eff → 0). Both are exposed because either may be the quantity of
/// interest when plotting repulsion against photon number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OnsiteRepulsion {
    /// U_±(n) = E(±, n+1) − E(±, n).
    pub total: f64,
    /// U_±(n) − ω_r.
    pub nonlinear: f64,
}

/// On-site repulsion at excitation number n ≥ 1.
pub fn onsite_repulsion(
    params: &SystemParams,
    s: Sector,
    branch: Branch,
    n: usize,
) -> Result<OnsiteRepulsion, DressedError> {
    let above = dressed_energy(params, s, branch, n + 1)?;
    let here = dressed_energy(params, s, branch, n)?;
    let total = above - here;
    Ok(OnsiteRepulsion { total, nonlinear: total - params.omega_r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::hamiltonian::build_site_hamiltonian;
    use crate::operators::eig_sym;

    fn params() -> SystemParams {
        SystemParams::default()
    }

    #[test]
    fn rejects_ground_level() {
        assert_eq!(
            dressed_energy(&params(), Sector::Zero, Branch::Plus, 0),
            Err(DressedError::GroundLevelNotDressed)
        );
    }

    #[test]
    fn resonant_doublet_and_first_repulsion() {
        // Δ=0, η=0, s=0, g=1, ω_r=200: splitting 2g√n and
        // U₊(1) − ω_r = √2 − 1.
        let mut p = params();
        p.eta = 0.0;
        for n in 1..=4usize {
            let up = dressed_energy(&p, Sector::Zero, Branch::Plus, n).unwrap();
            let lo = dressed_energy(&p, Sector::Zero, Branch::Minus, n).unwrap();
            let split = 2.0 * p.g * (n as f64).sqrt();
            assert!((up - lo - split).abs() < 1e-12);
        }
        let u1 = onsite_repulsion(&p, Sector::Zero, Branch::Plus, 1).unwrap();
        assert!((u1.nonlinear - (2.0f64.sqrt() - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn eta_zero_collapses_to_jaynes_cummings_form() {
        let mut p = params();
        p.eta = 0.0;
        p.delta = 1.7;
        for s in Sector::ALL {
            for n in 1..=5usize {
                let up = dressed_energy(&p, s, Branch::Plus, n).unwrap();
                let lo = dressed_energy(&p, s, Branch::Minus, n).unwrap();
                let expect = (4.0 * n as f64 * p.g * p.g + p.delta * p.delta).sqrt();
                assert!((up - lo - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn matches_numeric_diagonalization() {
        // The formula against eig_sym across detunings, couplings, sectors.
        let mut p = params();
        p.n_max = 12;
        for delta in [0.0, 1.0, 2.0] {
            for eta in [0.0, 0.01, 1.2] {
                p.delta = delta;
                p.eta = eta;
                for s in Sector::ALL {
                    let h = build_site_hamiltonian(&p, s);
                    let numeric = eig_sym(&h).unwrap().real_values();
                    for n in 1..=10usize {
                        for branch in [Branch::Minus, Branch::Plus] {
                            let analytic = dressed_energy(&p, s, branch, n).unwrap();
                            let best = numeric
                                .iter()
                                .map(|v| (v - analytic).abs())
                                .fold(f64::INFINITY, f64::min);
                            assert!(
                                best <= 1e-9 * analytic.abs().max(1.0),
                                "Δ={delta}, η={eta}, s={s}, n={n}, {branch}: off by {best:e}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn ground_level_matches_numeric() {
        let mut p = params();
        p.delta = 1.0;
        p.eta = 1.2;
        for s in Sector::ALL {
            let h = build_site_hamiltonian(&p, s);
            let numeric = eig_sym(&h).unwrap().real_values();
            let analytic = ground_level_energy(&p, s);
            let best = numeric
                .iter()
                .map(|v| (v - analytic).abs())
                .fold(f64::INFINITY, f64::min);
            assert!(best <= 1e-9 * analytic.abs().max(1.0));
        }
    }

    #[test]
    fn repulsion_nonlinear_part_decays() {
        // At Δ=0, η=0: U₊(n) − ω_r = √(n+1) − √n, strictly decreasing → 0.
        let mut p = params();
        p.eta = 0.0;
        let mut last = f64::INFINITY;
        for n in 1..=200usize {
            let u = onsite_repulsion(&p, Sector::Zero, Branch::Plus, n).unwrap();
            let closed = ((n + 1) as f64).sqrt() - (n as f64).sqrt();
            // The subtraction cancels the n·ω_r ≈ 4e4 bulk, so the closed
            // form is recovered to |E|·eps, not to 1e-12.
            assert!((u.nonlinear - closed).abs() < 1e-10);
            assert!(u.nonlinear < last);
            last = u.nonlinear;
        }
        assert!(last < 0.05);
    }

    #[test]
    fn larger_detuning_weakens_nonlinearity() {
        let mut p = params();
        p.eta = 0.0;
        let at = |delta: f64| {
            let mut q = p.clone();
            q.delta = delta;
            onsite_repulsion(&q, Sector::Zero, Branch::Plus, 1)
                .unwrap()
                .nonlinear
                .abs()
        };
        assert!(at(2.0) < at(0.0));
    }
}
