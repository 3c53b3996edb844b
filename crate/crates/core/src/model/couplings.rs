//! Coupling rates from raw circuit geometry.
//!
//! This is the only SI-facing corner of the crate; the lattice model itself
//! works in units of g = 1. The rates are
//!
//!   g  = (I_p μ₀ r²/d) √(ω_r / 2ħL_r)       TLR-PCQ coupling
//!   η  = I_p μ₀ |γ_e| / r                    NV-PCQ coupling
//!   k  = 2 Z₀ C ω_r²                         photon hopping
//!   κ  = 4 Z₀² C_out² ω_r³                   TLR decay
//!
//! Units audit: η, k, κ are angular frequencies as written. The g formula
//! mixes a magnetic moment, a field per ampere, and the resonator
//! zero-point current; restoring ħ in the zero-point current
//! √(ħω_r/2L_r)/ħ = √(ω_r/2ħL_r) makes it an angular frequency. With the
//! reference geometry (L_r = 2 nH, ω_r/2π = 6 GHz, I_p = 600 nA,
//! r = 0.2 μm) this lands η/2π near 10⁵ Hz and g/2π in the 10⁵..10⁷ Hz
//! decade over d ∈ [50 nm, 5 μm], with g scaling exactly as 1/d; treat the
//! absolute scale of g as an order-of-magnitude estimate.

#[allow(unused_imports)] // resolves float math in no_std builds; shadowed when std is linked
use num_traits::Float;

use super::params::{DerivedCouplings, GeometryParams, ParamError};

/// Vacuum permeability μ₀ (T·m/A).
pub const MU_0: f64 = 1.256_637_062_12e-6;
/// Reduced Planck constant ħ (J·s).
pub const HBAR: f64 = 1.054_571_817e-34;
/// NV electronic gyromagnetic ratio magnitude, 2π·28.03 GHz/T (rad/s/T).
pub const NV_GAMMA_E_SI: f64 = 1.761e11;

/// One-line provenance of the normalization, attached to reports.
pub const UNITS_NOTE: &str = "rates in rad/s; eta, k, kappa evaluate the printed formulas \
     directly in SI, g restores hbar in the resonator zero-point current \
     (sqrt(omega_r/2*hbar*L_r)); absolute g is an order-of-magnitude estimate";

impl DerivedCouplings {
    /// Provenance note for the normalization used here.
    pub fn units_note(&self) -> &'static str {
        UNITS_NOTE
    }
}

/// Derive the four coupling rates from circuit geometry.
///
/// `gamma_e_si` is the electronic gyromagnetic ratio in rad/s/T; its sign
/// is irrelevant, the rate magnitudes are returned.
pub fn derive_couplings(
    geom: &GeometryParams,
    gamma_e_si: f64,
) -> Result<DerivedCouplings, ParamError> {
    geom.validate()?;
    let g_si = (geom.i_p * MU_0 * geom.r * geom.r / geom.d)
        * (geom.omega_r_si / (2.0 * HBAR * geom.l_r)).sqrt();
    let eta_si = geom.i_p * MU_0 * gamma_e_si.abs() / geom.r;
    let k_si = 2.0 * geom.z_0 * geom.c_hop * geom.omega_r_si * geom.omega_r_si;
    let kappa_si = 4.0
        * geom.z_0
        * geom.z_0
        * geom.c_out
        * geom.c_out
        * geom.omega_r_si
        * geom.omega_r_si
        * geom.omega_r_si;
    Ok(DerivedCouplings { g_si, eta_si, k_si, kappa_si })
}

/// Invert k = 2Z₀Cω_r² for the mutual capacitance giving a target hopping
/// rate (rad/s in, farad out).
pub fn capacitance_for_hopping(k_si: f64, z_0: f64, omega_r_si: f64) -> f64 {
    k_si / (2.0 * z_0 * omega_r_si * omega_r_si)
}

/// The reference geometry used throughout the feasibility discussion:
/// L_r = 2 nH, ω_r/2π = 6 GHz, I_p = 600 nA, r = 0.2 μm, d = 5 μm,
/// Z₀ = 50 Ω, C chosen for k/2π = 0.8 MHz, C_out = 1 fF.
pub fn reference_geometry() -> GeometryParams {
    use core::f64::consts::PI;
    let omega_r_si = 2.0 * PI * 6.0e9;
    GeometryParams {
        l_r: 2.0e-9,
        omega_r_si,
        i_p: 600.0e-9,
        r: 0.2e-6,
        d: 5.0e-6,
        z_0: 50.0,
        c_hop: capacitance_for_hopping(2.0 * PI * 0.8e6, 50.0, omega_r_si),
        c_out: 1.0e-15,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn eta_near_140_khz_within_factor_two() {
        let geom = reference_geometry();
        let c = derive_couplings(&geom, NV_GAMMA_E_SI).unwrap();
        let eta_hz = c.eta_si / (2.0 * PI);
        assert!(
            (70.0e3..=280.0e3).contains(&eta_hz),
            "eta/2pi = {eta_hz:e} outside the factor-2 window around 140 kHz"
        );
    }

    #[test]
    fn g_scales_exactly_as_inverse_distance() {
        let mut geom = reference_geometry();
        let g1 = derive_couplings(&geom, NV_GAMMA_E_SI).unwrap().g_si;
        geom.d /= 2.0;
        let g2 = derive_couplings(&geom, NV_GAMMA_E_SI).unwrap().g_si;
        assert_eq!(g2, 2.0 * g1);
    }

    #[test]
    fn g_decade_is_order_of_magnitude_consistent() {
        // d from 5 μm to 50 nm spans a 100× window; the quoted decade is
        // g/2π in [1.8, 180] MHz, checked to within an order of magnitude.
        let mut geom = reference_geometry();
        geom.d = 5.0e-6;
        let g_lo = derive_couplings(&geom, NV_GAMMA_E_SI).unwrap().g_si / (2.0 * PI);
        geom.d = 50.0e-9;
        let g_hi = derive_couplings(&geom, NV_GAMMA_E_SI).unwrap().g_si / (2.0 * PI);
        assert!(g_hi / g_lo - 100.0 < 1e-9);
        for (g, anchor) in [(g_lo, 1.8e6), (g_hi, 180.0e6)] {
            let ratio = g / anchor;
            assert!(
                (0.1..=10.0).contains(&ratio),
                "g/2pi = {g:e} not within an order of magnitude of {anchor:e}"
            );
        }
    }

    #[test]
    fn capacitance_inversion_matches_hand_value() {
        // k/2π = 0.8 MHz at Z₀ = 50 Ω, ω_r/2π = 6 GHz needs C ≈ 35 aF.
        let omega = 2.0 * PI * 6.0e9;
        let c = capacitance_for_hopping(2.0 * PI * 0.8e6, 50.0, omega);
        assert!((c - 35.4e-18).abs() < 0.5e-18, "C = {c:e}");
        // Round trip through the forward formula.
        let mut geom = reference_geometry();
        geom.c_hop = c;
        let k = derive_couplings(&geom, NV_GAMMA_E_SI).unwrap().k_si;
        assert!((k / (2.0 * PI) - 0.8e6).abs() < 1e-3);
    }

    #[test]
    fn monotonicities() {
        let base = reference_geometry();
        let g_at = |d: f64| {
            let mut geom = base.clone();
            geom.d = d;
            derive_couplings(&geom, NV_GAMMA_E_SI).unwrap().g_si
        };
        assert!(g_at(1e-6) > g_at(2e-6));

        let eta_at = |r: f64| {
            let mut geom = base.clone();
            geom.r = r;
            derive_couplings(&geom, NV_GAMMA_E_SI).unwrap().eta_si
        };
        assert!(eta_at(0.1e-6) > eta_at(0.2e-6));

        let k_at = |c: f64| {
            let mut geom = base.clone();
            geom.c_hop = c;
            derive_couplings(&geom, NV_GAMMA_E_SI).unwrap().k_si
        };
        assert!(k_at(2e-17) < k_at(4e-17));
    }

    #[test]
    fn rejects_nonpositive_geometry() {
        let mut geom = reference_geometry();
        geom.d = 0.0;
        assert_eq!(
            derive_couplings(&geom, NV_GAMMA_E_SI).unwrap_err().name,
            "d"
        );
    }
}
