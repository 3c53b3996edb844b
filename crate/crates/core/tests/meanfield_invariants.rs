//! Cross-module invariants of the mean-field layer: flux reduction at the
//! solver level, monotone trapping along k, dissipative-limit route
//! agreement, self-consistency, and truncation stability.

use jchmf::meanfield::{
    ground_value, minimize_psi, minimize_psi_with_route, EigenRoute, MinimizeSettings, Phase,
};
use jchmf::model::{flux_factor, Sector, SystemParams};
use jchmf::sweep::{sweep_grid, SweepSpec};

fn base() -> SystemParams {
    SystemParams::default()
}

fn fast_settings() -> MinimizeSettings {
    let mut s = MinimizeSettings::default();
    s.coarse_points = 61;
    s
}

#[test]
fn flux_reduction_holds_at_the_solver_level() {
    // psi*(k, α) equals psi*(k·cos2πα, 0) bitwise: the matrices coincide,
    // so the whole minimization does too.
    let settings = fast_settings();
    for alpha in [0.1, 0.2, 0.24] {
        for (mu, k) in [(199.2, 0.05), (199.45, 0.02), (198.9, 0.08)] {
            let mut with_flux = base();
            with_flux.mu = mu;
            with_flux.k = k;
            with_flux.alpha = alpha;
            let mut rescaled = base();
            rescaled.mu = mu;
            rescaled.k = k * flux_factor(alpha);
            rescaled.alpha = 0.0;
            let a = minimize_psi(&with_flux, Sector::Zero, &settings).unwrap();
            let b = minimize_psi(&rescaled, Sector::Zero, &settings).unwrap();
            assert_eq!(a.psi_star.to_bits(), b.psi_star.to_bits());
            assert!((a.energy - b.energy).abs() <= 1e-10);
        }
    }
}

#[test]
fn monotone_trapping_along_k() {
    // At fixed μ inside a lobe, ψ*(k) is zero below the boundary and grows
    // continuously above it; the transition is second order, so no jump
    // exceeds the scale set by the k resolution.
    let settings = fast_settings();
    let mu = 199.3;
    let k_grid: Vec<f64> = (0..30).map(|j| 0.002 + j as f64 * 0.002).collect();
    let mut last_psi = 0.0f64;
    let mut seen_sf = false;
    for &k in &k_grid {
        let mut p = base();
        p.mu = mu;
        p.k = k;
        let m = minimize_psi(&p, Sector::Zero, &settings).unwrap();
        if m.psi_star > settings.sf_threshold {
            seen_sf = true;
        } else {
            assert!(!seen_sf, "re-entered MI at k = {k}");
        }
        assert!(
            m.psi_star >= last_psi - 1e-6,
            "psi* decreased from {last_psi} to {} at k = {k}",
            m.psi_star
        );
        assert!(
            (m.psi_star - last_psi).abs() < 0.3,
            "jump larger than the grid scale at k = {k}"
        );
        last_psi = m.psi_star;
    }
    assert!(seen_sf, "window should end superfluid");
}

#[test]
fn dissipationless_routes_agree_everywhere_sampled() {
    let settings = fast_settings();
    for i in 0..4 {
        for j in 0..4 {
            let mut p = base();
            p.mu = 198.9 + 0.2 * i as f64;
            p.k = 0.01 + 0.02 * j as f64;
            let sym = minimize_psi_with_route(&p, Sector::Zero, &settings, EigenRoute::SelfAdjoint)
                .unwrap();
            let gen =
                minimize_psi_with_route(&p, Sector::Zero, &settings, EigenRoute::General).unwrap();
            assert!(
                (sym.psi_star - gen.psi_star).abs() <= 1e-9,
                "mu = {}, k = {}: psi {} vs {}",
                p.mu,
                p.k,
                sym.psi_star,
                gen.psi_star
            );
            assert!((sym.energy - gen.energy).abs() <= 1e-9);
        }
    }
}

#[test]
fn stationarity_self_consistency() {
    // 2zk·cos(2πα)·ψ* = zk·cos(2πα)·⟨a + a⁺⟩ at the optimum, i.e.
    // ψ* ≈ Re⟨a⟩, whenever the point is superfluid.
    let settings = fast_settings();
    for (mu, k) in [(199.3, 0.05), (199.15, 0.08), (199.45, 0.04)] {
        let mut p = base();
        p.mu = mu;
        p.k = k;
        let m = minimize_psi(&p, Sector::Zero, &settings).unwrap();
        if m.psi_star > settings.sf_threshold {
            assert!(
                (m.a_expect - m.psi_star).abs() <= 1e-3 * m.psi_star.max(1.0),
                "mu = {mu}, k = {k}: psi* = {}, <a> = {}",
                m.psi_star,
                m.a_expect
            );
        }
    }
}

#[test]
fn truncation_stability_spot_checks() {
    // ψ* moves by ≤ 1e−6 when n_max goes 12 → 16 (full-window version runs
    // in the acceptance suite).
    let settings12 = fast_settings();
    let mut settings16 = fast_settings();
    // Keep the identical ψ search so only the truncation differs.
    settings16.psi_max = settings12.psi_max;
    for (mu, k) in [(199.3, 0.05), (199.1, 0.03), (199.5, 0.02)] {
        let mut p12 = base();
        p12.mu = mu;
        p12.k = k;
        let mut p16 = p12.clone();
        p16.n_max = 16;
        let a = minimize_psi(&p12, Sector::Zero, &settings12).unwrap();
        let b = minimize_psi(&p16, Sector::Zero, &settings16).unwrap();
        assert!(
            (a.psi_star - b.psi_star).abs() <= 1e-6,
            "mu = {mu}, k = {k}: {} vs {}",
            a.psi_star,
            b.psi_star
        );
    }
}

#[test]
fn ground_value_dissipative_branch_is_finite_and_lower_imaginary() {
    // Sanity of the complex branch inside a sweepable window.
    let settings = fast_settings();
    let mut p = base();
    p.mu = 199.3;
    p.k = 0.03;
    p.gamma_qubit = 0.05;
    p.kappa = 0.05;
    let g = ground_value(&p, Sector::Zero, 0.2, &settings).unwrap();
    assert!(g.energy.is_finite());
    assert!(g.a_expect.is_finite());
}

#[test]
fn sweep_window_produces_lobed_structure() {
    // A small resonant window shows MI at small k and SF at large k for
    // μ inside the first lobe.
    let mut settings = fast_settings();
    settings.coarse_points = 41;
    settings.refine_tol = 1e-6;
    // k_max stays at 0.06: the coarse scan evaluates every ψ up to psi_max,
    // and deeper-SF corners push the top-Fock occupation past the guard at
    // n_max = 12.
    let spec = SweepSpec {
        mu_min: 199.05,
        mu_max: 199.5,
        mu_points: 5,
        k_min: 5e-4,
        k_max: 0.06,
        k_points: 7,
        base_params: base(),
        settings,
    };
    let result = sweep_grid(&spec).unwrap();
    for i in 0..spec.mu_points {
        assert_eq!(result.at(i, 0).phase, Phase::MottInsulator, "row {i} at k_min");
    }
    assert!(result.grid.iter().any(|c| c.phase == Phase::Superfluid));
    assert!(!result.boundary.is_empty());
    assert!(result.mott_area_fraction > 0.0 && result.mott_area_fraction < 1.0);
}
