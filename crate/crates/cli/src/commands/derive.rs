//! Coupling rates from circuit geometry: a text report with the rates in
//! angular-frequency and /2π form, the capacitance inversion check, and the
//! exact-1/d sweep table for g.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::Path;

use jchmf::model::{capacitance_for_hopping, derive_couplings};

use crate::config::GeometryConfig;
use crate::CliError;

pub fn run(
    config: &GeometryConfig,
    gamma_e_si: f64,
    out_prefix: Option<&Path>,
) -> Result<(), CliError> {
    let geom = &config.geometry;
    let couplings = derive_couplings(geom, gamma_e_si)
        .map_err(|e| CliError::Config(crate::config::ConfigError::Invalid(e)))?;

    let mut report = String::new();
    let two_pi = 2.0 * PI;
    writeln!(report, "coupling rates derived from circuit geometry").unwrap();
    writeln!(report, "  note: {}", couplings.units_note()).unwrap();
    writeln!(report).unwrap();
    for (name, rate) in [
        ("g    ", couplings.g_si),
        ("eta  ", couplings.eta_si),
        ("k    ", couplings.k_si),
        ("kappa", couplings.kappa_si),
    ] {
        writeln!(
            report,
            "  {name} = {rate:.6e} rad/s    {name}/2pi = {:.6e} Hz",
            rate / two_pi
        )
        .unwrap();
    }
    writeln!(report).unwrap();
    writeln!(
        report,
        "  capacitance inversion: k = 2 Z0 C omega_r^2 at the configured k gives C = {:.6e} F \
         (configured c_hop = {:.6e} F)",
        capacitance_for_hopping(couplings.k_si, geom.z_0, geom.omega_r_si),
        geom.c_hop
    )
    .unwrap();
    writeln!(report).unwrap();
    writeln!(report, "  g against PCQ-to-conductor distance (exact 1/d):").unwrap();
    writeln!(report, "    {:>12}  {:>14}  {:>10}", "d (m)", "g/2pi (Hz)", "ratio").unwrap();
    let mut d = 5.0e-6;
    let mut last_g: Option<f64> = None;
    while d > 49.0e-9 {
        let mut g2 = geom.clone();
        g2.d = d;
        let c = derive_couplings(&g2, gamma_e_si)
            .map_err(|e| CliError::Config(crate::config::ConfigError::Invalid(e)))?;
        let ghz = c.g_si / two_pi;
        let ratio = match last_g {
            Some(prev) => format!("{:.6}", ghz / prev),
            None => "-".to_string(),
        };
        writeln!(report, "    {d:>12.4e}  {ghz:>14.6e}  {ratio:>10}").unwrap();
        last_g = Some(ghz);
        d /= 2.0;
    }
    // Close the quoted range with the 50 nm endpoint.
    let mut g2 = geom.clone();
    g2.d = 50.0e-9;
    let c = derive_couplings(&g2, gamma_e_si)
        .map_err(|e| CliError::Config(crate::config::ConfigError::Invalid(e)))?;
    writeln!(
        report,
        "    {:>12.4e}  {:>14.6e}  {:>10}",
        50.0e-9,
        c.g_si / two_pi,
        "-"
    )
    .unwrap();

    print!("{report}");
    if let Some(prefix) = out_prefix {
        let path = prefix.with_extension("txt");
        std::fs::write(&path, report)?;
        println!("# wrote {}", path.display());
    }
    Ok(())
}
