//! Physical model: parameter records, coupling derivation from circuit
//! geometry, Hamiltonian builders, and the analytic dressed spectrum.

mod couplings;
mod dressed;
mod hamiltonian;
mod params;

pub use couplings::{
    capacitance_for_hopping, derive_couplings, reference_geometry, HBAR, MU_0, NV_GAMMA_E_SI,
    UNITS_NOTE,
};
pub use dressed::{
    dressed_energy, effective_detuning, ground_level_energy, onsite_repulsion, DressedError,
    OnsiteRepulsion,
};
pub use hamiltonian::{build_meanfield_matrix, build_site_hamiltonian, chi, flux_factor};
pub use params::{
    Branch, DerivedCouplings, GeometryParams, ParamError, Sector, SystemParams,
};
