//! Physical parameter records and the conserved-sector / branch labels.

use core::fmt;

/// All physical and numerical parameters of one lattice site plus lattice
/// constants, in units where ħ = 1 and the TLR-PCQ coupling g is the energy
/// scale (normally g = 1).
#[derive(Debug, Clone, PartialEq)]
pub struct SystemParams {
    /// Resonator frequency ω_r.
    pub omega_r: f64,
    /// Detuning Δ = ω_r − ω₀; the qubit frequency is housed as ω₀ = ω_r − Δ.
    pub delta: f64,
    /// TLR-PCQ coupling g, the energy unit.
    pub g: f64,
    /// NV-PCQ coupling η.
    pub eta: f64,
    /// NV zero-field splitting D.
    pub d_zfs: f64,
    /// Electronic gyromagnetic ratio γ_e (energy per tesla).
    pub gamma_e: f64,
    /// Magnetic field B_z at the NV (tesla).
    pub b_z: f64,
    /// Chemical potential μ.
    pub mu: f64,
    /// Photon hopping rate k between nearest-neighbor resonators.
    pub k: f64,
    /// Nearest-neighbor count z (4 for the square lattice).
    pub z: u32,
    /// Flux quanta per plaquette α; hopping is rescaled by cos(2πα).
    pub alpha: f64,
    /// Qubit decay rate Γ.
    pub gamma_qubit: f64,
    /// Photon decay rate κ.
    pub kappa: f64,
    /// Fock truncation: photon numbers 0..=n_max are represented.
    pub n_max: usize,
}

impl Default for SystemParams {
    /// The common lattice parameter set of the shipped figure configs:
    /// g = 1, ω_r = 200, D = 100, γ_e = −10³, η = 0.01, B_z = 0.0005 T,
    /// Δ = 0, no flux, no dissipation, n_max = 12.
    fn default() -> Self {
        SystemParams {
            omega_r: 200.0,
            delta: 0.0,
            g: 1.0,
            eta: 0.01,
            d_zfs: 100.0,
            gamma_e: -1e3,
            b_z: 0.0005,
            mu: 199.3,
            k: 0.01,
            z: 4,
            alpha: 0.0,
            gamma_qubit: 0.0,
            kappa: 0.0,
            n_max: 12,
        }
    }
}

impl SystemParams {
    /// Qubit frequency ω₀ = ω_r − Δ.
    #[inline]
    pub fn omega_0(&self) -> f64 {
        self.omega_r - self.delta
    }

    /// Site matrix dimension 2(n_max + 1).
    #[inline]
    pub fn dimension(&self) -> usize {
        2 * (self.n_max + 1)
    }

    /// Check the record invariants. The flux α is not constrained here;
    /// see [`SystemParams::alpha_outside_reproduction_range`].
    pub fn validate(&self) -> Result<(), ParamError> {
        let finite = [
            ("omega_r", self.omega_r),
            ("delta", self.delta),
            ("g", self.g),
            ("eta", self.eta),
            ("d_zfs", self.d_zfs),
            ("gamma_e", self.gamma_e),
            ("b_z", self.b_z),
            ("mu", self.mu),
            ("k", self.k),
            ("alpha", self.alpha),
            ("gamma_qubit", self.gamma_qubit),
            ("kappa", self.kappa),
        ];
        for (name, v) in finite {
            if !v.is_finite() {
                return Err(ParamError::new(name, "must be finite"));
            }
        }
        if self.g <= 0.0 {
            return Err(ParamError::new("g", "must be strictly positive (it is the energy unit)"));
        }
        if self.n_max < 4 {
            return Err(ParamError::new("n_max", "must be at least 4"));
        }
        if self.z < 1 {
            return Err(ParamError::new("z", "must be at least 1"));
        }
        if self.k < 0.0 {
            return Err(ParamError::new("k", "must be nonnegative"));
        }
        if self.gamma_qubit < 0.0 {
            return Err(ParamError::new("gamma_qubit", "must be nonnegative"));
        }
        if self.kappa < 0.0 {
            return Err(ParamError::new("kappa", "must be nonnegative"));
        }
        Ok(())
    }

    /// The reproduction runs explore α inside [0, 1/4]; other values are
    /// accepted but worth flagging, e.g. in a CLI run header.
    pub fn alpha_outside_reproduction_range(&self) -> bool {
        !(0.0..=0.25).contains(&self.alpha)
    }

    /// `true` when the single-site matrices are real symmetric (Γ = κ = 0).
    #[inline]
    pub fn is_dissipationless(&self) -> bool {
        self.gamma_qubit == 0.0 && self.kappa == 0.0
    }
}

/// Raw circuit geometry from which the couplings are derived, SI units.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometryParams {
    /// Resonator inductance L_r (henry).
    pub l_r: f64,
    /// Resonator angular frequency ω_r (radians/second).
    pub omega_r_si: f64,
    /// Persistent current I_p in the PCQ loop (ampere).
    pub i_p: f64,
    /// PCQ loop radius r (meter).
    pub r: f64,
    /// Distance d between the PCQ and the TLR central conductor (meter).
    pub d: f64,
    /// Characteristic impedance Z₀ (ohm).
    pub z_0: f64,
    /// Mutual coupling capacitance C between resonator ends (farad).
    pub c_hop: f64,
    /// Output capacitance C_out (farad).
    pub c_out: f64,
}

impl GeometryParams {
    pub fn validate(&self) -> Result<(), ParamError> {
        let fields = [
            ("l_r", self.l_r),
            ("omega_r_si", self.omega_r_si),
            ("i_p", self.i_p),
            ("r", self.r),
            ("d", self.d),
            ("z_0", self.z_0),
            ("c_hop", self.c_hop),
            ("c_out", self.c_out),
        ];
        for (name, v) in fields {
            if !(v.is_finite() && v > 0.0) {
                return Err(ParamError::new(name, "must be finite and strictly positive"));
            }
        }
        Ok(())
    }
}

/// Coupling rates derived from circuit geometry, all in radians/second.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedCouplings {
    /// TLR-PCQ coupling rate g.
    pub g_si: f64,
    /// NV-PCQ coupling rate η (magnitude).
    pub eta_si: f64,
    /// Photon hopping rate k.
    pub k_si: f64,
    /// TLR decay rate κ.
    pub kappa_si: f64,
}

/// NV spin projection sector. S_z commutes with the mean-field
/// Hamiltonian, so the spin-1 degree of freedom enters every matrix only
/// through this conserved c-number label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sector {
    /// m_s = −1.
    MinusOne,
    /// m_s = 0.
    Zero,
    /// m_s = +1.
    PlusOne,
}

impl Sector {
    /// All sectors in natural m_s order.
    pub const ALL: [Sector; 3] = [Sector::MinusOne, Sector::Zero, Sector::PlusOne];

    /// Sector preference for exact energy ties in the mean-field
    /// competition: smallest |s| first, then +1 over −1.
    pub const TIE_ORDER: [Sector; 3] = [Sector::Zero, Sector::PlusOne, Sector::MinusOne];

    /// The spin projection as a real number.
    #[inline]
    pub fn s(self) -> f64 {
        match self {
            Sector::MinusOne => -1.0,
            Sector::Zero => 0.0,
            Sector::PlusOne => 1.0,
        }
    }

    /// The spin projection as an integer.
    #[inline]
    pub fn s_int(self) -> i8 {
        match self {
            Sector::MinusOne => -1,
            Sector::Zero => 0,
            Sector::PlusOne => 1,
        }
    }

    /// Eigenvalue of S⁺S⁻ in this sector: 2 − s² + s, i.e. 0, 2, 2 for
    /// s = −1, 0, +1.
    #[inline]
    pub fn splus_sminus(self) -> f64 {
        let s = self.s();
        2.0 - s * s + s
    }

    /// The ½S⁺S⁻ contribution to the conserved excitation number N_p.
    #[inline]
    pub fn half_splus_sminus(self) -> f64 {
        0.5 * self.splus_sminus()
    }

    pub fn from_int(s: i64) -> Result<Sector, ParamError> {
        match s {
            -1 => Ok(Sector::MinusOne),
            0 => Ok(Sector::Zero),
            1 => Ok(Sector::PlusOne),
            _ => Err(ParamError::new("sector", "must be one of -1, 0, +1")),
        }
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.s_int())
    }
}

/// Upper (+) or lower (−) dressed branch at fixed excitation number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    #[inline]
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::Plus => write!(f, "+"),
            Branch::Minus => write!(f, "-"),
        }
    }
}

/// A parameter record violated one of its invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamError {
    pub name: &'static str,
    pub requirement: &'static str,
}

impl ParamError {
    pub fn new(name: &'static str, requirement: &'static str) -> Self {
        ParamError { name, requirement }
    }
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parameter `{}` {}", self.name, self.requirement)
    }
}
