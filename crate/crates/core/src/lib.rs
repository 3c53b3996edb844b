//! Mean-field phase diagrams for microwave photons in a 2D lattice of
//! transmission-line resonators, each coupled to an NV center through a
//! persistent-current qubit.
//!
//! The crate is organized around four layers:
//!
//! - [`operators`]: dense complex matrices on the truncated photon ⊗ qubit
//!   basis, tensor products, and two self-contained eigensolvers (real
//!   symmetric and general complex).
//! - [`model`]: physical parameter records, coupling-constant derivation
//!   from circuit geometry, single-site and mean-field Hamiltonian builders,
//!   and the analytic dressed spectrum / on-site repulsion.
//! - [`meanfield`]: minimization of the ground energy over the superfluid
//!   order parameter ψ and spin-sector competition.
//! - [`sweep`]: (μ, k) grid sweeps, phase-boundary extraction by bisection,
//!   and Mott-lobe metrics.
//!
//! Everything here is pure computation over `alloc`; IO, parallel sweep
//! drivers, and file formats live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod meanfield;
pub mod model;
pub mod operators;
pub mod sweep;
