//! Truncated bosonic and spin matrix kernel.
//!
//! Basis convention, operator matrices, tensor products, and the two
//! eigensolvers. Everything here is a pure function of its inputs and safe
//! to call concurrently.

mod eigen;
mod matrix;

pub use eigen::{
    eig_general, eig_sym, EigenError, SpectrumResult, GENERAL_RESIDUAL_FACTOR,
    SYMMETRY_TOL, SYM_RESIDUAL_FACTOR,
};
pub use matrix::DenseMatrix;

use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
#[allow(unused_imports)] // resolves float math in no_std builds; shadowed when std is linked
use num_traits::Float;

/// Position of a product state |n⟩ ⊗ |q⟩ in the flat site basis.
///
/// `n` is the photon number (0..=n_max) and `q` the qubit level, 0 for |g⟩
/// and 1 for |e⟩. The flat index is `2·n + q`, so the qubit is the fast
/// index and the full site dimension is `2·(n_max + 1)`. This ordering is
/// the bit-exact contract for every matrix in the crate.
///
/// The NV spin-1 degree of freedom is deliberately not part of the matrix
/// basis: S_z commutes with the mean-field Hamiltonian, so it enters only
/// as a conserved sector label s ∈ {−1, 0, +1} (see `model::Sector`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisIndex {
    /// Photon number, 0..=n_max.
    pub n: usize,
    /// Qubit level: 0 = |g⟩, 1 = |e⟩.
    pub q: usize,
}

impl BasisIndex {
    /// Flat index 2·n + q.
    #[inline]
    pub fn flat(self) -> usize {
        2 * self.n + self.q
    }

    /// Inverse of [`BasisIndex::flat`].
    #[inline]
    pub fn from_flat(idx: usize) -> Self {
        BasisIndex { n: idx / 2, q: idx % 2 }
    }

    /// Dimension of the site basis at the given Fock truncation.
    #[inline]
    pub fn dimension(n_max: usize) -> usize {
        2 * (n_max + 1)
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}, {}⟩", self.n, if self.q == 0 { "g" } else { "e" })
    }
}

/// Error from operator constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperatorError {
    /// The Fock truncation admits no dynamics.
    TruncationTooSmall { n_max: usize },
}

impl fmt::Display for OperatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorError::TruncationTooSmall { n_max } => write!(
                f,
                "Fock truncation n_max = {n_max} rejected: at least one photon \
                 level is needed to represent any dynamics"
            ),
        }
    }
}

/// Truncated ladder operators on the (n_max+1)-dimensional Fock space.
///
/// `annihilate[n−1, n] = √n` for 1 ≤ n ≤ n_max, zero elsewhere; `create`
/// is its conjugate transpose. Rejects `n_max = 0`.
pub fn ladder_ops(n_max: usize) -> Result<(DenseMatrix, DenseMatrix), OperatorError> {
    if n_max == 0 {
        return Err(OperatorError::TruncationTooSmall { n_max });
    }
    let dim = n_max + 1;
    let mut annihilate = DenseMatrix::zeros(dim, dim);
    for n in 1..dim {
        annihilate[(n - 1, n)] = Complex64::new((n as f64).sqrt(), 0.0);
    }
    let create = annihilate.adjoint();
    Ok((annihilate, create))
}

/// Qubit operators in the (|g⟩, |e⟩) basis:
/// σ_z = diag(−1, +1), σ⁺|g⟩ = |e⟩, σ⁻ = (σ⁺)†.
pub fn pauli_ops() -> (DenseMatrix, DenseMatrix, DenseMatrix) {
    let mut sigma_z = DenseMatrix::zeros(2, 2);
    sigma_z[(0, 0)] = Complex64::new(-1.0, 0.0);
    sigma_z[(1, 1)] = Complex64::new(1.0, 0.0);
    let mut sigma_plus = DenseMatrix::zeros(2, 2);
    sigma_plus[(1, 0)] = Complex64::new(1.0, 0.0);
    let sigma_minus = sigma_plus.adjoint();
    (sigma_z, sigma_plus, sigma_minus)
}

/// Kronecker product with the [`BasisIndex`] ordering: the second factor is
/// the fast index, `kron(A, B)[(i·rB + p, j·cB + q)] = A[i,j]·B[p,q]`.
pub fn kron(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let (ra, ca) = (a.rows(), a.cols());
    let (rb, cb) = (b.rows(), b.cols());
    let mut out = DenseMatrix::zeros(ra * rb, ca * cb);
    for i in 0..ra {
        for j in 0..ca {
            let aij = a[(i, j)];
            if aij == Complex64::new(0.0, 0.0) {
                continue;
            }
            for p in 0..rb {
                for q in 0..cb {
                    out[(i * rb + p, j * cb + q)] = aij * b[(p, q)];
                }
            }
        }
    }
    out
}

/// Expectation ⟨v|M|v⟩ for a (not necessarily normalized) state vector.
pub fn expectation(m: &DenseMatrix, v: &[Complex64]) -> Complex64 {
    let mv = m.mul_vec(v);
    let mut num = Complex64::new(0.0, 0.0);
    let mut den = 0.0;
    for (a, b) in v.iter().zip(mv.iter()) {
        num += a.conj() * b;
        den += a.norm_sqr();
    }
    num / den
}

/// Convenience: eigenvalues of `m` under the symmetric route as real numbers.
pub fn sym_eigenvalues(m: &DenseMatrix) -> Result<Vec<f64>, EigenError> {
    Ok(eig_sym(m)?.real_values())
}
