//! Dense complex matrices in row-major order.
//!
//! Site Hamiltonians in this crate are at most 2(n_max+1) ≲ 60 square, so
//! dense storage is used throughout; there is no sparsity machinery.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;
use num_traits::Zero;

/// Dense matrix of complex numbers, row-major.
///
/// Entries are dimensionless in units where ħ = 1 and the reference energy
/// scale is the qubit-resonator coupling g. Out-of-range access panics; it
/// is a programming error, not a runtime branch.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl DenseMatrix {
    /// All-zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex64::zero(); rows * cols],
        }
    }

    /// Identity of dimension `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Diagonal matrix from real entries.
    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        m
    }

    /// Build from nested rows of real numbers (test and example helper).
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = Complex64::new(x, 0.0);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Raw row-major entries.
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = DenseMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                let rhs_row = &rhs.entries[l * rhs.cols..(l + 1) * rhs.cols];
                let out_row = &mut out.entries[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, &b) in out_row.iter_mut().zip(rhs_row.iter()) {
                    *o += a * b;
                }
            }
        }
        out
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        let mut out = vec![Complex64::zero(); self.rows];
        for (o, row) in out.iter_mut().zip(self.entries.chunks_exact(self.cols.max(1))) {
            let mut acc = Complex64::zero();
            for (&a, &x) in row.iter().zip(v.iter()) {
                acc += a * x;
            }
            *o = acc;
        }
        out
    }

    /// Entrywise sum.
    pub fn add(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (o, &b) in out.entries.iter_mut().zip(rhs.entries.iter()) {
            *o += b;
        }
        out
    }

    /// Entrywise difference.
    pub fn sub(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (o, &b) in out.entries.iter_mut().zip(rhs.entries.iter()) {
            *o -= b;
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, c: Complex64) -> DenseMatrix {
        let mut out = self.clone();
        for o in out.entries.iter_mut() {
            *o *= c;
        }
        out
    }

    /// Plain transpose (no conjugation).
    pub fn transpose(&self) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    /// Largest entry magnitude, max_{ij} |a_ij|.
    pub fn max_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Commutator [self, rhs] = self·rhs − rhs·self.
    pub fn commutator(&self, rhs: &DenseMatrix) -> DenseMatrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// `true` iff every entry has an exactly zero imaginary part and
    /// |a_ij − a_ji| ≤ `tol`.
    pub fn is_real_symmetric(&self, tol: f64) -> bool {
        self.real_symmetry_defect(tol).is_none()
    }

    /// First entry violating real symmetry, if any.
    pub fn real_symmetry_defect(&self, tol: f64) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((self.rows, self.cols));
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self[(i, j)].im != 0.0 {
                    return Some((i, j));
                }
                if j > i && (self[(i, j)].re - self[(j, i)].re).abs() > tol {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `true` iff ‖self − self†‖_max ≤ tol.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                let d = self[(i, j)] - self[(j, i)].conj();
                if d.norm() > tol {
                    return false;
                }
            }
        }
        true
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = Complex64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.entries[i * self.cols + j]
    }
}
