//! Self-contained dense eigensolvers.
//!
//! Two routes with explicit accuracy contracts:
//!
//! - [`eig_sym`]: real symmetric input, Householder tridiagonalization
//!   followed by implicit-shift QL with eigenvector accumulation.
//!   Per-pair residual ‖M·v − λ·v‖₂ ≤ 1e−10·max(1, ‖M‖_max)·dim.
//! - [`eig_general`]: any square complex input, Householder reduction to
//!   upper Hessenberg form followed by implicitly shifted QR to Schur form,
//!   then triangular back-substitution for right eigenvectors.
//!   Per-pair residual ≤ 1e−8·max(1, ‖M‖_max)·dim.
//!
//! Both routes are deterministic: identical input bytes produce identical
//! output bytes. Eigenvalues are sorted by ascending real part, ties by
//! ascending imaginary part, and each eigenvector is canonicalized so that
//! its first component of non-negligible magnitude is real and positive.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
#[allow(unused_imports)] // resolves float math in no_std builds; shadowed when std is linked
use num_traits::Float;
use num_traits::Zero;

use super::matrix::DenseMatrix;

/// Residual slack of the symmetric solver, per pair: 1e−10·max(1, ‖M‖_max)·dim.
pub const SYM_RESIDUAL_FACTOR: f64 = 1e-10;
/// Residual slack of the general solver, per pair: 1e−8·max(1, ‖M‖_max)·dim.
pub const GENERAL_RESIDUAL_FACTOR: f64 = 1e-8;
/// Entries further apart than this are not considered a symmetric pair.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Eigenvalues, right eigenvectors, and per-pair residual norms.
#[derive(Debug, Clone)]
pub struct SpectrumResult {
    /// Eigenvalues, ascending by real part then imaginary part.
    pub values: Vec<Complex64>,
    /// Right eigenvectors as the columns of this matrix, unit Euclidean
    /// norm, ordered like `values`.
    pub vectors: DenseMatrix,
    /// ‖M·vᵢ − λᵢ·vᵢ‖₂ for each pair, against the original input matrix.
    pub residuals: Vec<f64>,
    /// Set when two eigenvalues coincide within the residual scale; for
    /// defective inputs the returned eigenvectors may be linearly dependent.
    pub degenerate: bool,
}

impl SpectrumResult {
    /// Eigenvector `i` as a column slice copy.
    pub fn vector(&self, i: usize) -> Vec<Complex64> {
        (0..self.vectors.rows()).map(|r| self.vectors[(r, i)]).collect()
    }

    /// Real parts of all eigenvalues.
    pub fn real_values(&self) -> Vec<f64> {
        self.values.iter().map(|z| z.re).collect()
    }
}

/// Errors from the eigensolvers.
#[derive(Debug, Clone, PartialEq)]
pub enum EigenError {
    /// Input is not square.
    NotSquare { rows: usize, cols: usize },
    /// `eig_sym` input violates real symmetry at the named entry.
    NotRealSymmetric { row: usize, col: usize },
    /// Iteration budget exhausted before deflation completed.
    NoConvergence { iterations: usize },
    /// A converged pair missed its residual contract.
    ResidualTooLarge { index: usize, residual: f64, bound: f64 },
}

impl fmt::Display for EigenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigenError::NotSquare { rows, cols } => {
                write!(f, "matrix is not square: {rows}x{cols}")
            }
            EigenError::NotRealSymmetric { row, col } => write!(
                f,
                "matrix is not real symmetric at entry ({row}, {col}): \
                 imaginary part nonzero or transpose mismatch beyond {SYMMETRY_TOL:e}"
            ),
            EigenError::NoConvergence { iterations } => {
                write!(f, "eigensolver failed to converge after {iterations} iterations")
            }
            EigenError::ResidualTooLarge { index, residual, bound } => write!(
                f,
                "eigenpair {index} residual {residual:e} exceeds contract bound {bound:e}"
            ),
        }
    }
}

/// Eigendecomposition of a real symmetric matrix.
///
/// The input must have exactly zero imaginary parts and satisfy
/// |m_ij − m_ji| ≤ 1e−12; violations are reported with the offending entry.
/// Eigenvalues come back in ascending order with orthonormal eigenvectors.
pub fn eig_sym(m: &DenseMatrix) -> Result<SpectrumResult, EigenError> {
    if !m.is_square() {
        return Err(EigenError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if let Some((row, col)) = m.real_symmetry_defect(SYMMETRY_TOL) {
        return Err(EigenError::NotRealSymmetric { row, col });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(SpectrumResult {
            values: Vec::new(),
            vectors: DenseMatrix::zeros(0, 0),
            residuals: Vec::new(),
            degenerate: false,
        });
    }

    // Work on the exactly symmetrized real part.
    let mut a = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = 0.5 * (m[(i, j)].re + m[(j, i)].re);
        }
    }

    let mut d = vec![0.0f64; n];
    let mut e = vec![0.0f64; n];
    tred2(&mut a, n, &mut d, &mut e);
    tql2(&mut a, n, &mut d, &mut e)?;

    // Ascending eigenvalue order; stable in the original index for exact ties.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&p, &q| d[p].total_cmp(&d[q]));

    let mut vectors = DenseMatrix::zeros(n, n);
    let mut values = Vec::with_capacity(n);
    for (col, &src) in order.iter().enumerate() {
        values.push(Complex64::new(d[src], 0.0));
        let mut sign = 1.0;
        for k in 0..n {
            let x = a[k * n + src];
            if x.abs() > 1e-12 {
                sign = if x < 0.0 { -1.0 } else { 1.0 };
                break;
            }
        }
        for row in 0..n {
            vectors[(row, col)] = Complex64::new(sign * a[row * n + src], 0.0);
        }
    }

    finish_spectrum(m, values, vectors, SYM_RESIDUAL_FACTOR)
}

/// Eigendecomposition of a general square complex matrix.
///
/// Eigenvalues are sorted by ascending real part (ties by imaginary part)
/// and each comes with a unit-norm right eigenvector. Nearly coincident
/// eigenvalues set the `degenerate` flag on the result; defective inputs
/// still satisfy the residual contract through a guarded back-substitution.
pub fn eig_general(m: &DenseMatrix) -> Result<SpectrumResult, EigenError> {
    if !m.is_square() {
        return Err(EigenError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(SpectrumResult {
            values: Vec::new(),
            vectors: DenseMatrix::zeros(0, 0),
            residuals: Vec::new(),
            degenerate: false,
        });
    }
    if n == 1 {
        return finish_spectrum(
            m,
            vec![m[(0, 0)]],
            DenseMatrix::identity(1),
            GENERAL_RESIDUAL_FACTOR,
        );
    }

    let mut h: Vec<Complex64> = m.entries().to_vec();
    let mut q = identity_flat(n);
    hessenberg(&mut h, &mut q, n);
    let scale = m.max_norm().max(1.0);
    schur(&mut h, &mut q, n, scale)?;

    let values_schur: Vec<Complex64> = (0..n).map(|i| h[i * n + i]).collect();
    let vectors_schur = triangular_eigenvectors(&h, &q, n, scale);

    // Sort by (Re, Im); stable in the Schur index for exact ties.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&p, &q_| {
        values_schur[p]
            .re
            .total_cmp(&values_schur[q_].re)
            .then(values_schur[p].im.total_cmp(&values_schur[q_].im))
    });

    let mut values = Vec::with_capacity(n);
    let mut vectors = DenseMatrix::zeros(n, n);
    for (col, &src) in order.iter().enumerate() {
        values.push(values_schur[src]);
        // Phase canonicalization: first non-negligible component real-positive.
        let mut phase = Complex64::new(1.0, 0.0);
        for k in 0..n {
            let x = vectors_schur[k * n + src];
            if x.norm() > 1e-12 {
                phase = x.conj() / x.norm();
                break;
            }
        }
        for row in 0..n {
            vectors[(row, col)] = phase * vectors_schur[row * n + src];
        }
    }

    finish_spectrum(m, values, vectors, GENERAL_RESIDUAL_FACTOR)
}

/// Residual check, degeneracy flag, and assembly shared by both routes.
fn finish_spectrum(
    m: &DenseMatrix,
    values: Vec<Complex64>,
    vectors: DenseMatrix,
    residual_factor: f64,
) -> Result<SpectrumResult, EigenError> {
    let n = values.len();
    let scale = m.max_norm().max(1.0);
    let bound = residual_factor * scale * (n as f64);
    let mut residuals = Vec::with_capacity(n);
    for i in 0..n {
        let v: Vec<Complex64> = (0..n).map(|row| vectors[(row, i)]).collect();
        let mv = m.mul_vec(&v);
        let mut acc = 0.0f64;
        for (row, &x) in mv.iter().enumerate() {
            acc += (x - values[i] * v[row]).norm_sqr();
        }
        let r = acc.sqrt();
        if r > bound {
            return Err(EigenError::ResidualTooLarge { index: i, residual: r, bound });
        }
        residuals.push(r);
    }
    let cluster = residual_factor * scale;
    let mut degenerate = false;
    for i in 1..n {
        if (values[i] - values[i - 1]).norm() <= cluster {
            degenerate = true;
            break;
        }
    }
    Ok(SpectrumResult { values, vectors, residuals, degenerate })
}

fn identity_flat(n: usize) -> Vec<Complex64> {
    let mut q = vec![Complex64::zero(); n * n];
    for i in 0..n {
        q[i * n + i] = Complex64::new(1.0, 0.0);
    }
    q
}

// ---------------------------------------------------------------------------
// Real symmetric route: Householder tridiagonalization + implicit-shift QL.
// ---------------------------------------------------------------------------

/// Householder reduction of the symmetric matrix `a` (n×n, row-major) to
/// tridiagonal form. On return `d` holds the diagonal, `e[1..]` the
/// subdiagonal (`e[0] = 0`), and `a` the accumulated orthogonal transform.
fn tred2(a: &mut [f64], n: usize, d: &mut [f64], e: &mut [f64]) {
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let mut scale = 0.0;
            for k in 0..=l {
                scale += a[i * n + k].abs();
            }
            if scale == 0.0 {
                e[i] = a[i * n + l];
            } else {
                for k in 0..=l {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                let f = a[i * n + l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                let mut f_acc = 0.0;
                for j in 0..=l {
                    a[j * n + i] = a[i * n + j] / h;
                    let mut g_acc = 0.0;
                    for k in 0..=j {
                        g_acc += a[j * n + k] * a[i * n + k];
                    }
                    for k in (j + 1)..=l {
                        g_acc += a[k * n + j] * a[i * n + k];
                    }
                    e[j] = g_acc / h;
                    f_acc += e[j] * a[i * n + j];
                }
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = a[i * n + j];
                    e[j] -= hh * f;
                    let g = e[j];
                    for k in 0..=j {
                        a[j * n + k] -= f * e[k] + g * a[i * n + k];
                    }
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for i in 0..n {
        if d[i] != 0.0 {
            for j in 0..i {
                let mut g = 0.0;
                for k in 0..i {
                    g += a[i * n + k] * a[k * n + j];
                }
                for k in 0..i {
                    a[k * n + j] -= g * a[k * n + i];
                }
            }
        }
        d[i] = a[i * n + i];
        a[i * n + i] = 1.0;
        for j in 0..i {
            a[j * n + i] = 0.0;
            a[i * n + j] = 0.0;
        }
    }
}

/// QL with implicit shifts on the tridiagonal (d, e), rotations accumulated
/// into the columns of `z`. Returns the total iteration count.
fn tql2(z: &mut [f64], n: usize, d: &mut [f64], e: &mut [f64]) -> Result<usize, EigenError> {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let per_value_cap = 50usize;
    let mut total_iter = 0usize;

    for l in 0..n {
        let mut iter = 0usize;
        loop {
            let mut m_idx = l;
            while m_idx < n - 1 {
                let dd = d[m_idx].abs() + d[m_idx + 1].abs();
                if e[m_idx].abs() <= f64::EPSILON * dd {
                    break;
                }
                m_idx += 1;
            }
            if m_idx == l {
                break;
            }
            iter += 1;
            total_iter += 1;
            if iter > per_value_cap {
                return Err(EigenError::NoConvergence { iterations: total_iter });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m_idx] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m_idx).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m_idx] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for k in 0..n {
                    f = z[k * n + i + 1];
                    z[k * n + i + 1] = s * z[k * n + i] + c * f;
                    z[k * n + i] = c * z[k * n + i] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m_idx] = 0.0;
        }
    }
    Ok(total_iter)
}

// ---------------------------------------------------------------------------
// General complex route: Hessenberg + implicitly shifted QR.
// ---------------------------------------------------------------------------

/// Complex Givens rotation sending (a, b) to (r, 0):
/// [c, s; −conj(s), c]·[a; b] = [r; 0] with c real.
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    let an = a.norm();
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, Complex64::zero());
    }
    if an == 0.0 {
        return (0.0, b.conj() / bn);
    }
    let r = an.hypot(bn);
    let c = an / r;
    let s = (a / an) * b.conj() / r;
    (c, s)
}

/// Reduce `h` to upper Hessenberg form by Givens similarity transforms,
/// accumulating them into `q` (so input = q · h · q†).
fn hessenberg(h: &mut [Complex64], q: &mut [Complex64], n: usize) {
    for col in 0..n.saturating_sub(2) {
        for row in (col + 2..n).rev() {
            let a = h[(row - 1) * n + col];
            let b = h[row * n + col];
            if b.is_zero() {
                continue;
            }
            let (c, s) = givens(a, b);
            apply_givens_rows(h, n, row - 1, row, c, s, col);
            apply_givens_cols(h, n, row - 1, row, c, s, n);
            apply_givens_cols(q, n, row - 1, row, c, s, n);
            h[row * n + col] = Complex64::zero();
        }
    }
}

/// Rows `i`, `j` of `h` ← G · rows, acting on columns `from..n`.
fn apply_givens_rows(
    h: &mut [Complex64],
    n: usize,
    i: usize,
    j: usize,
    c: f64,
    s: Complex64,
    from: usize,
) {
    let s_conj = s.conj();
    for k in from..n {
        let x = h[i * n + k];
        let y = h[j * n + k];
        h[i * n + k] = c * x + s * y;
        h[j * n + k] = -s_conj * x + c * y;
    }
}

/// Columns `i`, `j` of `h` ← columns · G†, acting on rows `0..upto`.
fn apply_givens_cols(
    h: &mut [Complex64],
    n: usize,
    i: usize,
    j: usize,
    c: f64,
    s: Complex64,
    upto: usize,
) {
    let s_conj = s.conj();
    for k in 0..upto {
        let x = h[k * n + i];
        let y = h[k * n + j];
        h[k * n + i] = c * x + s_conj * y;
        h[k * n + j] = -s * x + c * y;
    }
}

/// Implicitly shifted QR on the Hessenberg matrix `h`, reducing it to upper
/// triangular (complex Schur) form; rotations accumulate into `q`.
fn schur(h: &mut [Complex64], q: &mut [Complex64], n: usize, scale: f64) -> Result<(), EigenError> {
    let deflate_floor = f64::EPSILON * scale;
    let budget = 40 * n.max(1);
    let mut total_iter = 0usize;

    let mut hi = n - 1;
    loop {
        // Deflate converged subdiagonals from the bottom.
        while hi > 0 {
            let sub = h[hi * n + hi - 1].norm();
            let local = h[(hi - 1) * n + hi - 1].norm() + h[hi * n + hi].norm();
            if sub <= f64::EPSILON * local + deflate_floor {
                h[hi * n + hi - 1] = Complex64::zero();
                hi -= 1;
            } else {
                break;
            }
        }
        if hi == 0 {
            return Ok(());
        }

        // Active block [lo..=hi]: walk up until a negligible subdiagonal.
        let mut lo = hi;
        while lo > 0 {
            let sub = h[lo * n + lo - 1].norm();
            let local = h[(lo - 1) * n + lo - 1].norm() + h[lo * n + lo].norm();
            if sub <= f64::EPSILON * local + deflate_floor {
                h[lo * n + lo - 1] = Complex64::zero();
                break;
            }
            lo -= 1;
        }

        total_iter += 1;
        if total_iter > budget {
            return Err(EigenError::NoConvergence { iterations: total_iter });
        }

        // Wilkinson shift from the trailing 2×2, with a deterministic
        // exceptional shift every 12 stalled iterations.
        let shift = if total_iter.is_multiple_of(12) {
            h[hi * n + hi] + Complex64::new(1.5 * h[hi * n + hi - 1].norm(), 0.0)
        } else {
            wilkinson_shift(h, n, hi)
        };

        // Bulge chase down the active block.
        let mut x = h[lo * n + lo] - shift;
        let mut y = h[(lo + 1) * n + lo];
        for k in lo..hi {
            let (c, s) = givens(x, y);
            let row_from = if k > lo { k - 1 } else { lo };
            apply_givens_rows(h, n, k, k + 1, c, s, row_from);
            if k > lo {
                // The rotation annihilated the bulge below the subdiagonal.
                h[(k + 1) * n + (k - 1)] = Complex64::zero();
            }
            let col_upto = (k + 2).min(hi) + 1;
            apply_givens_cols(h, n, k, k + 1, c, s, col_upto);
            apply_givens_cols(q, n, k, k + 1, c, s, n);
            if k + 2 <= hi {
                x = h[(k + 1) * n + k];
                y = h[(k + 2) * n + k];
            }
        }
    }
}

/// Eigenvalue of the trailing 2×2 block closest to its lower-right entry.
fn wilkinson_shift(h: &[Complex64], n: usize, hi: usize) -> Complex64 {
    let a = h[(hi - 1) * n + hi - 1];
    let b = h[(hi - 1) * n + hi];
    let c = h[hi * n + hi - 1];
    let d = h[hi * n + hi];
    let half = 0.5 * (a + d);
    let disc = (0.5 * (a - d)).powi(2) + b * c;
    let root = disc.sqrt();
    let m1 = half + root;
    let m2 = half - root;
    if (m1 - d).norm() <= (m2 - d).norm() {
        m1
    } else {
        m2
    }
}

/// Right eigenvectors from the Schur form: back-substitution on the upper
/// triangular `t` for each diagonal eigenvalue, then rotation back via `q`.
/// Near-zero pivots (degenerate or defective spectra) are regularized to
/// eps·scale so the residual contract is still met.
fn triangular_eigenvectors(t: &[Complex64], q: &[Complex64], n: usize, scale: f64) -> Vec<Complex64> {
    let pivot_floor = f64::EPSILON * scale.max(f64::MIN_POSITIVE);
    let mut out = vec![Complex64::zero(); n * n];
    let mut y = vec![Complex64::zero(); n];
    for i in 0..n {
        let lambda = t[i * n + i];
        for v in y.iter_mut() {
            *v = Complex64::zero();
        }
        y[i] = Complex64::new(1.0, 0.0);
        for j in (0..i).rev() {
            let mut acc = Complex64::zero();
            for k in (j + 1)..=i {
                acc += t[j * n + k] * y[k];
            }
            let mut den = t[j * n + j] - lambda;
            if den.norm() < pivot_floor {
                den = Complex64::new(pivot_floor, 0.0);
            }
            y[j] = -acc / den;
        }
        // v = q · y, then normalize.
        let mut norm_sqr = 0.0;
        for row in 0..n {
            let mut acc = Complex64::zero();
            for k in 0..=i {
                acc += q[row * n + k] * y[k];
            }
            out[row * n + i] = acc;
            norm_sqr += acc.norm_sqr();
        }
        let inv = 1.0 / norm_sqr.sqrt();
        for row in 0..n {
            out[row * n + i] *= inv;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn sym_diagonal_sorts_ascending() {
        let m = DenseMatrix::from_real_diagonal(&[3.0, 1.0, 2.0]);
        let s = eig_sym(&m).unwrap();
        assert_eq!(s.real_values(), vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn sym_swap_matrix_doublet() {
        // [[0, g], [g, 0]] with g = 1 has eigenvalues ∓1.
        let m = DenseMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let s = eig_sym(&m).unwrap();
        assert!((s.values[0].re + 1.0).abs() < 1e-14);
        assert!((s.values[1].re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn sym_rejects_asymmetry_with_entry() {
        let m = DenseMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0 + 1e-9, 0.0]]);
        match eig_sym(&m) {
            Err(EigenError::NotRealSymmetric { row: 0, col: 1 }) => {}
            other => panic!("expected NotRealSymmetric(0,1), got {other:?}"),
        }
    }

    #[test]
    fn sym_rejects_imaginary_parts() {
        let mut m = DenseMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
        m[(1, 1)] = c(0.0, 1e-30);
        assert!(matches!(
            eig_sym(&m),
            Err(EigenError::NotRealSymmetric { row: 1, col: 1 })
        ));
    }

    #[test]
    fn sym_reconstructs_random_fixed_matrix() {
        // Deterministic pseudo-random symmetric 8×8 from a simple LCG.
        let n = 8;
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let x = next();
                m[(i, j)] = c(x, 0.0);
                m[(j, i)] = c(x, 0.0);
            }
        }
        let s = eig_sym(&m).unwrap();
        // V diag(λ) Vᵀ reconstructs M.
        let mut rec = DenseMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex64::zero();
                for k in 0..n {
                    acc += s.vectors[(i, k)] * s.values[k] * s.vectors[(j, k)];
                }
                rec[(i, j)] = acc;
            }
        }
        assert!(rec.sub(&m).max_norm() < 1e-12);
        // Orthonormality.
        for p in 0..n {
            for q in 0..n {
                let mut acc = Complex64::zero();
                for k in 0..n {
                    acc += s.vectors[(k, p)].conj() * s.vectors[(k, q)];
                }
                let expect = if p == q { 1.0 } else { 0.0 };
                assert!((acc.re - expect).abs() < 1e-12 && acc.im.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn general_sorts_by_real_part() {
        let mut m = DenseMatrix::zeros(2, 2);
        m[(0, 0)] = c(2.0, -0.5);
        m[(1, 1)] = c(1.0, 0.0);
        let s = eig_general(&m).unwrap();
        assert_eq!(s.values[0], c(1.0, 0.0));
        assert_eq!(s.values[1], c(2.0, -0.5));
    }

    #[test]
    fn general_matches_sym_on_hermitian_input() {
        let m = DenseMatrix::from_real_rows(&[
            &[2.0, 1.0, 0.0],
            &[1.0, -1.0, 0.5],
            &[0.0, 0.5, 3.0],
        ]);
        let sym = eig_sym(&m).unwrap();
        let gen = eig_general(&m).unwrap();
        for (a, b) in sym.values.iter().zip(gen.values.iter()) {
            assert!((a - b).norm() < 1e-9, "mismatch {a} vs {b}");
        }
    }

    #[test]
    fn general_handles_defective_jordan_block() {
        // [[0, 1], [0, 0]]: both eigenvalues 0, defective.
        let mut m = DenseMatrix::zeros(2, 2);
        m[(0, 1)] = c(1.0, 0.0);
        let s = eig_general(&m).unwrap();
        assert!(s.values[0].norm() < 1e-12);
        assert!(s.values[1].norm() < 1e-12);
        assert!(s.degenerate);
        for &r in &s.residuals {
            assert!(r <= GENERAL_RESIDUAL_FACTOR * 2.0);
        }
    }

    #[test]
    fn general_complex_rotation_spectrum() {
        // [[0, -1], [1, 0]] has eigenvalues ±i.
        let m = DenseMatrix::from_real_rows(&[&[0.0, -1.0], &[1.0, 0.0]]);
        let s = eig_general(&m).unwrap();
        assert!((s.values[0] - c(0.0, -1.0)).norm() < 1e-12);
        assert!((s.values[1] - c(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn determinism_bitwise() {
        let m = DenseMatrix::from_real_rows(&[
            &[2.0, 1.0, 0.3],
            &[1.0, -1.0, 0.5],
            &[0.3, 0.5, 3.0],
        ]);
        let a = eig_sym(&m).unwrap();
        let b = eig_sym(&m).unwrap();
        for (x, y) in a.values.iter().zip(b.values.iter()) {
            assert_eq!(x.re.to_bits(), y.re.to_bits());
        }
        for (x, y) in a.vectors.entries().iter().zip(b.vectors.entries().iter()) {
            assert_eq!(x.re.to_bits(), y.re.to_bits());
            assert_eq!(x.im.to_bits(), y.im.to_bits());
        }
    }
}
