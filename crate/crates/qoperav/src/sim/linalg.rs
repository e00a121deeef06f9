// SPDX-License-Identifier: Apache-2.0

//! Small dense complex matrices and the eigensolvers the oracle needs.
//!
//! Hermitian matrices are diagonalized by cyclic Jacobi sweeps. A unitary
//! matrix is diagonalized through its commuting Hermitian parts
//! H = (U + U†)/2 and K = (U − U†)/(2i): H first, then K re-diagonalized
//! inside each degenerate eigenspace of H, which yields joint eigenvectors
//! even for degenerate or conjugate-pair eigenvalues.

use num_complex::Complex64;
use std::f64::consts::TAU;
use thiserror::Error;

/// Square, row-major complex matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        CMatrix {
            dim,
            data: vec![Complex64::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::ONE);
        }
        m
    }

    /// Builds a matrix from rows; panics if the rows are not square.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let dim = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == dim),
            "rows must form a square matrix"
        );
        CMatrix {
            dim,
            data: rows.concat(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn dagger(&self) -> CMatrix {
        let mut out = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.set(c, r, self.get(r, c).conj());
            }
        }
        out
    }

    pub fn mul(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a == Complex64::ZERO {
                    continue;
                }
                for c in 0..n {
                    let v = out.get(r, c) + a * rhs.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.dim, v.len(), "dimension mismatch");
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }

    pub fn column(&self, col: usize) -> Vec<Complex64> {
        (0..self.dim).map(|r| self.get(r, col)).collect()
    }

    /// Largest elementwise absolute difference.
    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Deviation of U†U from the identity, as a max-abs entry.
    pub fn unitarity_error(&self) -> f64 {
        self.dagger()
            .mul(self)
            .max_abs_diff(&CMatrix::identity(self.dim))
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum LinalgError {
    #[error("matrix is not unitary (max deviation {0:.3e})")]
    NotUnitary(f64),
    #[error("eigensolver did not converge")]
    NoConvergence,
}

const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in ascending order and the matching orthonormal
/// eigenvectors as columns. Only the Hermitian part of the input is read
/// (entries below the diagonal are taken as conjugates of those above).
pub fn hermitian_eigen(a: &CMatrix) -> Result<(Vec<f64>, CMatrix), LinalgError> {
    let n = a.dim();
    let mut m = a.clone();
    let mut v = CMatrix::identity(n);
    let scale = (0..n)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .map(|(r, c)| m.get(r, c).norm())
        .fold(1.0, f64::max);
    let tol = scale * 1e-14;

    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| m.get(p, q).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= tol {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                jacobi_rotate(&mut m, &mut v, p, q);
            }
        }
    }
    if !converged {
        // one last check after the final sweep
        let off: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| m.get(p, q).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off > tol * 10.0 {
            return Err(LinalgError::NoConvergence);
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m.get(i, i).re.total_cmp(&m.get(j, j).re));
    let eigenvalues = order.iter().map(|&i| m.get(i, i).re).collect();
    let mut vectors = CMatrix::zeros(n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for r in 0..n {
            vectors.set(r, new_col, v.get(r, old_col));
        }
    }
    Ok((eigenvalues, vectors))
}

/// One Jacobi rotation zeroing the (p, q) entry: m <- J† m J, v <- v J.
fn jacobi_rotate(m: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = m.get(p, q);
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let app = m.get(p, p).re;
    let aqq = m.get(q, q).re;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let phase = apq / r;
    let n = m.dim();

    // column update: m <- m J, with J[p][p]=c, J[p][q]=s,
    // J[q][p]=-s*conj(phase), J[q][q]=c*conj(phase)
    for i in 0..n {
        let mip = m.get(i, p);
        let miq = m.get(i, q);
        m.set(i, p, c * mip - s * phase.conj() * miq);
        m.set(i, q, s * mip + c * phase.conj() * miq);
    }
    // row update: m <- J† m
    for j in 0..n {
        let mpj = m.get(p, j);
        let mqj = m.get(q, j);
        m.set(p, j, c * mpj - s * phase * mqj);
        m.set(q, j, s * mpj + c * phase * mqj);
    }
    for i in 0..n {
        let vip = v.get(i, p);
        let viq = v.get(i, q);
        v.set(i, p, c * vip - s * phase.conj() * viq);
        v.set(i, q, s * vip + c * phase.conj() * viq);
    }
}

/// Eigendecomposition of a unitary matrix.
#[derive(Clone, Debug)]
pub struct UnitaryEigen {
    /// Eigenphases in `[0, 2*pi)`, sorted ascending; entry k belongs to
    /// column k of `vectors`.
    pub phases: Vec<f64>,
    /// Orthonormal eigenvectors as columns.
    pub vectors: CMatrix,
}

const UNITARY_TOL: f64 = 1e-10;
const CLUSTER_TOL: f64 = 1e-8;
const PHASE_WRAP_TOL: f64 = 1e-9;

/// Diagonalizes a unitary matrix, handling degenerate eigenvalues by
/// re-orthonormalizing within each degenerate block.
pub fn unitary_eigen(u: &CMatrix) -> Result<UnitaryEigen, LinalgError> {
    let n = u.dim();
    let err = u.unitarity_error();
    if err > UNITARY_TOL {
        return Err(LinalgError::NotUnitary(err));
    }

    let udag = u.dagger();
    let mut h = CMatrix::zeros(n);
    let mut k = CMatrix::zeros(n);
    for r in 0..n {
        for c in 0..n {
            let a = u.get(r, c);
            let b = udag.get(r, c);
            h.set(r, c, 0.5 * (a + b));
            k.set(r, c, Complex64::new(0.0, -0.5) * (a - b));
        }
    }

    let (h_vals, mut vecs) = hermitian_eigen(&h)?;

    // Re-diagonalize K inside each cluster of (nearly) equal H eigenvalues.
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && (h_vals[end] - h_vals[start]).abs() <= CLUSTER_TOL {
            end += 1;
        }
        let width = end - start;
        if width > 1 {
            let mut block = CMatrix::zeros(width);
            for i in 0..width {
                for j in 0..width {
                    let mut sum = Complex64::ZERO;
                    for r in 0..n {
                        for c in 0..n {
                            sum += vecs.get(r, start + i).conj()
                                * k.get(r, c)
                                * vecs.get(c, start + j);
                        }
                    }
                    block.set(i, j, sum);
                }
            }
            let (_, w) = hermitian_eigen(&block)?;
            let mut rotated = vec![Complex64::ZERO; n * width];
            for r in 0..n {
                for j in 0..width {
                    let mut sum = Complex64::ZERO;
                    for i in 0..width {
                        sum += vecs.get(r, start + i) * w.get(i, j);
                    }
                    rotated[r * width + j] = sum;
                }
            }
            for r in 0..n {
                for j in 0..width {
                    vecs.set(r, start + j, rotated[r * width + j]);
                }
            }
        }
        start = end;
    }

    // Read off the eigenvalue of each joint eigenvector and verify it.
    let mut pairs: Vec<(f64, Vec<Complex64>)> = Vec::with_capacity(n);
    for col in 0..n {
        let vcol = vecs.column(col);
        let uv = u.mul_vec(&vcol);
        let lambda: Complex64 = vcol.iter().zip(&uv).map(|(v, w)| v.conj() * w).sum();
        let modulus = lambda.norm();
        if (modulus - 1.0).abs() > 1e-8 {
            return Err(LinalgError::NoConvergence);
        }
        let lambda = lambda / modulus;
        let residual = uv
            .iter()
            .zip(&vcol)
            .map(|(w, v)| (w - lambda * v).norm())
            .fold(0.0, f64::max);
        if residual > 1e-8 {
            return Err(LinalgError::NoConvergence);
        }
        let mut phase = lambda.arg();
        if phase < 0.0 {
            phase += TAU;
        }
        // a phase within roundoff of 2*pi is the same eigenvalue as 0
        if TAU - phase <= PHASE_WRAP_TOL {
            phase = 0.0;
        }
        pairs.push((phase, vcol));
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));

    let phases = pairs.iter().map(|(p, _)| *p).collect();
    let mut vectors = CMatrix::zeros(n);
    for (col, (_, vcol)) in pairs.iter().enumerate() {
        for (r, value) in vcol.iter().enumerate() {
            vectors.set(r, col, *value);
        }
    }
    Ok(UnitaryEigen { phases, vectors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hermitian_eigen_solves_a_real_2x2() {
        // [[2, 1], [1, 2]] has eigenvalues 1 and 3
        let a = CMatrix::from_rows(&[
            vec![c(2.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(2.0, 0.0)],
        ]);
        let (vals, vecs) = hermitian_eigen(&a).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-12);
        assert!((vals[1] - 3.0).abs() < 1e-12);
        for (col, val) in vals.iter().enumerate() {
            let v = vecs.column(col);
            let av = a.mul_vec(&v);
            for r in 0..2 {
                assert!((av[r] - val * v[r]).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn hermitian_eigen_handles_complex_entries() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2
        let a = CMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.0, 1.0)],
            vec![c(0.0, -1.0), c(1.0, 0.0)],
        ]);
        let (vals, _) = hermitian_eigen(&a).unwrap();
        assert!(vals[0].abs() < 1e-12);
        assert!((vals[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn unitary_eigen_reads_diagonal_phases() {
        let u = CMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 1.0)],
        ]);
        let eig = unitary_eigen(&u).unwrap();
        assert!((eig.phases[0] - 0.0).abs() < 1e-12);
        assert!((eig.phases[1] - TAU / 4.0).abs() < 1e-12);
    }

    #[test]
    fn unitary_eigen_separates_conjugate_pair_eigenvalues() {
        // diag(i, -i): H = (U+U†)/2 vanishes, so both eigenvalues live in
        // one degenerate H-block and the K pass must split them.
        let u = CMatrix::from_rows(&[
            vec![c(0.0, 1.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, -1.0)],
        ]);
        let eig = unitary_eigen(&u).unwrap();
        assert!((eig.phases[0] - TAU / 4.0).abs() < 1e-10);
        assert!((eig.phases[1] - 3.0 * TAU / 4.0).abs() < 1e-10);
    }

    #[test]
    fn unitary_eigen_handles_full_degeneracy() {
        let eig = unitary_eigen(&CMatrix::identity(4)).unwrap();
        assert!(eig.phases.iter().all(|p| p.abs() < 1e-12));
        assert!(eig.vectors.unitarity_error() < 1e-12);
    }

    #[test]
    fn unitary_eigen_rejects_non_unitary_input() {
        let m = CMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(2.0, 0.0)],
        ]);
        assert!(matches!(unitary_eigen(&m), Err(LinalgError::NotUnitary(_))));
    }

    #[test]
    fn eigenvectors_reconstruct_the_unitary() {
        // a non-diagonal unitary with a degenerate eigenvalue: swap matrix
        let u = CMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        ]);
        let eig = unitary_eigen(&u).unwrap();
        let n = 4;
        let mut rebuilt = CMatrix::zeros(n);
        for k in 0..n {
            let lambda = Complex64::from_polar(1.0, eig.phases[k]);
            let v = eig.vectors.column(k);
            for r in 0..n {
                for cc in 0..n {
                    let val = rebuilt.get(r, cc) + lambda * v[r] * v[cc].conj();
                    rebuilt.set(r, cc, val);
                }
            }
        }
        assert!(rebuilt.max_abs_diff(&u) < 1e-10);
    }
}
