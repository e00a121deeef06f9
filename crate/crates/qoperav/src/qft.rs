// SPDX-License-Identifier: Apache-2.0

//! Quantum Fourier transform compiled into elementary operations.
//!
//! The forward transform on `n` qubits realizes the DFT matrix
//! `F[j][k] = exp(2*pi*i*j*k / 2^n) / sqrt(2^n)` where position 0 of the
//! qubit list is the least-significant bit of the row/column index. The
//! final bit reversal is emitted as explicit SWAP gates so the gate list
//! stands alone. Gate count: n Hadamards, n(n-1)/2 controlled phases,
//! floor(n/2) swaps.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::circuit::{ElemOp, Gate, QubitIndex};

/// Which qubits a transform acts on (position 0 = least-significant) and
/// its direction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QftSpec {
    qubits: Vec<QubitIndex>,
    inverse: bool,
}

#[derive(Debug, Error, PartialEq)]
pub enum QftError {
    #[error("transform needs at least one qubit")]
    EmptyQubitList,
    #[error("duplicate qubit {0} in transform qubit list")]
    DuplicateQubit(QubitIndex),
}

impl QftSpec {
    pub fn forward(
        qubits: impl IntoIterator<Item = impl Into<QubitIndex>>,
    ) -> Result<Self, QftError> {
        Self::checked(qubits, false)
    }

    pub fn inverse(
        qubits: impl IntoIterator<Item = impl Into<QubitIndex>>,
    ) -> Result<Self, QftError> {
        Self::checked(qubits, true)
    }

    fn checked(
        qubits: impl IntoIterator<Item = impl Into<QubitIndex>>,
        inverse: bool,
    ) -> Result<Self, QftError> {
        let qubits: Vec<QubitIndex> = qubits.into_iter().map(Into::into).collect();
        if qubits.is_empty() {
            return Err(QftError::EmptyQubitList);
        }
        let mut seen = BTreeSet::new();
        for q in &qubits {
            if !seen.insert(*q) {
                return Err(QftError::DuplicateQubit(*q));
            }
        }
        Ok(QftSpec { qubits, inverse })
    }

    pub fn qubits(&self) -> &[QubitIndex] {
        &self.qubits
    }

    pub fn is_inverse(&self) -> bool {
        self.inverse
    }
}

/// Compiles the transform into HAD2, controlled P1PH and SWAP operations.
pub fn qft_seo(spec: &QftSpec) -> Vec<ElemOp> {
    let q = spec.qubits();
    let n = q.len();
    let mut ops = Vec::with_capacity(n + n * (n - 1) / 2 + n / 2);
    for i in (0..n).rev() {
        ops.push(ElemOp::had2(q[i]));
        for j in (0..i).rev() {
            let angle = 180.0 / (1u64 << (i - j)) as f64;
            ops.push(ElemOp::p1ph(q[i], angle).controlled_on(q[j]));
        }
    }
    for i in 0..n / 2 {
        ops.push(ElemOp::swap(q[i], q[n - 1 - i]));
    }
    if spec.inverse {
        adjoint(ops)
    } else {
        ops
    }
}

/// Reverses the list and inverts each gate. HAD2, the Paulis and SWAP are
/// self-inverse; rotations and phases negate their angle.
fn adjoint(ops: Vec<ElemOp>) -> Vec<ElemOp> {
    ops.into_iter()
        .rev()
        .map(|mut op| {
            op.gate = match op.gate {
                Gate::RotX { target, angle_deg } => Gate::RotX {
                    target,
                    angle_deg: -angle_deg,
                },
                Gate::RotY { target, angle_deg } => Gate::RotY {
                    target,
                    angle_deg: -angle_deg,
                },
                Gate::RotZ { target, angle_deg } => Gate::RotZ {
                    target,
                    angle_deg: -angle_deg,
                },
                Gate::P1Ph { target, angle_deg } => Gate::P1Ph {
                    target,
                    angle_deg: -angle_deg,
                },
                other => other,
            };
            op
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::linalg::CMatrix;
    use crate::sim::ops_unitary;
    use num_complex::Complex64;
    use std::f64::consts::TAU;

    /// DFT matrix straight from the definition, as the independent check.
    fn dft_matrix(n: usize) -> CMatrix {
        let dim = 1usize << n;
        let mut m = CMatrix::zeros(dim);
        let scale = 1.0 / (dim as f64).sqrt();
        for j in 0..dim {
            for k in 0..dim {
                let angle = TAU * (j as f64) * (k as f64) / dim as f64;
                m.set(j, k, Complex64::from_polar(scale, angle));
            }
        }
        m
    }

    #[test]
    fn one_qubit_transform_is_a_hadamard() {
        let ops = qft_seo(&QftSpec::forward([0usize]).unwrap());
        assert_eq!(ops, vec![ElemOp::had2(0)]);
    }

    #[test]
    fn two_qubit_structure_and_matrix() {
        let ops = qft_seo(&QftSpec::forward([0usize, 1]).unwrap());
        assert_eq!(ops.len(), 4);
        assert_eq!(ops[0], ElemOp::had2(1));
        assert_eq!(ops[1], ElemOp::p1ph(1, 90.0).controlled_on(0));
        assert_eq!(ops[2], ElemOp::had2(0));
        assert_eq!(ops[3], ElemOp::swap(0, 1));
        let u = ops_unitary(&ops, 2).unwrap();
        assert!(u.max_abs_diff(&dft_matrix(2)) < 1e-10);
    }

    #[test]
    fn three_qubit_gate_count() {
        let ops = qft_seo(&QftSpec::forward([0usize, 1, 2]).unwrap());
        assert_eq!(ops.len(), 7); // 3 + 3 + 1
    }

    #[test]
    fn matches_dft_definition_up_to_four_qubits() {
        for n in 1..=4usize {
            let spec = QftSpec::forward(0..n).unwrap();
            let u = ops_unitary(&qft_seo(&spec), n).unwrap();
            assert!(u.max_abs_diff(&dft_matrix(n)) < 1e-10, "n = {n}");
        }
    }

    #[test]
    fn inverse_matches_conjugate_transpose() {
        for n in 1..=4usize {
            let inv = ops_unitary(&qft_seo(&QftSpec::inverse(0..n).unwrap()), n).unwrap();
            assert!(inv.max_abs_diff(&dft_matrix(n).dagger()) < 1e-10, "n = {n}");
        }
    }

    #[test]
    fn inverse_composed_with_forward_is_identity() {
        for n in 1..=4usize {
            let mut ops = qft_seo(&QftSpec::forward(0..n).unwrap());
            ops.extend(qft_seo(&QftSpec::inverse(0..n).unwrap()));
            let u = ops_unitary(&ops, n).unwrap();
            assert!(
                u.max_abs_diff(&CMatrix::identity(1 << n)) < 1e-10,
                "n = {n}"
            );
        }
    }

    #[test]
    fn works_on_non_contiguous_qubits() {
        // transform on qubits 2 (lsb) and 0 (msb) of a 3-qubit circuit
        let ops = qft_seo(&QftSpec::forward([2usize, 0]).unwrap());
        assert_eq!(ops[0], ElemOp::had2(0));
        assert_eq!(ops[1], ElemOp::p1ph(0, 90.0).controlled_on(2));
    }

    #[test]
    fn rejects_empty_and_duplicate_qubit_lists() {
        let empty: [usize; 0] = [];
        assert_eq!(
            QftSpec::forward(empty).unwrap_err(),
            QftError::EmptyQubitList
        );
        assert_eq!(
            QftSpec::forward([1usize, 1]).unwrap_err(),
            QftError::DuplicateQubit(QubitIndex::new(1))
        );
    }
}
