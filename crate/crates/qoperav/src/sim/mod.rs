// SPDX-License-Identifier: Apache-2.0

//! Dense statevector simulation of the circuit IR, unitary extraction for
//! small circuits, and the classical eigendecomposition oracle used to
//! verify generated circuits.
//!
//! Gates are applied as amplitude-pair updates; the full matrix of a
//! circuit is only ever materialized in the small-circuit extraction mode
//! used for equivalence checks.

pub mod linalg;

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;
use thiserror::Error;

use crate::avg::{AvgParams, ScalarFunction};
use crate::circuit::{
    BodyItem, Circuit, CircuitError, Control, ElemOp, Gate, Item, Multiplexor, QubitIndex,
};
use linalg::{CMatrix, LinalgError};

/// Unitary extraction materializes a 2^n x 2^n matrix; keep n small.
pub const MAX_UNITARY_QUBITS: usize = 12;

#[derive(Debug, Error)]
pub enum SimError {
    #[error("state on {state_qubits} qubits cannot run a circuit on {circuit_qubits}")]
    DimensionMismatch {
        state_qubits: usize,
        circuit_qubits: usize,
    },
    #[error("amplitude vector length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("state norm deviates from 1 by {0:.3e}")]
    NotNormalized(f64),
    #[error("unitary extraction supports at most {MAX_UNITARY_QUBITS} qubits, got {0}")]
    TooManyQubits(usize),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Normalized complex amplitudes over 2^n basis states; qubit 0 is the
/// least-significant bit of the amplitude index.
#[derive(Clone, Debug)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// |0...0>
    pub fn zero_state(num_qubits: usize) -> Self {
        Self::basis_state(num_qubits, 0)
    }

    /// The computational basis state |index>.
    pub fn basis_state(num_qubits: usize, index: usize) -> Self {
        assert!(index < (1usize << num_qubits), "basis index out of range");
        let mut amps = vec![Complex64::ZERO; 1 << num_qubits];
        amps[index] = Complex64::ONE;
        StateVector { num_qubits, amps }
    }

    /// Wraps an amplitude vector, requiring power-of-two length and unit
    /// norm to within 1e-10.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self, SimError> {
        let len = amps.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(SimError::NotPowerOfTwo(len));
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(SimError::NotNormalized((norm - 1.0).abs()));
        }
        Ok(StateVector {
            num_qubits: len.trailing_zeros() as usize,
            amps,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Probability of reading |1> on the given qubit.
    pub fn one_probability(&self, qubit: impl Into<QubitIndex>) -> f64 {
        let bit = 1usize << qubit.into().index();
        self.amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & bit != 0)
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        assert_eq!(self.num_qubits, other.num_qubits, "qubit count mismatch");
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Probability that the ancilla qubit reads |1>.
pub fn ancilla_one_probability(state: &StateVector, ancilla: impl Into<QubitIndex>) -> f64 {
    state.one_probability(ancilla)
}

fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// 2x2 matrix of a single-qubit gate kind; panics on SWAP.
fn single_qubit_matrix(gate: &Gate) -> [[Complex64; 2]; 2] {
    match gate {
        Gate::Had2 { .. } => {
            let h = c64(FRAC_1_SQRT_2, 0.0);
            [[h, h], [h, -h]]
        }
        Gate::SigX { .. } => [
            [c64(0.0, 0.0), c64(1.0, 0.0)],
            [c64(1.0, 0.0), c64(0.0, 0.0)],
        ],
        Gate::SigY { .. } => [
            [c64(0.0, 0.0), c64(0.0, -1.0)],
            [c64(0.0, 1.0), c64(0.0, 0.0)],
        ],
        Gate::SigZ { .. } => [
            [c64(1.0, 0.0), c64(0.0, 0.0)],
            [c64(0.0, 0.0), c64(-1.0, 0.0)],
        ],
        Gate::RotX { angle_deg, .. } => {
            let half = angle_deg.to_radians() / 2.0;
            let (s, c) = half.sin_cos();
            [[c64(c, 0.0), c64(0.0, -s)], [c64(0.0, -s), c64(c, 0.0)]]
        }
        Gate::RotY { angle_deg, .. } => {
            let half = angle_deg.to_radians() / 2.0;
            let (s, c) = half.sin_cos();
            [[c64(c, 0.0), c64(-s, 0.0)], [c64(s, 0.0), c64(c, 0.0)]]
        }
        Gate::RotZ { angle_deg, .. } => {
            let half = angle_deg.to_radians() / 2.0;
            [
                [Complex64::from_polar(1.0, -half), c64(0.0, 0.0)],
                [c64(0.0, 0.0), Complex64::from_polar(1.0, half)],
            ]
        }
        Gate::P1Ph { angle_deg, .. } => [
            [c64(1.0, 0.0), c64(0.0, 0.0)],
            [
                c64(0.0, 0.0),
                Complex64::from_polar(1.0, angle_deg.to_radians()),
            ],
        ],
        Gate::Swap { .. } => unreachable!("swap is not a single-qubit gate"),
    }
}

/// The exact matrix of a bare gate on the qubits it touches: 2x2 for the
/// single-qubit kinds, 4x4 for SWAP. Controls extend a gate by the
/// identity on non-selected subspaces; they are handled during
/// simulation, not here.
pub fn gate_matrix(gate: &Gate) -> CMatrix {
    match gate {
        Gate::Swap { .. } => {
            let mut m = CMatrix::zeros(4);
            m.set(0, 0, Complex64::ONE);
            m.set(1, 2, Complex64::ONE);
            m.set(2, 1, Complex64::ONE);
            m.set(3, 3, Complex64::ONE);
            m
        }
        _ => {
            let u = single_qubit_matrix(gate);
            CMatrix::from_rows(&[vec![u[0][0], u[0][1]], vec![u[1][0], u[1][1]]])
        }
    }
}

fn control_mask(controls: &[Control]) -> (usize, usize) {
    let mut mask = 0usize;
    let mut value = 0usize;
    for c in controls {
        let bit = 1usize << c.qubit.index();
        mask |= bit;
        if c.polarity {
            value |= bit;
        }
    }
    (mask, value)
}

fn apply_single(
    amps: &mut [Complex64],
    target: usize,
    m: [[Complex64; 2]; 2],
    mask: usize,
    value: usize,
) {
    let bit = 1usize << target;
    for i0 in 0..amps.len() {
        if i0 & bit == 0 && i0 & mask == value {
            let i1 = i0 | bit;
            let a0 = amps[i0];
            let a1 = amps[i1];
            amps[i0] = m[0][0] * a0 + m[0][1] * a1;
            amps[i1] = m[1][0] * a0 + m[1][1] * a1;
        }
    }
}

fn apply_op(amps: &mut [Complex64], op: &ElemOp) {
    let (mask, value) = control_mask(&op.controls);
    match &op.gate {
        Gate::Swap { targets: [a, b] } => {
            let ba = 1usize << a.index();
            let bb = 1usize << b.index();
            for i in 0..amps.len() {
                if i & ba != 0 && i & bb == 0 && i & mask == value {
                    amps.swap(i, i ^ ba ^ bb);
                }
            }
        }
        gate => {
            let m = single_qubit_matrix(gate);
            let target = gate.targets()[0].index();
            apply_single(amps, target, m, mask, value);
        }
    }
}

fn apply_mux(amps: &mut [Complex64], mux: &Multiplexor) {
    let bit = 1usize << mux.target.index();
    for i0 in 0..amps.len() {
        if i0 & bit != 0 {
            continue;
        }
        let mut selector = 0usize;
        for (pos, q) in mux.controls.iter().enumerate() {
            if i0 & (1usize << q.index()) != 0 {
                selector |= 1 << pos;
            }
        }
        let half = mux.angles_deg[selector].to_radians() / 2.0;
        let (s, c) = half.sin_cos();
        let i1 = i0 | bit;
        let a0 = amps[i0];
        let a1 = amps[i1];
        amps[i0] = c * a0 - s * a1;
        amps[i1] = s * a0 + c * a1;
    }
}

fn apply_item(amps: &mut [Complex64], item: &Item) {
    match item {
        Item::Op(op) => apply_op(amps, op),
        Item::Mux(mux) => apply_mux(amps, mux),
        Item::Loop(lp) => {
            for _ in 0..lp.reps {
                for body in &lp.body {
                    match body {
                        BodyItem::Op(op) => apply_op(amps, op),
                        BodyItem::Mux(mux) => apply_mux(amps, mux),
                    }
                }
            }
        }
    }
}

/// Runs the circuit on `initial`, item by item in time order; loop bodies
/// are repeated in place, equivalent to simulating the unrolled circuit.
pub fn simulate(circuit: &Circuit, initial: &StateVector) -> Result<StateVector, SimError> {
    if initial.num_qubits != circuit.num_qubits() {
        return Err(SimError::DimensionMismatch {
            state_qubits: initial.num_qubits,
            circuit_qubits: circuit.num_qubits(),
        });
    }
    let mut amps = initial.amps.clone();
    for item in circuit.items() {
        apply_item(&mut amps, item);
    }
    Ok(StateVector {
        num_qubits: initial.num_qubits,
        amps,
    })
}

/// Runs the circuit on |0...0>.
pub fn simulate_from_zero(circuit: &Circuit) -> Result<StateVector, SimError> {
    simulate(circuit, &StateVector::zero_state(circuit.num_qubits()))
}

/// Materializes a circuit's full unitary by simulating every basis state;
/// only available for small qubit counts.
pub fn circuit_unitary(circuit: &Circuit) -> Result<CMatrix, SimError> {
    let n = circuit.num_qubits();
    if n > MAX_UNITARY_QUBITS {
        return Err(SimError::TooManyQubits(n));
    }
    let dim = 1usize << n;
    let mut u = CMatrix::zeros(dim);
    for col in 0..dim {
        let out = simulate(circuit, &StateVector::basis_state(n, col))?;
        for row in 0..dim {
            u.set(row, col, out.amps[row]);
        }
    }
    Ok(u)
}

/// Unitary of a plain gate list on `num_qubits` qubits.
pub fn ops_unitary(ops: &[ElemOp], num_qubits: usize) -> Result<CMatrix, SimError> {
    let mut c = Circuit::new(num_qubits)?;
    c.push_all(ops.iter().cloned())?;
    circuit_unitary(&c)
}

/// Ground truth for the generated circuits: diagonalizes the atom unitary
/// as sum_x exp(i*phi_x) Pi_x with phi_x in [0, 2*pi), sets A_x = phi_x/dt
/// and |psi> = v_unitary |0...0>, and returns
/// gamma * sum_x f(A_x) <psi|Pi_x|psi>.
///
/// The eigenvector columns span each degenerate eigenspace orthonormally,
/// so the per-column sum equals the sum over eigenprojectors.
pub fn classical_average_oracle(
    atom_unitary: &CMatrix,
    v_unitary: &CMatrix,
    f: &dyn ScalarFunction,
    params: &AvgParams,
) -> Result<f64, LinalgError> {
    let v_err = v_unitary.unitarity_error();
    if v_err > 1e-10 {
        return Err(LinalgError::NotUnitary(v_err));
    }
    let eig = linalg::unitary_eigen(atom_unitary)?;
    let psi = v_unitary.column(0);
    let n = atom_unitary.dim();
    let mut total = 0.0;
    for k in 0..n {
        let overlap: Complex64 = (0..n).map(|r| eig.vectors.get(r, k).conj() * psi[r]).sum();
        let weight = overlap.norm_sqr();
        let a_x = eig.phases[k] / params.dt();
        total += f.eval(a_x) * weight;
    }
    Ok(params.gamma() * total)
}
