// SPDX-License-Identifier: Apache-2.0

//! qoperav generates quantum circuits that estimate the operator average
//! `gamma * <psi|f(A)|psi>` for a Hermitian operator `A` supplied as a
//! circuit for `exp(i*A*dt)`.
//!
//! The generated circuit runs standard phase estimation — state
//! preparation `V`, Hadamards on a probe register, controlled powers of
//! the atom circuit, an inverse Fourier transform — and then writes the
//! estimate into a single ancilla with one multiplexed y-rotation whose
//! angles arcsin-encode `gamma * f` on the probe grid. Whenever every
//! eigenphase of the atom is an exact multiple of `2*pi/2^nbj`, the
//! probability of reading the ancilla in |1> equals the average exactly.
//!
//! The crate is organized around a small circuit IR:
//!
//! - [`circuit`]: elementary operations, controls, multiplexors, LOOP
//!   blocks, and the operation-counting rules.
//! - [`qft`]: the Fourier transform compiled to elementary gates.
//! - [`avg`]: input validation and the circuit generator with its
//!   pluggable atom / state-preparation / weighting-function providers.
//! - [`mux`]: Gray-code expansion of multiplexors into rotations + CNOTs.
//! - [`sim`]: a dense statevector simulator and the classical
//!   eigendecomposition oracle that every generated circuit is checked
//!   against.
//! - [`emit`]: the Log / English / Picture file formats and a parser for
//!   English files.
//! - [`cli`]: the batch front end behind the `qoperav` binary.
//!
//! The `examples/` directory has one runnable example per capability;
//! start with `average_demo`.

pub mod avg;
pub mod circuit;
pub mod cli;
pub mod emit;
pub mod mux;
pub mod qft;
pub mod sim;

pub use avg::{
    atom_eigenvalues, build_circuit, mux_angles, validate, AtomProvider, AvgParams,
    DiagonalPhaseAtom, Exp01, PowerMode, QftAtom, QftPrep, ScalarFunction, StatePrep, Violation,
};
pub use circuit::{
    Circuit, CircuitError, Control, ElemOp, Gate, Item, Loop, Multiplexor, QubitIndex,
};
pub use emit::{english_lines, log_lines, parse_english, picture_lines, write_files, RunSettings};
pub use mux::{expand_circuit, expand_mux};
pub use qft::{qft_seo, QftSpec};
pub use sim::{
    ancilla_one_probability, circuit_unitary, classical_average_oracle, simulate,
    simulate_from_zero, StateVector,
};
