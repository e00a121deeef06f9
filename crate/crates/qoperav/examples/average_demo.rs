// SPDX-License-Identifier: Apache-2.0

//! The full pipeline on the demo configuration: validate the inputs,
//! build the phase-estimation circuit, simulate it, and compare the
//! ancilla statistics against the classical spectral oracle.
//!
//! Run with: cargo run --example average_demo

use qoperav::avg::{
    atom_eigenvalues, atom_unitary, build_circuit, prep_unitary, validate, AvgParams, Exp01,
    PowerMode, QftAtom, QftPrep,
};
use qoperav::sim::{classical_average_oracle, simulate_from_zero};

fn main() {
    // nb = 2 atom qubits, nbj = 3 probe qubits, gamma = 1, dt = 2*pi
    let params = AvgParams::from_dt_over_2pi(2, 3, 1.0, 1.0).unwrap();
    let atom = QftAtom::new(PowerMode::Loop);
    let prep = QftPrep;

    let eigenvalues = atom_eigenvalues(&atom, &params)
        .unwrap()
        .expect("small atom register");
    println!("atom eigenvalues A_x (phases / dt): {eigenvalues:.4?}");
    validate(&params, &Exp01, Some(&eigenvalues)).expect("demo inputs satisfy both constraints");

    let circuit = build_circuit(&params, &atom, &prep, &Exp01).unwrap();
    println!(
        "circuit: {} qubits, {} elementary operations",
        circuit.num_qubits(),
        circuit.elementary_op_count()
    );

    let state = simulate_from_zero(&circuit).unwrap();
    let p_one = state.one_probability(params.ancilla());
    let oracle = classical_average_oracle(
        &atom_unitary(&atom, &params).unwrap(),
        &prep_unitary(&prep, &params).unwrap(),
        &Exp01,
        &params,
    )
    .unwrap();

    println!("P(ancilla=1)                 = {p_one:.15}");
    println!("gamma*<psi|f(A)|psi> (oracle) = {oracle:.15}");
    println!(
        "difference                    = {:.3e}",
        (p_one - oracle).abs()
    );

    // the estimate scales linearly with gamma while the inputs validate
    for gamma in [0.25, 0.5] {
        let scaled = AvgParams::from_dt_over_2pi(2, 3, gamma, 1.0).unwrap();
        let circuit = build_circuit(&scaled, &atom, &prep, &Exp01).unwrap();
        let p = simulate_from_zero(&circuit)
            .unwrap()
            .one_probability(scaled.ancilla());
        println!("gamma = {gamma}: P(ancilla=1) = {p:.15}");
    }
}
