// SPDX-License-Identifier: Apache-2.0

//! Expands a multiplexor into rotations and CNOTs with the Gray-code
//! construction and verifies the two circuits implement the same unitary.
//!
//! Run with: cargo run --example expand_mux_demo

use qoperav::circuit::{Circuit, Multiplexor};
use qoperav::emit::english_lines;
use qoperav::mux::{expand_circuit, expand_mux};
use qoperav::sim::circuit_unitary;

fn main() {
    // 2 selector qubits, target on qubit 2: one rotation per selector value
    let mux = Multiplexor::new(2, [0usize, 1], vec![180.0, 120.0, 60.0, 15.0]).unwrap();
    let mut before = Circuit::new(3).unwrap();
    before.push(mux.clone()).unwrap();

    println!(
        "before expansion ({} operation):",
        before.elementary_op_count()
    );
    for line in english_lines(&before) {
        println!("  {line}");
    }

    let after = expand_circuit(&before);
    println!();
    println!(
        "after expansion ({} operations):",
        after.elementary_op_count()
    );
    for line in english_lines(&after) {
        println!("  {line}");
    }

    let diff = circuit_unitary(&before)
        .unwrap()
        .max_abs_diff(&circuit_unitary(&after).unwrap());
    println!();
    println!("max |U_mux - U_expanded| = {diff:.3e}");
    println!(
        "gate count for k controls is 2^(k+1): {}",
        expand_mux(&mux).len()
    );
}
