// SPDX-License-Identifier: Apache-2.0

//! Builds a small circuit by hand and shows the IR basics: elementary
//! operations with controls, a LOOP block, a multiplexor, the
//! operation-counting rules and loop unrolling.
//!
//! Run with: cargo run --example circuit_basics

use qoperav::circuit::{Circuit, ElemOp, Loop, Multiplexor};
use qoperav::emit::{english_lines, picture_lines};

fn main() {
    let mut circuit = Circuit::new(3).expect("3 qubits");
    circuit.push(ElemOp::had2(0)).unwrap();
    circuit.push(ElemOp::sig_x(1).controlled_on(0)).unwrap();
    circuit
        .push(
            Loop::new(
                1,
                4,
                [
                    ElemOp::rot_y(2, 30.0),
                    ElemOp::p1ph(0, 90.0).anti_controlled_on(2),
                ],
            )
            .unwrap(),
        )
        .unwrap();
    circuit
        .push(Multiplexor::new(2, [0usize, 1], vec![180.0, 90.0, 45.0, 0.0]).unwrap())
        .unwrap();

    println!("English file:");
    for line in english_lines(&circuit) {
        println!("  {line}");
    }
    println!();
    println!("Picture file (qubit 2 leftmost):");
    for line in picture_lines(&circuit) {
        println!("  {line}");
    }
    println!();

    // The LOOP/NEXT lines are not operations; the two body lines count
    // four times each, and the multiplexor counts once.
    println!("Elementary operations: {}", circuit.elementary_op_count());

    let unrolled = circuit.unroll_loops();
    println!(
        "After unrolling: {} items, still {} operations",
        unrolled.items().len(),
        unrolled.elementary_op_count()
    );
}
