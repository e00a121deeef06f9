// SPDX-License-Identifier: Apache-2.0

//! Shared test helpers: a seeded random-circuit generator covering every
//! IR item kind.

#![allow(dead_code)]

use qoperav::circuit::{BodyItem, Circuit, ElemOp, Loop, Multiplexor, QubitIndex};
use rand::rngs::StdRng;
use rand::Rng;

pub fn random_op(rng: &mut StdRng, num_qubits: usize) -> ElemOp {
    let target = rng.random_range(0..num_qubits);
    let angle = rng.random_range(-360.0..360.0);
    let mut op = match rng.random_range(0..9) {
        0 => ElemOp::had2(target),
        1 => ElemOp::sig_x(target),
        2 => ElemOp::sig_y(target),
        3 => ElemOp::sig_z(target),
        4 => ElemOp::rot_x(target, angle),
        5 => ElemOp::rot_y(target, angle),
        6 => ElemOp::rot_z(target, angle),
        7 => ElemOp::p1ph(target, angle),
        _ if num_qubits >= 2 => {
            let other = (target + rng.random_range(1..num_qubits)) % num_qubits;
            ElemOp::swap(target, other)
        }
        _ => ElemOp::had2(target),
    };
    let used = op.qubits();
    for q in 0..num_qubits {
        if used.contains(&QubitIndex::new(q)) || !rng.random_bool(0.3) {
            continue;
        }
        op = if rng.random_bool(0.5) {
            op.controlled_on(q)
        } else {
            op.anti_controlled_on(q)
        };
    }
    op
}

pub fn random_mux(rng: &mut StdRng, num_qubits: usize) -> Multiplexor {
    let target = rng.random_range(0..num_qubits);
    let max_k = (num_qubits - 1).min(3);
    let k = rng.random_range(0..=max_k);
    let mut pool: Vec<usize> = (0..num_qubits).filter(|q| *q != target).collect();
    for i in 0..k {
        let j = rng.random_range(i..pool.len());
        pool.swap(i, j);
    }
    let angles = (0..1usize << k)
        .map(|_| rng.random_range(-360.0..360.0))
        .collect();
    Multiplexor::new(target, pool[..k].to_vec(), angles).expect("valid random mux")
}

/// A random valid circuit mixing plain gates, multiplexors and loops.
pub fn random_circuit(rng: &mut StdRng, max_qubits: usize, max_items: usize) -> Circuit {
    let num_qubits = rng.random_range(1..=max_qubits);
    let mut circuit = Circuit::new(num_qubits).expect("valid width");
    let mut next_loop_id = 1u32;
    for _ in 0..rng.random_range(0..=max_items) {
        match rng.random_range(0..10) {
            0..=5 => circuit.push(random_op(rng, num_qubits)).expect("valid op"),
            6..=7 => circuit
                .push(random_mux(rng, num_qubits))
                .expect("valid mux"),
            _ => {
                let reps = rng.random_range(1..=4);
                let body: Vec<BodyItem> = (0..rng.random_range(1..=3))
                    .map(|_| {
                        if rng.random_bool(0.25) {
                            BodyItem::Mux(random_mux(rng, num_qubits))
                        } else {
                            BodyItem::Op(random_op(rng, num_qubits))
                        }
                    })
                    .collect();
                circuit
                    .push(Loop::new(next_loop_id, reps, body).expect("valid loop"))
                    .expect("valid loop push");
                next_loop_id += 1;
            }
        }
    }
    circuit
}
