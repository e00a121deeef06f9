// SPDX-License-Identifier: Apache-2.0

//! Gray-code expansion of multiplexors into rotations and CNOTs.
//!
//! A multiplexor with k controls becomes 2^k ROTY gates on the target
//! interleaved with 2^k CNOTs. The CNOT after step i sits on the control
//! qubit where the Gray codes of i and i+1 differ; the last CNOT closes
//! the cycle on the highest-significance control, which makes the
//! composite exactly equal to the multiplexor's block-diagonal matrix.
//! The rotation angles are the Gray-ordered Walsh-Hadamard transform of
//! the selector angles.

use crate::circuit::{BodyItem, Circuit, ElemOp, Item, Loop, Multiplexor};

fn gray_code(i: usize) -> usize {
    i ^ (i >> 1)
}

/// Gray-ordered Walsh-Hadamard transform:
/// alpha[i] = (1/2^k) * sum_j (-1)^<gray(i), j> * theta[j].
fn gray_rotation_angles(selector_angles: &[f64]) -> Vec<f64> {
    let m = selector_angles.len();
    (0..m)
        .map(|i| {
            let g = gray_code(i);
            let sum: f64 = selector_angles
                .iter()
                .enumerate()
                .map(|(j, &theta)| {
                    if (g & j).count_ones().is_multiple_of(2) {
                        theta
                    } else {
                        -theta
                    }
                })
                .sum();
            sum / m as f64
        })
        .collect()
}

/// Expands one multiplexor into an equivalent elementary-gate sequence:
/// 2^k ROTY + 2^k CNOT for k >= 1 controls, a single ROTY for k = 0.
pub fn expand_mux(mux: &Multiplexor) -> Vec<ElemOp> {
    let k = mux.selector_width();
    if k == 0 {
        return vec![ElemOp::rot_y(mux.target, mux.angles_deg[0])];
    }
    let m = 1usize << k;
    let alphas = gray_rotation_angles(&mux.angles_deg);
    let mut ops = Vec::with_capacity(2 * m);
    for (i, alpha) in alphas.iter().enumerate() {
        ops.push(ElemOp::rot_y(mux.target, *alpha));
        let control_pos = if i + 1 == m {
            k - 1
        } else {
            (i + 1).trailing_zeros() as usize
        };
        ops.push(ElemOp::sig_x(mux.target).controlled_on(mux.controls[control_pos]));
    }
    ops
}

/// Replaces every multiplexor in the circuit (including inside loops) by
/// its expansion; everything else is preserved. Idempotent.
pub fn expand_circuit(circuit: &Circuit) -> Circuit {
    let mut out = Circuit::new(circuit.num_qubits()).expect("same qubit count");
    for item in circuit.items() {
        let expanded = match item {
            Item::Op(op) => Item::Op(op.clone()),
            Item::Mux(mux) => {
                for gate in expand_mux(mux) {
                    out.push(gate)
                        .expect("expansion of a valid circuit is valid");
                }
                continue;
            }
            Item::Loop(lp) => {
                let body: Vec<BodyItem> = lp
                    .body
                    .iter()
                    .flat_map(|b| match b {
                        BodyItem::Op(op) => vec![op.clone()],
                        BodyItem::Mux(mux) => expand_mux(mux),
                    })
                    .map(BodyItem::Op)
                    .collect();
                Item::Loop(Loop {
                    id: lp.id,
                    reps: lp.reps,
                    body,
                })
            }
        };
        out.push(expanded)
            .expect("expansion of a valid circuit is valid");
    }
    out
}
