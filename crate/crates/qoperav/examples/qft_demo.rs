// SPDX-License-Identifier: Apache-2.0

//! Compiles the quantum Fourier transform to elementary gates and checks
//! the result against the DFT matrix computed from its definition.
//!
//! Run with: cargo run --example qft_demo

use std::f64::consts::TAU;

use num_complex::Complex64;
use qoperav::emit::english_lines;
use qoperav::qft::{qft_seo, QftSpec};
use qoperav::sim::linalg::CMatrix;
use qoperav::sim::ops_unitary;
use qoperav::Circuit;

fn dft_matrix(n: usize) -> CMatrix {
    let dim = 1usize << n;
    let scale = 1.0 / (dim as f64).sqrt();
    let mut m = CMatrix::zeros(dim);
    for j in 0..dim {
        for k in 0..dim {
            m.set(
                j,
                k,
                Complex64::from_polar(scale, TAU * (j * k) as f64 / dim as f64),
            );
        }
    }
    m
}

fn main() {
    let n = 3;
    let ops = qft_seo(&QftSpec::forward(0..n).unwrap());
    println!("{n}-qubit transform, {} gates:", ops.len());
    let mut circuit = Circuit::new(n).unwrap();
    circuit.push_all(ops.iter().cloned()).unwrap();
    for line in english_lines(&circuit) {
        println!("  {line}");
    }

    let compiled = ops_unitary(&ops, n).unwrap();
    println!();
    println!(
        "max |compiled - DFT| = {:.3e}",
        compiled.max_abs_diff(&dft_matrix(n))
    );

    let mut round_trip = qft_seo(&QftSpec::forward(0..n).unwrap());
    round_trip.extend(qft_seo(&QftSpec::inverse(0..n).unwrap()));
    let identity = ops_unitary(&round_trip, n).unwrap();
    println!(
        "max |inverse o forward - I| = {:.3e}",
        identity.max_abs_diff(&CMatrix::identity(1 << n))
    );
}
