// SPDX-License-Identifier: Apache-2.0

//! Cross-module invariants checked on seeded random circuits.

mod common;

use rand::rngs::StdRng;
use rand::SeedableRng;

use qoperav::emit::{english_lines, parse_english, picture_lines};
use qoperav::mux::expand_circuit;
use qoperav::sim::{simulate, StateVector};

#[test]
fn english_round_trip_reemits_byte_identically() {
    let mut rng = StdRng::seed_from_u64(1);
    for _ in 0..1000 {
        let circuit = common::random_circuit(&mut rng, 5, 8);
        let lines = english_lines(&circuit);
        let parsed = parse_english(&lines).expect("emitted circuits parse back");
        assert_eq!(english_lines(&parsed), lines);
    }
}

#[test]
fn simulating_loops_in_place_equals_simulating_the_unrolled_circuit() {
    let mut rng = StdRng::seed_from_u64(2);
    for _ in 0..200 {
        let circuit = common::random_circuit(&mut rng, 4, 6);
        let initial = StateVector::zero_state(circuit.num_qubits());
        let direct = simulate(&circuit, &initial).unwrap();
        let unrolled = simulate(&circuit.unroll_loops(), &initial).unwrap();
        assert!(direct.max_abs_diff(&unrolled) < 1e-13);
    }
}

#[test]
fn norms_stay_unit_through_random_circuits() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..200 {
        let circuit = common::random_circuit(&mut rng, 4, 10);
        let out = simulate(&circuit, &StateVector::zero_state(circuit.num_qubits())).unwrap();
        assert!((out.norm() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn expansion_is_idempotent_and_preserves_line_count_parity() {
    let mut rng = StdRng::seed_from_u64(4);
    for _ in 0..300 {
        let circuit = common::random_circuit(&mut rng, 5, 6);
        let once = expand_circuit(&circuit);
        assert_eq!(expand_circuit(&once), once);
        assert_eq!(english_lines(&once).len(), picture_lines(&once).len());
    }
}

#[test]
fn unrolling_is_idempotent() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..300 {
        let circuit = common::random_circuit(&mut rng, 5, 8);
        let once = circuit.unroll_loops();
        assert_eq!(once.unroll_loops(), once);
    }
}
