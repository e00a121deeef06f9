// SPDX-License-Identifier: Apache-2.0

//! Writes the three output files for the demo configuration and reads the
//! English file back through the parser.
//!
//! Run with: cargo run --example emit_files

use qoperav::avg::{build_circuit, AvgParams, Exp01, PowerMode, QftAtom, QftPrep};
use qoperav::emit::{parse_english, write_files, EigCheck, RunSettings};

fn main() {
    let params = AvgParams::from_dt_over_2pi(2, 3, 1.0, 1.0).unwrap();
    let circuit = build_circuit(&params, &QftAtom::new(PowerMode::Loop), &QftPrep, &Exp01).unwrap();

    let dir = std::env::temp_dir().join("qoperav_emit_demo");
    std::fs::create_dir_all(&dir).unwrap();
    let settings = RunSettings {
        prefix: dir.join("demo").to_str().unwrap().to_string(),
        atom_name: "qft".into(),
        v_name: "qft".into(),
        f_name: "exp01".into(),
        power_mode: PowerMode::Loop,
        expand_mux: false,
        eig_check: EigCheck::Passed { count: params.ns() },
    };
    let files = write_files(&circuit, &params, &settings).unwrap();
    println!("wrote:");
    println!("  {}", files.log.display());
    println!("  {}", files.english.display());
    println!("  {}", files.picture.display());

    let log = std::fs::read_to_string(&files.log).unwrap();
    println!();
    println!("log file:");
    for line in log.lines() {
        println!("  {line}");
    }

    let english: Vec<String> = std::fs::read_to_string(&files.english)
        .unwrap()
        .lines()
        .map(String::from)
        .collect();
    let parsed = parse_english(&english).unwrap();
    println!();
    println!(
        "parsed the English file back: {} qubits, {} operations",
        parsed.num_qubits(),
        parsed.elementary_op_count()
    );
}
