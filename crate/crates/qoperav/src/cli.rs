// SPDX-License-Identifier: Apache-2.0

//! Batch front end: parses the run inputs, checks the two input
//! constraints, builds the circuit, optionally expands multiplexors,
//! writes the three output files and prints the elementary-operation
//! count. Exit codes: 0 on success, 1 on I/O failure, 2 on malformed
//! flags or a violated input constraint.

use std::ffi::OsString;

use clap::{Parser, ValueEnum};

use crate::avg::{
    atom_eigenvalues, atom_unitary, build_circuit, prep_unitary, validate, AtomProvider, AvgParams,
    DiagonalPhaseAtom, Exp01, PowerMode, QftAtom, QftPrep, ScalarFunction, StatePrep,
    EIG_CHECK_MAX_ATOM_QUBITS,
};
use crate::emit::{write_files, EigCheck, RunSettings};
use crate::mux::expand_circuit;
use crate::sim::{classical_average_oracle, simulate_from_zero};

/// Widest state `--simulate` will allocate.
const MAX_SIM_QUBITS: usize = 20;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum AtomArg {
    /// The Fourier-transform demo atom.
    Qft,
    /// A diagonal test atom made of one P1PH per atom qubit.
    Diag,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum PrepArg {
    /// The Fourier-transform demo V.
    Qft,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum FArg {
    /// The demo weighting function f(xi) = exp(-0.1*xi).
    Exp01,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum PowerModeArg {
    /// Repeat the atom circuit inside a LOOP block.
    Loop,
    /// Scale the atom's phase angles by 2^p instead.
    ScaleAngle,
}

impl From<PowerModeArg> for PowerMode {
    fn from(arg: PowerModeArg) -> Self {
        match arg {
            PowerModeArg::Loop => PowerMode::Loop,
            PowerModeArg::ScaleAngle => PowerMode::ScaleAngle,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "qoperav",
    version,
    about = "Generates a quantum circuit that estimates gamma*<psi|f(A)|psi> by phase \
             estimation plus a multiplexed ancilla rotation, and writes its Log, English \
             and Picture files"
)]
struct Cli {
    /// Prefix for the three output files (<prefix>_qoa_{log,eng,pic}.txt);
    /// may include a directory.
    #[arg(long)]
    prefix: String,

    /// Number of atom qubits nb.
    #[arg(long)]
    num_atom_qubits: usize,

    /// Number of probe qubits nbj.
    #[arg(long)]
    num_probe_qubits: usize,

    /// The scale factor gamma.
    #[arg(long)]
    gamma: f64,

    /// The evolution time as Delta t/(2*PI).
    #[arg(long)]
    dt_over_2pi: f64,

    /// Atom circuit for exp(i*A*dt).
    #[arg(long, value_enum, default_value = "qft")]
    atom: AtomArg,

    /// Phase angles (degrees, one per atom qubit) for the diag atom.
    #[arg(long, value_delimiter = ',', required_if_eq("atom", "diag"))]
    diag_phases: Option<Vec<f64>>,

    /// State-preparation circuit V.
    #[arg(long, value_enum, default_value = "qft")]
    v: PrepArg,

    /// Weighting function f.
    #[arg(long, value_enum, default_value = "exp01")]
    f: FArg,

    /// Replace every multiplexor by rotations and CNOTs.
    #[arg(long)]
    expand_mux: bool,

    /// How the atom is raised to its 2^p powers.
    #[arg(long, value_enum, default_value = "loop")]
    power_mode: PowerModeArg,

    /// Simulate the generated circuit and print P(ancilla=1) next to the
    /// classical oracle value.
    #[arg(long)]
    simulate: bool,
}

/// Runs the front end and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return err.exit_code();
        }
    };

    let params = match AvgParams::from_dt_over_2pi(
        cli.num_atom_qubits,
        cli.num_probe_qubits,
        cli.gamma,
        cli.dt_over_2pi,
    ) {
        Ok(params) => params,
        Err(err) => {
            eprintln!("error: {err}");
            return 2;
        }
    };

    let power_mode = PowerMode::from(cli.power_mode);
    let atom: Box<dyn AtomProvider> = match cli.atom {
        AtomArg::Qft => Box::new(QftAtom::new(power_mode)),
        AtomArg::Diag => {
            let phases = cli.diag_phases.clone().unwrap_or_default();
            if phases.len() != params.nb() {
                eprintln!(
                    "error: --diag-phases needs {} comma-separated angles, got {}",
                    params.nb(),
                    phases.len()
                );
                return 2;
            }
            Box::new(DiagonalPhaseAtom::new(phases, power_mode))
        }
    };
    let prep: Box<dyn StatePrep> = match cli.v {
        PrepArg::Qft => Box::new(QftPrep),
    };
    let f: Box<dyn ScalarFunction> = match cli.f {
        FArg::Exp01 => Box::new(Exp01),
    };

    let eigenvalues = match atom_eigenvalues(atom.as_ref(), &params) {
        Ok(eigs) => eigs,
        Err(err) => {
            eprintln!("error: could not diagonalize the atom: {err}");
            return 1;
        }
    };
    if let Err(violation) = validate(&params, f.as_ref(), eigenvalues.as_deref()) {
        eprintln!("error: {violation}");
        return 2;
    }

    let circuit = match build_circuit(&params, atom.as_ref(), prep.as_ref(), f.as_ref()) {
        Ok(circuit) => circuit,
        Err(err) => {
            eprintln!("error: {err}");
            return 2;
        }
    };
    let circuit = if cli.expand_mux {
        expand_circuit(&circuit)
    } else {
        circuit
    };

    let settings = RunSettings {
        prefix: cli.prefix.clone(),
        atom_name: match cli.atom {
            AtomArg::Qft => String::from("qft"),
            AtomArg::Diag => String::from("diag"),
        },
        v_name: String::from("qft"),
        f_name: String::from("exp01"),
        power_mode,
        expand_mux: cli.expand_mux,
        eig_check: match &eigenvalues {
            Some(eigs) => EigCheck::Passed { count: eigs.len() },
            None => EigCheck::Skipped,
        },
    };
    if let Err(err) = write_files(&circuit, &params, &settings) {
        eprintln!("error: could not write output files: {err}");
        return 1;
    }

    println!(
        "Number of Elementary Operations: {}",
        circuit.elementary_op_count()
    );

    if cli.simulate {
        if params.num_qubits() > MAX_SIM_QUBITS {
            eprintln!(
                "error: simulation supports at most {MAX_SIM_QUBITS} qubits, this run needs {}",
                params.num_qubits()
            );
            return 2;
        }
        let state = match simulate_from_zero(&circuit) {
            Ok(state) => state,
            Err(err) => {
                eprintln!("error: simulation failed: {err}");
                return 1;
            }
        };
        println!(
            "P(ancilla=1) = {:.12}",
            state.one_probability(params.ancilla())
        );
        if params.nb() <= EIG_CHECK_MAX_ATOM_QUBITS {
            let oracle = atom_unitary(atom.as_ref(), &params)
                .map_err(|e| e.to_string())
                .and_then(|a| {
                    prep_unitary(prep.as_ref(), &params)
                        .map_err(|e| e.to_string())
                        .and_then(|v| {
                            classical_average_oracle(&a, &v, f.as_ref(), &params)
                                .map_err(|e| e.to_string())
                        })
                });
            match oracle {
                Ok(value) => println!("classical oracle gamma*<psi|f(A)|psi> = {value:.12}"),
                Err(err) => {
                    eprintln!("error: oracle evaluation failed: {err}");
                    return 1;
                }
            }
        }
    }

    0
}
