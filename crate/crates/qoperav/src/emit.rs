// SPDX-License-Identifier: Apache-2.0

//! Serialization of circuits to the three output files.
//!
//! The English file fully specifies the circuit, one line per elementary
//! operation with time increasing downwards; `LOOP k REPS:N` / `NEXT k`
//! frame repeated blocks and a multiplexor stays on a single `MP_Y` line.
//! The Picture file is an ASCII rendering with exactly one line per
//! English line. The Log file echoes every run input plus the elementary
//! operation count. All three are plain ASCII with newline-terminated
//! lines, written as `<prefix>_qoa_log.txt`, `<prefix>_qoa_eng.txt` and
//! `<prefix>_qoa_pic.txt`.
//!
//! [`parse_english`] reads an English file back into a [`Circuit`]; a
//! parsed circuit re-emits byte-identically.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::avg::{AvgParams, PowerMode};
use crate::circuit::{
    BodyItem, Circuit, CircuitError, Control, ElemOp, Gate, Item, Loop, Multiplexor, QubitIndex,
};

fn fmt_angle(deg: f64) -> String {
    format!("{deg:.6}")
}

fn push_controls(line: &mut String, controls: &[Control]) {
    if controls.is_empty() {
        return;
    }
    let mut sorted: Vec<&Control> = controls.iter().collect();
    sorted.sort_by_key(|c| std::cmp::Reverse(c.qubit));
    line.push_str(" IF");
    for c in sorted {
        let tag = if c.polarity { 'T' } else { 'F' };
        write!(line, " {}{}", c.qubit, tag).expect("write to string");
    }
}

fn english_op(op: &ElemOp) -> String {
    let mut line = match &op.gate {
        Gate::Had2 { target } => format!("HAD2 AT {target}"),
        Gate::SigX { target } => format!("SIGX AT {target}"),
        Gate::SigY { target } => format!("SIGY AT {target}"),
        Gate::SigZ { target } => format!("SIGZ AT {target}"),
        Gate::RotX { target, angle_deg } => format!("ROTX {} AT {target}", fmt_angle(*angle_deg)),
        Gate::RotY { target, angle_deg } => format!("ROTY {} AT {target}", fmt_angle(*angle_deg)),
        Gate::RotZ { target, angle_deg } => format!("ROTZ {} AT {target}", fmt_angle(*angle_deg)),
        Gate::P1Ph { target, angle_deg } => format!("P1PH {} AT {target}", fmt_angle(*angle_deg)),
        Gate::Swap { targets: [a, b] } => format!("SWAP {a} {b}"),
    };
    push_controls(&mut line, &op.controls);
    line
}

fn english_mux(mux: &Multiplexor) -> String {
    let mut line = format!("MP_Y AT {}", mux.target);
    if !mux.controls.is_empty() {
        line.push_str(" IF");
        for q in mux.controls.iter().rev() {
            write!(line, " {q}").expect("write to string");
        }
    }
    line.push_str(" BY");
    for angle in &mux.angles_deg {
        write!(line, " {}", fmt_angle(*angle)).expect("write to string");
    }
    line
}

fn loop_header(lp: &Loop) -> String {
    format!("LOOP {} REPS:{}", lp.id, lp.reps)
}

fn loop_footer(lp: &Loop) -> String {
    format!("NEXT {}", lp.id)
}

/// One line per elementary operation, with loop bodies framed by
/// `LOOP k REPS:N` and `NEXT k`.
pub fn english_lines(circuit: &Circuit) -> Vec<String> {
    let mut lines = Vec::new();
    for item in circuit.items() {
        match item {
            Item::Op(op) => lines.push(english_op(op)),
            Item::Mux(mux) => lines.push(english_mux(mux)),
            Item::Loop(lp) => {
                lines.push(loop_header(lp));
                for body in &lp.body {
                    match body {
                        BodyItem::Op(op) => lines.push(english_op(op)),
                        BodyItem::Mux(mux) => lines.push(english_mux(mux)),
                    }
                }
                lines.push(loop_footer(lp));
            }
        }
    }
    lines
}

fn render_cells(num_qubits: usize, cells: &[(QubitIndex, char)]) -> String {
    let lo = cells
        .iter()
        .map(|(q, _)| q.index())
        .min()
        .expect("non-empty");
    let hi = cells
        .iter()
        .map(|(q, _)| q.index())
        .max()
        .expect("non-empty");
    let mut out = Vec::with_capacity(num_qubits);
    for q in (0..num_qubits).rev() {
        let ch = cells
            .iter()
            .find(|(cq, _)| cq.index() == q)
            .map(|(_, ch)| *ch)
            .unwrap_or(if q > lo && q < hi { '|' } else { '+' });
        out.push(ch.to_string());
    }
    out.join("   ")
}

fn picture_op(op: &ElemOp, num_qubits: usize) -> String {
    let mut cells: Vec<(QubitIndex, char)> = Vec::new();
    match &op.gate {
        Gate::Had2 { target } => cells.push((*target, 'H')),
        Gate::SigX { target } => cells.push((*target, 'X')),
        Gate::SigY { target } => cells.push((*target, 'Y')),
        Gate::SigZ { target } => cells.push((*target, 'Z')),
        Gate::RotX { target, .. } | Gate::RotY { target, .. } | Gate::RotZ { target, .. } => {
            cells.push((*target, 'R'))
        }
        Gate::P1Ph { target, .. } => cells.push((*target, 'P')),
        Gate::Swap { targets: [a, b] } => {
            let (hi, lo) = if a.index() > b.index() {
                (*a, *b)
            } else {
                (*b, *a)
            };
            cells.push((hi, '<'));
            cells.push((lo, '>'));
        }
    }
    for c in &op.controls {
        cells.push((c.qubit, if c.polarity { '@' } else { 'O' }));
    }
    render_cells(num_qubits, &cells)
}

fn picture_mux(mux: &Multiplexor, num_qubits: usize) -> String {
    let mut cells = vec![(mux.target, 'M')];
    cells.extend(mux.controls.iter().map(|q| (*q, '@')));
    render_cells(num_qubits, &cells)
}

/// ASCII rendering, one line per English line: target symbols (`H`, `X`,
/// `Y`, `Z`, `R` for rotations, `P` for phases, `M` for a multiplexor
/// target, `<`/`>` for swap endpoints), `@`/`O` for true/false controls,
/// `|` strictly between the outermost touched qubits and `+` elsewhere,
/// highest qubit leftmost. LOOP/NEXT lines appear verbatim.
pub fn picture_lines(circuit: &Circuit) -> Vec<String> {
    let n = circuit.num_qubits();
    let mut lines = Vec::new();
    for item in circuit.items() {
        match item {
            Item::Op(op) => lines.push(picture_op(op, n)),
            Item::Mux(mux) => lines.push(picture_mux(mux, n)),
            Item::Loop(lp) => {
                lines.push(loop_header(lp));
                for body in &lp.body {
                    match body {
                        BodyItem::Op(op) => lines.push(picture_op(op, n)),
                        BodyItem::Mux(mux) => lines.push(picture_mux(mux, n)),
                    }
                }
                lines.push(loop_footer(lp));
            }
        }
    }
    lines
}

/// Outcome of the eigenvalue-bound check, echoed in the Log file.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EigCheck {
    /// All eigenvalues were inspected and satisfy the bound.
    Passed { count: usize },
    /// Eigenvalues were not computed; the bound is the user's obligation.
    Skipped,
}

/// Everything the front end knows about a run, echoed into the Log file.
#[derive(Clone, Debug)]
pub struct RunSettings {
    pub prefix: String,
    pub atom_name: String,
    pub v_name: String,
    pub f_name: String,
    pub power_mode: PowerMode,
    pub expand_mux: bool,
    pub eig_check: EigCheck,
}

/// Echo of every run input plus the elementary-operation count.
pub fn log_lines(params: &AvgParams, op_count: usize, settings: &RunSettings) -> Vec<String> {
    let eig_line = match settings.eig_check {
        EigCheck::Passed { count } => {
            format!("Eigenvalue bound check: passed ({count} eigenvalues inspected)")
        }
        EigCheck::Skipped => String::from(
            "Eigenvalue bound check: skipped (eigenvalues unavailable; \
             the bound A_x*dt/(2*pi) < (Ns_j - 1)/Ns_j is the user's obligation)",
        ),
    };
    vec![
        format!("File Prefix: {}", settings.prefix),
        format!("Number of Atom Qubits: {}", params.nb()),
        format!("Number of Probe Qubits: {}", params.nbj()),
        format!("gamma: {}", params.gamma()),
        format!("Delta t/(2*PI): {}", params.dt_over_2pi()),
        format!("Atom circuit: {}", settings.atom_name),
        format!("V circuit: {}", settings.v_name),
        format!("f: {}", settings.f_name),
        format!("Power mode: {}", settings.power_mode),
        format!(
            "Expand multiplexors: {}",
            if settings.expand_mux { "yes" } else { "no" }
        ),
        eig_line,
        format!("Number of Elementary Operations: {op_count}"),
    ]
}

/// Paths of the three files written by [`write_files`].
#[derive(Clone, Debug)]
pub struct WrittenFiles {
    pub log: PathBuf,
    pub english: PathBuf,
    pub picture: PathBuf,
}

fn write_lines(path: &Path, lines: &[String]) -> io::Result<()> {
    let mut text = lines.join("\n");
    text.push('\n');
    fs::write(path, text)
}

/// Writes `<prefix>_qoa_log.txt`, `<prefix>_qoa_eng.txt` and
/// `<prefix>_qoa_pic.txt`. The prefix may carry a directory component.
pub fn write_files(
    circuit: &Circuit,
    params: &AvgParams,
    settings: &RunSettings,
) -> io::Result<WrittenFiles> {
    let files = WrittenFiles {
        log: PathBuf::from(format!("{}_qoa_log.txt", settings.prefix)),
        english: PathBuf::from(format!("{}_qoa_eng.txt", settings.prefix)),
        picture: PathBuf::from(format!("{}_qoa_pic.txt", settings.prefix)),
    };
    write_lines(
        &files.log,
        &log_lines(params, circuit.elementary_op_count(), settings),
    )?;
    write_lines(&files.english, &english_lines(circuit))?;
    write_lines(&files.picture, &picture_lines(circuit))?;
    Ok(files)
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: unrecognized operation {op:?}")]
    UnknownOp { line: usize, op: String },
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: NEXT outside of a LOOP")]
    StrayNext { line: usize },
    #[error("line {line}: NEXT {got} does not close LOOP {open}")]
    MismatchedNext { line: usize, got: u32, open: u32 },
    #[error("line {line}: LOOP {open} is still open here")]
    NestedLoop { line: usize, open: u32 },
    #[error("LOOP {0} is never closed")]
    UnclosedLoop(u32),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

fn malformed(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        reason: reason.into(),
    }
}

fn parse_qubit(tok: &str, line: usize) -> Result<QubitIndex, ParseError> {
    tok.parse::<usize>()
        .map(QubitIndex::new)
        .map_err(|_| malformed(line, format!("bad qubit index {tok:?}")))
}

fn parse_angle(tok: &str, line: usize) -> Result<f64, ParseError> {
    tok.parse::<f64>()
        .map_err(|_| malformed(line, format!("bad angle {tok:?}")))
}

fn parse_controls(tokens: &[&str], line: usize) -> Result<Vec<Control>, ParseError> {
    if tokens.is_empty() {
        return Ok(Vec::new());
    }
    if tokens[0] != "IF" {
        return Err(malformed(
            line,
            format!("expected IF, found {:?}", tokens[0]),
        ));
    }
    tokens[1..]
        .iter()
        .map(|tok| {
            let (idx, polarity) = match tok.strip_suffix('T') {
                Some(idx) => (idx, true),
                None => match tok.strip_suffix('F') {
                    Some(idx) => (idx, false),
                    None => return Err(malformed(line, format!("bad control {tok:?}"))),
                },
            };
            Ok(Control {
                qubit: parse_qubit(idx, line)?,
                polarity,
            })
        })
        .collect()
}

fn parse_op_line(tokens: &[&str], line: usize) -> Result<ElemOp, ParseError> {
    let kind = tokens[0];
    let (gate, rest): (Gate, &[&str]) = match kind {
        "HAD2" | "SIGX" | "SIGY" | "SIGZ" => {
            if tokens.len() < 3 || tokens[1] != "AT" {
                return Err(malformed(line, "expected AT <qubit>"));
            }
            let target = parse_qubit(tokens[2], line)?;
            let gate = match kind {
                "HAD2" => Gate::Had2 { target },
                "SIGX" => Gate::SigX { target },
                "SIGY" => Gate::SigY { target },
                _ => Gate::SigZ { target },
            };
            (gate, &tokens[3..])
        }
        "ROTX" | "ROTY" | "ROTZ" | "P1PH" => {
            if tokens.len() < 4 || tokens[2] != "AT" {
                return Err(malformed(line, "expected <angle> AT <qubit>"));
            }
            let angle_deg = parse_angle(tokens[1], line)?;
            let target = parse_qubit(tokens[3], line)?;
            let gate = match kind {
                "ROTX" => Gate::RotX { target, angle_deg },
                "ROTY" => Gate::RotY { target, angle_deg },
                "ROTZ" => Gate::RotZ { target, angle_deg },
                _ => Gate::P1Ph { target, angle_deg },
            };
            (gate, &tokens[4..])
        }
        "SWAP" => {
            if tokens.len() < 3 {
                return Err(malformed(line, "expected SWAP <t1> <t2>"));
            }
            let a = parse_qubit(tokens[1], line)?;
            let b = parse_qubit(tokens[2], line)?;
            (Gate::Swap { targets: [a, b] }, &tokens[3..])
        }
        other => {
            return Err(ParseError::UnknownOp {
                line,
                op: other.to_string(),
            })
        }
    };
    Ok(ElemOp {
        gate,
        controls: parse_controls(rest, line)?,
    })
}

fn parse_mux_line(tokens: &[&str], line: usize) -> Result<Multiplexor, ParseError> {
    if tokens.len() < 3 || tokens[1] != "AT" {
        return Err(malformed(line, "expected MP_Y AT <qubit>"));
    }
    let target = parse_qubit(tokens[2], line)?;
    let mut rest = &tokens[3..];
    let mut controls_hi_first: Vec<QubitIndex> = Vec::new();
    if rest.first() == Some(&"IF") {
        rest = &rest[1..];
        while let Some(tok) = rest.first() {
            if *tok == "BY" {
                break;
            }
            controls_hi_first.push(parse_qubit(tok, line)?);
            rest = &rest[1..];
        }
    }
    if rest.first() != Some(&"BY") {
        return Err(malformed(line, "expected BY <angles>"));
    }
    let angles = rest[1..]
        .iter()
        .map(|tok| parse_angle(tok, line))
        .collect::<Result<Vec<f64>, ParseError>>()?;
    controls_hi_first.reverse();
    Ok(Multiplexor::new(target, controls_hi_first, angles)?)
}

/// Parses English-file lines back into a circuit. The qubit count is
/// inferred as one past the highest referenced qubit.
pub fn parse_english(lines: &[String]) -> Result<Circuit, ParseError> {
    let mut items: Vec<Item> = Vec::new();
    let mut open_loop: Option<(u32, usize, Vec<BodyItem>)> = None;

    for (idx, raw) in lines.iter().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match tokens[0] {
            "LOOP" => {
                if let Some((open, _, _)) = &open_loop {
                    return Err(ParseError::NestedLoop { line, open: *open });
                }
                if tokens.len() != 3 {
                    return Err(malformed(line, "expected LOOP <id> REPS:<n>"));
                }
                let id = tokens[1]
                    .parse::<u32>()
                    .map_err(|_| malformed(line, format!("bad loop id {:?}", tokens[1])))?;
                let reps = tokens[2]
                    .strip_prefix("REPS:")
                    .and_then(|n| n.parse::<usize>().ok())
                    .ok_or_else(|| malformed(line, format!("bad reps {:?}", tokens[2])))?;
                open_loop = Some((id, reps, Vec::new()));
            }
            "NEXT" => {
                if tokens.len() != 2 {
                    return Err(malformed(line, "expected NEXT <id>"));
                }
                let got = tokens[1]
                    .parse::<u32>()
                    .map_err(|_| malformed(line, format!("bad loop id {:?}", tokens[1])))?;
                match open_loop.take() {
                    None => return Err(ParseError::StrayNext { line }),
                    Some((open, _, _)) if open != got => {
                        return Err(ParseError::MismatchedNext { line, got, open })
                    }
                    Some((id, reps, body)) => items.push(Item::Loop(Loop::new(id, reps, body)?)),
                }
            }
            "MP_Y" => {
                let mux = parse_mux_line(&tokens, line)?;
                match &mut open_loop {
                    Some((_, _, body)) => body.push(BodyItem::Mux(mux)),
                    None => items.push(Item::Mux(mux)),
                }
            }
            _ => {
                let op = parse_op_line(&tokens, line)?;
                match &mut open_loop {
                    Some((_, _, body)) => body.push(BodyItem::Op(op)),
                    None => items.push(Item::Op(op)),
                }
            }
        }
    }
    if let Some((id, _, _)) = open_loop {
        return Err(ParseError::UnclosedLoop(id));
    }

    let num_qubits = items
        .iter()
        .flat_map(|item| item.qubits())
        .map(|q| q.index() + 1)
        .max()
        .unwrap_or(1);
    let mut circuit = Circuit::new(num_qubits)?;
    circuit.push_all(items)?;
    Ok(circuit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::avg::AvgParams;

    #[test]
    fn english_grammar_examples() {
        assert_eq!(english_op(&ElemOp::had2(2)), "HAD2 AT 2");
        assert_eq!(
            english_op(&ElemOp::sig_x(0).controlled_on(2).anti_controlled_on(1)),
            "SIGX AT 0 IF 2T 1F"
        );
        assert_eq!(english_op(&ElemOp::rot_y(3, 45.5)), "ROTY 45.500000 AT 3");
        assert_eq!(english_op(&ElemOp::p1ph(1, -90.0)), "P1PH -90.000000 AT 1");
        assert_eq!(english_op(&ElemOp::swap(0, 2)), "SWAP 0 2");
    }

    #[test]
    fn controls_print_highest_qubit_first_regardless_of_insertion_order() {
        let op = ElemOp::sig_x(0)
            .controlled_on(1)
            .controlled_on(3)
            .anti_controlled_on(2);
        assert_eq!(english_op(&op), "SIGX AT 0 IF 3T 2F 1T");
    }

    #[test]
    fn loop_framing_lines() {
        let mut c = Circuit::new(2).unwrap();
        c.push(Loop::new(5, 4, [ElemOp::had2(0), ElemOp::sig_x(1)]).unwrap())
            .unwrap();
        let lines = english_lines(&c);
        assert_eq!(lines[0], "LOOP 5 REPS:4");
        assert_eq!(lines.last().unwrap(), "NEXT 5");
        assert_eq!(lines.len(), 4);
    }

    #[test]
    fn mux_line_lists_controls_highest_significance_first() {
        let mux = Multiplexor::new(
            5,
            [2usize, 3, 4],
            vec![0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0],
        )
        .unwrap();
        let mut c = Circuit::new(6).unwrap();
        c.push(mux).unwrap();
        assert_eq!(
            english_lines(&c)[0],
            "MP_Y AT 5 IF 4 3 2 BY 0.000000 1.000000 2.000000 3.000000 4.000000 5.000000 6.000000 7.000000"
        );
    }

    #[test]
    fn mux_without_controls_has_no_if_section() {
        let mux = Multiplexor::new(0, Vec::<usize>::new(), vec![30.0]).unwrap();
        let mut c = Circuit::new(1).unwrap();
        c.push(mux).unwrap();
        assert_eq!(english_lines(&c)[0], "MP_Y AT 0 BY 30.000000");
    }

    #[test]
    fn picture_rendering_examples() {
        let mut c = Circuit::new(4).unwrap();
        c.push(ElemOp::had2(1)).unwrap();
        c.push(ElemOp::sig_x(0).controlled_on(3)).unwrap();
        c.push(ElemOp::swap(0, 2)).unwrap();
        c.push(ElemOp::rot_y(3, 10.0).anti_controlled_on(1))
            .unwrap();
        let lines = picture_lines(&c);
        assert_eq!(lines[0], "+   +   H   +");
        assert_eq!(lines[1], "@   |   |   X");
        assert_eq!(lines[2], "+   <   |   >");
        assert_eq!(lines[3], "R   |   O   +");
    }

    #[test]
    fn picture_mux_marks_target_and_selector_controls() {
        let mut c = Circuit::new(6).unwrap();
        c.push(Multiplexor::new(5, [2usize, 3, 4], vec![0.0; 8]).unwrap())
            .unwrap();
        assert_eq!(picture_lines(&c)[0], "M   @   @   @   +   +");
    }

    #[test]
    fn picture_line_count_matches_english_line_count() {
        let mut c = Circuit::new(3).unwrap();
        c.push(ElemOp::had2(0)).unwrap();
        c.push(Loop::new(1, 2, [ElemOp::sig_x(1), ElemOp::swap(0, 2)]).unwrap())
            .unwrap();
        c.push(Multiplexor::new(2, [0usize], vec![5.0, 15.0]).unwrap())
            .unwrap();
        assert_eq!(english_lines(&c).len(), picture_lines(&c).len());
        // LOOP/NEXT appear verbatim in the picture
        let pic = picture_lines(&c);
        assert!(pic.contains(&String::from("LOOP 1 REPS:2")));
        assert!(pic.contains(&String::from("NEXT 1")));
    }

    #[test]
    fn log_lines_echo_the_run_inputs() {
        let params = AvgParams::from_dt_over_2pi(2, 3, 1.0, 1.0).unwrap();
        let settings = RunSettings {
            prefix: String::from("test"),
            atom_name: String::from("qft"),
            v_name: String::from("qft"),
            f_name: String::from("exp01"),
            power_mode: PowerMode::Loop,
            expand_mux: false,
            eig_check: EigCheck::Passed { count: 4 },
        };
        let lines = log_lines(&params, 43, &settings);
        assert!(lines.contains(&String::from("File Prefix: test")));
        assert!(lines.contains(&String::from("Number of Atom Qubits: 2")));
        assert!(lines.contains(&String::from("Number of Probe Qubits: 3")));
        assert!(lines.contains(&String::from("gamma: 1")));
        assert!(lines.contains(&String::from("Delta t/(2*PI): 1")));
        assert!(lines.contains(&String::from("Number of Elementary Operations: 43")));
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let mut c = Circuit::new(4).unwrap();
        c.push(ElemOp::had2(3)).unwrap();
        c.push(
            ElemOp::p1ph(2, 33.125)
                .controlled_on(0)
                .anti_controlled_on(3),
        )
        .unwrap();
        c.push(
            Loop::new(
                2,
                3,
                [
                    ElemOp::swap(1, 3).controlled_on(0),
                    ElemOp::rot_z(0, -12.75),
                ],
            )
            .unwrap(),
        )
        .unwrap();
        c.push(Multiplexor::new(0, [1usize, 2], vec![1.5, 2.5, 3.5, 4.5]).unwrap())
            .unwrap();
        let lines = english_lines(&c);
        let parsed = parse_english(&lines).unwrap();
        assert_eq!(english_lines(&parsed), lines);
    }

    #[test]
    fn parser_rejects_garbage() {
        let bad = vec![String::from("WIBBLE AT 0")];
        assert!(matches!(
            parse_english(&bad),
            Err(ParseError::UnknownOp { .. })
        ));
        let stray = vec![String::from("NEXT 3")];
        assert!(matches!(
            parse_english(&stray),
            Err(ParseError::StrayNext { .. })
        ));
        let unclosed = vec![String::from("LOOP 1 REPS:2"), String::from("HAD2 AT 0")];
        assert!(matches!(
            parse_english(&unclosed),
            Err(ParseError::UnclosedLoop(1))
        ));
    }

    #[test]
    fn emitted_lines_are_pure_ascii() {
        let mut c = Circuit::new(3).unwrap();
        c.push(ElemOp::rot_x(1, -270.25).controlled_on(2)).unwrap();
        c.push(Multiplexor::new(0, [1usize, 2], vec![9.0; 4]).unwrap())
            .unwrap();
        for line in english_lines(&c).iter().chain(picture_lines(&c).iter()) {
            assert!(line.is_ascii());
        }
    }

    #[test]
    fn written_files_use_the_three_standard_names() {
        let dir = tempfile::tempdir().unwrap();
        let prefix = dir.path().join("test");
        let params = AvgParams::from_dt_over_2pi(1, 1, 1.0, 1.0).unwrap();
        let mut c = Circuit::new(3).unwrap();
        c.push(ElemOp::had2(0)).unwrap();
        let settings = RunSettings {
            prefix: prefix.to_str().unwrap().to_string(),
            atom_name: String::from("qft"),
            v_name: String::from("qft"),
            f_name: String::from("exp01"),
            power_mode: PowerMode::Loop,
            expand_mux: false,
            eig_check: EigCheck::Skipped,
        };
        let files = write_files(&c, &params, &settings).unwrap();
        assert_eq!(files.log.file_name().unwrap(), "test_qoa_log.txt");
        assert_eq!(files.english.file_name().unwrap(), "test_qoa_eng.txt");
        assert_eq!(files.picture.file_name().unwrap(), "test_qoa_pic.txt");
        for path in [&files.log, &files.english, &files.picture] {
            let text = fs::read_to_string(path).unwrap();
            assert!(text.ends_with('\n'));
            assert!(text.is_ascii());
        }
    }
}
