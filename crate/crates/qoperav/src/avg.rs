// SPDX-License-Identifier: Apache-2.0

//! Generator for operator-average estimation circuits.
//!
//! From the four numeric inputs plus pluggable atom, state-preparation and
//! weighting-function providers, [`build_circuit`] assembles a circuit on
//! `nb + nbj + 1` qubits: state preparation V on the atom register,
//! Hadamards on the probe register, controlled powers of the atom,
//! an inverse Fourier transform on the probe, and one multiplexed ancilla
//! rotation. Whenever every eigenphase of the atom is an exact multiple of
//! `2*pi / 2^nbj`, the probability of reading the ancilla in |1> equals
//! `gamma * <psi| f(A) |psi>` exactly, where `A` is the Hermitian
//! generator of the atom `exp(i*A*dt)` with eigenphases taken in
//! `[0, 2*pi)`.

use std::f64::consts::TAU;
use std::fmt;

use thiserror::Error;

use crate::circuit::{
    attach_control, BodyItem, Circuit, CircuitError, Control, ElemOp, Gate, Item, Loop,
    Multiplexor, QubitIndex, MAX_QUBITS,
};
use crate::qft::{qft_seo, QftSpec};
use crate::sim;

/// Eigenvalue checks diagonalize a 2^nb matrix; skip them above this size.
pub const EIG_CHECK_MAX_ATOM_QUBITS: usize = 6;

/// Comparisons against the constraint bounds allow this much slack so that
/// values sitting exactly on a bound are classified deterministically.
const BOUND_EPS: f64 = 1e-12;

/// The run inputs: atom register width `nb`, probe register width `nbj`,
/// scale factor `gamma`, and evolution time `dt` in radians.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct AvgParams {
    nb: usize,
    nbj: usize,
    gamma: f64,
    dt: f64,
}

#[derive(Debug, Error, PartialEq)]
pub enum ParamError {
    #[error("number of atom qubits must be at least 1")]
    ZeroAtomQubits,
    #[error("number of probe qubits must be at least 1")]
    ZeroProbeQubits,
    #[error("gamma must be a positive finite real, got {0}")]
    BadGamma(f64),
    #[error("dt must be a positive finite real, got {0}")]
    BadDt(f64),
    #[error("nb + nbj + 1 = {0} qubits exceeds the supported maximum {MAX_QUBITS}")]
    TooManyQubits(usize),
}

impl AvgParams {
    pub fn new(nb: usize, nbj: usize, gamma: f64, dt: f64) -> Result<Self, ParamError> {
        if nb == 0 {
            return Err(ParamError::ZeroAtomQubits);
        }
        if nbj == 0 {
            return Err(ParamError::ZeroProbeQubits);
        }
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(ParamError::BadGamma(gamma));
        }
        if !(dt.is_finite() && dt > 0.0) {
            return Err(ParamError::BadDt(dt));
        }
        let total = nb + nbj + 1;
        if total > MAX_QUBITS {
            return Err(ParamError::TooManyQubits(total));
        }
        Ok(AvgParams { nb, nbj, gamma, dt })
    }

    /// Builds params from `dt/(2*pi)`, the form the front end accepts.
    pub fn from_dt_over_2pi(
        nb: usize,
        nbj: usize,
        gamma: f64,
        dt_over_2pi: f64,
    ) -> Result<Self, ParamError> {
        Self::new(nb, nbj, gamma, dt_over_2pi * TAU)
    }

    pub fn nb(&self) -> usize {
        self.nb
    }

    pub fn nbj(&self) -> usize {
        self.nbj
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn dt_over_2pi(&self) -> f64 {
        self.dt / TAU
    }

    /// Atom-register dimension 2^nb.
    pub fn ns(&self) -> usize {
        1 << self.nb
    }

    /// Probe-register dimension 2^nbj.
    pub fn nsj(&self) -> usize {
        1 << self.nbj
    }

    /// Total circuit width nb + nbj + 1.
    pub fn num_qubits(&self) -> usize {
        self.nb + self.nbj + 1
    }

    /// Atom register: qubits 0 .. nb-1.
    pub fn atom_qubits(&self) -> Vec<QubitIndex> {
        (0..self.nb).map(QubitIndex::new).collect()
    }

    /// Probe register: qubits nb .. nb+nbj-1; offset p is the 2^p bit of
    /// the probe value.
    pub fn probe_qubits(&self) -> Vec<QubitIndex> {
        (0..self.nbj).map(|p| self.probe_qubit(p)).collect()
    }

    pub fn probe_qubit(&self, p: usize) -> QubitIndex {
        QubitIndex::new(self.nb + p)
    }

    /// The ancilla whose |1> probability carries the average.
    pub fn ancilla(&self) -> QubitIndex {
        QubitIndex::new(self.nb + self.nbj)
    }

    /// The argument `2*pi*j / (dt * 2^nbj)` at which f is sampled for
    /// probe value j.
    pub fn probe_grid_point(&self, j: usize) -> f64 {
        TAU * j as f64 / (self.dt * self.nsj() as f64)
    }
}

/// The weighting function f applied to the eigenvalues of A.
pub trait ScalarFunction {
    fn eval(&self, xi: f64) -> f64;
}

impl<F: Fn(f64) -> f64> ScalarFunction for F {
    fn eval(&self, xi: f64) -> f64 {
        self(xi)
    }
}

/// The demo weighting function `f(xi) = exp(-0.1 * xi)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Exp01;

impl ScalarFunction for Exp01 {
    fn eval(&self, xi: f64) -> f64 {
        (-0.1 * xi).exp()
    }
}

/// A violated input constraint. The display text names the inequality so
/// the front end can report exactly which assumption failed.
#[derive(Clone, Copy, PartialEq, Debug, Error)]
pub enum Violation {
    #[error("constraint 0 <= gamma*f(2*pi*j/(dt*Ns_j)) <= 1 fails at j = {j}: gamma*f = {value}")]
    GammaFOutOfRange { j: usize, value: f64 },
    #[error("constraint A_x*dt/(2*pi) < (Ns_j - 1)/Ns_j fails for eigenvalue x = {index}: {value} is not below {bound}")]
    EigenvalueBound {
        index: usize,
        value: f64,
        bound: f64,
    },
}

/// Checks the two input constraints: (a) `0 <= gamma*f <= 1` on the probe
/// grid, and (b) when the eigenvalues of A are known (demo/test mode),
/// `A_x*dt/(2*pi) < (Ns_j - 1)/Ns_j` for every eigenvalue. Returns the
/// first violated inequality.
pub fn validate(
    params: &AvgParams,
    f: &dyn ScalarFunction,
    eigenvalues: Option<&[f64]>,
) -> Result<(), Violation> {
    for j in 0..params.nsj() {
        let value = params.gamma() * f.eval(params.probe_grid_point(j));
        if !value.is_finite() || !(-BOUND_EPS..=1.0 + BOUND_EPS).contains(&value) {
            return Err(Violation::GammaFOutOfRange { j, value });
        }
    }
    if let Some(eigs) = eigenvalues {
        let bound = (params.nsj() - 1) as f64 / params.nsj() as f64;
        for (index, a_x) in eigs.iter().enumerate() {
            let value = a_x * params.dt() / TAU;
            if value >= bound - BOUND_EPS {
                return Err(Violation::EigenvalueBound {
                    index,
                    value,
                    bound,
                });
            }
        }
    }
    Ok(())
}

/// Rotation angles for the ancilla multiplexor, in degrees:
/// `angles[j] = 2*arcsin(sqrt(gamma * f(2*pi*j/(dt*Ns_j))))`, so a
/// y-rotation by `angles[j]` moves |0> to a state whose |1> probability
/// is exactly `gamma * f`.
pub fn mux_angles(params: &AvgParams, f: &dyn ScalarFunction) -> Result<Vec<f64>, Violation> {
    let mut angles = Vec::with_capacity(params.nsj());
    for j in 0..params.nsj() {
        let value = params.gamma() * f.eval(params.probe_grid_point(j));
        if !value.is_finite() || !(-BOUND_EPS..=1.0 + BOUND_EPS).contains(&value) {
            return Err(Violation::GammaFOutOfRange { j, value });
        }
        let clamped = value.clamp(0.0, 1.0);
        angles.push((2.0 * clamped.sqrt().asin()).to_degrees());
    }
    Ok(angles)
}

/// How the atom is raised to its 2^p powers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PowerMode {
    /// Repeat the atom circuit inside `LOOP p+1 REPS:2^p`.
    Loop,
    /// Emit one fragment with the phase angles multiplied by 2^p,
    /// i.e. replace dt by 2^p * dt inside the atom circuit.
    ScaleAngle,
}

impl fmt::Display for PowerMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PowerMode::Loop => write!(f, "loop"),
            PowerMode::ScaleAngle => write!(f, "scale-angle"),
        }
    }
}

/// Supplies the atom circuit for `exp(i*A*dt)` and its controlled powers.
pub trait AtomProvider {
    /// One application of the atom on the atom qubits, uncontrolled.
    fn atom_gates(&self, atom_qubits: &[QubitIndex]) -> Vec<ElemOp>;

    /// Items implementing the 2^p-th power of the atom with `control`
    /// attached to every gate. The default wraps the controlled atom in
    /// `LOOP p+1 REPS:2^p`.
    fn power_fragment(
        &self,
        p: usize,
        atom_qubits: &[QubitIndex],
        control: Control,
    ) -> Result<Vec<Item>, CircuitError> {
        let body: Vec<BodyItem> = attach_control(self.atom_gates(atom_qubits), control)
            .into_iter()
            .map(BodyItem::Op)
            .collect();
        Ok(vec![Item::Loop(Loop::new(
            (p + 1) as u32,
            1usize << p,
            body,
        )?)])
    }
}

/// Supplies the state-preparation circuit for V, with |psi> = V|0...0>.
pub trait StatePrep {
    fn prep_gates(&self, atom_qubits: &[QubitIndex]) -> Vec<ElemOp>;
}

/// Multiplies the angle of every angle-carrying gate by `factor`.
fn scale_gate_angles(ops: Vec<ElemOp>, factor: f64) -> Vec<ElemOp> {
    ops.into_iter()
        .map(|mut op| {
            op.gate = match op.gate {
                Gate::RotX { target, angle_deg } => Gate::RotX {
                    target,
                    angle_deg: factor * angle_deg,
                },
                Gate::RotY { target, angle_deg } => Gate::RotY {
                    target,
                    angle_deg: factor * angle_deg,
                },
                Gate::RotZ { target, angle_deg } => Gate::RotZ {
                    target,
                    angle_deg: factor * angle_deg,
                },
                Gate::P1Ph { target, angle_deg } => Gate::P1Ph {
                    target,
                    angle_deg: factor * angle_deg,
                },
                other => other,
            };
            op
        })
        .collect()
}

/// The demo atom: the nb-qubit Fourier-transform circuit, taken in the
/// inverse direction so that its eigenphases over 2*pi cover
/// {0, 1/2, 3/4}. Its fourth power is the identity.
#[derive(Clone, Copy, Debug)]
pub struct QftAtom {
    mode: PowerMode,
}

impl QftAtom {
    pub fn new(mode: PowerMode) -> Self {
        QftAtom { mode }
    }
}

impl AtomProvider for QftAtom {
    fn atom_gates(&self, atom_qubits: &[QubitIndex]) -> Vec<ElemOp> {
        let spec = QftSpec::inverse(atom_qubits.iter().copied()).expect("valid atom register");
        qft_seo(&spec)
    }

    fn power_fragment(
        &self,
        p: usize,
        atom_qubits: &[QubitIndex],
        control: Control,
    ) -> Result<Vec<Item>, CircuitError> {
        match self.mode {
            PowerMode::Loop => default_loop_fragment(self, p, atom_qubits, control),
            PowerMode::ScaleAngle => {
                let scaled = scale_gate_angles(self.atom_gates(atom_qubits), (1u64 << p) as f64);
                Ok(attach_control(scaled, control)
                    .into_iter()
                    .map(Item::Op)
                    .collect())
            }
        }
    }
}

/// An atom built from one P1PH per atom qubit, so `A` is diagonal with
/// eigenvalue `sum_q m_q * theta_q / dt` on basis state |m>. Both power
/// modes implement its powers exactly, which makes it the reference atom
/// for comparing them.
#[derive(Clone, Debug)]
pub struct DiagonalPhaseAtom {
    phases_deg: Vec<f64>,
    mode: PowerMode,
}

impl DiagonalPhaseAtom {
    pub fn new(phases_deg: Vec<f64>, mode: PowerMode) -> Self {
        DiagonalPhaseAtom { phases_deg, mode }
    }
}

impl AtomProvider for DiagonalPhaseAtom {
    fn atom_gates(&self, atom_qubits: &[QubitIndex]) -> Vec<ElemOp> {
        assert_eq!(
            self.phases_deg.len(),
            atom_qubits.len(),
            "one phase per atom qubit"
        );
        atom_qubits
            .iter()
            .zip(&self.phases_deg)
            .map(|(q, deg)| ElemOp::p1ph(*q, *deg))
            .collect()
    }

    fn power_fragment(
        &self,
        p: usize,
        atom_qubits: &[QubitIndex],
        control: Control,
    ) -> Result<Vec<Item>, CircuitError> {
        match self.mode {
            PowerMode::Loop => default_loop_fragment(self, p, atom_qubits, control),
            PowerMode::ScaleAngle => {
                let scaled = scale_gate_angles(self.atom_gates(atom_qubits), (1u64 << p) as f64);
                Ok(attach_control(scaled, control)
                    .into_iter()
                    .map(Item::Op)
                    .collect())
            }
        }
    }
}

fn default_loop_fragment(
    provider: &dyn AtomProvider,
    p: usize,
    atom_qubits: &[QubitIndex],
    control: Control,
) -> Result<Vec<Item>, CircuitError> {
    let body: Vec<BodyItem> = attach_control(provider.atom_gates(atom_qubits), control)
        .into_iter()
        .map(BodyItem::Op)
        .collect();
    Ok(vec![Item::Loop(Loop::new(
        (p + 1) as u32,
        1usize << p,
        body,
    )?)])
}

/// The demo state preparation: V is the forward nb-qubit Fourier
/// transform, so |psi> is the uniform superposition.
#[derive(Clone, Copy, Debug, Default)]
pub struct QftPrep;

impl StatePrep for QftPrep {
    fn prep_gates(&self, atom_qubits: &[QubitIndex]) -> Vec<ElemOp> {
        let spec = QftSpec::forward(atom_qubits.iter().copied()).expect("valid atom register");
        qft_seo(&spec)
    }
}

#[derive(Debug, Error)]
pub enum BuildError {
    #[error(transparent)]
    Constraint(#[from] Violation),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error("{provider} fragment touches qubit {qubit}, outside its register")]
    ProviderOutOfRegister {
        provider: &'static str,
        qubit: QubitIndex,
    },
    #[error("atom fragment for power p = {p} has a gate without the probe control")]
    ProviderMissingControl { p: usize },
    #[error("atom fragment for power p = {p} contains a multiplexor, which cannot carry the probe control")]
    ProviderMux { p: usize },
}

fn check_in_register(
    qubits: &[QubitIndex],
    allowed: &[QubitIndex],
    provider: &'static str,
) -> Result<(), BuildError> {
    for q in qubits {
        if !allowed.contains(q) {
            return Err(BuildError::ProviderOutOfRegister {
                provider,
                qubit: *q,
            });
        }
    }
    Ok(())
}

fn check_atom_op(
    op: &ElemOp,
    atom_qubits: &[QubitIndex],
    control: Control,
    p: usize,
) -> Result<(), BuildError> {
    check_in_register(&op.gate.targets(), atom_qubits, "atom")?;
    if !op.controls.contains(&control) {
        return Err(BuildError::ProviderMissingControl { p });
    }
    for c in &op.controls {
        if *c != control && !atom_qubits.contains(&c.qubit) {
            return Err(BuildError::ProviderOutOfRegister {
                provider: "atom",
                qubit: c.qubit,
            });
        }
    }
    Ok(())
}

/// Assembles the full circuit on `nb + nbj + 1` qubits, laid out as
/// `[atom 0..nb-1][probe nb..nb+nbj-1][ancilla nb+nbj]`:
///
/// 1. V on the atom qubits;
/// 2. HAD2 on every probe qubit;
/// 3. for p = 0..nbj-1 the atom fragment for the 2^p-th power, every gate
///    true-controlled on probe qubit p;
/// 4. the inverse Fourier transform on the probe register, so a probe
///    reading j estimates `A_x * dt * 2^nbj / (2*pi)`;
/// 5. one multiplexor on the ancilla selected by the probe register with
///    the arcsin-encoded angles from [`mux_angles`].
///
/// The `gamma*f` constraint is checked here; the eigenvalue bound is the
/// front end's duty when the atom's eigenvalues are computable (see
/// [`atom_eigenvalues`]) and the user's otherwise.
pub fn build_circuit(
    params: &AvgParams,
    atom: &dyn AtomProvider,
    prep: &dyn StatePrep,
    f: &dyn ScalarFunction,
) -> Result<Circuit, BuildError> {
    let angles = mux_angles(params, f)?;
    let atom_qubits = params.atom_qubits();
    let mut circuit = Circuit::new(params.num_qubits())?;

    for op in prep.prep_gates(&atom_qubits) {
        check_in_register(&op.qubits(), &atom_qubits, "state preparation")?;
        circuit.push(op)?;
    }

    for p in 0..params.nbj() {
        circuit.push(ElemOp::had2(params.probe_qubit(p)))?;
    }

    for p in 0..params.nbj() {
        let control = Control::on(params.probe_qubit(p));
        for item in atom.power_fragment(p, &atom_qubits, control)? {
            match &item {
                Item::Op(op) => check_atom_op(op, &atom_qubits, control, p)?,
                Item::Mux(_) => return Err(BuildError::ProviderMux { p }),
                Item::Loop(lp) => {
                    for body in &lp.body {
                        match body {
                            BodyItem::Op(op) => check_atom_op(op, &atom_qubits, control, p)?,
                            BodyItem::Mux(_) => return Err(BuildError::ProviderMux { p }),
                        }
                    }
                }
            }
            circuit.push(item)?;
        }
    }

    let probe = QftSpec::inverse(params.probe_qubits()).expect("valid probe register");
    for op in qft_seo(&probe) {
        circuit.push(op)?;
    }

    circuit.push(Multiplexor::new(
        params.ancilla(),
        params.probe_qubits(),
        angles,
    )?)?;
    Ok(circuit)
}

/// Eigenvalues `A_x = phi_x / dt` of the atom's Hermitian generator,
/// computed by diagonalizing the atom's base unitary. Returns `None` when
/// the atom register is too wide to diagonalize cheaply; the eigenvalue
/// bound is then the user's obligation and the log records that.
pub fn atom_eigenvalues(
    atom: &dyn AtomProvider,
    params: &AvgParams,
) -> Result<Option<Vec<f64>>, sim::SimError> {
    if params.nb() > EIG_CHECK_MAX_ATOM_QUBITS {
        return Ok(None);
    }
    let unitary = atom_unitary(atom, params)?;
    let eig = sim::linalg::unitary_eigen(&unitary)?;
    Ok(Some(
        eig.phases.iter().map(|phi| phi / params.dt()).collect(),
    ))
}

/// The unitary of one uncontrolled atom application on the atom register.
pub fn atom_unitary(
    atom: &dyn AtomProvider,
    params: &AvgParams,
) -> Result<sim::linalg::CMatrix, sim::SimError> {
    sim::ops_unitary(&atom.atom_gates(&params.atom_qubits()), params.nb())
}

/// The unitary of the state-preparation circuit on the atom register.
pub fn prep_unitary(
    prep: &dyn StatePrep,
    params: &AvgParams,
) -> Result<sim::linalg::CMatrix, sim::SimError> {
    sim::ops_unitary(&prep.prep_gates(&params.atom_qubits()), params.nb())
}
