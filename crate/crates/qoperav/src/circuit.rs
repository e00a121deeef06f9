// SPDX-License-Identifier: Apache-2.0

//! Circuit intermediate representation.
//!
//! A [`Circuit`] is an ordered list of elementary operations ([`ElemOp`]),
//! uniformly controlled y-rotations ([`Multiplexor`]) and repeated blocks
//! ([`Loop`]); list order is time order. Qubit 0 is the least-significant
//! bit of basis-state labels. Angles are stored in degrees everywhere and
//! converted to radians only inside the simulator.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Widest circuit the IR accepts; keeps basis-state indices in `usize`.
pub const MAX_QUBITS: usize = 32;

/// Index of a qubit wire. Qubit 0 is the least-significant bit of
/// basis-state labels.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QubitIndex(usize);

impl QubitIndex {
    pub const fn new(index: usize) -> Self {
        QubitIndex(index)
    }

    pub const fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for QubitIndex {
    fn from(index: usize) -> Self {
        QubitIndex(index)
    }
}

impl fmt::Display for QubitIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A control condition attached to a gate: the gate fires only when
/// `qubit` is |1> (`polarity == true`) or |0> (`polarity == false`).
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct Control {
    pub qubit: QubitIndex,
    pub polarity: bool,
}

impl Control {
    /// True-control: fires on |1>.
    pub fn on(qubit: impl Into<QubitIndex>) -> Self {
        Control {
            qubit: qubit.into(),
            polarity: true,
        }
    }

    /// False-control: fires on |0>.
    pub fn off(qubit: impl Into<QubitIndex>) -> Self {
        Control {
            qubit: qubit.into(),
            polarity: false,
        }
    }
}

/// The gate action of an elementary operation. Rotation and phase gates
/// carry their angle in degrees; the other kinds carry none.
#[derive(Clone, PartialEq, Debug)]
pub enum Gate {
    Had2 {
        target: QubitIndex,
    },
    SigX {
        target: QubitIndex,
    },
    SigY {
        target: QubitIndex,
    },
    SigZ {
        target: QubitIndex,
    },
    RotX {
        target: QubitIndex,
        angle_deg: f64,
    },
    RotY {
        target: QubitIndex,
        angle_deg: f64,
    },
    RotZ {
        target: QubitIndex,
        angle_deg: f64,
    },
    /// One-qubit phase: multiplies the |1> amplitude by exp(i*angle).
    P1Ph {
        target: QubitIndex,
        angle_deg: f64,
    },
    Swap {
        targets: [QubitIndex; 2],
    },
}

impl Gate {
    pub fn targets(&self) -> Vec<QubitIndex> {
        match self {
            Gate::Had2 { target }
            | Gate::SigX { target }
            | Gate::SigY { target }
            | Gate::SigZ { target }
            | Gate::RotX { target, .. }
            | Gate::RotY { target, .. }
            | Gate::RotZ { target, .. }
            | Gate::P1Ph { target, .. } => vec![*target],
            Gate::Swap { targets } => targets.to_vec(),
        }
    }

    pub fn angle_deg(&self) -> Option<f64> {
        match self {
            Gate::RotX { angle_deg, .. }
            | Gate::RotY { angle_deg, .. }
            | Gate::RotZ { angle_deg, .. }
            | Gate::P1Ph { angle_deg, .. } => Some(*angle_deg),
            _ => None,
        }
    }
}

/// One elementary operation: a gate plus an optional list of controls.
///
/// A CNOT is `ElemOp::sig_x(t).controlled_on(c)`; a multiply controlled
/// NOT carries more controls on the same mechanism.
#[derive(Clone, PartialEq, Debug)]
pub struct ElemOp {
    pub gate: Gate,
    pub controls: Vec<Control>,
}

impl ElemOp {
    fn bare(gate: Gate) -> Self {
        ElemOp {
            gate,
            controls: Vec::new(),
        }
    }

    pub fn had2(target: impl Into<QubitIndex>) -> Self {
        Self::bare(Gate::Had2 {
            target: target.into(),
        })
    }

    pub fn sig_x(target: impl Into<QubitIndex>) -> Self {
        Self::bare(Gate::SigX {
            target: target.into(),
        })
    }

    pub fn sig_y(target: impl Into<QubitIndex>) -> Self {
        Self::bare(Gate::SigY {
            target: target.into(),
        })
    }

    pub fn sig_z(target: impl Into<QubitIndex>) -> Self {
        Self::bare(Gate::SigZ {
            target: target.into(),
        })
    }

    pub fn rot_x(target: impl Into<QubitIndex>, angle_deg: f64) -> Self {
        Self::bare(Gate::RotX {
            target: target.into(),
            angle_deg,
        })
    }

    pub fn rot_y(target: impl Into<QubitIndex>, angle_deg: f64) -> Self {
        Self::bare(Gate::RotY {
            target: target.into(),
            angle_deg,
        })
    }

    pub fn rot_z(target: impl Into<QubitIndex>, angle_deg: f64) -> Self {
        Self::bare(Gate::RotZ {
            target: target.into(),
            angle_deg,
        })
    }

    pub fn p1ph(target: impl Into<QubitIndex>, angle_deg: f64) -> Self {
        Self::bare(Gate::P1Ph {
            target: target.into(),
            angle_deg,
        })
    }

    pub fn swap(a: impl Into<QubitIndex>, b: impl Into<QubitIndex>) -> Self {
        Self::bare(Gate::Swap {
            targets: [a.into(), b.into()],
        })
    }

    /// Adds a true-control.
    pub fn controlled_on(mut self, qubit: impl Into<QubitIndex>) -> Self {
        self.controls.push(Control::on(qubit));
        self
    }

    /// Adds a false-control.
    pub fn anti_controlled_on(mut self, qubit: impl Into<QubitIndex>) -> Self {
        self.controls.push(Control::off(qubit));
        self
    }

    pub fn with_control(mut self, control: Control) -> Self {
        self.controls.push(control);
        self
    }

    /// Every qubit the operation touches (targets then controls).
    pub fn qubits(&self) -> Vec<QubitIndex> {
        let mut qs = self.gate.targets();
        qs.extend(self.controls.iter().map(|c| c.qubit));
        qs
    }

    fn validate(&self, num_qubits: usize) -> Result<(), CircuitError> {
        let targets = self.gate.targets();
        if let Gate::Swap { targets: [a, b] } = self.gate {
            if a == b {
                return Err(CircuitError::SwapTargetsEqual(a));
            }
        }
        if let Some(angle) = self.gate.angle_deg() {
            if !angle.is_finite() {
                return Err(CircuitError::NonFiniteAngle);
            }
        }
        for q in &targets {
            check_range(*q, num_qubits)?;
        }
        let mut seen = BTreeSet::new();
        for c in &self.controls {
            check_range(c.qubit, num_qubits)?;
            if targets.contains(&c.qubit) {
                return Err(CircuitError::ControlOnTarget(c.qubit));
            }
            if !seen.insert(c.qubit) {
                return Err(CircuitError::DuplicateControl(c.qubit));
            }
        }
        Ok(())
    }
}

/// Uniformly controlled y-rotation: applies `Ry(angles_deg[j])` to the
/// target when the control register holds the value `j`. The control at
/// position 0 is the least-significant bit of the selector `j`.
#[derive(Clone, PartialEq, Debug)]
pub struct Multiplexor {
    pub target: QubitIndex,
    pub controls: Vec<QubitIndex>,
    pub angles_deg: Vec<f64>,
}

impl Multiplexor {
    pub fn new(
        target: impl Into<QubitIndex>,
        controls: impl IntoIterator<Item = impl Into<QubitIndex>>,
        angles_deg: Vec<f64>,
    ) -> Result<Self, CircuitError> {
        let mux = Multiplexor {
            target: target.into(),
            controls: controls.into_iter().map(Into::into).collect(),
            angles_deg,
        };
        mux.validate_structure()?;
        Ok(mux)
    }

    /// Number of control qubits.
    pub fn selector_width(&self) -> usize {
        self.controls.len()
    }

    pub fn qubits(&self) -> Vec<QubitIndex> {
        let mut qs = vec![self.target];
        qs.extend(self.controls.iter().copied());
        qs
    }

    fn validate_structure(&self) -> Result<(), CircuitError> {
        let expected = 1usize << self.controls.len();
        if self.angles_deg.len() != expected {
            return Err(CircuitError::MuxAngleCount {
                controls: self.controls.len(),
                expected,
                got: self.angles_deg.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for q in &self.controls {
            if *q == self.target {
                return Err(CircuitError::ControlOnTarget(*q));
            }
            if !seen.insert(*q) {
                return Err(CircuitError::DuplicateControl(*q));
            }
        }
        if self.angles_deg.iter().any(|a| !a.is_finite()) {
            return Err(CircuitError::NonFiniteAngle);
        }
        Ok(())
    }

    fn validate(&self, num_qubits: usize) -> Result<(), CircuitError> {
        self.validate_structure()?;
        for q in self.qubits() {
            check_range(q, num_qubits)?;
        }
        Ok(())
    }
}

/// An item a [`Loop`] body may hold. Loops do not nest.
#[derive(Clone, PartialEq, Debug)]
pub enum BodyItem {
    Op(ElemOp),
    Mux(Multiplexor),
}

impl BodyItem {
    pub fn qubits(&self) -> Vec<QubitIndex> {
        match self {
            BodyItem::Op(op) => op.qubits(),
            BodyItem::Mux(mux) => mux.qubits(),
        }
    }

    fn validate(&self, num_qubits: usize) -> Result<(), CircuitError> {
        match self {
            BodyItem::Op(op) => op.validate(num_qubits),
            BodyItem::Mux(mux) => mux.validate(num_qubits),
        }
    }
}

impl From<ElemOp> for BodyItem {
    fn from(op: ElemOp) -> Self {
        BodyItem::Op(op)
    }
}

impl From<Multiplexor> for BodyItem {
    fn from(mux: Multiplexor) -> Self {
        BodyItem::Mux(mux)
    }
}

/// A block of operations repeated `reps` times, numbered by an id that is
/// unique within its circuit.
#[derive(Clone, PartialEq, Debug)]
pub struct Loop {
    pub id: u32,
    pub reps: usize,
    pub body: Vec<BodyItem>,
}

impl Loop {
    pub fn new(
        id: u32,
        reps: usize,
        body: impl IntoIterator<Item = impl Into<BodyItem>>,
    ) -> Result<Self, CircuitError> {
        let lp = Loop {
            id,
            reps,
            body: body.into_iter().map(Into::into).collect(),
        };
        lp.validate_structure()?;
        Ok(lp)
    }

    fn validate_structure(&self) -> Result<(), CircuitError> {
        if self.id == 0 {
            return Err(CircuitError::ZeroLoopId);
        }
        if self.reps == 0 {
            return Err(CircuitError::ZeroLoopReps(self.id));
        }
        if self.body.is_empty() {
            return Err(CircuitError::EmptyLoopBody(self.id));
        }
        Ok(())
    }

    fn validate(&self, num_qubits: usize, used_ids: &BTreeSet<u32>) -> Result<(), CircuitError> {
        self.validate_structure()?;
        if used_ids.contains(&self.id) {
            return Err(CircuitError::DuplicateLoopId(self.id));
        }
        for item in &self.body {
            item.validate(num_qubits)?;
        }
        Ok(())
    }
}

/// A circuit item: one elementary operation, one multiplexor, or one loop.
#[derive(Clone, PartialEq, Debug)]
pub enum Item {
    Op(ElemOp),
    Mux(Multiplexor),
    Loop(Loop),
}

impl Item {
    pub fn qubits(&self) -> Vec<QubitIndex> {
        match self {
            Item::Op(op) => op.qubits(),
            Item::Mux(mux) => mux.qubits(),
            Item::Loop(lp) => lp.body.iter().flat_map(|b| b.qubits()).collect(),
        }
    }
}

impl From<ElemOp> for Item {
    fn from(op: ElemOp) -> Self {
        Item::Op(op)
    }
}

impl From<Multiplexor> for Item {
    fn from(mux: Multiplexor) -> Self {
        Item::Mux(mux)
    }
}

impl From<Loop> for Item {
    fn from(lp: Loop) -> Self {
        Item::Loop(lp)
    }
}

impl From<BodyItem> for Item {
    fn from(item: BodyItem) -> Self {
        match item {
            BodyItem::Op(op) => Item::Op(op),
            BodyItem::Mux(mux) => Item::Mux(mux),
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum CircuitError {
    #[error("circuit must have between 1 and {MAX_QUBITS} qubits, got {0}")]
    BadQubitCount(usize),
    #[error("qubit {qubit} is out of range for a circuit on {num_qubits} qubits")]
    QubitOutOfRange {
        qubit: QubitIndex,
        num_qubits: usize,
    },
    #[error("duplicate control on qubit {0}")]
    DuplicateControl(QubitIndex),
    #[error("control on qubit {0} collides with a target")]
    ControlOnTarget(QubitIndex),
    #[error("swap targets must differ, both are {0}")]
    SwapTargetsEqual(QubitIndex),
    #[error("gate angle must be finite")]
    NonFiniteAngle,
    #[error("multiplexor with {controls} controls needs {expected} angles, got {got}")]
    MuxAngleCount {
        controls: usize,
        expected: usize,
        got: usize,
    },
    #[error("loop id must be positive")]
    ZeroLoopId,
    #[error("loop {0} must repeat at least once")]
    ZeroLoopReps(u32),
    #[error("loop {0} has an empty body")]
    EmptyLoopBody(u32),
    #[error("loop id {0} already used in this circuit")]
    DuplicateLoopId(u32),
}

fn check_range(qubit: QubitIndex, num_qubits: usize) -> Result<(), CircuitError> {
    if qubit.index() >= num_qubits {
        return Err(CircuitError::QubitOutOfRange { qubit, num_qubits });
    }
    Ok(())
}

/// An ordered sequence of items over a fixed qubit count.
///
/// Items are validated as they are appended; a circuit handed out by this
/// module only references qubits below `num_qubits` and has one loop per id.
#[derive(Clone, PartialEq, Debug)]
pub struct Circuit {
    num_qubits: usize,
    items: Vec<Item>,
    used_loop_ids: BTreeSet<u32>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Result<Self, CircuitError> {
        if num_qubits == 0 || num_qubits > MAX_QUBITS {
            return Err(CircuitError::BadQubitCount(num_qubits));
        }
        Ok(Circuit {
            num_qubits,
            items: Vec::new(),
            used_loop_ids: BTreeSet::new(),
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Appends an item at the latest time, validating qubit ranges,
    /// control/target collisions and loop-id uniqueness.
    pub fn push(&mut self, item: impl Into<Item>) -> Result<(), CircuitError> {
        let item = item.into();
        match &item {
            Item::Op(op) => op.validate(self.num_qubits)?,
            Item::Mux(mux) => mux.validate(self.num_qubits)?,
            Item::Loop(lp) => {
                lp.validate(self.num_qubits, &self.used_loop_ids)?;
                self.used_loop_ids.insert(lp.id);
            }
        }
        self.items.push(item);
        Ok(())
    }

    pub fn push_all(
        &mut self,
        items: impl IntoIterator<Item = impl Into<Item>>,
    ) -> Result<(), CircuitError> {
        for item in items {
            self.push(item)?;
        }
        Ok(())
    }

    /// Number of elementary operations, counting each loop-body line once
    /// per repetition. LOOP/NEXT markers are not operations and do not
    /// count; a multiplexor counts as a single operation.
    pub fn elementary_op_count(&self) -> usize {
        self.items
            .iter()
            .map(|item| match item {
                Item::Op(_) | Item::Mux(_) => 1,
                Item::Loop(lp) => lp.reps * lp.body.len(),
            })
            .sum()
    }

    /// Replaces every loop by `reps` consecutive copies of its body; all
    /// other items are preserved in order.
    pub fn unroll_loops(&self) -> Circuit {
        let mut out = Circuit::new(self.num_qubits).expect("same qubit count");
        for item in &self.items {
            match item {
                Item::Op(_) | Item::Mux(_) => out.items.push(item.clone()),
                Item::Loop(lp) => {
                    for _ in 0..lp.reps {
                        out.items.extend(lp.body.iter().cloned().map(Item::from));
                    }
                }
            }
        }
        out
    }
}

/// Returns the same operations with `control` appended to each one.
pub fn attach_control(ops: impl IntoIterator<Item = ElemOp>, control: Control) -> Vec<ElemOp> {
    ops.into_iter().map(|op| op.with_control(control)).collect()
}
