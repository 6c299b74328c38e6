// Copyright contributors to the qldpc-arch project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Clifford+T circuits with intermediate Pauli measurements, and the
//! line-oriented text format they are read from.
//!
//! ```text
//! # comment
//! QUBITS 4
//! UNIT 0 0 1
//! UNIT 1 2 3
//! ADJACENT 0 1
//! CLIFFORD H 0
//! CLIFFORD CX 1 2
//! T 2
//! MEASURE XZII adaptive
//! SEPARATE 1
//! ```
//!
//! Without `UNIT` lines all qubits form one unit with id 0. `PORT` declares a
//! unit that is only ever the control of joining CNOTs. Without `ADJACENT`
//! lines consecutive declared units are adjacent.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::symplectic::{PauliVec, SymplecticMat};

/// Supported Clifford gates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CliffordKind {
    I,
    X,
    Y,
    Z,
    H,
    S,
    Sdg,
    SqrtX,
    Cx,
    Cz,
    Swap,
}

impl CliffordKind {
    pub fn arity(self) -> usize {
        match self {
            CliffordKind::Cx | CliffordKind::Cz | CliffordKind::Swap => 2,
            _ => 1,
        }
    }

    /// Matrix of `P -> G^dag P G` on `n` qubits. For this gate set it equals
    /// the matrix of `G` itself, since inverses differ only in signs.
    pub fn frame_matrix(self, n: usize, qubits: &[usize]) -> SymplecticMat {
        let q = qubits[0];
        match self {
            CliffordKind::I | CliffordKind::X | CliffordKind::Y | CliffordKind::Z => SymplecticMat::identity(n),
            CliffordKind::H => SymplecticMat::hadamard(n, q),
            CliffordKind::S | CliffordKind::Sdg => SymplecticMat::phase(n, q),
            CliffordKind::SqrtX => SymplecticMat::sqrt_x(n, q),
            CliffordKind::Cx => SymplecticMat::cnot(n, q, qubits[1]),
            CliffordKind::Cz => SymplecticMat::cz(n, q, qubits[1]),
            CliffordKind::Swap => SymplecticMat::swap(n, q, qubits[1]),
        }
    }
}

impl FromStr for CliffordKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "I" | "ID" => CliffordKind::I,
            "X" => CliffordKind::X,
            "Y" => CliffordKind::Y,
            "Z" => CliffordKind::Z,
            "H" => CliffordKind::H,
            "S" => CliffordKind::S,
            "SDG" | "S_DAG" | "SDAG" => CliffordKind::Sdg,
            "SX" | "SQRTX" | "SQRT_X" => CliffordKind::SqrtX,
            "CX" | "CNOT" => CliffordKind::Cx,
            "CZ" => CliffordKind::Cz,
            "SWAP" => CliffordKind::Swap,
            other => return Err(format!("unknown Clifford gate {other:?}")),
        })
    }
}

impl fmt::Display for CliffordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CliffordKind::I => "I",
            CliffordKind::X => "X",
            CliffordKind::Y => "Y",
            CliffordKind::Z => "Z",
            CliffordKind::H => "H",
            CliffordKind::S => "S",
            CliffordKind::Sdg => "SDG",
            CliffordKind::SqrtX => "SX",
            CliffordKind::Cx => "CX",
            CliffordKind::Cz => "CZ",
            CliffordKind::Swap => "SWAP",
        };
        f.write_str(s)
    }
}

/// One circuit element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Op {
    Clifford {
        kind: CliffordKind,
        qubits: Vec<usize>,
    },
    T(usize),
    Measure {
        axis: PauliVec,
        adaptive: bool,
    },
    /// Explicitly join the groups holding two units.
    Join(usize, usize),
    /// Clean the frame off a unit and split it from its group.
    Separate(usize),
}

/// A processing unit or memory port.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitDecl {
    pub id: usize,
    pub qubits: Vec<usize>,
    pub port: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitIR {
    pub kappa: usize,
    pub ops: Vec<Op>,
    /// Source line of each op, when parsed from text.
    pub lines: Vec<usize>,
    pub units: Vec<UnitDecl>,
    pub adjacency: Vec<(usize, usize)>,
}

impl CircuitIR {
    /// A circuit on one unit holding all `kappa` qubits.
    pub fn single_unit(kappa: usize, ops: Vec<Op>) -> Self {
        let lines = vec![0; ops.len()];
        CircuitIR {
            kappa,
            ops,
            lines,
            units: vec![UnitDecl { id: 0, qubits: (0..kappa).collect(), port: false }],
            adjacency: Vec::new(),
        }
    }

    /// Number of T gates.
    pub fn t_count(&self) -> usize {
        self.ops.iter().filter(|o| matches!(o, Op::T(_))).count()
    }

    /// Number of intermediate measurements.
    pub fn measurement_count(&self) -> usize {
        self.ops.iter().filter(|o| matches!(o, Op::Measure { .. })).count()
    }

    /// Number of measurements flagged as depending on earlier outcomes.
    pub fn adaptive_count(&self) -> usize {
        self.ops.iter().filter(|o| matches!(o, Op::Measure { adaptive: true, .. })).count()
    }

    /// Checks qubit ranges, gate arities and the unit layout.
    pub fn validate(&self) -> Result<()> {
        let err = |i: usize, reason: String| Error::Circuit { line: self.lines.get(i).copied().unwrap_or(0), reason };
        let mut owner = vec![None; self.kappa];
        for u in &self.units {
            for &q in &u.qubits {
                if q >= self.kappa {
                    return Err(Error::param("unit", format!("unit {} uses qubit {q} >= {}", u.id, self.kappa)));
                }
                if let Some(other) = owner[q].replace(u.id) {
                    return Err(Error::param("unit", format!("qubit {q} in units {other} and {}", u.id)));
                }
            }
        }
        let known = |id: usize| self.units.iter().any(|u| u.id == id);
        for &(a, b) in &self.adjacency {
            if !known(a) {
                return Err(Error::UnknownUnit(a));
            }
            if !known(b) {
                return Err(Error::UnknownUnit(b));
            }
        }
        for (i, op) in self.ops.iter().enumerate() {
            match op {
                Op::Clifford { kind, qubits } => {
                    if qubits.len() != kind.arity() {
                        return Err(err(i, format!("{kind} takes {} qubit(s), got {}", kind.arity(), qubits.len())));
                    }
                    if kind.arity() == 2 && qubits[0] == qubits[1] {
                        return Err(err(i, format!("{kind} on repeated qubit {}", qubits[0])));
                    }
                    for &q in qubits {
                        if q >= self.kappa {
                            return Err(err(i, format!("qubit {q} out of range (kappa = {})", self.kappa)));
                        }
                    }
                }
                Op::T(q) => {
                    if *q >= self.kappa {
                        return Err(err(i, format!("qubit {q} out of range (kappa = {})", self.kappa)));
                    }
                }
                Op::Measure { axis, .. } => {
                    if axis.num_qubits() != self.kappa {
                        return Err(err(
                            i,
                            format!("Pauli string has {} qubits, expected {}", axis.num_qubits(), self.kappa),
                        ));
                    }
                    if axis.is_identity() {
                        return Err(err(i, "identity measurement".into()));
                    }
                }
                Op::Join(a, b) => {
                    for id in [a, b] {
                        if !known(*id) {
                            return Err(err(i, format!("unknown unit {id}")));
                        }
                    }
                }
                Op::Separate(id) => {
                    if !known(*id) {
                        return Err(err(i, format!("unknown unit {id}")));
                    }
                }
            }
        }
        Ok(())
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Circuit { line, reason: format!("expected a non-negative integer, found {tok:?}") })
}

/// Parses the text format. Line numbers in errors are 1-based.
pub fn parse_circuit(text: &str) -> Result<CircuitIR> {
    let mut kappa: Option<usize> = None;
    let mut ops = Vec::new();
    let mut lines = Vec::new();
    let mut units: Vec<UnitDecl> = Vec::new();
    let mut adjacency = Vec::new();
    let mut explicit_adjacency = false;
    let mut max_qubit: Option<usize> = None;
    let mut touch = |q: usize| max_qubit = Some(max_qubit.map_or(q, |m: usize| m.max(q)));

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        let bad = |reason: String| Error::Circuit { line, reason };
        let head = toks[0].to_ascii_uppercase();
        let args = &toks[1..];
        let ints = || args.iter().map(|t| parse_usize(t, line)).collect::<Result<Vec<_>>>();
        match head.as_str() {
            "QUBITS" => {
                let v = ints()?;
                if v.len() != 1 {
                    return Err(bad("QUBITS takes one argument".into()));
                }
                if kappa.replace(v[0]).is_some() {
                    return Err(bad("QUBITS given twice".into()));
                }
            }
            "UNIT" | "PORT" => {
                let v = ints()?;
                if v.len() < 2 {
                    return Err(bad(format!("{head} needs an id and at least one qubit")));
                }
                if units.iter().any(|u| u.id == v[0]) {
                    return Err(bad(format!("unit {} declared twice", v[0])));
                }
                v[1..].iter().for_each(|&q| touch(q));
                units.push(UnitDecl { id: v[0], qubits: v[1..].to_vec(), port: head == "PORT" });
            }
            "ADJACENT" => {
                let v = ints()?;
                if v.len() != 2 {
                    return Err(bad("ADJACENT takes two unit ids".into()));
                }
                explicit_adjacency = true;
                adjacency.push((v[0], v[1]));
            }
            "JOIN" => {
                let v = ints()?;
                if v.len() != 2 {
                    return Err(bad("JOIN takes two unit ids".into()));
                }
                ops.push(Op::Join(v[0], v[1]));
                lines.push(line);
            }
            "SEPARATE" => {
                let v = ints()?;
                if v.len() != 1 {
                    return Err(bad("SEPARATE takes one unit id".into()));
                }
                ops.push(Op::Separate(v[0]));
                lines.push(line);
            }
            "CLIFFORD" => {
                let Some(name) = args.first() else {
                    return Err(bad("CLIFFORD needs a gate name".into()));
                };
                let kind: CliffordKind = name.parse().map_err(bad)?;
                let qubits = args[1..].iter().map(|t| parse_usize(t, line)).collect::<Result<Vec<_>>>()?;
                qubits.iter().for_each(|&q| touch(q));
                ops.push(Op::Clifford { kind, qubits });
                lines.push(line);
            }
            "T" => {
                let v = ints()?;
                if v.len() != 1 {
                    return Err(bad("T takes one qubit".into()));
                }
                touch(v[0]);
                ops.push(Op::T(v[0]));
                lines.push(line);
            }
            "MEASURE" => {
                let adaptive = match args {
                    [_] => false,
                    [_, flag] if flag.eq_ignore_ascii_case("adaptive") => true,
                    _ => return Err(bad("expected MEASURE <pauli-string> [adaptive]".into())),
                };
                let axis: PauliVec = args[0].parse().map_err(|e: Error| bad(e.to_string()))?;
                if axis.num_qubits() > 0 {
                    touch(axis.num_qubits() - 1);
                }
                ops.push(Op::Measure { axis, adaptive });
                lines.push(line);
            }
            other => return Err(bad(format!("unknown directive {other:?}"))),
        }
    }

    let kappa = match kappa {
        Some(k) => k,
        None => max_qubit.map_or(0, |m| m + 1),
    };
    if kappa == 0 {
        return Err(Error::Circuit { line: 0, reason: "circuit has no qubits".into() });
    }
    if units.is_empty() {
        units.push(UnitDecl { id: 0, qubits: (0..kappa).collect(), port: false });
    }
    if !explicit_adjacency {
        adjacency = units.windows(2).map(|w| (w[0].id, w[1].id)).collect();
    }
    let ir = CircuitIR { kappa, ops, lines, units, adjacency };
    ir.validate()?;
    Ok(ir)
}
