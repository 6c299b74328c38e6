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

//! Compilation of Clifford+T circuits to Pauli-based computation.
//!
//! Clifford gates are absorbed into a frame kept per group of joined units.
//! The frame is stored as the matrix of `P -> F^dag P F`, where `F` is the
//! product of all Clifford gates so far, so that a T gate on qubit `q` becomes
//! a pi/8 rotation about `z_q * N_F` and a measurement of `P` becomes a
//! measurement of `P * N_F`. Each such step takes one logical cycle on its
//! group. Steps are placed greedily at the earliest free cycle of the groups
//! they touch, in program order.

use std::collections::BTreeMap;

use log::warn;
use serde::Serialize;

use crate::circuit::{CircuitIR, Op, UnitDecl};
use crate::cleaning::{clean_general, clean_port};
use crate::error::{Error, Result};
use crate::symplectic::{PauliVec, SymplecticMat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepKind {
    TInjection,
    Algorithmic,
    Cleaning,
    Final,
}

/// One Pauli product measurement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    #[serde(serialize_with = "pauli_string")]
    pub axis: PauliVec,
    /// Units occupied by the step (every unit of each touched group).
    pub units: Vec<usize>,
    pub kind: StepKind,
    /// Logical cycle index.
    pub cycle: usize,
    /// Measurement depends on earlier outcomes.
    pub adaptive: bool,
}

fn pauli_string<S: serde::Serializer>(p: &PauliVec, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MeasurementSchedule {
    pub kappa: usize,
    pub steps: Vec<Step>,
    /// Busy cycles per unit.
    pub per_unit_cycles: BTreeMap<usize, usize>,
    /// Number of logical cycles until the last step completes.
    pub total_cycles: usize,
    pub t_count: usize,
    pub measurement_count: usize,
    pub adaptive_count: usize,
    pub cleaning_count: usize,
    pub final_count: usize,
    pub warnings: Vec<String>,
}

impl MeasurementSchedule {
    pub fn count(&self, kind: StepKind) -> usize {
        self.steps.iter().filter(|s| s.kind == kind).count()
    }
}

/// Replays the schedule with T-injections lasting `1/(1-p_r)` cycles and
/// returns the largest finishing time over units. For independent units
/// this is `max_i(tau_i/(1-p_r) + kappa_i + o_i)`.
pub fn expected_cycles(schedule: &MeasurementSchedule, p_r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&p_r) {
        return Err(Error::param("p_r", format!("{p_r} not in [0, 1)")));
    }
    let alpha = 1.0 / (1.0 - p_r);
    let mut clock: BTreeMap<usize, f64> = BTreeMap::new();
    for s in &schedule.steps {
        let start = s.units.iter().map(|u| clock.get(u).copied().unwrap_or(0.0)).fold(0.0, f64::max);
        let end = start + if s.kind == StepKind::TInjection { alpha } else { 1.0 };
        for &u in &s.units {
            clock.insert(u, end);
        }
    }
    Ok(clock.values().copied().fold(0.0, f64::max))
}

#[derive(Clone, Debug)]
struct Group {
    /// Unit indices (into the layout), sorted.
    units: Vec<usize>,
    /// Global qubit of each local qubit.
    qubits: Vec<usize>,
    frame: SymplecticMat,
    clock: usize,
}

impl Group {
    fn local(&self, q: usize) -> usize {
        self.qubits.iter().position(|&g| g == q).expect("qubit not in its group")
    }
}

/// Incremental compiler state.
#[derive(Clone, Debug)]
pub struct Compiler {
    kappa: usize,
    units: Vec<UnitDecl>,
    adjacent: Vec<Vec<bool>>,
    /// Unit index of each qubit.
    unit_of: Vec<Option<usize>>,
    groups: Vec<Option<Group>>,
    group_of: Vec<usize>,
    steps: Vec<Step>,
    warnings: Vec<String>,
}

impl Compiler {
    /// Starts with every unit in its own group and an identity frame.
    pub fn new(kappa: usize, units: &[UnitDecl], adjacency: &[(usize, usize)]) -> Result<Self> {
        let mut unit_of = vec![None; kappa];
        for (i, u) in units.iter().enumerate() {
            for &q in &u.qubits {
                if q >= kappa {
                    return Err(Error::param("unit", format!("qubit {q} >= kappa {kappa}")));
                }
                unit_of[q] = Some(i);
            }
        }
        let index = |id: usize| units.iter().position(|u| u.id == id).ok_or(Error::UnknownUnit(id));
        let mut adjacent = vec![vec![false; units.len()]; units.len()];
        for &(a, b) in adjacency {
            let (a, b) = (index(a)?, index(b)?);
            adjacent[a][b] = true;
            adjacent[b][a] = true;
        }
        let groups = units
            .iter()
            .enumerate()
            .map(|(i, u)| {
                Some(Group {
                    units: vec![i],
                    qubits: u.qubits.clone(),
                    frame: SymplecticMat::identity(u.qubits.len()),
                    clock: 0,
                })
            })
            .collect();
        Ok(Compiler {
            kappa,
            units: units.to_vec(),
            adjacent,
            unit_of,
            groups,
            group_of: (0..units.len()).collect(),
            steps: Vec::new(),
            warnings: Vec::new(),
        })
    }

    fn unit_index(&self, id: usize) -> Result<usize> {
        self.units.iter().position(|u| u.id == id).ok_or(Error::UnknownUnit(id))
    }

    fn group_of_qubit(&self, q: usize) -> Result<usize> {
        let u = self.unit_of.get(q).copied().flatten().ok_or(Error::UnassignedQubit { qubit: q })?;
        Ok(self.group_of[u])
    }

    fn group(&self, g: usize) -> &Group {
        self.groups[g].as_ref().expect("stale group index")
    }

    fn group_mut(&mut self, g: usize) -> &mut Group {
        self.groups[g].as_mut().expect("stale group index")
    }

    /// Ids of the units in group `g`.
    fn unit_ids(&self, g: usize) -> Vec<usize> {
        let mut ids: Vec<usize> = self.group(g).units.iter().map(|&i| self.units[i].id).collect();
        ids.sort_unstable();
        ids
    }

    /// Current frame of the group holding unit `id`, with its qubit order.
    pub fn frame_of(&self, id: usize) -> Result<(Vec<usize>, SymplecticMat)> {
        let g = self.group(self.group_of[self.unit_index(id)?]);
        Ok((g.qubits.clone(), g.frame.clone()))
    }

    /// Number of distinct groups.
    pub fn group_count(&self) -> usize {
        self.groups.iter().flatten().count()
    }

    /// Logical cycle at which the group holding unit `id` is next free.
    pub fn clock_of(&self, id: usize) -> Result<usize> {
        Ok(self.group(self.group_of[self.unit_index(id)?]).clock)
    }

    fn groups_adjacent(&self, a: usize, b: usize) -> bool {
        let (ga, gb) = (self.group(a), self.group(b));
        ga.units.iter().any(|&x| gb.units.iter().any(|&y| self.adjacent[x][y]))
    }

    fn merge(&mut self, a: usize, b: usize) -> Result<usize> {
        if a == b {
            return Ok(a);
        }
        if !self.groups_adjacent(a, b) {
            let id = |g: usize| self.units[self.group(g).units[0]].id;
            return Err(Error::NotAdjacent { a: id(a), b: id(b) });
        }
        let gb = self.groups[b].take().expect("stale group index");
        let ga = self.groups[a].take().expect("stale group index");
        let mut units = ga.units.clone();
        units.extend(&gb.units);
        units.sort_unstable();
        let mut qubits = ga.qubits.clone();
        qubits.extend(&gb.qubits);
        for &u in &gb.units {
            self.group_of[u] = a;
        }
        self.groups[a] =
            Some(Group { units, qubits, frame: ga.frame.block_diag(&gb.frame), clock: ga.clock.max(gb.clock) });
        Ok(a)
    }

    /// Joins the groups holding two units. Fails unless some unit of one
    /// group is adjacent to some unit of the other.
    pub fn join_units(&mut self, a: usize, b: usize) -> Result<()> {
        let ga = self.group_of[self.unit_index(a)?];
        let gb = self.group_of[self.unit_index(b)?];
        self.merge(ga, gb).map(|_| ())
    }

    fn push_step(&mut self, groups: &[usize], axis: PauliVec, kind: StepKind, adaptive: bool) {
        let cycle = groups.iter().map(|&g| self.group(g).clock).max().unwrap_or(0);
        let mut units: Vec<usize> = groups.iter().flat_map(|&g| self.unit_ids(g)).collect();
        units.sort_unstable();
        units.dedup();
        for &g in groups {
            self.group_mut(g).clock = cycle + 1;
        }
        self.steps.push(Step { axis, units, kind, cycle, adaptive });
    }

    /// Conjugates a global axis by the frames of the groups it touches.
    fn conjugate(&self, axis: &PauliVec) -> Result<(PauliVec, Vec<usize>)> {
        let mut groups: Vec<usize> =
            axis.support().into_iter().map(|q| self.group_of_qubit(q)).collect::<Result<_>>()?;
        groups.sort_unstable();
        groups.dedup();
        let mut out = PauliVec::identity(self.kappa);
        for &g in &groups {
            let grp = self.group(g);
            let local = axis.restrict(&grp.qubits);
            let image = grp.frame.apply_unchecked(&local);
            out.add_assign(&image.embed(self.kappa, &grp.qubits));
        }
        Ok((out, groups))
    }

    pub fn clifford(&mut self, kind: crate::circuit::CliffordKind, qubits: &[usize]) -> Result<()> {
        let mut g = self.group_of_qubit(qubits[0])?;
        for &q in &qubits[1..] {
            let h = self.group_of_qubit(q)?;
            g = self.merge(g, h)?;
        }
        let grp = self.group_mut(g);
        let local: Vec<usize> = qubits.iter().map(|&q| grp.local(q)).collect();
        let gate = kind.frame_matrix(grp.qubits.len(), &local);
        grp.frame = gate.then(&grp.frame).expect("gate and frame sizes agree");
        Ok(())
    }

    pub fn t_gate(&mut self, q: usize) -> Result<()> {
        let (axis, groups) = self.conjugate(&PauliVec::z(self.kappa, q))?;
        self.push_step(&groups, axis, StepKind::TInjection, false);
        Ok(())
    }

    pub fn measure(&mut self, axis: &PauliVec, adaptive: bool) -> Result<()> {
        if axis.num_qubits() != self.kappa {
            return Err(Error::Dimension { expected: self.kappa, actual: axis.num_qubits() });
        }
        let (axis, groups) = self.conjugate(axis)?;
        self.push_step(&groups, axis, StepKind::Algorithmic, adaptive);
        Ok(())
    }

    /// Cleans the frame off unit `id` and splits it from its group. Ports are
    /// cleaned with the control-only procedure. A unit that is not joined is
    /// left alone and a warning is recorded. Returns the number of cleaning
    /// steps emitted.
    pub fn separate_unit(&mut self, id: usize) -> Result<usize> {
        let ui = self.unit_index(id)?;
        let g = self.group_of[ui];
        if self.group(g).units.len() == 1 {
            let msg = format!("unit {id} is not joined; separate ignored");
            warn!("{msg}");
            self.warnings.push(msg);
            return Ok(0);
        }
        let decl = self.units[ui].clone();
        let grp = self.group(g).clone();
        let w = decl.qubits.len();
        let mut order: Vec<usize> = decl.qubits.iter().map(|&q| grp.local(q)).collect();
        let rest: Vec<usize> = (0..grp.qubits.len()).filter(|i| !order.contains(i)).collect();
        order.extend(rest);
        let reordered_qubits: Vec<usize> = order.iter().map(|&i| grp.qubits[i]).collect();
        let frame = grp.frame.permute_qubits(&order);

        let result = if decl.port {
            match clean_port(&frame, w) {
                Ok(r) => r,
                Err(e @ Error::NotPortForm { .. }) => {
                    let msg = format!("port {id}: {e}; using general cleaning");
                    warn!("{msg}");
                    self.warnings.push(msg);
                    clean_general(&frame, w)?
                }
                Err(e) => return Err(e),
            }
        } else {
            clean_general(&frame, w)?
        };

        for a in &result.rotations {
            let axis = a.embed(self.kappa, &reordered_qubits);
            self.push_step(&[g], axis, StepKind::Cleaning, false);
        }
        let clock = self.group(g).clock;
        let rest_units: Vec<usize> = grp.units.iter().copied().filter(|&u| u != ui).collect();
        let rest_qubits = reordered_qubits[w..].to_vec();
        let tail = result.residual_tail(w);
        self.groups[g] = Some(Group { units: rest_units, qubits: rest_qubits, frame: tail, clock });
        self.groups.push(Some(Group {
            units: vec![ui],
            qubits: reordered_qubits[..w].to_vec(),
            frame: SymplecticMat::identity(w),
            clock,
        }));
        self.group_of[ui] = self.groups.len() - 1;
        Ok(result.emitted_count)
    }

    pub fn apply(&mut self, op: &Op) -> Result<()> {
        match op {
            Op::Clifford { kind, qubits } => self.clifford(*kind, qubits),
            Op::T(q) => self.t_gate(*q),
            Op::Measure { axis, adaptive } => self.measure(axis, *adaptive),
            Op::Join(a, b) => self.join_units(*a, *b),
            Op::Separate(id) => self.separate_unit(*id).map(|_| ()),
        }
    }

    /// Appends a final Z measurement of every qubit and returns the
    /// schedule.
    pub fn finish(mut self) -> Result<MeasurementSchedule> {
        for q in 0..self.kappa {
            let (axis, groups) = self.conjugate(&PauliVec::z(self.kappa, q))?;
            self.push_step(&groups, axis, StepKind::Final, false);
        }
        let mut per_unit_cycles: BTreeMap<usize, usize> = self.units.iter().map(|u| (u.id, 0)).collect();
        for s in &self.steps {
            for u in &s.units {
                *per_unit_cycles.entry(*u).or_default() += 1;
            }
        }
        let count = |k: StepKind| self.steps.iter().filter(|s| s.kind == k).count();
        Ok(MeasurementSchedule {
            kappa: self.kappa,
            total_cycles: self.steps.iter().map(|s| s.cycle + 1).max().unwrap_or(0),
            t_count: count(StepKind::TInjection),
            measurement_count: count(StepKind::Algorithmic),
            adaptive_count: self.steps.iter().filter(|s| s.adaptive).count(),
            cleaning_count: count(StepKind::Cleaning),
            final_count: count(StepKind::Final),
            per_unit_cycles,
            steps: self.steps,
            warnings: self.warnings,
        })
    }
}

/// Compiles a circuit into a measurement schedule.
pub fn compile(circuit: &CircuitIR) -> Result<MeasurementSchedule> {
    circuit.validate()?;
    let mut c = Compiler::new(circuit.kappa, &circuit.units, &circuit.adjacency)?;
    for (i, op) in circuit.ops.iter().enumerate() {
        c.apply(op).map_err(|e| match e {
            Error::Circuit { .. } | Error::UnassignedQubit { .. } => e,
            other => Error::Circuit { line: circuit.lines.get(i).copied().unwrap_or(0), reason: other.to_string() },
        })?;
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{parse_circuit, CliffordKind};

    #[test]
    fn single_t() {
        let ir = CircuitIR::single_unit(1, vec![Op::T(0)]);
        let s = compile(&ir).unwrap();
        assert_eq!(s.steps.len(), 2);
        assert_eq!(s.t_count, 1);
        assert_eq!(s.final_count, 1);
        assert_eq!(s.total_cycles, 2);
    }

    #[test]
    fn clifford_only() {
        let ir = parse_circuit("QUBITS 3\nCLIFFORD H 0\nCLIFFORD CX 0 1\nCLIFFORD S 2\n").unwrap();
        let s = compile(&ir).unwrap();
        assert_eq!(s.steps.len(), 3);
        assert!(s.steps.iter().all(|st| st.kind == StepKind::Final));
    }

    #[test]
    fn t_after_hadamard_rotates_about_x() {
        let ir = parse_circuit("CLIFFORD H 0\nT 0\n").unwrap();
        let s = compile(&ir).unwrap();
        assert_eq!(s.steps[0].axis.to_string(), "X");
    }

    #[test]
    fn joined_units_serialise() {
        let text = "QUBITS 2\nUNIT 0 0\nUNIT 1 1\nCLIFFORD CX 0 1\nT 0\nT 1\n";
        let s = compile(&parse_circuit(text).unwrap()).unwrap();
        let t: Vec<_> = s.steps.iter().filter(|x| x.kind == StepKind::TInjection).collect();
        assert_eq!(t[0].cycle, 0);
        assert_eq!(t[1].cycle, 1);
        assert_eq!(t[0].units, vec![0, 1]);
    }

    #[test]
    fn independent_units_run_in_parallel() {
        let text = "QUBITS 2\nUNIT 0 0\nUNIT 1 1\nT 0\nT 1\n";
        let s = compile(&parse_circuit(text).unwrap()).unwrap();
        assert_eq!(s.total_cycles, 2);
        assert!((expected_cycles(&s, 0.0).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn separate_after_cnot() {
        let text = "QUBITS 4\nUNIT 0 0 1\nUNIT 1 2 3\nCLIFFORD H 1\nCLIFFORD CX 1 2\nSEPARATE 1\nT 0\nT 3\n";
        let s = compile(&parse_circuit(text).unwrap()).unwrap();
        assert!(s.cleaning_count <= 8);
        assert!(s.cleaning_count > 0);
        let t: Vec<_> = s.steps.iter().filter(|x| x.kind == StepKind::TInjection).collect();
        assert_eq!(t[0].cycle, t[1].cycle);
        assert_eq!(t[0].units.len(), 1);
    }

    #[test]
    fn separate_unjoined_warns() {
        let text = "QUBITS 2\nUNIT 0 0\nUNIT 1 1\nSEPARATE 0\n";
        let s = compile(&parse_circuit(text).unwrap()).unwrap();
        assert_eq!(s.warnings.len(), 1);
        assert_eq!(s.cleaning_count, 0);
    }

    #[test]
    fn join_requires_adjacency() {
        let text = "QUBITS 3\nUNIT 0 0\nUNIT 1 1\nUNIT 2 2\nCLIFFORD CX 0 2\n";
        assert!(compile(&parse_circuit(text).unwrap()).is_err());
        let units = parse_circuit(text).unwrap().units;
        let mut c = Compiler::new(3, &units, &[(0, 1), (1, 2)]).unwrap();
        c.join_units(0, 1).unwrap();
        c.join_units(1, 2).unwrap();
        assert_eq!(c.group_count(), 1);
        c.clifford(CliffordKind::Cx, &[0, 2]).unwrap();
    }

    #[test]
    fn unassigned_qubit() {
        let text = "QUBITS 2\nUNIT 0 0\nT 1\n";
        assert!(matches!(compile(&parse_circuit(text).unwrap()), Err(Error::UnassignedQubit { qubit: 1 })));
    }

    #[test]
    fn expected_cycle_examples() {
        let mut ops = vec![Op::T(0); 100];
        ops.extend(std::iter::repeat_n(Op::Clifford { kind: CliffordKind::H, qubits: vec![0] }, 3));
        let s = compile(&CircuitIR::single_unit(10, ops)).unwrap();
        let e = expected_cycles(&s, 0.06).unwrap();
        assert!((e - (100.0 / 0.94 + 10.0)).abs() < 1e-9);
        assert!(expected_cycles(&s, 1.0).is_err());
    }
}
