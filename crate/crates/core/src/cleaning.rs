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

//! Clifford frame cleaning.
//!
//! Given a frame `M`, find Pauli axes `a_1, .., a_m` such that
//! `M * T_{a_1} * .. * T_{a_m}` acts as the identity on the first `w` qubits,
//! where `T_a` is the transvection matrix of `a`. Each axis is a pi/4 rotation
//! that costs one logical cycle. The general procedure emits at most four
//! axes per qubit; frames built only from CNOTs controlled on the cleaned
//! qubits need at most two.

use crate::error::{Error, Result};
use crate::symplectic::{PauliVec, SymplecticMat};

/// Output of a cleaning run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleaningResult {
    /// Rotation axes in application order.
    pub rotations: Vec<PauliVec>,
    /// The frame after all rotations; trivial on the cleaned prefix.
    pub residual: SymplecticMat,
    pub emitted_count: usize,
}

impl CleaningResult {
    /// The residual restricted to the qubits after the cleaned prefix.
    pub fn residual_tail(&self, w: usize) -> SymplecticMat {
        let n = self.residual.num_qubits();
        let rest: Vec<usize> = (w..n).collect();
        self.residual.sub_block(&rest)
    }
}

/// Literal check that rows `k`, `n+k` are `e_k`, `f_k` and that columns `k`,
/// `n+k` vanish on every other row, for all `k < w`.
pub fn is_trivial_on_prefix(m: &SymplecticMat, w: usize) -> bool {
    let n = m.num_qubits();
    if w > n {
        return false;
    }
    for k in 0..w {
        if *m.row(k) != PauliVec::x(n, k) || *m.row(n + k) != PauliVec::z(n, k) {
            return false;
        }
        for (i, row) in m.rows().iter().enumerate() {
            if i != k && i != n + k && (row.bit(k) || row.bit(n + k)) {
                return false;
            }
        }
    }
    true
}

/// Applies `rotations` to the rows of `m` in order.
pub fn apply_rotations(m: &SymplecticMat, rotations: &[PauliVec]) -> SymplecticMat {
    let mut out = m.clone();
    for a in rotations {
        out.transvect_rows(a);
    }
    out
}

struct Cleaner {
    m: SymplecticMat,
    rotations: Vec<PauliVec>,
}

impl Cleaner {
    fn emit(&mut self, a: PauliVec) {
        debug_assert!(!a.is_identity(), "identity rotation emitted");
        self.m.transvect_rows(&a);
        #[cfg(debug_assertions)]
        if self.m.num_qubits() <= 32 {
            debug_assert!(self.m.is_symplectic());
        }
        self.rotations.push(a);
    }

    fn finish(self) -> CleaningResult {
        CleaningResult { emitted_count: self.rotations.len(), rotations: self.rotations, residual: self.m }
    }
}

fn check_input(m: &SymplecticMat, w: usize) -> Result<()> {
    let n = m.num_qubits();
    if w == 0 || w > n {
        return Err(Error::WidthOutOfRange { w, n });
    }
    if !m.is_symplectic() {
        return Err(Error::NotSymplectic);
    }
    Ok(())
}

/// Cleans the first `w` qubits of an arbitrary symplectic frame with at most
/// `4w` rotations.
pub fn clean_general(m: &SymplecticMat, w: usize) -> Result<CleaningResult> {
    check_input(m, w)?;
    let n = m.num_qubits();
    let mut c = Cleaner { m: m.clone(), rotations: Vec::with_capacity(4 * w) };
    for k in 0..w {
        let e_k = PauliVec::x(n, k);
        let f_k = PauliVec::z(n, k);

        // Row k -> e_k.
        let v = c.m.row(k).clone();
        if v != e_k {
            if v.bit(n + k) {
                c.emit(sum(&v, &e_k));
            } else {
                let u = if v.bit(k) {
                    f_k.clone()
                } else {
                    let delta = v.first_nonzero().expect("zero row in a symplectic matrix");
                    sum(&f_k, &PauliVec::basis(n, (n + delta) % (2 * n)))
                };
                c.emit(sum(&v, &u));
                c.emit(sum(&e_k, &u));
            }
        }

        // Row n+k -> f_k, keeping e_k fixed.
        let vt = c.m.row(n + k).clone();
        if vt != f_k {
            if vt.bit(k) {
                c.emit(sum(&vt, &f_k));
            } else {
                c.emit(sum(&sum(&vt, &e_k), &f_k));
                c.emit(e_k);
            }
        }
    }
    Ok(c.finish())
}

/// Validates the block structure required by [`clean_port`].
///
/// On the first `w` qubits the frame must fix every `Z`, map each `X_k` to
/// `X_k` times operators on the remaining qubits, and the remaining rows must
/// not touch the X columns of the prefix.
pub fn check_port_form(m: &SymplecticMat, w: usize) -> Result<()> {
    check_input(m, w)?;
    let n = m.num_qubits();
    let bad = |row: usize, reason: String| Err(Error::NotPortForm { row, reason });
    for (i, row) in m.rows().iter().enumerate() {
        if (n..n + w).contains(&i) {
            if *row != PauliVec::z(n, i - n) {
                return bad(i, format!("expected Z on qubit {}, found {row}", i - n));
            }
            continue;
        }
        for j in 0..w {
            let expected = i < w && j == i;
            if row.bit(j) != expected {
                return bad(i, format!("X column {j} is {} (expected {})", row.bit(j) as u8, expected as u8));
            }
        }
    }
    Ok(())
}

/// Cleans the first `w` qubits of a port-form frame with at most `2w`
/// rotations. Every rotation commutes with `Z_j` for `j < w`.
pub fn clean_port(m: &SymplecticMat, w: usize) -> Result<CleaningResult> {
    check_port_form(m, w)?;
    let n = m.num_qubits();
    let mut c = Cleaner { m: m.clone(), rotations: Vec::with_capacity(2 * w) };
    for k in 0..w {
        let e_k = PauliVec::x(n, k);
        let f_k = PauliVec::z(n, k);
        let v = c.m.row(k).clone();
        if v == e_k {
            continue;
        }
        if v.bit(n + k) {
            c.emit(sum(&v, &e_k));
        } else {
            c.emit(sum(&sum(&v, &e_k), &f_k));
            c.emit(f_k);
        }
    }
    Ok(c.finish())
}

fn sum(a: &PauliVec, b: &PauliVec) -> PauliVec {
    let mut out = a.clone();
    out.add_assign(b);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::random_symplectic;

    #[test]
    fn identity_needs_nothing() {
        for w in 1..=3 {
            let id = SymplecticMat::identity(3);
            let r = clean_general(&id, w).unwrap();
            assert!(r.rotations.is_empty());
            assert_eq!(r.residual, id);
            assert!(clean_port(&id, w).unwrap().rotations.is_empty());
        }
    }

    #[test]
    fn hadamard_single_qubit() {
        let h = SymplecticMat::hadamard(1, 0);
        let r = clean_general(&h, 1).unwrap();
        assert!(r.emitted_count <= 4);
        assert!(r.residual.is_identity());
        assert_eq!(apply_rotations(&h, &r.rotations), r.residual);
    }

    #[test]
    fn cnot_port() {
        let c = SymplecticMat::cnot(2, 0, 1);
        let r = clean_port(&c, 1).unwrap();
        assert!(r.emitted_count <= 2);
        assert!(is_trivial_on_prefix(&r.residual, 1));
    }

    #[test]
    fn random_frames_all_widths() {
        for seed in 0..40 {
            let n = 1 + (seed as usize % 6);
            let m = random_symplectic(n, seed);
            for w in 1..=n {
                let r = clean_general(&m, w).unwrap();
                assert!(r.emitted_count <= 4 * w);
                assert!(is_trivial_on_prefix(&r.residual, w));
                assert_eq!(apply_rotations(&m, &r.rotations), r.residual);
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let m = SymplecticMat::identity(2);
        assert!(matches!(clean_general(&m, 0), Err(Error::WidthOutOfRange { .. })));
        assert!(matches!(clean_general(&m, 3), Err(Error::WidthOutOfRange { .. })));
        let zero = SymplecticMat::from_rows(vec![PauliVec::identity(2); 4]).unwrap();
        assert!(matches!(clean_general(&zero, 1), Err(Error::NotSymplectic)));
        let h = SymplecticMat::hadamard(2, 0);
        match clean_port(&h, 1) {
            Err(Error::NotPortForm { row, .. }) => assert_eq!(row, 0),
            other => panic!("unexpected {other:?}"),
        }
    }
}
