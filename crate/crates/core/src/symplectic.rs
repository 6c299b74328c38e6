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

//! Pauli vectors in `Z_2^{2n}` and symplectic matrices representing Clifford
//! operators up to global phase.
//!
//! A Pauli `P_v = prod_i X_i^{v_i} Z_i^{v_{n+i}}` is stored as separate X and
//! Z bit rows. Vectors are row vectors and a Clifford acts on the right:
//! conjugation `P -> U P U^dag` maps `v` to `v * M_U`. Row `i` of `M_U` is the
//! image of `X_i` and row `n + i` the image of `Z_i`.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf2::BitVec;

/// Element of `Z_2^{2n}`: a Pauli operator with its phase dropped.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliVec {
    x: BitVec,
    z: BitVec,
}

fn check_dim(expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::Dimension { expected, actual })
    }
}

impl PauliVec {
    pub fn identity(n: usize) -> Self {
        PauliVec { x: BitVec::zeros(n), z: BitVec::zeros(n) }
    }

    pub fn from_xz(x: BitVec, z: BitVec) -> Result<Self> {
        check_dim(x.len(), z.len())?;
        Ok(PauliVec { x, z })
    }

    /// Builds a vector from `2n` bits laid out X part first.
    pub fn from_bits(n: usize, bits: &BitVec) -> Result<Self> {
        check_dim(2 * n, bits.len())?;
        Ok(PauliVec { x: bits.slice(0, n), z: bits.slice(n, n) })
    }

    /// The `index`-th standard symplectic basis vector: `e_i` for `i < n`,
    /// `f_{i-n}` otherwise.
    pub fn basis(n: usize, index: usize) -> Self {
        assert!(index < 2 * n, "basis index {index} out of range");
        let mut p = Self::identity(n);
        p.set_bit(index, true);
        p
    }

    pub fn x(n: usize, qubit: usize) -> Self {
        Self::basis(n, qubit)
    }

    pub fn z(n: usize, qubit: usize) -> Self {
        Self::basis(n, n + qubit)
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    pub fn x_part(&self) -> &BitVec {
        &self.x
    }

    pub fn z_part(&self) -> &BitVec {
        &self.z
    }

    /// The `2n` bits with the X part first.
    pub fn bits(&self) -> BitVec {
        self.x.concat(&self.z)
    }

    /// Bit `i` of the `2n`-bit layout.
    #[inline]
    pub fn bit(&self, i: usize) -> bool {
        let n = self.num_qubits();
        if i < n {
            self.x.get(i)
        } else {
            self.z.get(i - n)
        }
    }

    #[inline]
    pub fn set_bit(&mut self, i: usize, value: bool) {
        let n = self.num_qubits();
        if i < n {
            self.x.set(i, value)
        } else {
            self.z.set(i - n, value)
        }
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Position of the first nonzero entry in the `2n`-bit layout.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.x.first_one().or_else(|| self.z.first_one().map(|i| i + self.num_qubits()))
    }

    /// Qubits on which the operator acts non-trivially.
    pub fn support(&self) -> Vec<usize> {
        (0..self.num_qubits()).filter(|&q| self.x.get(q) || self.z.get(q)).collect()
    }

    pub fn weight(&self) -> usize {
        self.support().len()
    }

    #[inline]
    pub(crate) fn add_assign(&mut self, other: &PauliVec) {
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    /// Sum over GF(2), i.e. the product of the Pauli operators up to phase.
    pub fn add(&self, other: &PauliVec) -> Result<PauliVec> {
        check_dim(self.num_qubits(), other.num_qubits())?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    #[inline]
    pub(crate) fn product_unchecked(&self, other: &PauliVec) -> bool {
        self.x.dot(&other.z) ^ self.z.dot(&other.x)
    }

    /// `u J v^T` mod 2; true iff the two Paulis anticommute.
    pub fn symplectic_product(&self, other: &PauliVec) -> Result<bool> {
        check_dim(self.num_qubits(), other.num_qubits())?;
        Ok(self.product_unchecked(other))
    }

    #[inline]
    pub(crate) fn transvect_unchecked(&self, v: &mut PauliVec) {
        if self.product_unchecked(v) {
            v.add_assign(self);
        }
    }

    /// `E_u(v) = v + <u, v> u`, the action of the pi/4 rotation about `self`.
    pub fn transvection(&self, v: &PauliVec) -> Result<PauliVec> {
        check_dim(self.num_qubits(), v.num_qubits())?;
        let mut out = v.clone();
        self.transvect_unchecked(&mut out);
        Ok(out)
    }

    /// Places this operator into a larger register: local qubit `i` becomes
    /// qubit `map[i]` of an `n_total`-qubit operator.
    pub fn embed(&self, n_total: usize, map: &[usize]) -> PauliVec {
        debug_assert_eq!(map.len(), self.num_qubits());
        let mut out = PauliVec::identity(n_total);
        for (i, &g) in map.iter().enumerate() {
            out.x.set(g, self.x.get(i));
            out.z.set(g, self.z.get(i));
        }
        out
    }

    /// Restriction onto the listed qubits (in that order).
    pub fn restrict(&self, qubits: &[usize]) -> PauliVec {
        let mut out = PauliVec::identity(qubits.len());
        for (i, &g) in qubits.iter().enumerate() {
            out.x.set(i, self.x.get(g));
            out.z.set(i, self.z.get(g));
        }
        out
    }
}

impl fmt::Display for PauliVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.num_qubits() {
            let c = match (self.x.get(q), self.z.get(q)) {
                (false, false) => 'I',
                (true, false) => 'X',
                (false, true) => 'Z',
                (true, true) => 'Y',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliVec({self})")
    }
}

impl FromStr for PauliVec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n = s.chars().count();
        let mut p = PauliVec::identity(n);
        for (q, c) in s.chars().enumerate() {
            let (x, z) = match c.to_ascii_uppercase() {
                'I' | '_' => (false, false),
                'X' => (true, false),
                'Y' => (true, true),
                'Z' => (false, true),
                other => {
                    return Err(Error::param("pauli", format!("invalid character {other:?} in {s:?}")));
                }
            };
            p.x.set(q, x);
            p.z.set(q, z);
        }
        Ok(p)
    }
}

/// `2n x 2n` matrix over GF(2); rows are the images of `X_1..X_n, Z_1..Z_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymplecticMat {
    rows: Vec<PauliVec>,
}

impl SymplecticMat {
    pub fn identity(n: usize) -> Self {
        SymplecticMat { rows: (0..2 * n).map(|i| PauliVec::basis(n, i)).collect() }
    }

    /// Builds a matrix from its `2n` rows. Symplecticity is not checked here.
    pub fn from_rows(rows: Vec<PauliVec>) -> Result<Self> {
        if !rows.len().is_multiple_of(2) {
            return Err(Error::param("matrix", format!("odd number of rows ({})", rows.len())));
        }
        let n = rows.len() / 2;
        for r in &rows {
            check_dim(n, r.num_qubits())?;
        }
        Ok(SymplecticMat { rows })
    }

    /// Builds a matrix from `2n` rows of `2n` bits each.
    pub fn from_bit_rows(rows: &[BitVec]) -> Result<Self> {
        if !rows.len().is_multiple_of(2) {
            return Err(Error::param("matrix", format!("odd number of rows ({})", rows.len())));
        }
        let n = rows.len() / 2;
        let rows = rows.iter().map(|r| PauliVec::from_bits(n, r)).collect::<Result<Vec<_>>>()?;
        Ok(SymplecticMat { rows })
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.rows.len() / 2
    }

    pub fn rows(&self) -> &[PauliVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &PauliVec {
        &self.rows[i]
    }

    pub fn is_identity(&self) -> bool {
        let n = self.num_qubits();
        self.rows.iter().enumerate().all(|(i, r)| *r == PauliVec::basis(n, i))
    }

    /// True iff `M J M^T = J`, i.e. rows pair up as `<r_i, r_{n+i}> = 1` and
    /// all other pairs commute.
    pub fn is_symplectic(&self) -> bool {
        let n = self.num_qubits();
        for i in 0..2 * n {
            for j in i + 1..2 * n {
                let expected = j == i + n;
                if self.rows[i].product_unchecked(&self.rows[j]) != expected {
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn apply_unchecked(&self, v: &PauliVec) -> PauliVec {
        let n = self.num_qubits();
        let mut out = PauliVec::identity(n);
        for q in v.x.iter_ones() {
            out.add_assign(&self.rows[q]);
        }
        for q in v.z.iter_ones() {
            out.add_assign(&self.rows[n + q]);
        }
        out
    }

    /// `v * M`: the image of `P_v` under conjugation by this Clifford.
    pub fn apply(&self, v: &PauliVec) -> Result<PauliVec> {
        check_dim(self.num_qubits(), v.num_qubits())?;
        Ok(self.apply_unchecked(v))
    }

    /// Matrix product `self * other`: the Clifford that applies `self` first
    /// and `other` second, so `v * (self * other) = (v * self) * other`.
    pub fn then(&self, other: &SymplecticMat) -> Result<SymplecticMat> {
        check_dim(self.num_qubits(), other.num_qubits())?;
        Ok(SymplecticMat { rows: self.rows.iter().map(|r| other.apply_unchecked(r)).collect() })
    }

    /// Matrix of the pi/4 rotation about `u`, i.e. of the transvection `E_u`.
    pub fn transvection(u: &PauliVec) -> Self {
        let n = u.num_qubits();
        let mut m = Self::identity(n);
        m.transvect_rows(u);
        m
    }

    /// Replaces every row `r` by `E_u(r)`. This is right-multiplication by the
    /// transvection matrix.
    pub fn transvect_rows(&mut self, u: &PauliVec) {
        for r in &mut self.rows {
            u.transvect_unchecked(r);
        }
    }

    /// Direct sum: the qubits of `self` followed by the qubits of `other`.
    pub fn block_diag(&self, other: &SymplecticMat) -> SymplecticMat {
        let (na, nb) = (self.num_qubits(), other.num_qubits());
        let n = na + nb;
        let map_a: Vec<usize> = (0..na).collect();
        let map_b: Vec<usize> = (na..n).collect();
        let mut rows = Vec::with_capacity(2 * n);
        rows.extend(self.rows[..na].iter().map(|r| r.embed(n, &map_a)));
        rows.extend(other.rows[..nb].iter().map(|r| r.embed(n, &map_b)));
        rows.extend(self.rows[na..].iter().map(|r| r.embed(n, &map_a)));
        rows.extend(other.rows[nb..].iter().map(|r| r.embed(n, &map_b)));
        SymplecticMat { rows }
    }

    /// Relabels qubits so that new qubit `i` is old qubit `order[i]`.
    pub fn permute_qubits(&self, order: &[usize]) -> SymplecticMat {
        let n = self.num_qubits();
        assert_eq!(order.len(), n, "permutation length mismatch");
        let mut rows = Vec::with_capacity(2 * n);
        for half in 0..2 {
            for &old in order {
                rows.push(self.rows[half * n + old].restrict(order));
            }
        }
        SymplecticMat { rows }
    }

    /// The block acting on `qubits`, assuming the matrix does not mix those
    /// qubits with the rest.
    pub fn sub_block(&self, qubits: &[usize]) -> SymplecticMat {
        let n = self.num_qubits();
        let mut rows = Vec::with_capacity(2 * qubits.len());
        for half in 0..2 {
            for &q in qubits {
                rows.push(self.rows[half * n + q].restrict(qubits));
            }
        }
        SymplecticMat { rows }
    }

    /// Renders rows as `0`/`1` strings with the X part first.
    pub fn to_bit_strings(&self) -> Vec<String> {
        self.rows.iter().map(|r| r.bits().to_string()).collect()
    }

    // Standard gates. These are the conjugation images `U P U^dag` with signs
    // dropped.

    pub fn hadamard(n: usize, q: usize) -> Self {
        let mut m = Self::identity(n);
        m.rows.swap(q, n + q);
        m
    }

    /// Phase gate `S` (also `S^dag`, which differs only by signs).
    pub fn phase(n: usize, q: usize) -> Self {
        let mut m = Self::identity(n);
        m.rows[q].set_bit(n + q, true);
        m
    }

    /// `sqrt(X)`: maps `Z` to `Y` and fixes `X`.
    pub fn sqrt_x(n: usize, q: usize) -> Self {
        let mut m = Self::identity(n);
        m.rows[n + q].set_bit(q, true);
        m
    }

    pub fn cnot(n: usize, control: usize, target: usize) -> Self {
        assert_ne!(control, target);
        let mut m = Self::identity(n);
        m.rows[control].set_bit(target, true);
        m.rows[n + target].set_bit(n + control, true);
        m
    }

    pub fn cz(n: usize, a: usize, b: usize) -> Self {
        assert_ne!(a, b);
        let mut m = Self::identity(n);
        m.rows[a].set_bit(n + b, true);
        m.rows[b].set_bit(n + a, true);
        m
    }

    pub fn swap(n: usize, a: usize, b: usize) -> Self {
        let mut m = Self::identity(n);
        m.rows.swap(a, b);
        m.rows.swap(n + a, n + b);
        m
    }
}

impl fmt::Debug for SymplecticMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymplecticMat(n={}) [", self.num_qubits())?;
        for r in &self.rows {
            writeln!(f, "  {}", r.bits())?;
        }
        write!(f, "]")
    }
}

pub fn symplectic_product(u: &PauliVec, v: &PauliVec) -> Result<bool> {
    u.symplectic_product(v)
}

pub fn transvection(u: &PauliVec, v: &PauliVec) -> Result<PauliVec> {
    u.transvection(v)
}

pub fn apply_clifford(m: &SymplecticMat, v: &PauliVec) -> Result<PauliVec> {
    m.apply(v)
}

/// Composite of applying `first` and then `second`.
pub fn compose(first: &SymplecticMat, second: &SymplecticMat) -> Result<SymplecticMat> {
    first.then(second)
}

pub fn is_symplectic(m: &SymplecticMat) -> bool {
    m.is_symplectic()
}

/// Random symplectic matrix built from a random qubit permutation followed by
/// `2n^2` random transvections. Deterministic in `seed`. The distribution is
/// not uniform over the symplectic group.
pub fn random_symplectic(n: usize, seed: u64) -> SymplecticMat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_symplectic_with(n, 2 * n * n, &mut rng)
}

/// As [`random_symplectic`] with an explicit number of transvection draws and
/// caller-supplied generator.
pub fn random_symplectic_with<R: Rng + ?Sized>(n: usize, draws: usize, rng: &mut R) -> SymplecticMat {
    let mut m = SymplecticMat::identity(n);
    if draws == 0 {
        return m;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    m = m.permute_qubits(&order);
    for _ in 0..draws {
        let u = random_pauli(n, rng);
        m.transvect_rows(&u);
    }
    m
}

/// Uniformly random non-identity Pauli vector on `n` qubits.
pub fn random_pauli<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PauliVec {
    loop {
        let mut p = PauliVec::identity(n);
        for i in 0..2 * n {
            if rng.random::<bool>() {
                p.set_bit(i, true);
            }
        }
        if !p.is_identity() {
            return p;
        }
    }
}
