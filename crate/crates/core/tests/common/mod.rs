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

//! Reference implementations shared by the integration tests and the
//! acceptance harness.

#![allow(dead_code)]

use qldpc_arch::pbc::StepKind;
use qldpc_arch::symplectic::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

// Literal check: rows i and n+i are X_i and Z_i, and no other row touches
// columns i or n+i, for every i < w.
pub fn prefix_trivial(m: &SymplecticMat, w: usize) -> bool {
    let n = m.num_qubits();
    (0..2 * n).all(|r| {
        let row = m.row(r);
        (0..w).all(|i| {
            let (x, z) = (row.bit(i), row.bit(n + i));
            if r == i {
                x && !z
            } else if r == n + i {
                z && !x
            } else {
                !x && !z
            }
        })
    })
}

// Each rotation transvects every row of the frame.
pub fn replay(m: &SymplecticMat, rotations: &[PauliVec]) -> SymplecticMat {
    let mut rows: Vec<PauliVec> = m.rows().to_vec();
    for u in rotations {
        for r in rows.iter_mut() {
            *r = transvection(u, r).unwrap();
        }
    }
    SymplecticMat::from_rows(rows).unwrap()
}

// Product of CNOTs controlled in the prefix and Cliffords on the rest.
pub fn port_frame(n: usize, w: usize, rng: &mut ChaCha8Rng) -> SymplecticMat {
    let mut f = SymplecticMat::identity(n);
    for _ in 0..rng.random_range(1..=3 * n) {
        let g = if rng.random_bool(0.5) {
            let c = rng.random_range(0..w);
            let t = rng.random_range(w..n);
            SymplecticMat::cnot(n, c, t)
        } else {
            let local = random_symplectic_with(n - w, 4, rng);
            SymplecticMat::identity(w).block_diag(&local)
        };
        f = f.then(&g).unwrap();
    }
    f
}

#[derive(Clone, Debug)]
pub enum G {
    One(&'static str, usize),
    Two(&'static str, usize, usize),
}

// Heisenberg rule P -> G^dag P G on (x, z) bits, up to sign.
pub fn conj(g: &G, x: &mut [bool], z: &mut [bool]) {
    match *g {
        G::One("H", q) => std::mem::swap(&mut x[q], &mut z[q]),
        G::One("S" | "SDG", q) => z[q] ^= x[q],
        G::One("SX", q) => x[q] ^= z[q],
        G::One(_, _) => {}
        G::Two("CX", c, t) => {
            x[t] ^= x[c];
            z[c] ^= z[t];
        }
        G::Two("CZ", a, b) => {
            z[b] ^= x[a];
            z[a] ^= x[b];
        }
        G::Two("SWAP", a, b) => {
            x.swap(a, b);
            z.swap(a, b);
        }
        G::Two(..) => unreachable!(),
    }
}

// Axis of `p` after the gates in `prefix`: conjugate through the latest
// gate first.
pub fn oracle(prefix: &[G], p: &PauliVec) -> PauliVec {
    let n = p.num_qubits();
    let mut x: Vec<bool> = (0..n).map(|i| p.bit(i)).collect();
    let mut z: Vec<bool> = (0..n).map(|i| p.bit(n + i)).collect();
    for g in prefix.iter().rev() {
        conj(g, &mut x, &mut z);
    }
    let mut out = PauliVec::identity(n);
    for i in 0..n {
        out.set_bit(i, x[i]);
        out.set_bit(n + i, z[i]);
    }
    out
}

pub enum Item {
    Gate(G),
    T(usize),
    M(PauliVec, bool),
}

pub fn random_circuit(kappa: usize, len: usize, rng: &mut ChaCha8Rng) -> Vec<Item> {
    const ONE: [&str; 8] = ["H", "S", "SDG", "SX", "X", "Y", "Z", "I"];
    const TWO: [&str; 3] = ["CX", "CZ", "SWAP"];
    (0..len)
        .map(|_| match rng.random_range(0..10) {
            0..=3 => Item::Gate(G::One(ONE[rng.random_range(0..ONE.len())], rng.random_range(0..kappa))),
            4..=5 if kappa > 1 => {
                let a = rng.random_range(0..kappa);
                let b = (a + rng.random_range(1..kappa)) % kappa;
                Item::Gate(G::Two(TWO[rng.random_range(0..TWO.len())], a, b))
            }
            4..=7 => Item::T(rng.random_range(0..kappa)),
            _ => {
                let mut p = qldpc_arch::symplectic::random_pauli(kappa, rng);
                if p.is_identity() {
                    p = PauliVec::z(kappa, 0);
                }
                Item::M(p, rng.random_bool(0.3))
            }
        })
        .collect()
}

pub fn render(header: &str, items: &[Item]) -> String {
    let mut s = String::from(header);
    for it in items {
        match it {
            Item::Gate(G::One(n, q)) => s += &format!("CLIFFORD {n} {q}\n"),
            Item::Gate(G::Two(n, a, b)) => s += &format!("CLIFFORD {n} {a} {b}\n"),
            Item::T(q) => s += &format!("T {q}\n"),
            Item::M(p, a) => s += &format!("MEASURE {p}{}\n", if *a { " adaptive" } else { "" }),
        }
    }
    s
}

pub fn expected_axes(kappa: usize, items: &[Item]) -> Vec<(StepKind, PauliVec)> {
    let mut gates = Vec::new();
    let mut out = Vec::new();
    for it in items {
        match it {
            Item::Gate(g) => gates.push(g.clone()),
            Item::T(q) => out.push((StepKind::TInjection, oracle(&gates, &PauliVec::z(kappa, *q)))),
            Item::M(p, _) => out.push((StepKind::Algorithmic, oracle(&gates, p))),
        }
    }
    for q in 0..kappa {
        out.push((StepKind::Final, oracle(&gates, &PauliVec::z(kappa, q))));
    }
    out
}

/// Rounds to one significant figure as `(mantissa, exponent)`.
pub fn one_sig(x: f64) -> (u32, i32) {
    let e = x.log10().floor() as i32;
    let m = (x / 10f64.powi(e)).round() as u32;
    if m == 10 {
        (1, e + 1)
    } else {
        (m, e)
    }
}

/// Kiloqubits as printed in published tables.
pub fn kq(n: usize) -> String {
    let k = n as f64 / 1000.0;
    if k < 10.0 {
        format!("{k:.1}")
    } else {
        format!("{}", k.round())
    }
}

/// Dense GF(2) rank by Gauss-Jordan elimination.
pub fn dense_rank(mut a: Vec<Vec<u8>>) -> usize {
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        if let Some(p) = (rank..a.len()).find(|&r| a[r][c] == 1) {
            a.swap(rank, p);
            for r in 0..a.len() {
                if r != rank && a[r][c] == 1 {
                    let pivot = a[rank].clone();
                    a[r].iter_mut().zip(&pivot).for_each(|(x, y)| *x ^= y);
                }
            }
            rank += 1;
        }
    }
    rank
}
