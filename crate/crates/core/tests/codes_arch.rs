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

mod common;

use common::*;
use qldpc_arch::arch::*;
use qldpc_arch::gb_codes::*;
use qldpc_arch::gf2::BitMatrix;

fn circulant(l: usize, set: &[usize]) -> Vec<Vec<u8>> {
    let mut m = vec![vec![0u8; l]; l];
    for (i, row) in m.iter_mut().enumerate() {
        for &s in set {
            row[(i + s) % l] ^= 1;
        }
    }
    m
}

fn transpose(a: &[Vec<u8>]) -> Vec<Vec<u8>> {
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

fn hstack(a: &[Vec<u8>], b: &[Vec<u8>]) -> Vec<Vec<u8>> {
    a.iter().zip(b).map(|(x, y)| x.iter().chain(y).copied().collect()).collect()
}

// Reference k from dense GF(2) ranks of [A|B] and [B^T|A^T].
fn reference_k(l: usize, a: &[usize], b: &[usize]) -> (usize, bool) {
    let (ca, cb) = (circulant(l, a), circulant(l, b));
    let hx = hstack(&ca, &cb);
    let hz = hstack(&transpose(&cb), &transpose(&ca));
    let orth = hx.iter().all(|x| hz.iter().all(|z| x.iter().zip(z).fold(0, |s, (p, q)| s ^ (p & q)) == 0));
    (2 * l - dense_rank(hx) - dense_rank(hz), orth)
}

fn to_dense(m: &BitMatrix) -> Vec<Vec<u8>> {
    m.rows().iter().map(|r| (0..m.num_cols()).map(|c| r.get(c) as u8).collect()).collect()
}

#[test]
fn family_table_rebuilds() {
    let expected = [(4, 8, 140), (5, 10, 244), (6, 12, 452), (7, 14, 860), (8, 16, 1620)];
    let t0 = std::time::Instant::now();
    for (row, (m, k, n_pb)) in code_table().iter().zip(expected) {
        assert_eq!(row.m, m);
        let code = build_from_row(row).unwrap();
        assert!(code.is_css());
        assert_eq!(code.k, k);
        assert!(code.row_weights().iter().all(|&w| w == 6));
        let (cx, cz) = code.column_weights();
        assert!(cx.iter().chain(&cz).all(|&w| w == 3));
        assert_eq!(table1_costs(m).unwrap().n_pb, n_pb);
        assert_eq!(row.n, 2 * ((1 << m) - 1));
        let (rk, orth) = reference_k(row.l, &row.a, &row.b);
        assert!(orth);
        assert_eq!(rk, k);
        assert!(code.is_shift_invariant());
    }
    assert!(t0.elapsed().as_secs_f64() < 1.0);
}

#[test]
fn logical_operators_are_valid() {
    let code = build_table_code(5).unwrap();
    let zs = code.logical_z();
    assert_eq!(zs.len(), code.k);
    let hx = to_dense(&code.hx);
    for z in &zs {
        // Commutes with every X check.
        for r in &hx {
            assert_eq!((0..code.n()).fold(0, |s, c| s ^ (r[c] & z.get(c) as u8)), 0);
        }
    }
    // Independent modulo the Z checks.
    let mut rows = code.hz.rows().to_vec();
    let r0 = code.hz.rank();
    rows.extend(zs.iter().cloned());
    assert_eq!(BitMatrix::from_rows(code.n(), rows).rank(), r0 + code.k);
}

#[test]
fn exhaustive_distance_of_smallest_code() {
    let code = build_table_code(4).unwrap();
    let d = distance_exhaustive(&code).unwrap();
    assert!(d.exact);
    assert_eq!(d.weight, 4);
    assert_eq!(d.witness.weight(), 4);
    assert!(is_x_logical(&code, &d.witness));
    assert!(code.hz.mul_vec(&d.witness).is_zero());
    // Not a stabilizer: adding it to the X check rows raises the rank.
    let mut rows = code.hx.rows().to_vec();
    let r0 = BitMatrix::from_rows(code.n(), rows.clone()).rank();
    rows.push(d.witness.clone());
    assert_eq!(BitMatrix::from_rows(code.n(), rows).rank(), r0 + 1);
}

#[test]
fn randomized_distance_finds_claimed_weights() {
    for (m, d) in [(5, 6), (6, 10)] {
        let code = build_table_code(m).unwrap();
        let opts = IsdOptions { max_iterations: 1_000_000, target: Some(d), seed: 1, ..Default::default() };
        let b = distance_randomized(&code, opts).unwrap();
        assert_eq!(b.weight, d, "m = {m}");
        assert!(!b.exact);
        assert!(is_x_logical(&code, &b.witness));
        assert_eq!(b.witness.weight(), d);
    }
}

#[test]
fn randomized_is_deterministic() {
    let code = build_table_code(6).unwrap();
    let opts = IsdOptions { max_iterations: 512, seed: 9, ..Default::default() };
    assert_eq!(distance_randomized(&code, opts).unwrap(), distance_randomized(&code, opts).unwrap());
}

#[test]
fn enumeration_limit() {
    let code = build_table_code(6).unwrap();
    assert!(matches!(distance_exhaustive(&code), Err(qldpc_arch::Error::EnumerationTooLarge { .. })));
}

#[test]
fn non_css_input_is_rejected() {
    assert!(build_code(0, &[0], &[0]).is_err());
    assert!(build_code(7, &[0, 0], &[1]).is_err());
}

#[test]
fn magic_engines_from_components() {
    // n_cb + 16 n_g + 60 (n_a + d_a - 1) + n_alpha
    let e4 = magic_engine_spec(Regime::P1e4);
    assert_eq!(e4.n_cb + 16 * e4.n_g + 60 * (e4.n_a + e4.d_a - 1) + e4.n_alpha, 2128);
    assert_eq!(e4.n_me, 2128);
    let e3 = magic_engine_spec(Regime::P1e3);
    assert_eq!(e3.n_cb + 16 * e3.n_g + 60 * (e3.n_a + e3.d_a - 1) + e3.n_alpha, 8694);
    assert_eq!(e3.n_me, 8694);
    // Engine code blocks are the table's d = 10 and d = 24 blocks.
    let t = code_table();
    assert_eq!(e4.n_cb, t[2].costs().n_cb);
    assert_eq!(e3.n_cb, t[4].costs().n_cb);
}

#[test]
fn published_error_rates() {
    let published = [
        (1e-3, [(8, -4), (4, -5), (1, -7), (3, -11), (4, -16)]),
        (1e-4, [(3, -6), (1, -8), (5, -13), (1, -19), (1, -28)]),
    ];
    let fit = ErrorFit::logical_measurement();
    for (p, cells) in published {
        for (row, cell) in code_table().iter().zip(cells) {
            let got = logical_error_rate(&fit, p, row.k, row.d).unwrap();
            // Ansatz evaluated directly with the fit constants.
            let direct = 6.2 / row.k as f64 * (p / 0.0158f64).powf(row.d as f64 / 2.0 + 0.47);
            assert!((got / direct - 1.0).abs() < 1e-12);
            assert_eq!(one_sig(got), cell, "p={p} d={}", row.d);
        }
    }
}

#[test]
fn memory_costs() {
    let row = &code_table()[4];
    let spec = MemorySpec::new(row, 10, 3).unwrap();
    assert_eq!(spec.w, 8);
    assert_eq!(memory_cost(&spec), 2 * 10 * 510 + 3 * (99 + 51));
    assert!(MemorySpec::with_window(row, 10, 3, 5).is_err());
    assert_eq!(unit_cost(row, 2).unwrap().physical, 3240);
}

#[test]
fn shift_schedule_cycles_every_block() {
    for nu in 1..=9 {
        let rounds = memory_shift_schedule(nu).unwrap();
        assert_eq!(rounds.len(), nu);
        for (r, round) in rounds.iter().enumerate() {
            for b in 0..nu {
                assert_eq!(round.positions[b], (b + r + 1) % nu);
            }
        }
        // Back to the start after nu rounds.
        assert_eq!(rounds.last().unwrap().positions, (0..nu).collect::<Vec<_>>());
    }
}

#[test]
fn reaction_time_limits_small_codes() {
    let hw = HardwareProfile::new(1e-3, 1e-6).unwrap();
    assert!((hw.t_r() - 1e-5).abs() < 1e-18);
    assert!((hw.t_l(26) - 26e-6).abs() < 1e-18);
    assert!(hw.validate_for(6).is_err());
    assert!(hw.validate_for(12).is_ok());
}
