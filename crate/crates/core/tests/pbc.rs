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
use qldpc_arch::circuit::parse_circuit;
use qldpc_arch::pbc::{compile, expected_cycles, StepKind};
use qldpc_arch::symplectic::PauliVec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn single_unit_counts_and_frame_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..1000 {
        let kappa = rng.random_range(1..=6);
        let len = rng.random_range(0..40);
        let items = random_circuit(kappa, len, &mut rng);
        let text = render(&format!("QUBITS {kappa}\n"), &items);
        let s = compile(&parse_circuit(&text).unwrap()).unwrap();
        let tau = items.iter().filter(|i| matches!(i, Item::T(_))).count();
        let o = items.iter().filter(|i| matches!(i, Item::M(..))).count();
        let adaptive = items.iter().filter(|i| matches!(i, Item::M(_, true))).count();
        assert_eq!(s.steps.len(), tau + kappa + o, "trial {trial}");
        assert_eq!((s.t_count, s.measurement_count, s.final_count), (tau, o, kappa));
        assert_eq!(s.adaptive_count, adaptive);
        assert_eq!(s.cleaning_count, 0);
        // One unit: one step per cycle.
        assert_eq!(s.total_cycles, s.steps.len());
        for (i, st) in s.steps.iter().enumerate() {
            assert_eq!(st.cycle, i);
        }
        let want = expected_axes(kappa, &items);
        let got: Vec<(StepKind, PauliVec)> = s.steps.iter().map(|st| (st.kind, st.axis.clone())).collect();
        assert_eq!(got, want, "trial {trial}\n{text}");
        let e = expected_cycles(&s, 0.06).unwrap();
        assert!((e - (tau as f64 / 0.94 + (kappa + o) as f64)).abs() < 1e-9);
    }
}

#[test]
fn multi_unit_frames_agree_with_global_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for trial in 0..300 {
        let units = rng.random_range(2..=3);
        let per = rng.random_range(1..=2);
        let kappa = units * per;
        let mut header = format!("QUBITS {kappa}\n");
        for u in 0..units {
            let qs: Vec<String> = (u * per..(u + 1) * per).map(|q| q.to_string()).collect();
            header += &format!("UNIT {u} {}\n", qs.join(" "));
        }
        if units == 3 {
            header += "ADJACENT 0 1\nADJACENT 1 2\nADJACENT 0 2\n";
        }
        let items = random_circuit(kappa, rng.random_range(0..30), &mut rng);
        let text = render(&header, &items);
        let s = compile(&parse_circuit(&text).unwrap()).unwrap();
        let want = expected_axes(kappa, &items);
        let got: Vec<(StepKind, PauliVec)> = s.steps.iter().map(|st| (st.kind, st.axis.clone())).collect();
        assert_eq!(got, want, "trial {trial}\n{text}");
        // Parallel units never take longer than one shared clock.
        assert!(s.total_cycles <= s.steps.len());
        let busy: usize = s.per_unit_cycles.values().copied().max().unwrap_or(0);
        assert!(busy <= s.total_cycles);
    }
}

#[test]
fn separation_cost_is_bounded_and_counted() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let per = rng.random_range(1..=3);
        let kappa = 2 * per;
        let header = format!(
            "QUBITS {kappa}\nUNIT 0 {}\nUNIT 1 {}\n",
            (0..per).map(|q| q.to_string()).collect::<Vec<_>>().join(" "),
            (per..kappa).map(|q| q.to_string()).collect::<Vec<_>>().join(" ")
        );
        let mut items = random_circuit(kappa, rng.random_range(1..20), &mut rng);
        items.push(Item::Gate(G::Two("CX", 0, per)));
        let mut text = render(&header, &items);
        text += "SEPARATE 0\nT 0\n";
        let s = compile(&parse_circuit(&text).unwrap()).unwrap();
        let tau = items.iter().filter(|i| matches!(i, Item::T(_))).count() + 1;
        let o = items.iter().filter(|i| matches!(i, Item::M(..))).count();
        assert_eq!(s.steps.len(), tau + kappa + o + s.cleaning_count);
        assert!(s.cleaning_count <= 4 * per);
        // After separation the T on unit 0 occupies unit 0 only.
        let last_t = s.steps.iter().rfind(|x| x.kind == StepKind::TInjection).unwrap();
        assert_eq!(last_t.units, vec![0]);
    }
}

#[test]
fn parse_errors_carry_line_numbers() {
    let e = parse_circuit("QUBITS 2\nT 0\nBOGUS 1\n").unwrap_err();
    assert!(e.to_string().contains('3'), "{e}");
    assert!(parse_circuit("CLIFFORD CX 0\n").is_err());
    assert!(parse_circuit("MEASURE XQ\n").is_err());
}
