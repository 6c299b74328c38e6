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
use proptest::prelude::*;
use qldpc_arch::cleaning::*;
use qldpc_arch::symplectic::*;
use qldpc_arch::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn general_cleaning_sweep() {
    let mut trials = 0;
    let mut worst = 0.0f64;
    for n in 1..=8usize {
        for seed in 0..160u64 {
            let m = random_symplectic(n, seed * 31 + n as u64);
            for w in 1..=n {
                let r = clean_general(&m, w).unwrap();
                assert!(prefix_trivial(&r.residual, w), "n={n} seed={seed} w={w}");
                assert!(r.emitted_count <= 4 * w);
                assert_eq!(r.emitted_count, r.rotations.len());
                assert_eq!(replay(&m, &r.rotations), r.residual);
                assert!(r.residual.is_symplectic());
                worst = worst.max(r.emitted_count as f64 / w as f64);
                trials += 1;
            }
        }
    }
    assert!(trials >= 1000);
    assert!(worst <= 4.0);
}

#[test]
fn port_cleaning_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut trials = 0;
    for n in 2..=8usize {
        for _ in 0..200 {
            let w = rng.random_range(1..n);
            let m = port_frame(n, w, &mut rng);
            check_port_form(&m, w).unwrap();
            let r = clean_port(&m, w).unwrap();
            assert!(prefix_trivial(&r.residual, w));
            assert!(r.emitted_count <= 2 * w);
            assert_eq!(replay(&m, &r.rotations), r.residual);
            assert!(r.residual_tail(w).is_symplectic());
            trials += 1;
        }
    }
    assert!(trials >= 1000);
}

#[test]
fn identity_needs_nothing() {
    for n in 1..=6 {
        let id = SymplecticMat::identity(n);
        for w in 1..=n {
            assert_eq!(clean_general(&id, w).unwrap().emitted_count, 0);
            assert!(is_trivial_on_prefix(&id, w));
        }
    }
}

#[test]
fn hadamard_cleans_to_identity() {
    let r = clean_general(&SymplecticMat::hadamard(1, 0), 1).unwrap();
    assert!(r.residual.is_identity());
    assert!(r.emitted_count >= 1);
}

#[test]
fn rejects_bad_width_and_form() {
    let m = random_symplectic(3, 1);
    assert!(matches!(clean_general(&m, 0), Err(Error::WidthOutOfRange { .. })));
    assert!(matches!(clean_general(&m, 4), Err(Error::WidthOutOfRange { .. })));
    assert!(matches!(clean_port(&SymplecticMat::hadamard(2, 0), 1), Err(Error::NotPortForm { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cleaning_is_trivial_on_prefix(n in 1usize..=10, w_frac in 0.0f64..1.0, seed in any::<u64>()) {
        let w = 1 + ((n as f64 - 1.0) * w_frac) as usize;
        let m = random_symplectic(n, seed);
        let r = clean_general(&m, w).unwrap();
        prop_assert!(is_trivial_on_prefix(&r.residual, w));
        prop_assert!(prefix_trivial(&r.residual, w));
        prop_assert!(r.emitted_count <= 4 * w);
        prop_assert_eq!(apply_rotations(&m, &r.rotations), r.residual);
    }
}
