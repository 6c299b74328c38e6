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

//! Clean the first w qubits of a Clifford frame with pi/4 rotations.

use qldpc_arch::cleaning::{clean_general, clean_port, is_trivial_on_prefix};
use qldpc_arch::symplectic::{random_symplectic, SymplecticMat};
use qldpc_arch::Result;

fn main() -> Result<()> {
    let n = 6;
    let frame = random_symplectic(n, 7);
    for w in 1..=n {
        let r = clean_general(&frame, w)?;
        println!(
            "general w={w}: {} rotations (bound {}), prefix trivial: {}",
            r.emitted_count,
            4 * w,
            is_trivial_on_prefix(&r.residual, w)
        );
    }
    let r = clean_general(&frame, 2)?;
    let axes: Vec<String> = r.rotations.iter().map(|p| p.to_string()).collect();
    println!("rotations for w=2: {}", axes.join(" "));

    // Controls on the first two qubits only: the shorter construction applies.
    let port = SymplecticMat::cnot(n, 0, 3)
        .then(&SymplecticMat::cnot(n, 1, 4))?
        .then(&SymplecticMat::hadamard(n, 5))?
        .then(&SymplecticMat::cnot(n, 0, 5))?;
    let r = clean_port(&port, 2)?;
    println!("port w=2: {} rotations (bound 4)", r.emitted_count);
    Ok(())
}
