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

//! Clifford frames as symplectic matrices: build one from gates, conjugate
//! Paulis through it, and check a pi/4 rotation acts as a transvection.

use qldpc_arch::symplectic::{random_symplectic, transvection, PauliVec, SymplecticMat};
use qldpc_arch::Result;

fn main() -> Result<()> {
    let n = 3;
    // H on 0, then CNOT 0 -> 1, then S on 2.
    let frame = SymplecticMat::hadamard(n, 0).then(&SymplecticMat::cnot(n, 0, 1))?.then(&SymplecticMat::phase(n, 2))?;
    assert!(frame.is_symplectic());
    println!("frame rows:");
    for (i, r) in frame.to_bit_strings().iter().enumerate() {
        println!("  {i}: {r}");
    }
    for p in ["XII", "ZII", "IZI", "IIX"] {
        let v: PauliVec = p.parse()?;
        println!("{p} -> {}", frame.apply(&v)?);
    }

    let u: PauliVec = "ZZI".parse()?;
    let v: PauliVec = "XII".parse()?;
    println!("E_ZZI(XII) = {}", transvection(&u, &v)?);
    println!("E_ZZI(ZII) = {}", transvection(&u, &"ZII".parse()?)?);

    let r = random_symplectic(6, 42);
    println!("random 6-qubit frame symplectic: {}", r.is_symplectic());
    Ok(())
}
