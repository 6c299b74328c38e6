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

//! Qubit counts of the building blocks and their logical error rates.

use qldpc_arch::arch::{logical_error_rate, magic_engine_spec, memory_cost, unit_cost, ErrorFit, MemorySpec, Regime};
use qldpc_arch::gb_codes::code_table;
use qldpc_arch::Result;

fn main() -> Result<()> {
    let table = code_table();
    for regime in Regime::ALL {
        let e = magic_engine_spec(regime);
        println!("engine {regime}: {} qubits, p_r = {}, cycle factor {:.4}", e.n_me, e.p_r, e.cycle_factor());
    }
    let fit = ErrorFit::logical_measurement();
    println!("\n d    k   p=1e-3     p=1e-4");
    for r in &table {
        println!(
            "{:>2}  {:>3}  {:.1e}  {:.1e}",
            r.d,
            r.k,
            logical_error_rate(&fit, 1e-3, r.k, r.d)?,
            logical_error_rate(&fit, 1e-4, r.k, r.d)?
        );
    }
    let code = &table[4];
    let unit = unit_cost(code, 2)?;
    println!("\nunit of 2 blocks (d={}): {} physical, {} logical", code.d, unit.physical, unit.logical);
    let mem = MemorySpec::new(code, 100, 4)?;
    println!("memory of 100 blocks, 4 ports: {} physical, {} logical", memory_cost(&mem), mem.logical_qubits());
    Ok(())
}
