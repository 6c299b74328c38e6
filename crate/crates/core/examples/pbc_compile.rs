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

//! Compile a small two-unit circuit to a measurement schedule.

use qldpc_arch::circuit::parse_circuit;
use qldpc_arch::pbc::{compile, expected_cycles};
use qldpc_arch::Result;

const CIRCUIT: &str = "\
QUBITS 4
UNIT 0 0 1
UNIT 1 2 3
# entangle across units, then split them again
CLIFFORD H 1
CLIFFORD CX 1 2
T 2
SEPARATE 0
T 0
T 3
MEASURE ZIIZ adaptive
";

fn main() -> Result<()> {
    let ir = parse_circuit(CIRCUIT)?;
    let s = compile(&ir)?;
    for st in &s.steps {
        println!("cycle {:>2}  {:<13?} {}  units {:?}", st.cycle, st.kind, st.axis, st.units);
    }
    println!(
        "T={} measurements={} cleaning={} final={} cycles={}",
        s.t_count, s.measurement_count, s.cleaning_count, s.final_count, s.total_cycles
    );
    println!("expected cycles at p_r=0.06: {:.2}", expected_cycles(&s, 0.06)?);
    Ok(())
}
