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

//! Fermi-Hubbard ground-state energy estimation: qubits and runtime per
//! lattice size.

use qldpc_arch::arch::Regime;
use qldpc_arch::estimators::fh::{fh_table, FhParams};
use qldpc_arch::output::humanize_seconds;
use qldpc_arch::Result;

fn main() -> Result<()> {
    // A fixed cycle count stands in for the Trotter error bound.
    let template = FhParams { t_override: Some(8e6), ..FhParams::new(8) };
    for regime in Regime::ALL {
        println!("p = {regime}");
        for t_c in [1e-6, 1e-3] {
            let rows = fh_table(regime, t_c, 8, 32, &template)?;
            let r = &rows[4];
            println!(
                "  t_c = {t_c:e}: L = {} -> {} qubits, {}",
                r.l,
                r.estimate.physical_qubits,
                humanize_seconds(r.estimate.total_runtime)
            );
        }
        for r in fh_table(regime, 1e-6, 8, 32, &template)? {
            println!("  L = {:>2}: {:>6} qubits, {} blocks", r.l, r.estimate.physical_qubits, r.blocks);
        }
    }
    Ok(())
}
