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

//! Factoring a 2048-bit modulus: fewest qubits within a month at 1 us
//! cycles and p = 1e-3, then one explicit parameter point.

use qldpc_arch::arch::Regime;
use qldpc_arch::estimators::optimize::{rsa_optimize, Objective, OptimizeOptions};
use qldpc_arch::estimators::rsa::{rsa_estimate, RsaParams, RsaSetup};
use qldpc_arch::estimators::{DAY, MONTH};
use qldpc_arch::Result;

fn main() -> Result<()> {
    let setup = RsaSetup::for_regime(Regime::P1e3);
    let r = rsa_optimize(&setup, 1e-6, Objective::MinQubits { runtime_cap: MONTH }, &OptimizeOptions::default())?;
    let best = r.best.expect("a month is enough");
    println!("searched {} combinations ({} feasible)", r.combos, r.feasible_combos);
    println!("best: {:?}", best.params);
    println!(
        "{} physical qubits, {:.1} days, {:.2} expected shots",
        best.estimate.physical_qubits,
        best.estimate.total_runtime / DAY,
        best.estimate.expected_shots
    );

    let p = RsaParams { s: 4, f: 30, l: 24, w3: 3, w4: 4, rho: 8, m: None };
    match rsa_estimate(&setup, p, 1e-6)? {
        Ok(e) => println!("rho = 8: {} qubits, {:.1} days", e.estimate.physical_qubits, e.estimate.total_runtime / DAY),
        Err(why) => println!("rho = 8 infeasible: {why:?}"),
    }
    Ok(())
}
