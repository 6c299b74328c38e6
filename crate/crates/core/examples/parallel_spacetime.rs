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

//! Space, time and spacetime as the number of working registers grows.

use qldpc_arch::arch::Regime;
use qldpc_arch::estimators::rsa::{rsa_estimate, RsaParams, RsaSetup};
use qldpc_arch::Result;

fn main() -> Result<()> {
    let setup = RsaSetup::for_regime(Regime::P1e3);
    let point = |rho| RsaParams { s: 4, f: 30, l: 24, w3: 3, w4: 4, rho, m: None };
    let base = rsa_estimate(&setup, point(1), 1e-6)?.expect("feasible");
    let (n0, t0) = (base.estimate.physical_qubits as f64, base.estimate.logical_cycles);
    println!(" rho    qubits     cycles  space  time  spacetime");
    for rho in [1, 2, 5, 10, 20, 50, 100, 200, 500, 1000] {
        let e = rsa_estimate(&setup, point(rho), 1e-6)?.expect("feasible");
        let (n, t) = (e.estimate.physical_qubits as f64, e.estimate.logical_cycles);
        println!(
            "{rho:>4} {:>9} {:>10.3e} {:>6.2} {:>5.3} {:>9.4}",
            e.estimate.physical_qubits,
            t,
            n / n0,
            t / t0,
            n * t / (n0 * t0)
        );
    }
    Ok(())
}
