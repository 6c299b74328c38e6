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

//! Optimal factoring runtime over cycle times and qubit budgets, as CSV.

use qldpc_arch::arch::Regime;
use qldpc_arch::estimators::optimize::{heatmap, log_grid, OptimizeOptions};
use qldpc_arch::estimators::rsa::RsaSetup;
use qldpc_arch::output::{render, Artifact, Format};
use qldpc_arch::Result;

fn main() -> Result<()> {
    let setup = RsaSetup::for_regime(Regime::P1e4);
    let tcs = log_grid(1e-6, 1e-3, 4);
    let budgets: Vec<usize> = log_grid(3e4, 3e7, 4).into_iter().map(|x| x.round() as usize).collect();
    let cells = heatmap(&setup, &tcs, &budgets, &OptimizeOptions::default())?;
    print!("{}", render(&Artifact::table(&cells)?, Format::Csv)?);
    Ok(())
}
