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

//! Rebuild the GB code family and bound each distance.

use qldpc_arch::gb_codes::{
    build_from_row, code_table, distance_exhaustive, distance_randomized, IsdOptions, MAX_ENUM_DIM,
};
use qldpc_arch::Result;

fn main() -> Result<()> {
    println!("m    n   k  d  found exact  n_pb");
    for row in code_table() {
        let code = build_from_row(&row)?;
        let dim = code.n() - code.hz.rank();
        let b = if dim <= MAX_ENUM_DIM {
            distance_exhaustive(&code)?
        } else {
            distance_randomized(&code, IsdOptions { max_iterations: 4096, target: Some(row.d), ..Default::default() })?
        };
        println!(
            "{}  {:>3}  {:>2} {:>2}  {:>5} {:>5}  {:>4}",
            row.m, row.n, code.k, row.d, b.weight, b.exact, row.n_pb
        );
    }
    Ok(())
}
