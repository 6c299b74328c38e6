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

//! Application resource estimators.

pub mod fh;
pub mod optimize;
pub mod rsa;

use serde::Serialize;

pub const MINUTE: f64 = 60.0;
pub const HOUR: f64 = 3600.0;
pub const DAY: f64 = 86_400.0;
pub const WEEK: f64 = 7.0 * DAY;
/// Julian year.
pub const YEAR: f64 = 365.25 * DAY;
pub const MONTH: f64 = YEAR / 12.0;

/// Totals for one application run.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ResourceEstimate {
    pub logical_qubits: usize,
    /// Expected logical cycles per shot, including magic-engine rejections.
    pub logical_cycles: f64,
    pub t_count: f64,
    pub physical_qubits: usize,
    /// Seconds per shot.
    pub shot_runtime: f64,
    pub expected_shots: f64,
    /// Seconds.
    pub total_runtime: f64,
    pub shot_success: f64,
}
