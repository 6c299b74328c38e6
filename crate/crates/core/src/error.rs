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

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("matrix is not symplectic")]
    NotSymplectic,

    #[error("cleaning width {w} out of range for {n} qubits")]
    WidthOutOfRange { w: usize, n: usize },

    #[error("matrix is not of port form: row {row}: {reason}")]
    NotPortForm { row: usize, reason: String },

    #[error("CSS condition violated: hx * hz^T != 0")]
    CssViolation,

    #[error("kernel dimension {dim} exceeds exhaustive enumeration limit {limit}")]
    EnumerationTooLarge { dim: usize, limit: usize },

    #[error("unknown code family index m={0}")]
    UnknownCode(u32),

    #[error("no code with distance {0} in the data table")]
    UnknownDistance(u32),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("circuit error at line {line}: {reason}")]
    Circuit { line: usize, reason: String },

    #[error("qubit {qubit} is not assigned to any unit")]
    UnassignedQubit { qubit: usize },

    #[error("units {a} and {b} are not adjacent in the layout")]
    NotAdjacent { a: usize, b: usize },

    #[error("unknown unit {0}")]
    UnknownUnit(usize),

    #[error("config error: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter { name, reason: reason.into() }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
