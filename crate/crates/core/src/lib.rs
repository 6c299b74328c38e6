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

//! Cost model for a modular fault-tolerant architecture built from
//! generalised bicycle codes.
//!
//! The layers, bottom up: GF(2) linear algebra ([`gf2`]), Paulis and
//! Clifford frames as symplectic matrices ([`symplectic`]), frame cleaning
//! ([`cleaning`]), the code family ([`gb_codes`]), component costs
//! ([`arch`]), circuit text and measurement scheduling ([`circuit`],
//! [`pbc`]), and application estimates ([`estimators`]). [`cli`] wraps it
//! all for the `qldpc-arch` binary.

// Negated comparisons are how NaN gets rejected in parameter checks.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod arch;
pub mod circuit;
pub mod cleaning;
pub mod cli;
pub mod config;
pub mod error;
pub mod estimators;
pub mod gb_codes;
pub mod gf2;
pub mod output;
pub mod pbc;
pub mod symplectic;

pub use error::{Error, Result};
