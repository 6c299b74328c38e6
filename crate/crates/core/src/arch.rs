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

//! Qubit-count and error models for processing units, magic engines and
//! memory, plus hardware timing.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gb_codes::{BlockCosts, CodeRow};

/// Reaction time in units of the code cycle time.
pub const REACTION_CYCLES: f64 = 10.0;
/// Smallest `d_t` for which a logical cycle covers the reaction time.
pub const MIN_UNLIMITED_DT: usize = 10;

/// Physical error rate and cycle time of the hardware.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HardwareProfile {
    pub p: f64,
    /// Code cycle time in seconds.
    pub t_c: f64,
}

impl HardwareProfile {
    pub fn new(p: f64, t_c: f64) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::param("p", format!("{p} not in (0, 1)")));
        }
        if !(t_c > 0.0 && t_c.is_finite()) {
            return Err(Error::param("t_c", format!("{t_c} must be positive")));
        }
        Ok(HardwareProfile { p, t_c })
    }

    /// Reaction time `t_r = 10 t_c`.
    pub fn t_r(&self) -> f64 {
        REACTION_CYCLES * self.t_c
    }

    /// Duration of one logical cycle of `d_t` code cycles.
    pub fn t_l(&self, d_t: usize) -> f64 {
        d_t as f64 * self.t_c
    }

    /// Rejects codes whose logical cycle is shorter than the reaction time.
    pub fn validate_for(&self, d_t: usize) -> Result<()> {
        if d_t < MIN_UNLIMITED_DT {
            return Err(Error::param(
                "d_t",
                format!("{d_t} code cycles per logical cycle is reaction limited (need >= {MIN_UNLIMITED_DT})"),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Experiment {
    Memory,
    LogicalMeasurement,
}

/// Asymmetric interval `(minus, plus)` around a central value.
pub type Interval = (f64, f64);

/// Constants of the sub-threshold ansatz `p_L = (A/k) (p/B)^(d/2 + C)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorFit {
    pub experiment: Experiment,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// 95% intervals for `a`, `b`, `c`.
    pub ci: [Interval; 3],
}

impl ErrorFit {
    pub fn memory() -> Self {
        ErrorFit {
            experiment: Experiment::Memory,
            a: 5.9,
            b: 0.0179,
            c: 0.50,
            ci: [(1.4, 1.8), (0.0006, 0.0006), (0.09, 0.09)],
        }
    }

    pub fn logical_measurement() -> Self {
        ErrorFit {
            experiment: Experiment::LogicalMeasurement,
            a: 6.2,
            b: 0.0158,
            c: 0.47,
            ci: [(1.4, 1.9), (0.0007, 0.0007), (0.09, 0.09)],
        }
    }

    /// The fit with every constant moved to the end of its interval that
    /// makes the error rate largest (`pessimistic`) or smallest.
    pub fn at_bound(&self, pessimistic: bool) -> Self {
        let s = if pessimistic { 1.0 } else { -1.0 };
        let pick = |(lo, hi): Interval, up: bool| if up { hi } else { -lo };
        ErrorFit {
            a: self.a + pick(self.ci[0], s > 0.0),
            // A smaller B or C raises the rate below threshold.
            b: self.b + pick(self.ci[1], s < 0.0),
            c: self.c + pick(self.ci[2], s < 0.0),
            ..*self
        }
    }

    /// Failure rate of all `k` observables over one logical cycle.
    pub fn block_error_rate(&self, p: f64, d: usize) -> Result<f64> {
        if !(p > 0.0 && p < self.b) {
            return Err(Error::param("p", format!("{p} is not below the ansatz threshold {}", self.b)));
        }
        Ok(self.a * (p / self.b).powf(d as f64 / 2.0 + self.c))
    }
}

/// Error rate per logical qubit and logical cycle.
pub fn logical_error_rate(fit: &ErrorFit, p: f64, k: usize, d: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::param("k", "must be positive"));
    }
    Ok(fit.block_error_rate(p, d)? / k as f64)
}

/// Physical error rate regimes with published magic engines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Regime {
    #[serde(rename = "1e-3")]
    P1e3,
    #[serde(rename = "1e-4")]
    P1e4,
}

impl Regime {
    pub const ALL: [Regime; 2] = [Regime::P1e3, Regime::P1e4];

    pub fn p(self) -> f64 {
        match self {
            Regime::P1e3 => 1e-3,
            Regime::P1e4 => 1e-4,
        }
    }

    pub fn from_p(p: f64) -> Result<Self> {
        Regime::ALL
            .into_iter()
            .find(|r| (r.p() - p).abs() <= 1e-9 * r.p().max(p))
            .ok_or_else(|| Error::param("regime", format!("no regime for p = {p}")))
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::P1e3 => "1e-3",
            Regime::P1e4 => "1e-4",
        })
    }
}

impl FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let p: f64 = s.trim().parse().map_err(|_| Error::param("regime", format!("cannot parse {s:?}")))?;
        Regime::from_p(p)
    }
}

/// A magic engine and the sub-parameters of its qubit count.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MagicEngineSpec {
    pub regime: Regime,
    /// Code block of the engine's own GB code.
    pub n_cb: usize,
    pub n_g: usize,
    /// Ancilla code size and distance.
    pub n_a: usize,
    pub d_a: usize,
    /// Extra ancilla qubits, e.g. for cultivation.
    pub n_alpha: usize,
    /// Post-selection measurement rounds. Not used in any count.
    pub r: usize,
    pub n_me: usize,
    /// Reject probability per logical cycle.
    pub p_r: f64,
    /// Output T-state infidelity.
    pub p_t: f64,
}

impl MagicEngineSpec {
    pub fn component_total(&self) -> usize {
        self.n_cb + 16 * self.n_g + 60 * (self.n_a + self.d_a - 1) + self.n_alpha
    }

    /// Availability factor `1 / (1 - p_r)`.
    pub fn alpha(&self) -> f64 {
        1.0 / (1.0 - self.p_r)
    }

    /// Multiplier on logical cycles when two thirds of cycles consume a T
    /// state.
    pub fn cycle_factor(&self) -> f64 {
        2.0 / 3.0 * self.alpha() + 1.0 / 3.0
    }
}

/// Output infidelity targeted by both engines.
pub const P_T: f64 = 1e-11;

/// Built-in engine for a regime; `n_me` is recomputed from its components.
pub fn magic_engine_spec(regime: Regime) -> MagicEngineSpec {
    let mut spec = match regime {
        Regime::P1e4 => MagicEngineSpec {
            regime,
            n_cb: 252,
            n_g: 31,
            n_a: 19,
            d_a: 5,
            n_alpha: 0,
            r: 7,
            n_me: 0,
            p_r: 15.0 * 1e-4,
            p_t: P_T,
        },
        Regime::P1e3 => MagicEngineSpec {
            regime,
            n_cb: 1020,
            n_g: 99,
            n_a: 81,
            d_a: 9,
            n_alpha: 2 * 15 * 25,
            r: 13,
            n_me: 0,
            p_r: 0.06,
            p_t: P_T,
        },
    };
    spec.n_me = spec.component_total();
    spec
}

/// Qubits of a processing unit of `beta` blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnitCost {
    pub physical: usize,
    pub logical: usize,
}

pub fn unit_cost(code: &CodeRow, beta: usize) -> Result<UnitCost> {
    if beta == 0 {
        return Err(Error::param("beta", "a unit needs at least one block"));
    }
    Ok(UnitCost { physical: beta * code.n_pb, logical: beta * code.k })
}

/// Memory of `nu` code blocks with `rho` ports and window size `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MemorySpec {
    /// Code length `n` of the memory code.
    pub n: usize,
    pub k: usize,
    pub costs: BlockCosts,
    pub nu: usize,
    pub w: usize,
    pub rho: usize,
}

impl MemorySpec {
    /// Memory of `nu` blocks of `code` with the window set to `k/2`.
    pub fn new(code: &CodeRow, nu: usize, rho: usize) -> Result<Self> {
        Self::with_window(code, nu, rho, code.k / 2)
    }

    pub fn with_window(code: &CodeRow, nu: usize, rho: usize, w: usize) -> Result<Self> {
        if nu == 0 {
            return Err(Error::param("nu", "memory needs at least one block"));
        }
        if w == 0 || !code.k.is_multiple_of(w) {
            return Err(Error::param("w", format!("window {w} must divide k = {}", code.k)));
        }
        Ok(MemorySpec { n: code.n, k: code.k, costs: code.costs(), nu, w, rho })
    }

    pub fn logical_qubits(&self) -> usize {
        self.nu * self.k
    }

    pub fn windows(&self) -> usize {
        self.nu * self.k / self.w
    }
}

/// `2 nu n + rho (n_g + n_b)`.
pub fn memory_cost(spec: &MemorySpec) -> usize {
    2 * spec.nu * spec.n + spec.rho * (spec.costs.n_g + spec.costs.n_b)
}

/// One round of the cyclic memory shift.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftRound {
    /// `(data block i, ancilla block i+1)` swaps, applied in parallel.
    pub transfers: Vec<(usize, usize)>,
    /// Block label at each position after the round.
    pub positions: Vec<usize>,
}

/// Simulates `nu` rounds of the shift. Each round swaps the data qubits of
/// block `i` with the ancilla qubits of block `i+1`, then swaps data and
/// ancilla qubits within each block, moving every block one position.
pub fn memory_shift_schedule(nu: usize) -> Result<Vec<ShiftRound>> {
    if nu == 0 {
        return Err(Error::param("nu", "memory needs at least one block"));
    }
    let mut data: Vec<Option<usize>> = (0..nu).map(Some).collect();
    let mut anc: Vec<Option<usize>> = vec![None; nu];
    let transfers: Vec<(usize, usize)> = (0..nu).map(|i| (i, (i + 1) % nu)).collect();
    let mut rounds = Vec::with_capacity(nu);
    for _ in 0..nu {
        // Disjoint pairs: data[i] only meets anc[i+1].
        let old_data = data.clone();
        let old_anc = anc.clone();
        for &(i, j) in &transfers {
            data[i] = old_anc[j];
            anc[j] = old_data[i];
        }
        std::mem::swap(&mut data, &mut anc);
        let positions = block_positions(&data);
        rounds.push(ShiftRound { transfers: transfers.clone(), positions });
    }
    Ok(rounds)
}

/// Inverse of the position map: `out[b]` is the position of block `b`.
fn block_positions(data: &[Option<usize>]) -> Vec<usize> {
    let mut out = vec![usize::MAX; data.len()];
    for (pos, b) in data.iter().enumerate() {
        let b = b.expect("data register emptied by shift");
        out[b] = pos;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gb_codes::code_table;

    #[test]
    fn reaction_time() {
        let hw = HardwareProfile::new(1e-3, 1e-6).unwrap();
        assert_eq!(hw.t_r(), 10.0 * hw.t_c);
        let table = code_table();
        assert!(hw.validate_for(table[0].d_t()).is_err());
        assert!(hw.validate_for(table[1].d_t()).is_err());
        for row in &table[2..] {
            assert!(hw.validate_for(row.d_t()).is_ok());
        }
    }

    #[test]
    fn engines() {
        assert_eq!(magic_engine_spec(Regime::P1e4).n_me, 2128);
        assert_eq!(magic_engine_spec(Regime::P1e3).n_me, 8694);
        assert_eq!(252 + 16 * 31 + 60 * 23, 2128);
        assert_eq!(1020 + 16 * 99 + 60 * 89 + 750, 8694);
    }

    #[test]
    fn error_rate_scaling() {
        let fit = ErrorFit::logical_measurement();
        let a = logical_error_rate(&fit, 1e-3, 14, 16).unwrap();
        let b = logical_error_rate(&fit, 1e-3, 28, 16).unwrap();
        assert!((a / b - 2.0).abs() < 1e-12);
        assert!(logical_error_rate(&fit, 0.02, 14, 16).is_err());
        let hi = fit.at_bound(true);
        let lo = fit.at_bound(false);
        let mid = logical_error_rate(&fit, 1e-3, 14, 16).unwrap();
        assert!(logical_error_rate(&hi, 1e-3, 14, 16).unwrap() > mid);
        assert!(logical_error_rate(&lo, 1e-3, 14, 16).unwrap() < mid);
    }

    #[test]
    fn memory_and_units() {
        let t = code_table();
        let d16 = &t[3];
        let d24 = &t[4];
        assert_eq!(memory_cost(&MemorySpec::new(d16, 1, 1).unwrap()), 596);
        assert_eq!(memory_cost(&MemorySpec::new(d24, 2, 3).unwrap()), 2490);
        assert_eq!(memory_cost(&MemorySpec::new(d24, 2, 0).unwrap()), 2040);
        assert!(MemorySpec::with_window(d16, 1, 1, 3).is_err());
        assert_eq!(unit_cost(d24, 9).unwrap(), UnitCost { physical: 14580, logical: 144 });
        assert_eq!(unit_cost(d16, 1).unwrap(), UnitCost { physical: 860, logical: 14 });
        assert!(unit_cost(d16, 0).is_err());
    }

    #[test]
    fn shift_schedule() {
        let one = memory_shift_schedule(1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].positions, vec![0]);
        let three = memory_shift_schedule(3).unwrap();
        assert_eq!(three[0].positions[0], 1);
        assert_eq!(three[2].positions, vec![0, 1, 2]);
        for (r, round) in three.iter().enumerate() {
            for b in 0..3 {
                assert_eq!(round.positions[b], (b + r + 1) % 3);
            }
        }
    }

    #[test]
    fn regime_parse() {
        assert_eq!("1e-3".parse::<Regime>().unwrap(), Regime::P1e3);
        assert_eq!("0.0001".parse::<Regime>().unwrap(), Regime::P1e4);
        assert!("1e-2".parse::<Regime>().is_err());
    }
}
