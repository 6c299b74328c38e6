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

//! Fermi-Hubbard ground-state energy estimation by plaquette Trotterisation
//! on a single processing unit with one magic engine and no memory.

use serde::Serialize;

use crate::arch::{logical_error_rate, magic_engine_spec, ErrorFit, MagicEngineSpec, Regime};
use crate::error::{Error, Result};
use crate::gb_codes::{code_table, CodeRow};

use super::ResourceEstimate;

/// Relative precision target as a fraction of the total lattice energy.
pub const RELATIVE_ERROR: f64 = 0.005;
/// Additive constant in the T-count formula.
pub const T_CONST: f64 = 9.2;
/// Additive constant once two extra measurements per rotation are counted.
pub const CYCLE_CONST: f64 = 11.2;

/// Energy per site in hartrees for the tabulated couplings.
pub fn energy_per_site(u: f64) -> Result<f64> {
    if u == 4.0 {
        Ok(1.02)
    } else if u == 8.0 {
        Ok(0.74)
    } else {
        Err(Error::param("u", format!("no energy per site for u = {u}; set e0 explicitly")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FhParams {
    /// Lattice side, even.
    pub l: usize,
    pub u: f64,
    /// Energy per site; derived from `u` when `None`.
    pub e0: Option<f64>,
    /// Trotter-error bound.
    pub w: Option<f64>,
    /// Error-budget split; optimised when `None`.
    pub x: Option<f64>,
    /// Use this logical-cycle count instead of the formula.
    pub t_override: Option<f64>,
}

impl FhParams {
    pub fn new(l: usize) -> Self {
        FhParams { l, u: 4.0, e0: None, w: None, x: None, t_override: None }
    }

    pub fn logical_qubits(&self) -> usize {
        2 * self.l * self.l + 2
    }

    /// `eps = 0.005 * E0 * L^2`.
    pub fn epsilon(&self) -> Result<f64> {
        let e0 = match self.e0 {
            Some(e) => e,
            None => energy_per_site(self.u)?,
        };
        Ok(RELATIVE_ERROR * e0 * (self.l * self.l) as f64)
    }

    fn validate(&self) -> Result<()> {
        if self.l == 0 || !self.l.is_multiple_of(2) {
            return Err(Error::param("L", format!("lattice side {} must be even and positive", self.l)));
        }
        if let Some(x) = self.x {
            if !(x > 0.0 && x < 1.0) {
                return Err(Error::param("x", format!("{x} not in (0, 1)")));
            }
        }
        if let Some(w) = self.w {
            if !(w > 0.0) {
                return Err(Error::param("W", format!("{w} must be positive")));
            }
        }
        Ok(())
    }
}

/// The Trotter cost formula with additive constant `c`.
pub fn trotter_cost(c: f64, w: f64, eps: f64, l: usize, x: f64) -> f64 {
    let l2 = (l * l) as f64;
    let n_t = 12.0 * l2;
    let n_r = 4.0 * l2;
    let pre = 6.203 * (w / (eps * (1.0 - x)).powi(3)).sqrt();
    let log_arg = n_r * (3.0 * w).sqrt() / (x * (1.0 - x).sqrt() * eps.powi(3).sqrt());
    pre * (n_r * (1.15 * log_arg.log2() + c) + n_t)
}

/// Minimises `f` over `(0, 1)` on a grid of step 1e-3 refined to 1e-6.
fn minimise_unit(f: impl Fn(f64) -> f64) -> (f64, f64) {
    let mut best = (0.5, f(0.5));
    for i in 1..1000 {
        let x = i as f64 / 1000.0;
        let v = f(x);
        if v < best.1 {
            best = (x, v);
        }
    }
    let centre = best.0;
    for i in -1000..=1000 {
        let x = centre + i as f64 * 1e-6;
        if x <= 0.0 || x >= 1.0 {
            continue;
        }
        let v = f(x);
        if v < best.1 {
            best = (x, v);
        }
    }
    best
}

/// Logical cycles and T count per shot.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FhCycles {
    pub cycles: f64,
    /// `None` when the cycle count was given as an override.
    pub t_count: Option<f64>,
    pub x: Option<f64>,
}

/// Evaluates the cycle count, optimising `x` unless fixed.
pub fn fh_cycles(params: &FhParams) -> Result<FhCycles> {
    params.validate()?;
    if let Some(t) = params.t_override {
        if !(t > 0.0) {
            return Err(Error::param("t_override", format!("{t} must be positive")));
        }
        return Ok(FhCycles { cycles: t, t_count: None, x: None });
    }
    let w = params.w.ok_or_else(|| Error::param("W", "required unless a cycle override is given"))?;
    let eps = params.epsilon()?;
    let l = params.l;
    let (x, cycles) = match params.x {
        Some(x) => (x, trotter_cost(CYCLE_CONST, w, eps, l, x)),
        None => minimise_unit(|x| trotter_cost(CYCLE_CONST, w, eps, l, x)),
    };
    Ok(FhCycles { cycles, t_count: Some(trotter_cost(T_CONST, w, eps, l, x)), x: Some(x) })
}

/// Code and engine used for a regime.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FhSetup {
    pub code: CodeRow,
    pub engine: MagicEngineSpec,
    pub fit: ErrorFit,
}

impl FhSetup {
    /// `d = 24` at `p = 1e-3` and `d = 10` at `p = 1e-4`.
    pub fn for_regime(regime: Regime) -> Self {
        Self::from_table(regime, &code_table()).expect("built-in table has both codes")
    }

    pub fn from_table(regime: Regime, table: &[CodeRow]) -> Result<Self> {
        let d = match regime {
            Regime::P1e3 => 24,
            Regime::P1e4 => 10,
        };
        let code = table.iter().find(|r| r.d == d).cloned().ok_or(Error::UnknownDistance(d as u32))?;
        Ok(FhSetup { code, engine: magic_engine_spec(regime), fit: ErrorFit::logical_measurement() })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FhEstimate {
    pub l: usize,
    pub regime: Regime,
    pub code_distance: usize,
    /// Processing blocks in the unit.
    pub blocks: usize,
    pub x: Option<f64>,
    /// Cycle count before the magic-engine adjustment.
    pub base_cycles: f64,
    #[serde(flatten)]
    pub estimate: ResourceEstimate,
}

/// Physical qubits `n_pb * ceil(N / k) + n_me`.
pub fn fh_physical_qubits(setup: &FhSetup, l: usize) -> usize {
    let n = 2 * l * l + 2;
    setup.code.n_pb * n.div_ceil(setup.code.k) + setup.engine.n_me
}

pub fn fh_estimate(params: &FhParams, regime: Regime, t_c: f64) -> Result<FhEstimate> {
    fh_estimate_with(params, &FhSetup::for_regime(regime), t_c)
}

pub fn fh_estimate_with(params: &FhParams, setup: &FhSetup, t_c: f64) -> Result<FhEstimate> {
    if !(t_c > 0.0) {
        return Err(Error::param("t_c", format!("{t_c} must be positive")));
    }
    let cyc = fh_cycles(params)?;
    let n = params.logical_qubits();
    let d_t = setup.code.d_t();
    let cycles = cyc.cycles * setup.engine.cycle_factor();
    let shot_runtime = d_t as f64 * t_c * cycles;
    let p = setup.engine.regime.p();
    let p_l = logical_error_rate(&setup.fit, p, setup.code.k, setup.code.d)?;
    let t_count = cyc.t_count.unwrap_or(cyc.cycles);
    let log_success = (n as f64) * cycles * (-p_l).ln_1p() + t_count * (-setup.engine.p_t).ln_1p();
    Ok(FhEstimate {
        l: params.l,
        regime: setup.engine.regime,
        code_distance: setup.code.d,
        blocks: n.div_ceil(setup.code.k),
        x: cyc.x,
        base_cycles: cyc.cycles,
        estimate: ResourceEstimate {
            logical_qubits: n,
            logical_cycles: cycles,
            t_count,
            physical_qubits: fh_physical_qubits(setup, params.l),
            shot_runtime,
            expected_shots: 1.0,
            total_runtime: shot_runtime,
            shot_success: log_success.exp(),
        },
    })
}

/// Estimates for every even `L` in `l_min..=l_max`.
pub fn fh_table(regime: Regime, t_c: f64, l_min: usize, l_max: usize, template: &FhParams) -> Result<Vec<FhEstimate>> {
    let setup = FhSetup::for_regime(regime);
    (l_min..=l_max)
        .filter(|l| l % 2 == 0)
        .map(|l| fh_estimate_with(&FhParams { l, ..*template }, &setup, t_c))
        .collect()
}
