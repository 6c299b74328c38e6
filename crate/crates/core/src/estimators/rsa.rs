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

//! Cost model for factoring with a residue number system, parallelised over
//! `rho` working registers that share one input register per
//! `ceil(m / w1)` registers.

use serde::{Deserialize, Serialize};

use crate::arch::{logical_error_rate, magic_engine_spec, ErrorFit, MagicEngineSpec, Regime};
use crate::error::{Error, Result};
use crate::gb_codes::{code_table, CodeRow};

use super::ResourceEstimate;

/// Default size of the integer being factored, in bits.
pub const RSA_BITS: usize = 2048;

/// How the input-register size `m` is chosen when not given explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MRule {
    /// `ceil(n/2) + ceil(n/s)`.
    HalfPlusNOverS,
    /// `ceil(n/2) + ceil(n/(2s))`.
    HalfPlusHalfNOverS,
}

impl MRule {
    pub fn m(self, n_bits: usize, s: usize) -> usize {
        match self {
            MRule::HalfPlusNOverS => n_bits.div_ceil(2) + n_bits.div_ceil(s),
            MRule::HalfPlusHalfNOverS => n_bits.div_ceil(2) + n_bits.div_ceil(2 * s),
        }
    }
}

/// `floor(log2 m) + 1`.
pub fn bit_length(m: usize) -> usize {
    (usize::BITS - m.leading_zeros()) as usize
}

/// `ceil(log2 x)` for `x >= 1`.
pub fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        bit_length(x - 1)
    }
}

/// Code, engine and error model for one hardware regime.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RsaSetup {
    pub code: CodeRow,
    pub engine: MagicEngineSpec,
    pub fit: ErrorFit,
    pub p: f64,
    pub n_bits: usize,
    pub m_rule: MRule,
}

impl RsaSetup {
    /// `d = 24` at `p = 1e-3` and `d = 16` at `p = 1e-4`.
    pub fn for_regime(regime: Regime) -> Self {
        Self::from_table(regime, &code_table()).expect("built-in table has both codes")
    }

    pub fn from_table(regime: Regime, table: &[CodeRow]) -> Result<Self> {
        let d = match regime {
            Regime::P1e3 => 24,
            Regime::P1e4 => 16,
        };
        let code = table.iter().find(|r| r.d == d).cloned().ok_or(Error::UnknownDistance(d as u32))?;
        Ok(RsaSetup {
            code,
            engine: magic_engine_spec(regime),
            fit: ErrorFit::logical_measurement(),
            p: regime.p(),
            n_bits: RSA_BITS,
            m_rule: MRule::HalfPlusNOverS,
        })
    }

    pub fn w1(&self) -> usize {
        self.code.k / 2
    }

    pub fn p_l(&self) -> Result<f64> {
        logical_error_rate(&self.fit, self.p, self.code.k, self.code.d)
    }
}

/// Algorithm parameters other than the hardware.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RsaParams {
    pub s: usize,
    pub f: usize,
    pub l: usize,
    pub w3: usize,
    pub w4: usize,
    pub rho: usize,
    /// Input-register size; the setup's rule applies when `None`.
    pub m: Option<usize>,
}

/// Quantities fixed by `(s, f, l, w3, w4)` and the setup.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Derived {
    pub m: usize,
    pub len_m: usize,
    pub w1: usize,
    /// Number of primes `ceil(n m / (l w1))`.
    pub primes: usize,
    pub c1: usize,
    pub kappa: usize,
    pub tau1: u64,
    pub sigma_cycles: u64,
    pub upsilon: u64,
    /// `1 - 2 n sqrt((s+2) / (2^(f+1) s w1))`.
    pub truncation: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Infeasible {
    /// Fewer primes of bit length `l` than needed.
    TooFewPrimes,
    /// `l < w1`.
    PrimeShorterThanWindow,
    /// Truncation factor in the shot count is not positive.
    Truncation,
}

/// One row of the per-prime subroutine table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubroutineRow {
    pub name: &'static str,
    pub size: f64,
    pub instances: f64,
    pub t_count: u64,
    pub logical_cycles: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubroutineCosts {
    pub rows: Vec<SubroutineRow>,
    pub tau1: u64,
    pub sigma: u64,
    pub upsilon: u64,
}

fn pow2(e: usize) -> u64 {
    1u64 << e
}

/// `2^ceil(w/2) + 2^floor(w/2) - w - 2`.
fn phaseup(w: usize) -> u64 {
    pow2(w.div_ceil(2)) + pow2(w / 2) - w as u64 - 2
}

/// Evaluates every row of the subroutine table.
pub fn subroutine_costs(m: usize, w1: usize, f: usize, l: usize, w3: usize, w4: usize) -> SubroutineCosts {
    let len = bit_length(m) as u64;
    let (w1u, f, l, w3u, w4u) = (w1 as u64, f as u64, l as u64, w3 as u64, w4 as u64);
    let c1 = m.div_ceil(w1) as u64;
    let c3 = l.div_ceil(w3u);
    let c4 = l.div_ceil(w4u);
    let l3 = 4 * c3 * c3 - 8 * c3 + 1;
    let q3 = c3 * c3 - 2 * c3;
    let lookup1 = pow2(w1) - w1u - 1;
    let rows_t = [
        ("lookup-loop1", w1 as f64, c1 as f64, 4 * c1 * lookup1),
        ("addition-loop1", (l + len) as f64, c1 as f64, 4 * c1 * (l + len - 1)),
        ("addition-loop2", (2 * l + len + 1) as f64 / 2.0, (4 * len) as f64, 8 * len * (2 * l + len - 1)),
        ("lookup-loop3", (2 * w3) as f64, l3 as f64, 4 * l3 * (pow2(2 * w3) - 2 * w3u - 1)),
        ("addition-loop3", l as f64, (7 * q3) as f64, 28 * q3 * (l - 1)),
        ("lookup-loop4", w4 as f64, 1.5 * c4 as f64, 6 * c4 * (pow2(w4) - w4u - 1)),
        ("addition-loop4", f as f64, 2.5 * c4 as f64, 10 * (f - 1) * c4),
        ("phaseup-loop4", w4 as f64, c4 as f64, 4 * c4 * phaseup(w4)),
        ("phaseup-loop3.2", w3 as f64, 1.5 * q3 as f64, 6 * q3 * phaseup(w3)),
        ("phaseup-loop3.1", (2 * w3) as f64, 1.0, 4 * (pow2(w3 + 1) - 2 * w3u - 2)),
    ];
    let rows: Vec<SubroutineRow> = rows_t
        .iter()
        .enumerate()
        .map(|(i, &(name, size, instances, t_count))| SubroutineRow {
            name,
            size,
            instances,
            t_count,
            logical_cycles: if i == 0 { c1 * (6 * lookup1 + 2 * w1u) } else { 3 * t_count / 2 },
        })
        .collect();
    SubroutineCosts {
        tau1: rows.iter().map(|r| r.t_count).sum(),
        sigma: rows.iter().map(|r| r.logical_cycles).sum(),
        upsilon: c1 * (6 * (pow2(w1) - w1u + l + len - 2) + 2 * w1u),
        rows,
    }
}

/// Working-register logical qubits
/// `f + 2l + len(m) + 2 max(f, l + len(m)) + 1`.
pub fn kappa(f: usize, l: usize, len_m: usize) -> usize {
    f + 2 * l + len_m + 2 * f.max(l + len_m) + 1
}

/// Checks ranges and feasibility, returning the `rho`-independent
/// quantities.
pub fn derive(
    setup: &RsaSetup,
    s: usize,
    f: usize,
    l: usize,
    w3: usize,
    w4: usize,
    m: Option<usize>,
) -> Result<std::result::Result<Derived, Infeasible>> {
    if s == 0 {
        return Err(Error::param("s", "must be positive"));
    }
    if f < 2 || l < 2 || w3 == 0 || w4 == 0 {
        return Err(Error::param("params", format!("f={f}, l={l}, w3={w3}, w4={w4} out of range")));
    }
    if f > 62 || l > 62 || 2 * w3 > 62 || w4 > 62 {
        return Err(Error::param("params", "exponents above 62 are not supported"));
    }
    let n = setup.n_bits;
    let w1 = setup.w1();
    let m = m.unwrap_or_else(|| setup.m_rule.m(n, s));
    if m == 0 {
        return Err(Error::param("m", "must be positive"));
    }
    let len_m = bit_length(m);
    let primes = (n * m).div_ceil(l * w1);
    let available = 2f64.powi(l as i32 - 1) / (l as f64 * std::f64::consts::LN_2);
    if available < primes as f64 {
        return Ok(Err(Infeasible::TooFewPrimes));
    }
    if l < w1 {
        return Ok(Err(Infeasible::PrimeShorterThanWindow));
    }
    let truncation = 1.0 - 2.0 * n as f64 * ((s + 2) as f64 / (2f64.powi(f as i32 + 1) * (s * w1) as f64)).sqrt();
    if truncation <= 0.0 {
        return Ok(Err(Infeasible::Truncation));
    }
    let costs = subroutine_costs(m, w1, f, l, w3, w4);
    Ok(Ok(Derived {
        m,
        len_m,
        w1,
        primes,
        c1: m.div_ceil(w1),
        kappa: kappa(f, l, len_m),
        tau1: costs.tau1,
        sigma_cycles: costs.sigma,
        upsilon: costs.upsilon,
        truncation,
    }))
}

/// Physical qubit breakdown.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RsaQubits {
    pub kappa: usize,
    /// Input registers (memories).
    pub memories: usize,
    pub n_w: usize,
    pub n_m: usize,
    pub total: usize,
    /// Logical qubits `N`.
    pub logical: usize,
}

pub fn rsa_qubits(setup: &RsaSetup, d: &Derived, rho: usize) -> RsaQubits {
    let c = &setup.code;
    let memories = rho.div_ceil(d.c1);
    let n_w = rho * (c.n_pb * d.kappa.div_ceil(c.k) + setup.engine.n_me);
    let n_m = 2 * c.n * memories * d.m.div_ceil(c.k) + rho * (c.n_g + c.n_b);
    RsaQubits { kappa: d.kappa, memories, n_w, n_m, total: n_w + n_m, logical: memories * d.m + rho * d.kappa }
}

/// Full estimate for one parameter point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RsaEstimate {
    pub params: RsaParams,
    pub derived: Derived,
    pub qubits: RsaQubits,
    /// Cycles before the magic-engine adjustment.
    pub base_cycles: f64,
    pub logical_error_rate: f64,
    #[serde(flatten)]
    pub estimate: ResourceEstimate,
}

/// Evaluator with the setup-level constants cached.
#[derive(Clone, Copy, Debug)]
pub struct Evaluator {
    pub p_l: f64,
    pub p_t: f64,
    pub cycle_factor: f64,
    /// Seconds per logical cycle.
    pub t_l: f64,
}

impl Evaluator {
    pub fn new(setup: &RsaSetup, t_c: f64) -> Result<Self> {
        if !(t_c > 0.0) {
            return Err(Error::param("t_c", format!("{t_c} must be positive")));
        }
        Ok(Evaluator {
            p_l: setup.p_l()?,
            p_t: setup.engine.p_t,
            cycle_factor: setup.engine.cycle_factor(),
            t_l: setup.code.d_t() as f64 * t_c,
        })
    }

    /// Returns `(base cycles, T count, shot success, shots, shot runtime)`.
    #[inline]
    pub fn timing(&self, d: &Derived, s: usize, f: usize, rho: usize, logical: usize) -> (f64, f64, f64, f64, f64) {
        let lg = ceil_log2(rho) as f64;
        let fm1 = (f - 1) as f64;
        let base = (d.primes.div_ceil(rho) as f64) * d.sigma_cycles as f64 + d.upsilon as f64 + 6.0 * fm1 * lg;
        let cycles = self.cycle_factor * base;
        let tau = d.primes as f64 * d.tau1 as f64 + 2.0 / 3.0 * d.upsilon as f64 + 4.0 * fm1 * lg;
        let log_ps = logical as f64 * cycles * (-self.p_l).ln_1p() + tau * (-self.p_t).ln_1p();
        let p_s = log_ps.exp();
        let shots = (s + 1) as f64 / (0.99 * p_s * d.truncation);
        (base, tau, p_s, shots, self.t_l * cycles)
    }

    /// Upper bound on the shot success over all `rho`, using
    /// `N T >= |P| kappa Sigma` and `tau >= |P| tau1 + 2 upsilon / 3`.
    pub fn success_bound(&self, d: &Derived) -> f64 {
        let nt = d.primes as f64 * d.kappa as f64 * d.sigma_cycles as f64 * self.cycle_factor;
        let tau = d.primes as f64 * d.tau1 as f64 + 2.0 / 3.0 * d.upsilon as f64;
        (nt * (-self.p_l).ln_1p() + tau * (-self.p_t).ln_1p()).exp()
    }

    /// Lower bound on total runtime for `ceil(|P|/rho) = q`.
    #[inline]
    pub fn runtime_bound(&self, d: &Derived, s: usize, q: usize, success_bound: f64) -> f64 {
        let base = q as f64 * d.sigma_cycles as f64 + d.upsilon as f64;
        self.t_l * self.cycle_factor * base * (s + 1) as f64 / (0.99 * success_bound * d.truncation)
    }

    pub fn estimate(&self, setup: &RsaSetup, d: &Derived, params: RsaParams) -> RsaEstimate {
        let qubits = rsa_qubits(setup, d, params.rho);
        let (base, tau, p_s, shots, t) = self.timing(d, params.s, params.f, params.rho, qubits.logical);
        RsaEstimate {
            params: RsaParams { m: Some(d.m), ..params },
            derived: *d,
            qubits,
            base_cycles: base,
            logical_error_rate: self.p_l,
            estimate: ResourceEstimate {
                logical_qubits: qubits.logical,
                logical_cycles: self.cycle_factor * base,
                t_count: tau,
                physical_qubits: qubits.total,
                shot_runtime: t,
                expected_shots: shots,
                total_runtime: shots * t,
                shot_success: p_s,
            },
        }
    }
}

/// Estimate for explicit parameters. Infeasible points are reported in the
/// inner result.
pub fn rsa_estimate(
    setup: &RsaSetup,
    params: RsaParams,
    t_c: f64,
) -> Result<std::result::Result<RsaEstimate, Infeasible>> {
    let d = match derive(setup, params.s, params.f, params.l, params.w3, params.w4, params.m)? {
        Ok(d) => d,
        Err(e) => return Ok(Err(e)),
    };
    if params.rho == 0 || params.rho > d.primes {
        return Err(Error::param("rho", format!("{} not in 1..={}", params.rho, d.primes)));
    }
    let ev = Evaluator::new(setup, t_c)?;
    Ok(Ok(ev.estimate(setup, &d, params)))
}
