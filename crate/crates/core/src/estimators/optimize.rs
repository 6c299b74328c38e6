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

//! Parameter search for the factoring estimate and runtime heatmaps.
//!
//! The search is exhaustive over `(s, f, l, w3, w4)`. For `rho` it uses two
//! facts: physical qubits strictly increase with `rho`, and among all `rho`
//! sharing the same `q = ceil(|P|/rho)` the smallest one, `ceil(|P|/q)`, is
//! best in both qubits and runtime. So only one `rho` per `q` is evaluated,
//! and a runtime lower bound that is increasing in `q` ends each scan.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::rsa::{derive, rsa_qubits, Derived, Evaluator, RsaEstimate, RsaParams, RsaSetup};

/// Inclusive parameter ranges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchSpace {
    pub s: (usize, usize),
    pub f: (usize, usize),
    pub l: (usize, usize),
    pub w3: (usize, usize),
    pub w4: (usize, usize),
}

impl Default for SearchSpace {
    fn default() -> Self {
        SearchSpace { s: (1, 16), f: (24, 59), l: (18, 25), w3: (2, 6), w4: (2, 6) }
    }
}

impl SearchSpace {
    fn combos(&self) -> Vec<(usize, usize, usize, usize, usize)> {
        let mut out = Vec::new();
        for s in self.s.0..=self.s.1 {
            for f in self.f.0..=self.f.1 {
                for l in self.l.0..=self.l.1 {
                    for w3 in self.w3.0..=self.w3.1 {
                        for w4 in self.w4.0..=self.w4.1 {
                            out.push((s, f, l, w3, w4));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        for (name, (lo, hi)) in [("s", self.s), ("f", self.f), ("l", self.l), ("w3", self.w3), ("w4", self.w4)] {
            if lo == 0 || lo > hi {
                return Err(Error::param("search", format!("empty or zero range for {name}: {lo}..={hi}")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    /// Fewest physical qubits with expected runtime at most the cap (seconds).
    MinQubits { runtime_cap: f64 },
    /// Shortest expected runtime with at most this many physical qubits.
    MinRuntime { qubit_cap: usize },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RhoSearch {
    /// One `rho` per value of `ceil(|P|/rho)` with bound-based cut-off.
    #[default]
    Classes,
    /// Every `rho` in `1..=|P|`. For verification.
    Exhaustive,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct OptimizeOptions {
    pub space: SearchSpace,
    pub rho_search: RhoSearch,
    /// Fixed input-register size instead of the setup's rule.
    pub m: Option<usize>,
}

#[derive(Clone, Copy, Debug)]
struct Candidate {
    primary: f64,
    secondary: f64,
    params: RsaParams,
}

impl Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.primary
            .total_cmp(&other.primary)
            .then(self.secondary.total_cmp(&other.secondary))
            .then(self.params.cmp(&other.params))
    }
}

fn better(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.cmp(&x) == Ordering::Less { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Outcome of a search.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Optimum {
    pub objective: Objective,
    pub t_c: f64,
    /// `None` when no parameter point meets the cap.
    pub best: Option<RsaEstimate>,
    pub combos: usize,
    pub feasible_combos: usize,
}

struct Ctx<'a> {
    setup: &'a RsaSetup,
    ev: Evaluator,
}

impl Ctx<'_> {
    fn point(&self, d: &Derived, s: usize, f: usize, rho: usize) -> (usize, f64) {
        let q = rsa_qubits(self.setup, d, rho);
        let (.., shots, t) = self.ev.timing(d, s, f, rho, q.logical);
        (q.total, shots * t)
    }

    fn params(&self, combo: (usize, usize, usize, usize, usize), rho: usize, m: Option<usize>) -> RsaParams {
        let (s, f, l, w3, w4) = combo;
        RsaParams { s, f, l, w3, w4, rho, m }
    }

    fn min_runtime(
        &self,
        d: &Derived,
        combo: (usize, usize, usize, usize, usize),
        cap: usize,
        mode: RhoSearch,
        m: Option<usize>,
    ) -> Option<Candidate> {
        let (s, f, ..) = combo;
        let p = d.primes;
        // Largest rho within the qubit cap.
        let rho_max = (1..=p).collect::<Vec<_>>().partition_point(|&r| rsa_qubits(self.setup, d, r).total <= cap);
        if rho_max == 0 {
            return None;
        }
        let make = |rho: usize, q: usize, t: f64| Candidate {
            primary: t,
            secondary: q as f64,
            params: self.params(combo, rho, m),
        };
        let mut best: Option<Candidate> = None;
        match mode {
            RhoSearch::Exhaustive => {
                for rho in 1..=rho_max {
                    let (q, t) = self.point(d, s, f, rho);
                    best = better(best, Some(make(rho, q, t)));
                }
            }
            RhoSearch::Classes => {
                let psb = self.ev.success_bound(d);
                for q in p.div_ceil(rho_max)..=p {
                    if let Some(b) = &best {
                        if self.ev.runtime_bound(d, s, q, psb) > b.primary {
                            break;
                        }
                    }
                    let rho = p.div_ceil(q);
                    if p.div_ceil(rho) != q {
                        continue;
                    }
                    let (qb, t) = self.point(d, s, f, rho);
                    best = better(best, Some(make(rho, qb, t)));
                }
            }
        }
        best
    }

    fn min_qubits(
        &self,
        d: &Derived,
        combo: (usize, usize, usize, usize, usize),
        cap: f64,
        mode: RhoSearch,
        m: Option<usize>,
    ) -> Option<Candidate> {
        let (s, f, ..) = combo;
        let p = d.primes;
        let make = |rho: usize, q: usize, t: f64| Candidate {
            primary: q as f64,
            secondary: t,
            params: self.params(combo, rho, m),
        };
        match mode {
            RhoSearch::Exhaustive => (1..=p).find_map(|rho| {
                let (q, t) = self.point(d, s, f, rho);
                (t <= cap).then(|| make(rho, q, t))
            }),
            RhoSearch::Classes => {
                let psb = self.ev.success_bound(d);
                // Largest q whose lower bound is within the cap.
                let q_hi = (1..=p).collect::<Vec<_>>().partition_point(|&q| self.ev.runtime_bound(d, s, q, psb) <= cap);
                // rho = ceil(p/q) is non-increasing in q, so the first
                // feasible q from the top has the fewest qubits.
                (1..=q_hi).rev().find_map(|q| {
                    let rho = p.div_ceil(q);
                    let (qb, t) = self.point(d, s, f, rho);
                    (t <= cap).then(|| make(rho, qb, t))
                })
            }
        }
    }
}

/// Searches the parameter space for the best point under `objective`.
pub fn rsa_optimize(setup: &RsaSetup, t_c: f64, objective: Objective, opts: &OptimizeOptions) -> Result<Optimum> {
    opts.space.validate()?;
    match objective {
        Objective::MinQubits { runtime_cap } if !(runtime_cap > 0.0) => {
            return Err(Error::param("runtime_cap", format!("{runtime_cap} must be positive")));
        }
        _ => {}
    }
    let ctx = Ctx { setup, ev: Evaluator::new(setup, t_c)? };
    let combos = opts.space.combos();
    let results: Vec<(bool, Option<Candidate>)> = combos
        .par_iter()
        .map(|&combo| {
            let (s, f, l, w3, w4) = combo;
            let d = match derive(setup, s, f, l, w3, w4, opts.m) {
                Ok(Ok(d)) => d,
                _ => return (false, None),
            };
            let c = match objective {
                Objective::MinRuntime { qubit_cap } => ctx.min_runtime(&d, combo, qubit_cap, opts.rho_search, opts.m),
                Objective::MinQubits { runtime_cap } => ctx.min_qubits(&d, combo, runtime_cap, opts.rho_search, opts.m),
            };
            (true, c)
        })
        .collect();
    let feasible_combos = results.iter().filter(|r| r.0).count();
    let best = results.into_iter().fold(None, |acc, (_, c)| better(acc, c));
    let best = match best {
        Some(c) => {
            let p = c.params;
            let d = derive(setup, p.s, p.f, p.l, p.w3, p.w4, p.m)?
                .map_err(|e| Error::param("params", format!("optimum became infeasible: {e:?}")))?;
            Some(ctx.ev.estimate(setup, &d, p))
        }
        None => None,
    };
    Ok(Optimum { objective, t_c, best, combos: combos.len(), feasible_combos })
}

/// `n` points spaced geometrically from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![lo],
        _ => (0..n).map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64)).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HeatmapCell {
    pub t_c: f64,
    pub qubit_budget: usize,
    /// Expected total runtime in seconds; `None` if infeasible.
    pub runtime: Option<f64>,
    pub physical_qubits: Option<usize>,
    pub params: Option<RsaParams>,
}

/// Minimum runtime for every `(t_c, budget)` pair, row-major in `t_cs`.
pub fn heatmap(setup: &RsaSetup, t_cs: &[f64], budgets: &[usize], opts: &OptimizeOptions) -> Result<Vec<HeatmapCell>> {
    let mut cells = Vec::with_capacity(t_cs.len() * budgets.len());
    for &t_c in t_cs {
        for &budget in budgets {
            let o = rsa_optimize(setup, t_c, Objective::MinRuntime { qubit_cap: budget }, opts)?;
            cells.push(HeatmapCell {
                t_c,
                qubit_budget: budget,
                runtime: o.best.map(|b| b.estimate.total_runtime),
                physical_qubits: o.best.map(|b| b.estimate.physical_qubits),
                params: o.best.map(|b| b.params),
            });
        }
    }
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arch::Regime;
    use crate::estimators::{MONTH, YEAR};

    fn small() -> OptimizeOptions {
        OptimizeOptions {
            space: SearchSpace { s: (4, 6), f: (28, 32), l: (20, 22), w3: (3, 4), w4: (3, 4) },
            ..Default::default()
        }
    }

    #[test]
    fn classes_match_exhaustive_min_qubits() {
        let setup = RsaSetup::for_regime(Regime::P1e3);
        for cap in [YEAR, MONTH, 7.0 * 86400.0] {
            let a = rsa_optimize(&setup, 1e-6, Objective::MinQubits { runtime_cap: cap }, &small()).unwrap();
            let ex = OptimizeOptions { rho_search: RhoSearch::Exhaustive, ..small() };
            let b = rsa_optimize(&setup, 1e-6, Objective::MinQubits { runtime_cap: cap }, &ex).unwrap();
            assert_eq!(a.best.map(|e| e.params), b.best.map(|e| e.params));
        }
    }

    #[test]
    fn classes_match_exhaustive_min_runtime() {
        let setup = RsaSetup::for_regime(Regime::P1e4);
        for cap in [60_000, 200_000, 1_000_000] {
            let a = rsa_optimize(&setup, 1e-6, Objective::MinRuntime { qubit_cap: cap }, &small()).unwrap();
            let ex = OptimizeOptions { rho_search: RhoSearch::Exhaustive, ..small() };
            let b = rsa_optimize(&setup, 1e-6, Objective::MinRuntime { qubit_cap: cap }, &ex).unwrap();
            assert_eq!(a.best.map(|e| e.params), b.best.map(|e| e.params));
        }
    }

    #[test]
    fn tiny_budget_is_infeasible() {
        let setup = RsaSetup::for_regime(Regime::P1e3);
        let o = rsa_optimize(&setup, 1e-6, Objective::MinRuntime { qubit_cap: 20_000 }, &small()).unwrap();
        assert!(o.best.is_none());
    }

    #[test]
    fn grid() {
        let g = log_grid(1.0, 100.0, 3);
        assert!((g[1] - 10.0).abs() < 1e-12);
        assert_eq!(log_grid(1.0, 2.0, 1), vec![1.0]);
    }
}
