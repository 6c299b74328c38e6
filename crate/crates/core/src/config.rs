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

//! Run configuration read from TOML.
//!
//! Every key is optional. Missing keys fall back to the built-in data;
//! command-line flags override both. Unknown keys are rejected by name.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::arch::{magic_engine_spec, ErrorFit, MagicEngineSpec, Regime};
use crate::error::{Error, Result};
use crate::estimators::fh::{FhParams, FhSetup};
use crate::estimators::optimize::{RhoSearch, SearchSpace};
use crate::estimators::rsa::{MRule, RsaSetup};
use crate::gb_codes::{code_table, CodeRow};
use crate::output::Format;

/// Version of the built-in data tables.
pub const DATA_VERSION: u32 = 1;

#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    /// Must equal [`DATA_VERSION`] when given.
    pub data_version: Option<u32>,
    pub seed: Option<u64>,
    pub hardware: HardwareConfig,
    /// Replaces the whole code table.
    pub codes: Option<Vec<CodeRow>>,
    /// Replaces the engine of the matching regime.
    pub engines: Vec<MagicEngineSpec>,
    /// Error-rate fit; defaults to the logical-measurement fit.
    pub fit: Option<ErrorFit>,
    pub fh: FhConfig,
    pub rsa: RsaConfig,
    pub heatmap: HeatmapConfig,
    pub output: OutputConfig,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct HardwareConfig {
    /// Default `1e-3`.
    pub regime: Option<Regime>,
    /// Code-cycle time in seconds. Default `1e-6`.
    pub t_c: Option<f64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct FhConfig {
    /// Default 4.
    pub u: Option<f64>,
    pub e0: Option<f64>,
    pub w: Option<f64>,
    pub x: Option<f64>,
    pub t_override: Option<f64>,
    /// Table range, default `8..=32`.
    pub l_min: Option<usize>,
    pub l_max: Option<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RsaConfig {
    pub n_bits: Option<usize>,
    pub m_rule: Option<MRule>,
    /// Fixed input-register size; overrides `m_rule`.
    pub m: Option<usize>,
    pub search: Option<SearchSpace>,
    pub rho_search: Option<RhoSearch>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct HeatmapConfig {
    /// Default `1e-6..=1e-3` over 10 points.
    pub t_c_min: Option<f64>,
    pub t_c_max: Option<f64>,
    pub t_c_points: Option<usize>,
    /// Default `1e4..=1e8` over 10 points.
    pub budget_min: Option<f64>,
    pub budget_max: Option<f64>,
    pub budget_points: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputConfig {
    pub path: Option<PathBuf>,
    pub format: Option<Format>,
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml(&text).map_err(|e| match e {
            Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    fn validate(&self) -> Result<()> {
        if let Some(v) = self.data_version {
            if v != DATA_VERSION {
                return Err(Error::Config(format!("data_version: {v} is not supported (expected {DATA_VERSION})")));
            }
        }
        for (i, e) in self.engines.iter().enumerate() {
            if e.n_me != e.component_total() {
                return Err(Error::Config(format!(
                    "engines[{i}].n_me: {} differs from component total {}",
                    e.n_me,
                    e.component_total()
                )));
            }
            if !(0.0..1.0).contains(&e.p_r) {
                return Err(Error::Config(format!("engines[{i}].p_r: {} not in [0, 1)", e.p_r)));
            }
        }
        if let Some(t) = self.hardware.t_c {
            if !(t > 0.0) {
                return Err(Error::Config(format!("hardware.t_c: {t} must be positive")));
            }
        }
        if let Some(s) = &self.rsa.search {
            s.validate().map_err(|e| Error::Config(format!("rsa.search: {e}")))?;
        }
        Ok(())
    }

    pub fn regime(&self) -> Regime {
        self.hardware.regime.unwrap_or(Regime::P1e3)
    }

    pub fn t_c(&self) -> f64 {
        self.hardware.t_c.unwrap_or(1e-6)
    }

    pub fn code_table(&self) -> Vec<CodeRow> {
        self.codes.clone().unwrap_or_else(code_table)
    }

    pub fn engine(&self, regime: Regime) -> MagicEngineSpec {
        self.engines.iter().rev().find(|e| e.regime == regime).copied().unwrap_or_else(|| magic_engine_spec(regime))
    }

    pub fn fit(&self) -> ErrorFit {
        self.fit.unwrap_or_else(ErrorFit::logical_measurement)
    }

    pub fn fh_setup(&self, regime: Regime) -> Result<FhSetup> {
        let mut s = FhSetup::from_table(regime, &self.code_table())?;
        s.engine = self.engine(regime);
        s.fit = self.fit();
        Ok(s)
    }

    pub fn rsa_setup(&self, regime: Regime) -> Result<RsaSetup> {
        let mut s = RsaSetup::from_table(regime, &self.code_table())?;
        s.engine = self.engine(regime);
        s.fit = self.fit();
        if let Some(n) = self.rsa.n_bits {
            s.n_bits = n;
        }
        if let Some(r) = self.rsa.m_rule {
            s.m_rule = r;
        }
        Ok(s)
    }

    /// FH parameters for lattice side `l` with config overrides applied.
    pub fn fh_params(&self, l: usize) -> FhParams {
        let mut p = FhParams::new(l);
        if let Some(u) = self.fh.u {
            p.u = u;
        }
        p.e0 = self.fh.e0;
        p.w = self.fh.w;
        p.x = self.fh.x;
        p.t_override = self.fh.t_override;
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_is_default() {
        let c = RunConfig::from_toml("").unwrap();
        assert_eq!(c, RunConfig::default());
        assert_eq!(c.rsa_setup(Regime::P1e3).unwrap(), RsaSetup::for_regime(Regime::P1e3));
    }

    #[test]
    fn unknown_key_is_named() {
        let e = RunConfig::from_toml("[rsa]\nmrule = \"half-plus-n-over-s\"\n").unwrap_err();
        assert!(e.to_string().contains("mrule"), "{e}");
        let e = RunConfig::from_toml("bogus = 1\n").unwrap_err();
        assert!(e.to_string().contains("bogus"), "{e}");
    }

    #[test]
    fn overrides() {
        let c = RunConfig::from_toml(
            r#"
            data_version = 1
            [hardware]
            regime = "1e-4"
            t_c = 1e-3
            [rsa]
            m_rule = "half-plus-half-n-over-s"
            m = 1100
            [fh]
            t_override = 8e6
            "#,
        )
        .unwrap();
        assert_eq!(c.regime(), Regime::P1e4);
        assert_eq!(c.t_c(), 1e-3);
        assert_eq!(c.rsa_setup(c.regime()).unwrap().m_rule, MRule::HalfPlusHalfNOverS);
        assert_eq!(c.fh_params(16).t_override, Some(8e6));
    }

    #[test]
    fn rejects_bad_engine_total() {
        let e = RunConfig::from_toml(
            r#"
            [[engines]]
            regime = "1e-4"
            n_cb = 252
            n_g = 31
            n_a = 19
            d_a = 5
            n_alpha = 0
            r = 7
            n_me = 2000
            p_r = 0.0015
            p_t = 1e-11
            "#,
        )
        .unwrap_err();
        assert!(e.to_string().contains("n_me"), "{e}");
    }

    #[test]
    fn rejects_version() {
        assert!(RunConfig::from_toml("data_version = 2").is_err());
    }
}
