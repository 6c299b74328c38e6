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

//! Command-line front end.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arch::{logical_error_rate, Regime};
use crate::circuit::parse_circuit;
use crate::cleaning::{clean_general, clean_port, is_trivial_on_prefix};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::estimators::fh::fh_estimate_with;
use crate::estimators::optimize::{heatmap, log_grid, rsa_optimize, Objective, OptimizeOptions, RhoSearch};
use crate::estimators::rsa::{rsa_estimate, RsaParams, RsaSetup};
use crate::estimators::{DAY, HOUR, MINUTE, MONTH, WEEK, YEAR};
use crate::gb_codes::{build_from_row, distance_exhaustive, distance_randomized, IsdOptions, MAX_ENUM_DIM};
use crate::gf2::BitVec;
use crate::output::{write_artifact, Artifact, Format};
use crate::pbc::{compile, expected_cycles};
use crate::symplectic::{random_symplectic, SymplecticMat};

/// Environment variable holding the worker count.
pub const THREADS_ENV: &str = "QLDPC_ARCH_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qldpc-arch", version, about = "Resource estimates for a modular QLDPC fault-tolerant architecture")]
pub struct Cli {
    /// TOML file with overrides.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Write here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,
    /// Seed for randomized routines.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Exit with status 2 when a result is infeasible.
    #[arg(long, global = true)]
    pub fail_on_infeasible: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FitBound {
    Central,
    Optimistic,
    Pessimistic,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Code family table with verified k and distance bounds.
    Codes(CodesArgs),
    /// Clean a Clifford frame on its first w qubits.
    Clean(CleanArgs),
    /// Compile a circuit file to a measurement schedule.
    Compile(CompileArgs),
    /// Fermi-Hubbard estimate or table.
    EstimateFh(FhArgs),
    /// Factoring estimate, optimisation or results table.
    EstimateRsa(RsaArgs),
    /// Optimal factoring runtime over cycle times and qubit budgets.
    Heatmap(HeatmapArgs),
}

#[derive(Args, Debug)]
pub struct CodesArgs {
    /// Emit logical error rates per code and regime instead.
    #[arg(long)]
    pub error_rates: bool,
    /// Iterations of the randomized distance search per code.
    #[arg(long, default_value_t = 2000)]
    pub isd_iterations: usize,
}

#[derive(Args, Debug)]
pub struct CleanArgs {
    /// File with 2n rows of 2n bits; row i is the image of X_i, row n+i of Z_i.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Qubit count; inferred from the matrix when omitted.
    #[arg(long)]
    pub n: Option<usize>,
    /// Prefix to clean.
    #[arg(long)]
    pub w: usize,
    /// Use a random symplectic matrix from --seed instead of a file.
    #[arg(long, conflicts_with = "matrix")]
    pub random: bool,
    /// Require the control-only block form and use the shorter construction.
    #[arg(long)]
    pub port: bool,
}

#[derive(Args, Debug)]
pub struct CompileArgs {
    pub circuit: PathBuf,
    /// Reject probability for the expected cycle count; defaults to the regime's engine.
    #[arg(long)]
    pub p_r: Option<f64>,
    #[arg(long)]
    pub regime: Option<Regime>,
}

#[derive(Args, Debug)]
pub struct FhArgs {
    #[arg(long = "L", alias = "l")]
    pub l: Option<usize>,
    #[arg(long)]
    pub regime: Option<Regime>,
    #[arg(long = "tc")]
    pub t_c: Option<f64>,
    #[arg(long)]
    pub t_override: Option<f64>,
    #[arg(long)]
    pub u: Option<f64>,
    #[arg(long)]
    pub w: Option<f64>,
    #[arg(long)]
    pub x: Option<f64>,
    /// Every even L in the configured range, both regimes unless --regime,
    /// both table cycle times unless --tc.
    #[arg(long, conflicts_with = "l")]
    pub table: bool,
    #[arg(long, value_enum, default_value = "central")]
    pub fit_bound: FitBound,
}

#[derive(Args, Debug)]
pub struct RsaArgs {
    #[arg(long)]
    pub regime: Option<Regime>,
    #[arg(long = "tc")]
    pub t_c: Option<f64>,
    /// Fewest qubits within this runtime, e.g. `month`, `3d`, `86400`.
    #[arg(long, conflicts_with = "qubit_cap")]
    pub runtime_cap: Option<String>,
    /// Shortest runtime within this many physical qubits.
    #[arg(long)]
    pub qubit_cap: Option<f64>,
    /// Minimum qubits for every cycle time, regime and runtime cap.
    #[arg(long, conflicts_with_all = ["runtime_cap", "qubit_cap"])]
    pub table: bool,
    /// Evaluate every rho instead of one per class.
    #[arg(long)]
    pub exhaustive_rho: bool,
    #[arg(long, value_enum, default_value = "central")]
    pub fit_bound: FitBound,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, requires_all = ["f", "l", "w3", "w4", "rho"])]
    pub s: Option<usize>,
    #[arg(long)]
    pub f: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub w3: Option<usize>,
    #[arg(long)]
    pub w4: Option<usize>,
    #[arg(long)]
    pub rho: Option<usize>,
}

#[derive(Args, Debug)]
pub struct HeatmapArgs {
    #[arg(long)]
    pub regime: Option<Regime>,
    #[arg(long)]
    pub tc_min: Option<f64>,
    #[arg(long)]
    pub tc_max: Option<f64>,
    #[arg(long)]
    pub tc_points: Option<usize>,
    #[arg(long)]
    pub budget_min: Option<f64>,
    #[arg(long)]
    pub budget_max: Option<f64>,
    #[arg(long)]
    pub budget_points: Option<usize>,
    #[arg(long)]
    pub exhaustive_rho: bool,
}

/// Result of a subcommand before writing.
pub struct Outcome {
    pub artifact: Artifact,
    pub default_format: Format,
    pub infeasible: bool,
}

/// Parses a duration: a number of seconds with an optional unit suffix
/// (`s`, `min`, `h`, `d`, `w`, `mo`, `y`) or one of `minute`, `hour`,
/// `day`, `week`, `month`, `year`.
pub fn parse_duration(s: &str) -> Result<f64> {
    let t = s.trim().to_ascii_lowercase();
    let named = [("minute", MINUTE), ("hour", HOUR), ("day", DAY), ("week", WEEK), ("month", MONTH), ("year", YEAR)];
    if let Some((_, v)) = named.iter().find(|(n, _)| *n == t) {
        return Ok(*v);
    }
    let split = t.find(|c: char| c.is_ascii_alphabetic() && c != 'e').unwrap_or(t.len());
    let (num, unit) = t.split_at(split);
    let scale = match unit {
        "" | "s" => 1.0,
        "min" => MINUTE,
        "h" => HOUR,
        "d" => DAY,
        "w" => WEEK,
        "mo" => MONTH,
        "y" => YEAR,
        _ => return Err(Error::param("runtime_cap", format!("unknown unit in {s:?}"))),
    };
    let v: f64 = num.parse().map_err(|_| Error::param("runtime_cap", format!("cannot parse {s:?}")))?;
    if !(v > 0.0) {
        return Err(Error::param("runtime_cap", format!("{s:?} must be positive")));
    }
    Ok(v * scale)
}

/// Reads a matrix of 0/1 rows. Whitespace inside a row is ignored.
pub fn parse_matrix(text: &str) -> Result<SymplecticMat> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bits: std::result::Result<Vec<bool>, _> = line
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::param("matrix", format!("line {}: unexpected {c:?}", i + 1))),
            })
            .collect();
        rows.push(BitVec::from_bools(&bits?));
    }
    SymplecticMat::from_bit_rows(&rows)
}

fn capped_budget(x: f64) -> Result<usize> {
    if !(x >= 1.0) || !x.is_finite() {
        return Err(Error::param("qubit_cap", format!("{x} must be at least 1")));
    }
    Ok(x.round() as usize)
}

fn with_fit_bound(cfg: &mut RunConfig, b: FitBound) {
    let fit = cfg.fit();
    cfg.fit = Some(match b {
        FitBound::Central => fit,
        FitBound::Optimistic => fit.at_bound(false),
        FitBound::Pessimistic => fit.at_bound(true),
    });
}

fn opts(cfg: &RunConfig, m: Option<usize>, exhaustive: bool) -> OptimizeOptions {
    let rho_search = if exhaustive { RhoSearch::Exhaustive } else { cfg.rsa.rho_search.unwrap_or_default() };
    OptimizeOptions { space: cfg.rsa.search.unwrap_or_default(), rho_search, m: m.or(cfg.rsa.m) }
}

fn cmd_codes(cfg: &RunConfig, a: &CodesArgs, seed: u64) -> Result<Outcome> {
    let table = cfg.code_table();
    if a.error_rates {
        #[derive(Serialize)]
        struct Row {
            p: f64,
            m: u32,
            k: usize,
            d: usize,
            logical_error_rate: f64,
        }
        let fit = cfg.fit();
        let mut rows = Vec::new();
        for regime in Regime::ALL {
            for r in &table {
                rows.push(Row {
                    p: regime.p(),
                    m: r.m,
                    k: r.k,
                    d: r.d,
                    logical_error_rate: logical_error_rate(&fit, regime.p(), r.k, r.d)?,
                });
            }
        }
        return Ok(Outcome { artifact: Artifact::table(&rows)?, default_format: Format::Csv, infeasible: false });
    }
    #[derive(Serialize)]
    struct Row {
        m: u32,
        n: usize,
        k: usize,
        d_claimed: usize,
        d_verified_or_bound: usize,
        d_exact: bool,
        n_cb: usize,
        n_g: usize,
        n_b: usize,
        n_pb: usize,
    }
    let mut rows = Vec::new();
    for r in &table {
        let code = build_from_row(r)?;
        if code.k != r.k {
            return Err(Error::param("k", format!("m = {}: rank gives k = {}, table says {}", r.m, code.k, r.k)));
        }
        let dim = code.n() - code.hz.rank();
        let bound = if dim <= MAX_ENUM_DIM {
            distance_exhaustive(&code)?
        } else {
            distance_randomized(
                &code,
                IsdOptions { max_iterations: a.isd_iterations, target: Some(r.d), seed, ..Default::default() },
            )?
        };
        let c = r.costs();
        rows.push(Row {
            m: r.m,
            n: r.n,
            k: code.k,
            d_claimed: r.d,
            d_verified_or_bound: bound.weight,
            d_exact: bound.exact,
            n_cb: c.n_cb,
            n_g: c.n_g,
            n_b: c.n_b,
            n_pb: c.n_pb,
        });
    }
    Ok(Outcome { artifact: Artifact::table(&rows)?, default_format: Format::Csv, infeasible: false })
}

fn cmd_clean(a: &CleanArgs, seed: u64) -> Result<Outcome> {
    let m = match (&a.matrix, a.random) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
            parse_matrix(&text)?
        }
        (None, true) => {
            let n = a.n.ok_or_else(|| Error::param("n", "--random needs --n"))?;
            random_symplectic(n, seed)
        }
        (None, false) => return Err(Error::param("matrix", "give --matrix or --random")),
    };
    if let Some(n) = a.n {
        if n != m.num_qubits() {
            return Err(Error::param("n", format!("matrix has {} qubits, --n says {n}", m.num_qubits())));
        }
    }
    let res = if a.port { clean_port(&m, a.w)? } else { clean_general(&m, a.w)? };
    let v = json!({
        "n": m.num_qubits(),
        "w": a.w,
        "construction": if a.port { "port" } else { "general" },
        "emitted_count": res.emitted_count,
        "bound": if a.port { 2 * a.w } else { 4 * a.w },
        "rotations": res.rotations.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "residual": res.residual.to_bit_strings(),
        "residual_trivial_on_prefix": is_trivial_on_prefix(&res.residual, a.w),
    });
    Ok(Outcome { artifact: Artifact::Object(v), default_format: Format::Json, infeasible: false })
}

fn cmd_compile(cfg: &RunConfig, a: &CompileArgs) -> Result<Outcome> {
    let text = std::fs::read_to_string(&a.circuit).map_err(|e| Error::io(&a.circuit, e))?;
    let circuit = parse_circuit(&text)?;
    let schedule = compile(&circuit)?;
    let p_r = match a.p_r {
        Some(p) => p,
        None => cfg.engine(a.regime.unwrap_or(cfg.regime())).p_r,
    };
    let expected = expected_cycles(&schedule, p_r)?;
    let mut v = serde_json::to_value(&schedule)?;
    if let Some(o) = v.as_object_mut() {
        o.insert("p_r".into(), json!(p_r));
        o.insert("expected_cycles".into(), json!(expected));
    }
    Ok(Outcome { artifact: Artifact::Object(v), default_format: Format::Json, infeasible: false })
}

fn cmd_fh(cfg: &mut RunConfig, a: &FhArgs) -> Result<Outcome> {
    with_fit_bound(cfg, a.fit_bound);
    if a.t_override.is_some() {
        cfg.fh.t_override = a.t_override;
    }
    if a.u.is_some() {
        cfg.fh.u = a.u;
    }
    if a.w.is_some() {
        cfg.fh.w = a.w;
    }
    if a.x.is_some() {
        cfg.fh.x = a.x;
    }
    let t_c = a.t_c.unwrap_or(cfg.t_c());
    if a.table {
        let regimes: Vec<Regime> = match a.regime.or(cfg.hardware.regime) {
            Some(r) => vec![r],
            None => Regime::ALL.to_vec(),
        };
        let tcs: Vec<f64> = match a.t_c.or(cfg.hardware.t_c) {
            Some(t) => vec![t],
            None => FH_TABLE_TCS.to_vec(),
        };
        let (lo, hi) = (cfg.fh.l_min.unwrap_or(8), cfg.fh.l_max.unwrap_or(32));
        let mut rows = Vec::new();
        for regime in regimes {
            let setup = cfg.fh_setup(regime)?;
            for &t_c in &tcs {
                for l in (lo..=hi).filter(|l| l % 2 == 0) {
                    let e = serde_json::to_value(fh_estimate_with(&cfg.fh_params(l), &setup, t_c)?)?;
                    let mut row = serde_json::Map::new();
                    row.insert("t_c".into(), json!(t_c));
                    if let Value::Object(fields) = e {
                        row.extend(fields);
                    }
                    rows.push(Value::Object(row));
                }
            }
        }
        return Ok(Outcome { artifact: Artifact::Table(rows), default_format: Format::Csv, infeasible: false });
    }
    let l = a.l.ok_or_else(|| Error::param("L", "give --L or --table"))?;
    let setup = cfg.fh_setup(a.regime.unwrap_or(cfg.regime()))?;
    let e = fh_estimate_with(&cfg.fh_params(l), &setup, t_c)?;
    Ok(Outcome { artifact: Artifact::object(&e)?, default_format: Format::Json, infeasible: false })
}

/// Cycle times of the Fermi-Hubbard table.
pub const FH_TABLE_TCS: [f64; 2] = [1e-6, 1e-3];

/// Runtime caps of the results table.
pub const TABLE_CAPS: [(&str, f64); 4] = [("year", YEAR), ("month", MONTH), ("week", WEEK), ("day", DAY)];
/// Cycle times of the results table.
pub const TABLE_TCS: [f64; 4] = [1e-6, 1e-5, 1e-4, 1e-3];

#[derive(Serialize)]
struct TableRow {
    t_c: f64,
    p: f64,
    cap: &'static str,
    cap_seconds: f64,
    feasible: bool,
    physical_qubits: Option<usize>,
    total_runtime: Option<f64>,
    params: Option<RsaParams>,
}

fn rsa_table(cfg: &RunConfig, o: &OptimizeOptions) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for t_c in TABLE_TCS {
        for regime in Regime::ALL {
            let setup = cfg.rsa_setup(regime)?;
            for (cap, secs) in TABLE_CAPS {
                let r = rsa_optimize(&setup, t_c, Objective::MinQubits { runtime_cap: secs }, o)?;
                rows.push(TableRow {
                    t_c,
                    p: regime.p(),
                    cap,
                    cap_seconds: secs,
                    feasible: r.best.is_some(),
                    physical_qubits: r.best.map(|b| b.estimate.physical_qubits),
                    total_runtime: r.best.map(|b| b.estimate.total_runtime),
                    params: r.best.map(|b| b.params),
                });
            }
        }
    }
    Ok(rows)
}

fn cmd_rsa(cfg: &mut RunConfig, a: &RsaArgs) -> Result<Outcome> {
    with_fit_bound(cfg, a.fit_bound);
    let o = opts(cfg, a.m, a.exhaustive_rho);
    if a.table {
        let rows = rsa_table(cfg, &o)?;
        let infeasible = rows.iter().any(|r| !r.feasible);
        return Ok(Outcome { artifact: Artifact::table(&rows)?, default_format: Format::Csv, infeasible });
    }
    let setup: RsaSetup = cfg.rsa_setup(a.regime.unwrap_or(cfg.regime()))?;
    let t_c = a.t_c.unwrap_or(cfg.t_c());
    if let (Some(s), Some(f), Some(l), Some(w3), Some(w4), Some(rho)) = (a.s, a.f, a.l, a.w3, a.w4, a.rho) {
        let params = RsaParams { s, f, l, w3, w4, rho, m: o.m };
        return Ok(match rsa_estimate(&setup, params, t_c)? {
            Ok(e) => Outcome { artifact: Artifact::object(&e)?, default_format: Format::Json, infeasible: false },
            Err(why) => Outcome {
                artifact: Artifact::Object(json!({ "params": params, "infeasible": format!("{why:?}") })),
                default_format: Format::Json,
                infeasible: true,
            },
        });
    }
    let objective = match (&a.runtime_cap, a.qubit_cap) {
        (Some(c), _) => Objective::MinQubits { runtime_cap: parse_duration(c)? },
        (None, Some(q)) => Objective::MinRuntime { qubit_cap: capped_budget(q)? },
        (None, None) => {
            return Err(Error::param("estimate-rsa", "give explicit parameters, --runtime-cap, --qubit-cap or --table"))
        }
    };
    let r = rsa_optimize(&setup, t_c, objective, &o)?;
    Ok(Outcome { infeasible: r.best.is_none(), artifact: Artifact::object(&r)?, default_format: Format::Json })
}

fn cmd_heatmap(cfg: &RunConfig, a: &HeatmapArgs) -> Result<Outcome> {
    let h = &cfg.heatmap;
    let tcs = log_grid(
        a.tc_min.or(h.t_c_min).unwrap_or(1e-6),
        a.tc_max.or(h.t_c_max).unwrap_or(1e-3),
        a.tc_points.or(h.t_c_points).unwrap_or(10),
    );
    let budgets: Vec<usize> = log_grid(
        a.budget_min.or(h.budget_min).unwrap_or(1e4),
        a.budget_max.or(h.budget_max).unwrap_or(1e8),
        a.budget_points.or(h.budget_points).unwrap_or(10),
    )
    .into_iter()
    .map(capped_budget)
    .collect::<Result<_>>()?;
    if tcs.iter().any(|t| !(*t > 0.0)) {
        return Err(Error::param("tc_min", "cycle times must be positive"));
    }
    let setup = cfg.rsa_setup(a.regime.unwrap_or(cfg.regime()))?;
    let cells = heatmap(&setup, &tcs, &budgets, &opts(cfg, None, a.exhaustive_rho))?;
    let infeasible = cells.iter().any(|c| c.runtime.is_none());
    Ok(Outcome { artifact: Artifact::table(&cells)?, default_format: Format::Csv, infeasible })
}

/// Runs a parsed command line and returns the artifact.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    let seed = cli.seed.or(cfg.seed).unwrap_or(0);
    match &cli.command {
        Command::Codes(a) => cmd_codes(&cfg, a, seed),
        Command::Clean(a) => cmd_clean(a, seed),
        Command::Compile(a) => cmd_compile(&cfg, a),
        Command::EstimateFh(a) => cmd_fh(&mut cfg, a),
        Command::EstimateRsa(a) => cmd_rsa(&mut cfg, a),
        Command::Heatmap(a) => cmd_heatmap(&cfg, a),
    }
}

fn emit(cli: &Cli, out: &Outcome) -> Result<()> {
    let cfg_out = match &cli.config {
        Some(p) => RunConfig::load(p)?.output,
        None => Default::default(),
    };
    let format = cli.format.map(Format::from).or(cfg_out.format).unwrap_or(out.default_format);
    let path: Option<&Path> = cli.output.as_deref().or(cfg_out.path.as_deref());
    match path {
        Some(p) => {
            let f = File::create(p).map_err(|e| Error::io(p, e))?;
            let mut w = BufWriter::new(f);
            write_artifact(&out.artifact, format, &mut w)?;
            w.flush().map_err(|e| Error::io(p, e))
        }
        None => {
            let stdout = std::io::stdout();
            let mut w = stdout.lock();
            write_artifact(&out.artifact, format, &mut w)
        }
    }
}

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v.parse().map_err(|_| Error::Config(format!("{THREADS_ENV}: {v:?} is not a worker count")))?;
        // A pool may already exist when called twice in one process.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

/// Full entry point: parse, run, write. Returns the process exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = init_threads().and_then(|_| execute(&cli)).and_then(|out| {
        emit(&cli, &out)?;
        Ok(out.infeasible)
    });
    match result {
        Ok(true) if cli.fail_on_infeasible => {
            eprintln!("error: result is infeasible");
            EXIT_INFEASIBLE
        }
        Ok(_) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INVALID
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn durations() {
        assert_eq!(parse_duration("month").unwrap(), MONTH);
        assert_eq!(parse_duration("3d").unwrap(), 3.0 * DAY);
        assert_eq!(parse_duration("1e3").unwrap(), 1000.0);
        assert_eq!(parse_duration("2.5min").unwrap(), 150.0);
        assert!(parse_duration("fortnight").is_err());
        assert!(parse_duration("-1").is_err());
    }

    #[test]
    fn matrix_text() {
        let m = parse_matrix("01\n10\n").unwrap();
        assert_eq!(m, SymplecticMat::hadamard(1, 0));
        assert!(parse_matrix("0x\n10\n").is_err());
    }

    #[test]
    fn cli_parses() {
        Cli::try_parse_from([
            "qldpc-arch",
            "estimate-fh",
            "--L",
            "16",
            "--regime",
            "1e-3",
            "--t-override",
            "8e6",
            "--tc",
            "1e-6",
        ])
        .unwrap();
        Cli::try_parse_from(["qldpc-arch", "clean", "--n", "1", "--matrix", "H.txt", "--w", "1"]).unwrap();
        assert!(Cli::try_parse_from(["qldpc-arch", "estimate-rsa", "--s", "3"]).is_err());
    }
}
