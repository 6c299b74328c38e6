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

//! Generalised bicycle codes: construction, logical count and distance
//! bounds, plus the block-cost data for the simplex-generated family.
//!
//! Qubits `0..l` form the L sector and `l..2l` the R sector.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec, Echelon};

/// Largest kernel dimension accepted by [`distance_exhaustive`].
pub const MAX_ENUM_DIM: usize = 26;

/// One row of the built-in code family table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeRow {
    pub m: u32,
    pub l: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub n_g: usize,
    pub n_b: usize,
    pub n_pb: usize,
}

impl CodeRow {
    pub fn d_t(&self) -> usize {
        self.d + 2
    }

    pub fn costs(&self) -> BlockCosts {
        BlockCosts::new(self.n, self.n_g, self.n_b)
    }
}

/// The published family instances for `m = 4..=8`.
pub fn code_table() -> Vec<CodeRow> {
    let row = |m, l, a: [usize; 3], b: [usize; 3], k, d, n_g, n_b, n_pb| CodeRow {
        m,
        l,
        a: a.to_vec(),
        b: b.to_vec(),
        n: 2 * l,
        k,
        d,
        n_g,
        n_b,
        n_pb,
    };
    vec![
        row(4, 15, [0, 6, 13], [0, 1, 4], 8, 4, 13, 7, 140),
        row(5, 31, [0, 6, 15], [0, 5, 7], 10, 6, 19, 11, 244),
        row(6, 63, [0, 4, 37], [0, 29, 49], 12, 10, 31, 19, 452),
        row(7, 127, [0, 32, 100], [0, 28, 49], 14, 16, 57, 31, 860),
        row(8, 255, [0, 39, 55], [0, 70, 127], 16, 24, 99, 51, 1620),
    ]
}

/// Physical qubits of a processing block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BlockCosts {
    /// Code block: data plus check qubits, `2n`.
    pub n_cb: usize,
    pub n_g: usize,
    pub n_b: usize,
    pub n_pb: usize,
}

impl BlockCosts {
    pub fn new(n: usize, n_g: usize, n_b: usize) -> Self {
        let n_cb = 2 * n;
        BlockCosts { n_cb, n_g, n_b, n_pb: n_cb + 4 * n_g + 4 * n_b }
    }
}

/// Costs for family member `m`, with `n_pb` recomputed and checked against
/// the stored value.
pub fn table1_costs(m: u32) -> Result<BlockCosts> {
    table_costs(&code_table(), m)
}

pub fn table_costs(table: &[CodeRow], m: u32) -> Result<BlockCosts> {
    let row = table.iter().find(|r| r.m == m).ok_or(Error::UnknownCode(m))?;
    let costs = row.costs();
    if costs.n_pb != row.n_pb {
        return Err(Error::param("n_pb", format!("stored {} but components give {}", row.n_pb, costs.n_pb)));
    }
    Ok(costs)
}

/// A GB code with its check matrices and verified logical count.
#[derive(Clone, Debug)]
pub struct GbCode {
    pub l: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub hx: BitMatrix,
    pub hz: BitMatrix,
    pub k: usize,
    pub d_claimed: Option<usize>,
}

fn normalise(set: &[usize], l: usize, name: &'static str) -> Result<Vec<usize>> {
    let mut out: Vec<usize> = set.iter().map(|&x| x % l).collect();
    out.sort_unstable();
    let before = out.len();
    out.dedup();
    if out.len() != before {
        return Err(Error::param(name, format!("repeated element modulo l={l}")));
    }
    if out.is_empty() {
        return Err(Error::param(name, "empty set"));
    }
    Ok(out)
}

/// Builds the code for lift `l` and exponent sets `a`, `b`.
pub fn build_code(l: usize, a: &[usize], b: &[usize]) -> Result<GbCode> {
    if l == 0 {
        return Err(Error::param("l", "lift must be positive"));
    }
    let a = normalise(a, l, "A")?;
    let b = normalise(b, l, "B")?;
    let n = 2 * l;
    let mut hx = BitMatrix::zeros(l, n);
    let mut hz = BitMatrix::zeros(l, n);
    for j in 0..l {
        for &x in &a {
            hx.set(j, (j + x) % l, true);
            hz.set(j, l + (j + l - x) % l, true);
        }
        for &y in &b {
            hx.set(j, l + (j + y) % l, true);
            hz.set(j, (j + l - y) % l, true);
        }
    }
    if !hx.mul(&hz.transpose()).is_zero() {
        return Err(Error::CssViolation);
    }
    let k = n - hx.rank() - hz.rank();
    Ok(GbCode { l, a, b, hx, hz, k, d_claimed: None })
}

/// Builds family member `m` from a code table, attaching the claimed distance.
pub fn build_from_row(row: &CodeRow) -> Result<GbCode> {
    let mut code = build_code(row.l, &row.a, &row.b)?;
    code.d_claimed = Some(row.d);
    Ok(code)
}

pub fn build_table_code(m: u32) -> Result<GbCode> {
    let table = code_table();
    let row = table.iter().find(|r| r.m == m).ok_or(Error::UnknownCode(m))?;
    build_from_row(row)
}

/// `n - rank(hx) - rank(hz)`.
pub fn compute_k(code: &GbCode) -> usize {
    code.n() - code.hx.rank() - code.hz.rank()
}

impl GbCode {
    pub fn n(&self) -> usize {
        2 * self.l
    }

    pub fn d_t(&self) -> Option<usize> {
        self.d_claimed.map(|d| d + 2)
    }

    pub fn is_css(&self) -> bool {
        self.hx.mul(&self.hz.transpose()).is_zero()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.hx.rows().iter().chain(self.hz.rows()).map(BitVec::weight).collect()
    }

    pub fn column_weights(&self) -> (Vec<usize>, Vec<usize>) {
        let col = |h: &BitMatrix| h.transpose().rows().iter().map(BitVec::weight).collect();
        (col(&self.hx), col(&self.hz))
    }

    /// Cyclic shift by `sigma` within each sector.
    pub fn shift(&self, v: &BitVec, sigma: usize) -> BitVec {
        let l = self.l;
        BitVec::from_ones(
            2 * l,
            v.iter_ones().map(|i| {
                let (sector, pos) = (i / l, i % l);
                sector * l + (pos + sigma) % l
            }),
        )
    }

    /// True iff every shift maps the row space of both check matrices into
    /// itself.
    pub fn is_shift_invariant(&self) -> bool {
        [&self.hx, &self.hz].iter().all(|h| {
            let ech = h.echelon();
            (0..self.l).all(|sigma| h.rows().iter().all(|r| ech.contains(&self.shift(r, sigma))))
        })
    }

    /// Representatives of the logical Z operators: a basis of `ker(hx)`
    /// modulo `rowspace(hz)`.
    pub fn logical_z(&self) -> Vec<BitVec> {
        let mut span: Echelon = self.hz.echelon();
        self.hx.kernel().into_iter().filter(|v| span.insert(v)).collect()
    }
}

/// Result of a distance search over X-type logicals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceBound {
    /// Weight of the lightest nontrivial logical found.
    pub weight: usize,
    pub witness: BitVec,
    /// True when the search was exhaustive and the weight is the exact
    /// X distance.
    pub exact: bool,
    pub iterations: usize,
}

/// Computes which logical Z representatives anticommute with `v`.
struct Signer {
    reps: Vec<BitVec>,
}

impl Signer {
    fn new(code: &GbCode) -> Result<Self> {
        let reps = code.logical_z();
        if reps.len() > 64 {
            return Err(Error::param("k", "signature supports at most 64 logical qubits"));
        }
        Ok(Signer { reps })
    }

    fn sign(&self, v: &BitVec) -> u64 {
        self.reps.iter().enumerate().fold(0, |acc, (i, r)| acc | (u64::from(v.dot(r)) << i))
    }
}

fn xor_words(acc: &mut [u64], other: &[u64]) {
    for (a, b) in acc.iter_mut().zip(other) {
        *a ^= b;
    }
}

fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// Exact minimum weight of an X logical by Gray-code enumeration of
/// `ker(hz)`. Rejects kernels of dimension above [`MAX_ENUM_DIM`].
pub fn distance_exhaustive(code: &GbCode) -> Result<DistanceBound> {
    let basis = code.hz.kernel();
    let dim = basis.len();
    if dim > MAX_ENUM_DIM {
        return Err(Error::EnumerationTooLarge { dim, limit: MAX_ENUM_DIM });
    }
    let signer = Signer::new(code)?;
    let sigs: Vec<u64> = basis.iter().map(|b| signer.sign(b)).collect();
    let n = code.n();

    // Split the top `prefix` coordinates across workers.
    let prefix = dim.min(6);
    let low = dim - prefix;
    let best = (0u64..1 << prefix)
        .into_par_iter()
        .filter_map(|hi| {
            let mut cur = vec![0u64; basis.first().map_or(0, |b| b.words().len())];
            let mut sig = 0u64;
            for bit in 0..prefix {
                if hi >> bit & 1 == 1 {
                    xor_words(&mut cur, basis[low + bit].words());
                    sig ^= sigs[low + bit];
                }
            }
            let mut best: Option<(usize, u64)> = None;
            let mut consider = |cur: &[u64], sig: u64, gray: u64| {
                if sig != 0 {
                    let w = popcount(cur);
                    if best.is_none_or(|(bw, _)| w < bw) {
                        best = Some((w, gray));
                    }
                }
            };
            consider(&cur, sig, 0);
            for step in 1u64..1 << low {
                let i = step.trailing_zeros() as usize;
                xor_words(&mut cur, basis[i].words());
                sig ^= sigs[i];
                consider(&cur, sig, step ^ (step >> 1));
            }
            best.map(|(w, gray)| (w, hi, gray))
        })
        .min();
    let (weight, hi, gray) = best.ok_or_else(|| Error::param("code", "no logical operators (k = 0)"))?;
    let coords = (gray | hi << low) as usize;
    let mut witness = BitVec::zeros(n);
    for (i, b) in basis.iter().enumerate() {
        if coords >> i & 1 == 1 {
            witness.xor_assign(b);
        }
    }
    Ok(DistanceBound { weight, witness, exact: true, iterations: 1 << dim })
}

/// Options for the randomized search.
#[derive(Clone, Copy, Debug)]
pub struct IsdOptions {
    pub max_iterations: usize,
    /// Stop once a logical of at most this weight is found.
    pub target: Option<usize>,
    /// Also test sums of pairs of reduced generator rows.
    pub pairs: bool,
    pub seed: u64,
}

impl Default for IsdOptions {
    fn default() -> Self {
        IsdOptions { max_iterations: 100_000, target: None, pairs: true, seed: 0 }
    }
}

const ISD_BATCH: usize = 256;

/// Information-set style upper bound on the X distance. Each iteration puts
/// a generator of `ker(hz)` in reduced echelon form on a random column order
/// and inspects its rows (and optionally pairwise sums). Deterministic in
/// `opts.seed` regardless of the worker count.
pub fn distance_randomized(code: &GbCode, opts: IsdOptions) -> Result<DistanceBound> {
    let basis = code.hz.kernel();
    let n = code.n();
    let gen = BitMatrix::from_rows(n, basis);
    let signer = Signer::new(code)?;
    if signer.reps.is_empty() {
        return Err(Error::param("code", "no logical operators (k = 0)"));
    }

    let run = |iter: usize| -> Option<(usize, BitVec)> {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (iter as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let rows = gen.echelon_with_order(&order).rows;
        let sigs: Vec<u64> = rows.iter().map(|r| signer.sign(r)).collect();
        let mut best: Option<(usize, BitVec)> = None;
        let mut offer = |w: usize, make: &dyn Fn() -> BitVec| {
            if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                best = Some((w, make()));
            }
        };
        for (i, r) in rows.iter().enumerate() {
            if sigs[i] != 0 {
                offer(r.weight(), &|| r.clone());
            }
        }
        if opts.pairs {
            for i in 0..rows.len() {
                for j in i + 1..rows.len() {
                    if sigs[i] != sigs[j] {
                        let w: usize = rows[i]
                            .words()
                            .iter()
                            .zip(rows[j].words())
                            .map(|(a, b)| (a ^ b).count_ones() as usize)
                            .sum();
                        offer(w, &|| rows[i].xor(&rows[j]));
                    }
                }
            }
        }
        best
    };

    let mut best: Option<(usize, BitVec)> = None;
    let mut done = 0;
    while done < opts.max_iterations {
        let batch = ISD_BATCH.min(opts.max_iterations - done);
        let found = (done..done + batch)
            .into_par_iter()
            .filter_map(|it| run(it).map(|(w, v)| (w, it, v)))
            .min_by_key(|(w, it, _)| (*w, *it));
        done += batch;
        if let Some((w, _, v)) = found {
            if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                best = Some((w, v));
            }
        }
        if let (Some((w, _)), Some(t)) = (&best, opts.target) {
            if *w <= t {
                break;
            }
        }
    }
    let (weight, witness) = best.ok_or_else(|| Error::param("code", "no logical found"))?;
    Ok(DistanceBound { weight, witness, exact: false, iterations: done })
}

/// Distance search method.
#[derive(Clone, Copy, Debug)]
pub enum DistanceMethod {
    Exhaustive,
    Randomized(IsdOptions),
}

pub fn distance_upper_bound(code: &GbCode, method: DistanceMethod) -> Result<DistanceBound> {
    match method {
        DistanceMethod::Exhaustive => distance_exhaustive(code),
        DistanceMethod::Randomized(opts) => distance_randomized(code, opts),
    }
}

/// True iff `v` is an undetected, nontrivial X-type error.
pub fn is_x_logical(code: &GbCode, v: &BitVec) -> bool {
    code.hz.mul_vec(v).is_zero() && !code.hx.echelon().contains(v)
}
