//! Mismatch decoder: sequential passes on `V_0`, a two-step parallel
//! procedure when stalled, and reconstruction of the error estimate.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::VertexClass;
use crate::error::QTannerError;
use crate::gf2::{solve, BitVector};
use crate::local_codes::{DualTensorCode, LinearCode};
use crate::qtanner::QuantumTannerCode;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct DecoderConfig {
    /// Robustness exponent: `w = Δ^{3/2 - ε}`.
    pub epsilon: f64,
    /// Puncturing exponent; `1 - ε` when unset.
    pub gamma: Option<f64>,
    /// Cap on parallel rounds; `10·(1 + |Z|)` when unset.
    pub max_rounds: Option<usize>,
    /// Also run the sequential pass on `V_1` vertices.
    pub sequential_on_v1: bool,
}

impl Default for DecoderConfig {
    fn default() -> Self {
        Self {
            epsilon: 0.25,
            gamma: None,
            max_rounds: None,
            sequential_on_v1: false,
        }
    }
}

impl DecoderConfig {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.epsilon > 0.0 && self.epsilon < 0.5) {
            return Err(format!("epsilon must lie in (0, 1/2), got {}", self.epsilon));
        }
        if let Some(g) = self.gamma {
            if !(0.0..=1.0).contains(&g) {
                return Err(format!("gamma must lie in [0, 1], got {g}"));
            }
        }
        Ok(())
    }

    pub fn gamma(&self) -> f64 {
        self.gamma.unwrap_or(1.0 - self.epsilon)
    }

    /// `Δ^{3/2 - ε}`.
    pub fn w(&self, delta: usize) -> f64 {
        (delta as f64).powf(1.5 - self.epsilon)
    }

    /// `⌊Δ^γ / 2⌋`, the largest number of rows or columns set aside.
    pub fn subset_cap(&self, delta: usize) -> usize {
        ((delta as f64).powf(self.gamma()) / 2.0 + 1e-9).floor() as usize
    }

    /// Whether `w/2 < 1`, in which case the first parallel step only runs the
    /// single row/column fixer.
    pub fn degenerate(&self, delta: usize) -> bool {
        self.w(delta) / 2.0 < 1.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Phase {
    Seq,
    Par1,
    Par2,
}

/// One applied local update.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub round: usize,
    pub phase: Phase,
    pub vertex: usize,
    pub weight_before: usize,
    pub weight_after: usize,
    /// Squares flipped in `Ẑ`.
    pub squares: Vec<usize>,
}

/// Running state: `Ẑ` together with `Ĉ_0, R̂_0, Ĉ_1, R̂_1`.
#[derive(Clone, Debug)]
pub struct MismatchState {
    z_initial: BitVector,
    zhat: BitVector,
    zhat_weight: usize,
    chat0: BitVector,
    rhat0: BitVector,
    chat1: BitVector,
    rhat1: BitVector,
    /// Minimum-weight local error per `V_1` slot (local coordinates).
    eps: Vec<BitVector>,
    /// `|Ẑ|_{Q(v)}|` per vertex id.
    local_weight: Vec<usize>,
    active: BTreeSet<usize>,
    /// Accumulated local column and row parts per vertex, for the norm.
    acc_c: Vec<BitVector>,
    acc_r: Vec<BitVector>,
    norm: usize,
    step_log: Vec<StepRecord>,
}

impl MismatchState {
    pub fn zhat(&self) -> &BitVector {
        &self.zhat
    }

    pub fn zhat_weight(&self) -> usize {
        self.zhat_weight
    }

    pub fn initial_mismatch(&self) -> &BitVector {
        &self.z_initial
    }

    /// `(Ĉ_0, R̂_0, Ĉ_1, R̂_1)`.
    pub fn decomposition(&self) -> [&BitVector; 4] {
        [&self.chat0, &self.rhat0, &self.chat1, &self.rhat1]
    }

    pub fn eps(&self) -> &[BitVector] {
        &self.eps
    }

    /// Vertices whose local view of `Ẑ` is nonzero.
    pub fn active(&self) -> &BTreeSet<usize> {
        &self.active
    }

    pub fn local_weight(&self, v: usize) -> usize {
        self.local_weight[v]
    }

    pub fn step_log(&self) -> &[StepRecord] {
        &self.step_log
    }

    /// Incrementally tracked `‖𝒵̂‖`.
    pub fn norm(&self) -> usize {
        self.norm
    }

    /// Local column part accumulated at vertex `v`.
    pub fn local_column_part(&self, v: usize) -> &BitVector {
        &self.acc_c[v]
    }

    pub fn local_row_part(&self, v: usize) -> &BitVector {
        &self.acc_r[v]
    }

    /// `Ẑ = Z ⊕ Ĉ_0 ⊕ R̂_0 ⊕ Ĉ_1 ⊕ R̂_1`.
    pub fn bookkeeping_holds(&self) -> bool {
        let mut total = self.z_initial.clone();
        for part in self.decomposition() {
            total ^= part;
        }
        total == self.zhat
    }

    /// Step log as JSON lines.
    pub fn step_log_jsonl(&self) -> String {
        let mut out = String::new();
        for rec in &self.step_log {
            out.push_str(&serde_json::to_string(rec).expect("step records serialize"));
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub zhat_weight: usize,
    /// Active vertices per class, in the order 00, 01, 10, 11.
    pub active_by_class: [usize; 4],
    pub norm: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecodeOutcome {
    pub ehat: BitVector,
    pub converged: bool,
    pub sequential_steps: usize,
    pub parallel_rounds: usize,
    pub initial_mismatch_weight: usize,
    pub final_mismatch_weight: usize,
}

/// Decoder bound to one code; holds caches shared by all calls.
pub struct Decoder<'a> {
    q: &'a QuantumTannerCode,
    cfg: DecoderConfig,
    delta: usize,
    order: usize,
    codewords_a: Vec<u64>,
    codewords_b: Vec<u64>,
    punctured: RwLock<HashMap<(u64, u64), Arc<DualTensorCode>>>,
}

/// A local update at one vertex, in local coordinates.
struct LocalUpdate {
    vertex: usize,
    c: BitVector,
    r: BitVector,
}

fn codeword_masks(code: &LinearCode) -> Vec<u64> {
    let rows: Vec<u64> = code.generator().rows().iter().map(BitVector::to_u64).collect();
    let mut out = vec![0u64];
    let mut word = 0u64;
    for step in 1u64..(1u64 << rows.len()) {
        word ^= rows[step.trailing_zeros() as usize];
        out.push(word);
    }
    out
}

fn mask_of(keep: &[usize]) -> u64 {
    keep.iter().fold(0, |m, &i| m | 1 << i)
}

impl<'a> Decoder<'a> {
    pub fn new(q: &'a QuantumTannerCode, cfg: DecoderConfig) -> Result<Self, String> {
        cfg.validate()?;
        let delta = q.complex().delta();
        if delta > 16 {
            return Err(format!("local views of Δ = {delta} are too large for the decoder"));
        }
        Ok(Self {
            q,
            cfg,
            delta,
            order: q.complex().group().order(),
            codewords_a: codeword_masks(q.code_a()),
            codewords_b: codeword_masks(q.code_b()),
            punctured: RwLock::new(HashMap::new()),
        })
    }

    pub fn code(&self) -> &'a QuantumTannerCode {
        self.q
    }

    pub fn config(&self) -> &DecoderConfig {
        &self.cfg
    }

    fn v1_vertex(&self, slot: usize) -> usize {
        self.order + slot
    }

    fn is_v0(&self, v: usize) -> bool {
        v < self.order || v >= 3 * self.order
    }

    fn local(&self, z: &BitVector, v: usize) -> BitVector {
        let view = self.q.complex().local_view(v);
        BitVector::from_indices(view.len(), (0..view.len()).filter(|&i| z.get(view[i])))
    }

    /// Builds `Ẑ = Σ_{v ∈ V_1} ε_v` from an X-type syndrome (`hx · e`).
    pub fn compute_mismatch(&self, syndrome: &BitVector) -> Result<MismatchState, QTannerError> {
        let q = self.q;
        let r = q.local_syndrome_bits();
        let expected = 2 * self.order * r;
        if syndrome.len() != expected {
            return Err(QTannerError::SyndromeLength {
                expected,
                found: syndrome.len(),
            });
        }
        let dt = q.dual_tensor();
        let n = q.n();
        let mut zhat = BitVector::zeros(n);
        let mut eps = Vec::with_capacity(2 * self.order);
        for slot in 0..2 * self.order {
            let bits = (0..r).fold(0u32, |acc, t| acc | (syndrome.get(slot * r + t) as u32) << t);
            let leader = dt.leader(bits).clone();
            let view = q.complex().local_view(self.v1_vertex(slot));
            for i in leader.iter_ones() {
                zhat.flip(view[i]);
            }
            eps.push(leader);
        }
        let mut local_weight = vec![0; 4 * self.order];
        for sq in zhat.iter_ones() {
            for class in VertexClass::ALL {
                local_weight[q.complex().corner_vertex(sq, class)] += 1;
            }
        }
        let active = (0..local_weight.len()).filter(|&v| local_weight[v] > 0).collect();
        let d2 = self.delta * self.delta;
        Ok(MismatchState {
            z_initial: zhat.clone(),
            zhat_weight: zhat.weight(),
            zhat,
            chat0: BitVector::zeros(n),
            rhat0: BitVector::zeros(n),
            chat1: BitVector::zeros(n),
            rhat1: BitVector::zeros(n),
            eps,
            local_weight,
            active,
            acc_c: vec![BitVector::zeros(d2); 4 * self.order],
            acc_r: vec![BitVector::zeros(d2); 4 * self.order],
            norm: 0,
            step_log: Vec::new(),
        })
    }

    /// State with an arbitrary `Ẑ` and no local errors; for constructing
    /// fixtures directly in mismatch space.
    pub fn state_from_mismatch(&self, z: BitVector) -> MismatchState {
        let mut state = self
            .compute_mismatch(&BitVector::zeros(2 * self.order * self.q.local_syndrome_bits()))
            .expect("zero syndrome has the right length");
        for sq in z.iter_ones() {
            self.flip_square(&mut state, sq);
        }
        state.z_initial = z;
        state
    }

    fn flip_square(&self, state: &mut MismatchState, sq: usize) {
        let now_set = !state.zhat.get(sq);
        state.zhat.flip(sq);
        if now_set {
            state.zhat_weight += 1;
        } else {
            state.zhat_weight -= 1;
        }
        for class in VertexClass::ALL {
            let v = self.q.complex().corner_vertex(sq, class);
            if now_set {
                state.local_weight[v] += 1;
                if state.local_weight[v] == 1 {
                    state.active.insert(v);
                }
            } else {
                state.local_weight[v] -= 1;
                if state.local_weight[v] == 0 {
                    state.active.remove(&v);
                }
            }
        }
    }

    fn nonzero_lines(&self, x: &BitVector, columns: bool) -> usize {
        let d = self.delta;
        let mut seen = vec![false; d];
        for i in x.iter_ones() {
            seen[if columns { i % d } else { i / d }] = true;
        }
        seen.into_iter().filter(|&s| s).count()
    }

    /// Applies `c + r` at `v` and routes `c` to `Ĉ_j`, `r` to `R̂_i` for
    /// `v ∈ V_ij`. Returns the flipped squares.
    fn apply(&self, state: &mut MismatchState, update: &LocalUpdate, round: usize, phase: Phase) {
        let LocalUpdate { vertex: v, c, r } = update;
        let view = self.q.complex().local_view(*v);
        let class = self.q.complex().vertex(*v).class;
        let (chat, rhat) = match class {
            VertexClass::V00 => (&mut state.chat0, &mut state.rhat0),
            VertexClass::V01 => (&mut state.chat1, &mut state.rhat0),
            VertexClass::V10 => (&mut state.chat0, &mut state.rhat1),
            VertexClass::V11 => (&mut state.chat1, &mut state.rhat1),
        };
        for i in c.iter_ones() {
            chat.flip(view[i]);
        }
        for i in r.iter_ones() {
            rhat.flip(view[i]);
        }
        let before = state.zhat_weight;
        let combined = c ^ r;
        let squares: Vec<usize> = combined.iter_ones().map(|i| view[i]).collect();
        for &sq in &squares {
            self.flip_square(state, sq);
        }
        let old = self.nonzero_lines(&state.acc_c[*v], true) + self.nonzero_lines(&state.acc_r[*v], false);
        state.acc_c[*v] ^= c;
        state.acc_r[*v] ^= r;
        let new = self.nonzero_lines(&state.acc_c[*v], true) + self.nonzero_lines(&state.acc_r[*v], false);
        state.norm = state.norm + new - old;
        state.step_log.push(StepRecord {
            round,
            phase,
            vertex: *v,
            weight_before: before,
            weight_after: state.zhat_weight,
            squares,
        });
        debug_assert!(state.bookkeeping_holds());
    }

    /// Best dual-tensor update at `v` for the local view `x`, if it lowers the weight.
    fn best_local(&self, v: usize, x: &BitVector) -> Option<LocalUpdate> {
        let dt = self.q.dual_tensor();
        let eps = dt.leader(dt.syndrome(x));
        if eps.weight() >= x.weight() {
            return None;
        }
        let split = dt.split(&(x ^ eps)).expect("x + leader is a dual tensor codeword");
        Some(LocalUpdate {
            vertex: v,
            c: split.c,
            r: split.r,
        })
    }

    /// Repeatedly applies the smallest dirty vertex's best update until no
    /// vertex of `V_0` (and `V_1` when configured) can lower `|Ẑ|`.
    pub fn sequential_pass(&self, state: &mut MismatchState, round: usize) -> bool {
        let eligible = |v: usize| self.cfg.sequential_on_v1 || self.is_v0(v);
        let mut dirty: BTreeSet<usize> = state.active.iter().copied().filter(|&v| eligible(v)).collect();
        let mut progressed = false;
        while let Some(v) = dirty.pop_first() {
            let x = self.local(&state.zhat, v);
            let Some(update) = self.best_local(v, &x) else {
                continue;
            };
            self.apply(state, &update, round, Phase::Seq);
            progressed = true;
            let view = self.q.complex().local_view(v);
            for i in (&update.c ^ &update.r).iter_ones() {
                for class in VertexClass::ALL {
                    let u = self.q.complex().corner_vertex(view[i], class);
                    if eligible(u) && state.local_weight[u] > 0 {
                        dirty.insert(u);
                    }
                }
            }
        }
        progressed
    }

    fn punctured_code(&self, rows: &[usize], cols: &[usize]) -> Arc<DualTensorCode> {
        let key = (mask_of(rows), mask_of(cols));
        if let Some(dt) = self.punctured.read().expect("cache lock").get(&key) {
            return dt.clone();
        }
        let dt = Arc::new(
            DualTensorCode::new(&self.q.code_a().puncture(rows), &self.q.code_b().puncture(cols))
                .expect("punctured codes have no more syndrome bits than the full code"),
        );
        self.punctured.write().expect("cache lock").entry(key).or_insert(dt).clone()
    }

    /// Lifts a codeword of `C|_keep` to a codeword of `C`.
    fn lift(code: &LinearCode, keep: &[usize], word: &BitVector) -> BitVector {
        let restricted = code.generator().select_columns(keep);
        let coeffs = solve(&restricted.transpose(), word).expect("word lies in the punctured code");
        code.encode(&coeffs)
    }

    /// Search over removing the heaviest `j` rows and `k` columns.
    fn tweaked_update(&self, x: &BitVector) -> Option<(BitVector, BitVector)> {
        let d = self.delta;
        let w = self.cfg.w(d);
        let cap = self.cfg.subset_cap(d);
        let row_weight = |a: usize| (0..d).filter(|&b| x.get(a * d + b)).count();
        let col_weight = |b: usize| (0..d).filter(|&a| x.get(a * d + b)).count();
        let mut rows_by_weight: Vec<usize> = (0..d).collect();
        rows_by_weight.sort_by_key(|&a| (std::cmp::Reverse(row_weight(a)), a));
        let mut cols_by_weight: Vec<usize> = (0..d).collect();
        cols_by_weight.sort_by_key(|&b| (std::cmp::Reverse(col_weight(b)), b));

        for j in 0..=cap.min(d.saturating_sub(1)) {
            for k in 0..=cap.min(d.saturating_sub(1)) {
                let mut a0: Vec<usize> = rows_by_weight[j..].to_vec();
                a0.sort_unstable();
                let mut b0: Vec<usize> = cols_by_weight[k..].to_vec();
                b0.sort_unstable();
                let coords: Vec<usize> = a0.iter().flat_map(|&a| b0.iter().map(move |&b| a * d + b)).collect();
                let x0 = x.select(&coords);
                if (x0.weight() as f64) <= w / 2.0 {
                    continue;
                }
                let pdt = self.punctured_code(&a0, &b0);
                let eps0 = pdt.leader(pdt.syndrome(&x0));
                let y = &x0 ^ eps0;
                if !((y.weight() as f64) > w && (eps0.weight() as f64) < w / 2.0) {
                    continue;
                }
                let split = pdt.split(&y).expect("x0 + leader is a codeword");
                let (nb, na) = (b0.len(), a0.len());
                let mut c = BitVector::zeros(d * d);
                for (bi, &b) in b0.iter().enumerate() {
                    let col = BitVector::from_indices(na, (0..na).filter(|&ai| split.c.get(ai * nb + bi)));
                    if col.is_zero() {
                        continue;
                    }
                    let full = Self::lift(self.q.code_a(), &a0, &col);
                    for a in full.iter_ones() {
                        c.flip(a * d + b);
                    }
                }
                let mut r = BitVector::zeros(d * d);
                for (ai, &a) in a0.iter().enumerate() {
                    let row = BitVector::from_indices(nb, (0..nb).filter(|&bi| split.r.get(ai * nb + bi)));
                    if row.is_zero() {
                        continue;
                    }
                    let full = Self::lift(self.q.code_b(), &b0, &row);
                    for b in full.iter_ones() {
                        r.flip(a * d + b);
                    }
                }
                return Some((c, r));
            }
        }
        None
    }

    /// Single-column (`C_A`) and single-row (`C_B`) improvements on a local
    /// view until none is left; returns the column and row parts added.
    fn line_fixer(&self, x: &mut BitVector) -> (BitVector, BitVector) {
        let d = self.delta;
        let mut c = BitVector::zeros(d * d);
        let mut r = BitVector::zeros(d * d);
        loop {
            let mut improved = false;
            for b in 0..d {
                let col = (0..d).fold(0u64, |m, a| m | (x.get(a * d + b) as u64) << a);
                if let Some(cw) = best_line(col, &self.codewords_a) {
                    for a in (0..d).filter(|&a| cw >> a & 1 == 1) {
                        x.flip(a * d + b);
                        c.flip(a * d + b);
                    }
                    improved = true;
                }
            }
            for a in 0..d {
                let row = (0..d).fold(0u64, |m, b| m | (x.get(a * d + b) as u64) << b);
                if let Some(cw) = best_line(row, &self.codewords_b) {
                    for b in (0..d).filter(|&b| cw >> b & 1 == 1) {
                        x.flip(a * d + b);
                        r.flip(a * d + b);
                    }
                    improved = true;
                }
            }
            if !improved {
                return (c, r);
            }
        }
    }

    /// For each active `V_1` vertex against one snapshot of `Ẑ`: the
    /// punctured-view update when its criteria hold, then the line fixer.
    /// All updates are XOR-applied afterwards.
    pub fn first_parallel_step(&self, state: &mut MismatchState, round: usize) {
        let degenerate = self.cfg.degenerate(self.delta);
        let snapshot = state.zhat.clone();
        let candidates: Vec<usize> = state.active.iter().copied().filter(|&v| !self.is_v0(v)).collect();
        let updates: Vec<LocalUpdate> = candidates
            .par_iter()
            .filter_map(|&v| {
                let mut x = self.local(&snapshot, v);
                let (mut c, mut r) = if degenerate {
                    (BitVector::zeros(x.len()), BitVector::zeros(x.len()))
                } else {
                    let (c, r) = self.tweaked_update(&x)?;
                    x ^= &c;
                    x ^= &r;
                    (c, r)
                };
                let (fc, fr) = self.line_fixer(&mut x);
                c ^= &fc;
                r ^= &fr;
                (!(&c ^ &r).is_zero()).then_some(LocalUpdate { vertex: v, c, r })
            })
            .collect();
        for u in &updates {
            self.apply(state, u, round, Phase::Par1);
        }
    }

    /// Every `V_0` vertex picks its best local improvement against one
    /// snapshot; all are applied together.
    pub fn second_parallel_step(&self, state: &mut MismatchState, round: usize) {
        let snapshot = state.zhat.clone();
        let candidates: Vec<usize> = state.active.iter().copied().filter(|&v| self.is_v0(v)).collect();
        let updates: Vec<LocalUpdate> = candidates
            .par_iter()
            .filter_map(|&v| self.best_local(v, &self.local(&snapshot, v)))
            .collect();
        for u in &updates {
            self.apply(state, u, round, Phase::Par2);
        }
    }

    /// `ê = Σ_{v ∈ V_01} ε_v + R̂_0 + Ĉ_1`.
    pub fn reconstruct(&self, state: &MismatchState) -> BitVector {
        let mut ehat = &state.rhat0 ^ &state.chat1;
        for g in 0..self.order {
            let view = self.q.complex().local_view(self.v1_vertex(g));
            for i in state.eps[g].iter_ones() {
                ehat.flip(view[i]);
            }
        }
        ehat
    }

    pub fn decode(&self, syndrome: &BitVector) -> Result<(DecodeOutcome, MismatchState), QTannerError> {
        let mut state = self.compute_mismatch(syndrome)?;
        let initial = state.zhat_weight;
        let max_rounds = self.cfg.max_rounds.unwrap_or(10 * (1 + initial));
        let mut rounds = 0;
        let converged = loop {
            self.sequential_pass(&mut state, rounds);
            if state.zhat_weight == 0 {
                break true;
            }
            if rounds >= max_rounds {
                break false;
            }
            let before = state.zhat.clone();
            rounds += 1;
            self.first_parallel_step(&mut state, rounds);
            self.second_parallel_step(&mut state, rounds);
            if state.zhat == before {
                break false;
            }
        };
        let outcome = DecodeOutcome {
            ehat: self.reconstruct(&state),
            converged,
            sequential_steps: state.step_log.iter().filter(|s| s.phase == Phase::Seq).count(),
            parallel_rounds: rounds,
            initial_mismatch_weight: initial,
            final_mismatch_weight: state.zhat_weight,
        };
        Ok((outcome, state))
    }

    pub fn diagnostics(&self, state: &MismatchState) -> Diagnostics {
        let mut active_by_class = [0; 4];
        for &v in &state.active {
            active_by_class[v / self.order] += 1;
        }
        Diagnostics {
            zhat_weight: state.zhat_weight,
            active_by_class,
            norm: state.norm,
        }
    }

    /// `‖𝒵̂‖` recomputed from the accumulated local parts.
    pub fn recompute_norm(&self, state: &MismatchState) -> usize {
        (0..state.acc_c.len())
            .map(|v| self.nonzero_lines(&state.acc_c[v], true) + self.nonzero_lines(&state.acc_r[v], false))
            .sum()
    }
}

/// Codeword `cw` with `|line + cw| < |line|` minimal, first in enumeration order.
fn best_line(line: u64, codewords: &[u64]) -> Option<u64> {
    let current = line.count_ones();
    let (best, cw) = codewords
        .iter()
        .map(|&cw| ((line ^ cw).count_ones(), cw))
        .min_by_key(|&(w, _)| w)?;
    (best < current).then_some(cw)
}

/// One-shot decode with a fresh decoder.
pub fn decode(
    q: &QuantumTannerCode,
    syndrome: &BitVector,
    cfg: DecoderConfig,
) -> Result<DecodeOutcome, QTannerError> {
    let decoder = Decoder::new(q, cfg).map_err(|m| QTannerError::Code(crate::error::CodeError::InvalidParameters(m)))?;
    Ok(decoder.decode(syndrome)?.0)
}
