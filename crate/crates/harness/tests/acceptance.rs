//! One pass/fail line per acceptance criterion. Exits nonzero if any fails.

use std::collections::{BTreeSet, HashMap};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

use itertools::Itertools;
use qtanner_core::complex::{check_mixing, Graph};
use qtanner_core::decoder::{Decoder, DecoderConfig};
use qtanner_core::gf2::{kernel_basis, rank, BitMatrix, BitVector};
use qtanner_core::group::GroupSpec;
use qtanner_core::lifted::{lp_decode_with, qtanner_from_lp, reference_lp_instance, LiftedProductCode, LpInstance};
use qtanner_core::local_codes::{
    check_puncture_resistance, check_robustness, coset_leader_decode, DualTensorCode, LinearCode, RobustnessMode,
};
use qtanner_core::qtanner::{exhaustive_logical_search, QuantumTannerCode};
use qtanner_harness::bench::{bench_linear_scaling, BenchFamily};
use qtanner_harness::config::{CodeSource, ErrorModel, ExperimentConfig, InstanceSpec};
use qtanner_harness::experiment::run_on;
use qtanner_harness::instance::{build_instance, cyclic_spec, reference_spec};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

// ---------------------------------------------------------------- instances

fn qt_specs() -> Vec<(String, InstanceSpec)> {
    let mut specs: Vec<(String, InstanceSpec)> =
        [6, 8, 10, 12, 16, 24].iter().map(|&n| (format!("C{n} rep3/parity3"), cyclic_spec(n))).collect();
    let mut swapped = cyclic_spec(6);
    swapped.codes = CodeSource::Named {
        ca: "parity:3".into(),
        cb: "repetition:3".into(),
    };
    specs.push(("C6 parity3/rep3".into(), swapped));
    specs.push((
        "C2xC6 sampled [4,2]".into(),
        InstanceSpec {
            group: "C2xC6".parse().unwrap(),
            a: vec![1, 5, 6, 9],
            b: vec![1, 5, 6, 9],
            codes: CodeSource::Sampled {
                rho: 0.5,
                delta_target: 0.5,
                seed: 9,
                budget: 10_000,
            },
        },
    ));
    specs
}

fn lp_specs() -> Vec<(String, LpInstance)> {
    let mut specs = vec![("LP C6".to_string(), reference_lp_instance())];
    for n in [8, 10] {
        let mut lp = reference_lp_instance();
        lp.group = GroupSpec::Cyclic(n);
        lp.a = vec![1, n / 2, n - 1];
        lp.b = vec![1, n / 2, n - 1];
        specs.push((format!("LP C{n}"), lp));
    }
    specs
}

fn reference() -> QuantumTannerCode {
    build_instance(&reference_spec(), Path::new(".")).unwrap()
}

// ------------------------------------------------------------------ oracles

/// `row(H) = ker(H)^⊥`: membership by orthogonality to a kernel basis.
struct RowSpaceOracle(Vec<BitVector>);

impl RowSpaceOracle {
    fn new(h: &BitMatrix) -> Self {
        Self(kernel_basis(h))
    }

    fn contains(&self, v: &BitVector) -> bool {
        self.0.iter().all(|k| !k.dot(v))
    }
}

fn dense_product_is_zero(a: &BitMatrix, b: &BitMatrix) -> bool {
    a.rows().iter().all(|ra| b.rows().iter().all(|rb| !ra.dot(rb)))
}

/// Every subspace of `F_2^len` as a membership mask over the `2^len` words.
fn all_subspaces(len: usize) -> Vec<u32> {
    let words = 1u32 << len;
    let mut seen = BTreeSet::from([1u32]);
    let mut frontier = vec![1u32];
    while let Some(s) = frontier.pop() {
        for v in 0..words {
            if s >> v & 1 == 1 {
                continue;
            }
            let mut t = s;
            for u in 0..words {
                if s >> u & 1 == 1 {
                    t |= 1 << (u ^ v);
                }
            }
            if seen.insert(t) {
                frontier.push(t);
            }
        }
    }
    seen.into_iter().collect()
}

/// One subspace per orbit under coordinate permutations.
fn canonical_subspaces(len: usize) -> Vec<Vec<u32>> {
    let permute = |w: u32, p: &[usize]| (0..len).filter(|&i| w >> i & 1 == 1).map(|i| 1u32 << p[i]).sum::<u32>();
    let mut reps = BTreeSet::new();
    for s in all_subspaces(len) {
        let members: Vec<u32> = (0..1u32 << len).filter(|&w| s >> w & 1 == 1).collect();
        let canon = (0..len)
            .permutations(len)
            .map(|p| members.iter().map(|&w| 1u32 << permute(w, &p)).sum::<u32>())
            .min()
            .unwrap();
        reps.insert(canon);
    }
    reps.into_iter()
        .map(|m| (0..1u32 << len).filter(|&w| m >> w & 1 == 1).collect())
        .collect()
}

fn basis_of(words: &[u32]) -> Vec<u32> {
    let mut basis: Vec<u32> = Vec::new();
    for &w in words {
        let mut r = w;
        for &b in &basis {
            r = r.min(r ^ b);
        }
        if r != 0 {
            basis.push(r);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

fn dual_words(words: &[u32], len: usize) -> Vec<u32> {
    (0..1u32 << len).filter(|&y| words.iter().all(|&c| (y & c).count_ones() % 2 == 0)).collect()
}

fn to_code(words: &[u32], len: usize) -> LinearCode {
    let basis = basis_of(words);
    if basis.is_empty() {
        return LinearCode::zero(len);
    }
    let rows = basis
        .iter()
        .map(|&b| BitVector::from_indices(len, (0..len).filter(|&i| b >> i & 1 == 1)))
        .collect();
    LinearCode::from_generator(&BitMatrix::from_rows(rows, len))
}

fn min_weight(words: &[u32]) -> Option<usize> {
    words.iter().filter(|&&w| w != 0).map(|w| w.count_ones() as usize).min()
}

/// Brute-force view of `C_A ⊗ F^B + F^A ⊗ C_B` on `la × lb`, coordinate `a·lb + b`.
struct BruteDualTensor {
    la: usize,
    lb: usize,
    /// Syndrome contribution of each coordinate under `h_A ⊗ h_B`.
    unit: Vec<u32>,
    d_a: Option<usize>,
    d_b: Option<usize>,
}

impl BruteDualTensor {
    fn new(words_a: &[u32], la: usize, words_b: &[u32], lb: usize) -> Self {
        let ha = basis_of(&dual_words(words_a, la));
        let hb = basis_of(&dual_words(words_b, lb));
        let mut unit = vec![0u32; la * lb];
        for a in 0..la {
            for b in 0..lb {
                for (i, &ra) in ha.iter().enumerate() {
                    for (j, &rb) in hb.iter().enumerate() {
                        if ra >> a & 1 == 1 && rb >> b & 1 == 1 {
                            unit[a * lb + b] |= 1 << (i * hb.len() + j);
                        }
                    }
                }
            }
        }
        Self {
            la,
            lb,
            unit,
            d_a: min_weight(words_a),
            d_b: min_weight(words_b),
        }
    }

    fn syndrome(&self, x: &BitVector) -> u32 {
        x.iter_ones().fold(0, |s, i| s ^ self.unit[i])
    }

    /// Calls `f(word, syndrome)` for every word, in Gray-code order.
    fn for_each_word(&self, mut f: impl FnMut(u64, u32)) {
        let n = self.la * self.lb;
        let (mut word, mut syn) = (0u64, 0u32);
        f(word, syn);
        for step in 1u64..(1 << n) {
            let bit = step.trailing_zeros() as usize;
            word ^= 1 << bit;
            syn ^= self.unit[bit];
            f(word, syn);
        }
    }

    fn coset_minima(&self) -> HashMap<u32, usize> {
        let mut best = HashMap::new();
        self.for_each_word(|w, s| {
            let e = best.entry(s).or_insert(usize::MAX);
            *e = (*e).min(w.count_ones() as usize);
        });
        best
    }

    fn covered(&self, x: u64) -> bool {
        let wt = x.count_ones() as usize;
        let max_rows = self.d_b.map_or(0, |d| wt / d);
        let max_cols = self.d_a.map_or(0, |d| wt / d);
        (0u32..1 << self.la).filter(|r| r.count_ones() as usize <= max_rows).any(|rows| {
            let mut cols = 0u32;
            for i in 0..self.la * self.lb {
                if x >> i & 1 == 1 && rows >> (i / self.lb) & 1 == 0 {
                    cols |= 1 << (i % self.lb);
                }
            }
            cols.count_ones() as usize <= max_cols
        })
    }

    /// Least weight of a nonzero codeword with no admissible row/column cover.
    fn uncovered_min(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        self.for_each_word(|w, s| {
            if s == 0 && w != 0 && best.is_none_or(|b| (w.count_ones() as usize) < b) && !self.covered(w) {
                best = Some(w.count_ones() as usize);
            }
        });
        best
    }
}

fn project(words: &[u32], keep: &[usize]) -> Vec<u32> {
    words
        .iter()
        .map(|&w| keep.iter().enumerate().filter(|(_, &k)| w >> k & 1 == 1).map(|(i, _)| 1u32 << i).sum())
        .collect::<BTreeSet<u32>>()
        .into_iter()
        .collect()
}

// ---------------------------------------------------------------- criteria

fn c1_css() -> Verdict {
    let mut notes = Vec::new();
    let mut pass = true;
    for (name, spec) in qt_specs() {
        let start = Instant::now();
        let q = build_instance(&spec, Path::new(".")).unwrap();
        let ok = dense_product_is_zero(q.hx_dense(), q.hz_dense());
        let ms = start.elapsed().as_secs_f64() * 1e3;
        pass &= ok && ms < 1000.0;
        notes.push(format!("{name}: {ms:.0}ms"));
    }
    for (name, spec) in lp_specs() {
        let start = Instant::now();
        let lp = spec.build().unwrap();
        let ok = dense_product_is_zero(lp.hx(), lp.hz());
        let ms = start.elapsed().as_secs_f64() * 1e3;
        pass &= ok && ms < 1000.0;
        notes.push(format!("{name}: {ms:.0}ms"));
    }
    verdict(pass, format!("{} instances, hx·hzᵀ = 0 [{}]", notes.len(), notes.join(", ")))
}

fn c2_dimension() -> Verdict {
    let mut pass = true;
    let mut rate_checked = 0;
    let mut notes = Vec::new();
    for (name, spec) in qt_specs() {
        let q = build_instance(&spec, Path::new(".")).unwrap();
        let n = q.n();
        let by_rank = n - rank(q.hx_dense()) - rank(q.hz_dense());
        let classes = q.logical_class_count();
        pass &= q.k() == by_rank && by_rank == classes;
        let delta = q.complex().delta();
        let (ka, kb) = (q.code_a().dimension(), q.code_b().dimension());
        if ka + kb == delta && 2 * ka <= delta {
            // k ≥ (1 - 2ρ)² n with ρ = k_A / Δ, cleared of denominators
            let lhs = (delta - 2 * ka).pow(2) * n;
            pass &= lhs <= by_rank * delta * delta;
            rate_checked += 1;
        }
        notes.push(format!("{name}: k={by_rank}"));
    }
    pass &= rate_checked > 0;
    verdict(pass, format!("rank k = class count; rate bound on {rate_checked} instances [{}]", notes.join(", ")))
}

fn c3_mismatch_bound() -> Verdict {
    let specs = [cyclic_spec(6), cyclic_spec(12), qt_specs().pop().unwrap().1];
    let mut worst = 0.0f64;
    let mut trials = 0;
    let mut violations = 0;
    for (idx, spec) in specs.iter().enumerate() {
        let q = build_instance(spec, Path::new(".")).unwrap();
        let decoder = Decoder::new(&q, DecoderConfig::default()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(300 + idx as u64);
        let n = q.n();
        for _ in 0..3400 {
            let w = rng.gen_range(1..=n / 2);
            let e = BitVector::from_indices(n, sample(&mut rng, n, w));
            let z = decoder.compute_mismatch(&q.hx_dense().mul_vec(&e)).unwrap().zhat_weight();
            violations += (z > 4 * w) as usize;
            worst = worst.max(z as f64 / w as f64);
            trials += 1;
        }
    }
    verdict(
        violations == 0,
        format!("{trials} errors on 3 instances, {violations} violations, max |Z|/|e| = {worst:.3}"),
    )
}

fn c4_local_decode() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut pairs = 0;
    let mut inputs = 0;
    let mut mismatches = 0;
    let codes: Vec<Vec<Vec<u32>>> = (0..=4).map(canonical_subspaces).collect();
    for la in 1..=4 {
        for lb in 1..=4 {
            for wa in &codes[la] {
                for wb in &codes[lb] {
                    let dt = DualTensorCode::new(&to_code(wa, la), &to_code(wb, lb)).unwrap();
                    let brute = BruteDualTensor::new(wa, la, wb, lb);
                    let minima = brute.coset_minima();
                    for _ in 0..1000 {
                        let x = BitVector::from_u64(la * lb, rng.gen::<u64>() & ((1 << (la * lb)) - 1));
                        let leader = coset_leader_decode(&dt, &x);
                        let s = brute.syndrome(&x);
                        if brute.syndrome(&leader) != s || leader.weight() != minima[&s] {
                            mismatches += 1;
                        }
                        inputs += 1;
                    }
                    pairs += 1;
                }
            }
        }
    }
    verdict(
        mismatches == 0,
        format!("{pairs} canonical code pairs, {inputs} inputs, {mismatches} non-minimal leaders"),
    )
}

fn c5_robustness() -> Verdict {
    let mut checks = 0;
    let mut mismatches = Vec::new();
    for delta in 2..=4usize {
        let codes = canonical_subspaces(delta);
        for (ia, wa) in codes.iter().enumerate() {
            for (ib, wb) in codes.iter().enumerate() {
                let (ca, cb) = (to_code(wa, delta), to_code(wb, delta));
                // uncovered minimum for each puncture level 0 and 1
                let full = BruteDualTensor::new(wa, delta, wb, delta).uncovered_min();
                let mut one = full;
                for keep_a in (0..delta).combinations(delta - 1) {
                    for keep_b in (0..delta).combinations(delta - 1) {
                        let m = BruteDualTensor::new(&project(wa, &keep_a), delta - 1, &project(wb, &keep_b), delta - 1)
                            .uncovered_min();
                        one = match (one, m) {
                            (Some(x), Some(y)) => Some(x.min(y)),
                            (x, y) => x.or(y),
                        };
                    }
                }
                for w in 1..=delta * delta {
                    let expect0 = full.is_none_or(|m| w < m);
                    let expect1 = one.is_none_or(|m| w < m);
                    let got0 = check_robustness(&ca, &cb, w, RobustnessMode::Exhaustive).unwrap().holds;
                    let got1 = check_puncture_resistance(&ca, &cb, w, 1, RobustnessMode::Exhaustive).unwrap().holds;
                    checks += 2;
                    if got0 != expect0 || got1 != expect1 {
                        mismatches.push(format!("Δ={delta} pair ({ia},{ib}) w={w}"));
                    }
                }
            }
        }
    }
    verdict(
        mismatches.is_empty(),
        format!("{checks} verdicts vs brute force, {} mismatches {:?}", mismatches.len(), mismatches.iter().take(3).collect::<Vec<_>>()),
    )
}

fn c6_decoder_sweep() -> Verdict {
    let start = Instant::now();
    let q = reference();
    let search = exhaustive_logical_search(&q, 6);
    let Some(t_star) = search.correctable_weight() else {
        return verdict(false, "no logical operator found up to weight 6");
    };
    // independent confirmation that no nontrivial logical has weight ≤ 2t*
    let stab = RowSpaceOracle::new(q.hz_dense());
    let n = q.n();
    let low_logical = (1..=2 * t_star)
        .flat_map(|w| (0..n).combinations(w))
        .map(|s| BitVector::from_indices(n, s))
        .any(|v| q.hx_dense().mul_vec(&v).is_zero() && !stab.contains(&v));
    if low_logical {
        return verdict(false, format!("logical of weight ≤ {} found, t* = {t_star} is wrong", 2 * t_star));
    }
    let cfg = ExperimentConfig {
        seed: 0,
        trials: 0,
        timing: false,
        threads: None,
        instance: reference_spec(),
        decoder: DecoderConfig::default(),
        error_model: ErrorModel::Exhaustive { max_weight: t_star },
        output: Default::default(),
    };
    let report = run_on(&q, &cfg).unwrap();
    let rows: Vec<String> = report
        .summary
        .iter()
        .map(|r| format!("|e|={}: {}/{} converged, {}/{} equivalent", r.weight, r.converged, r.trials, r.equivalent, r.trials))
        .collect();
    verdict(
        report.all_equivalent(),
        format!(
            "d = {}, t* = {t_star}; {} ({:.1}s)",
            search.distance().unwrap(),
            rows.join("; "),
            start.elapsed().as_secs_f64()
        ),
    )
}

fn c7_stabilizers() -> Verdict {
    let q = reference();
    let decoder = Decoder::new(&q, DecoderConfig::default()).unwrap();
    let stab = RowSpaceOracle::new(q.hz_dense());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut failures = 0;
    for _ in 0..1000 {
        let coeffs = BitVector::from_indices(q.hz_dense().nrows(), (0..q.hz_dense().nrows()).filter(|_| rng.gen_bool(0.5)));
        let e = q.hz_dense().combine_rows(&coeffs);
        let (out, _) = decoder.decode(&q.hx_dense().mul_vec(&e)).unwrap();
        let ok = out.converged && q.stabilizer_equivalent(&e, &out.ehat) && stab.contains(&(&e ^ &out.ehat));
        failures += (!ok) as usize;
    }
    verdict(failures == 0, format!("1000 stabilizers, {failures} not recognised"))
}

fn lp_error_vector(lp: &LiftedProductCode, rng: &mut ChaCha8Rng, weight: usize) -> BitVector {
    let n = lp.n();
    let g = lp.group().order();
    let ab = lp.delta() * lp.delta() * g;
    let block = lp.m_a() * lp.m_b() * g;
    // AB, 00 and 11 blocks only
    let allowed: Vec<usize> = (0..ab + block).chain(ab + 3 * block..n).collect();
    BitVector::from_indices(n, sample(rng, allowed.len(), weight).into_iter().map(|i| allowed[i]))
}

fn c8_lifted_product() -> Verdict {
    let lp = reference_lp_instance().build().unwrap();
    let q = qtanner_from_lp(&lp).unwrap();
    let decoder = Decoder::new(&q, DecoderConfig::default()).unwrap();
    let stab = RowSpaceOracle::new(lp.hz());
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut converged, mut bad) = (0, 0);
    for trial in 0..1000 {
        let v = lp_error_vector(&lp, &mut rng, 1 + trial % 3);
        let e = lp.error_from_vector(&v).unwrap();
        let syndrome = lp.hx().mul_vec(&v);
        let out = lp_decode_with(&lp, &decoder, &syndrome).unwrap();
        if out.converged {
            converged += 1;
            let est = out.estimate.to_vector();
            let ok = lp.hx().mul_vec(&est) == syndrome && lp.stabilizer_equivalent(&e, &out.estimate) && stab.contains(&(&v ^ &est));
            bad += (!ok) as usize;
        }
    }
    let delta = lp.delta();
    let mut lemma_bad = 0;
    for _ in 0..1000 {
        let p = rng.gen_range(0.0..0.3);
        let v = BitVector::from_indices(lp.n(), (0..lp.n()).filter(|_| rng.gen_bool(p)));
        let e = lp.error_from_vector(&v).unwrap();
        let s = lp.simplify_error(&e);
        let bound = e.weight() + 4 * delta * delta * (e.e01.weight() + e.e10.weight());
        let ok = s.weight() <= bound && s.e01.is_zero() && s.e10.is_zero() && stab.contains(&(&v ^ &s.to_vector()));
        lemma_bad += (!ok) as usize;
    }
    verdict(
        bad == 0 && converged > 0 && lemma_bad == 0,
        format!(
            "restricted errors of weight 1..=3: {converged}/1000 converged, {bad} inconsistent; simplification bound: {lemma_bad}/1000 violations"
        ),
    )
}

fn count_edges(g: &Graph, s: &[usize], t: &[usize]) -> usize {
    let tset: BTreeSet<usize> = t.iter().copied().collect();
    s.iter().map(|&u| g.adjacency[u].iter().filter(|v| tset.contains(v)).count()).sum()
}

fn c9_spectral() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut ramanujan = 0;
    let mut pass = true;
    let mut notes = Vec::new();
    for (name, spec) in qt_specs() {
        let q = build_instance(&spec, Path::new(".")).unwrap();
        let meta = q.metadata();
        let delta = q.complex().delta() as f64;
        let (g0, g1) = q.complex().square_graphs();
        if meta.lambdas[0].ramanujan && meta.lambdas[1].ramanujan {
            ramanujan += 1;
            let ok = meta.lambdas[2].lambda <= 4.0 * delta + 1e-6 && meta.lambdas[3].lambda <= 4.0 * delta + 1e-6;
            pass &= ok;
            notes.push(format!("{name}: λ0={:.3}, λ1={:.3}", meta.lambdas[2].lambda, meta.lambdas[3].lambda));
        }
        for (graph, lambda) in [(&g0, meta.lambdas[2].lambda), (&g1, meta.lambdas[3].lambda)] {
            let half = graph.side0.unwrap();
            let d = graph.regular_degree().unwrap() as f64;
            for _ in 0..200 {
                let s: Vec<usize> = (0..half).filter(|_| rng.gen_bool(0.5)).collect();
                let t: Vec<usize> = (half..2 * half).filter(|_| rng.gen_bool(0.5)).collect();
                let edges = count_edges(graph, &s, &t);
                let (ns, nt) = (s.len() as f64, t.len() as f64);
                let bound = d / half as f64 * ns * nt + lambda * (ns * nt).sqrt();
                let check = check_mixing(graph, lambda, &s, &t);
                pass &= check.holds && check.edges == edges && edges as f64 <= bound + 1e-9;
            }
        }
    }
    pass &= ramanujan > 0;
    verdict(pass, format!("{ramanujan} Ramanujan instances [{}]; 200 mixing pairs per square graph", notes.join(", ")))
}

fn c10_linear_time() -> Verdict {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let family = BenchFamily::cyclic(&[6, 12, 24, 48], 20, 0.01, 10);
    let start = Instant::now();
    let report = pool.install(|| bench_linear_scaling(&family)).unwrap();
    let slope = report.slope.unwrap();
    let medians: Vec<String> = report.points.iter().map(|p| format!("n={}: {:.3}ms", p.n, p.median_ms)).collect();
    verdict(
        slope <= 1.4,
        format!("slope {slope:.3} [{}] ({:.1}s)", medians.join(", "), start.elapsed().as_secs_f64()),
    )
}

fn c11_determinism() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.toml");
    std::fs::write(
        &config,
        r#"
seed = 2024
trials = 400

[instance]
group = "C6"
a = [1, 3, 5]
b = [1, 3, 5]
codes = { kind = "named", ca = "repetition:3", cb = "parity:3" }

[error_model]
kind = "clustered"
vertices = 2
weight = 3
"#,
    )
    .unwrap();
    let run = |out: &str, threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_qtanner"))
            .args(["--out", dir.path().join(out).to_str().unwrap(), "--threads", threads, "experiment", "--config"])
            .arg(&config)
            .output()
            .unwrap()
            .status
            .success()
    };
    let ran = run("first", "1") && run("second", "4");
    let same = |name: &str| {
        let a = std::fs::read(dir.path().join("first").join(name)).unwrap_or_default();
        let b = std::fs::read(dir.path().join("second").join(name)).unwrap_or(vec![0]);
        (a == b, a.len())
    };
    let (records_same, bytes) = same("records.jsonl");
    let (summary_same, _) = same("summary.csv");
    verdict(
        ran && records_same && summary_same && bytes > 0,
        format!("two runs (1 and 4 threads): records identical = {records_same} ({bytes} bytes), summary identical = {summary_same}"),
    )
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("CSS exactness", c1_css),
        ("dimension formula", c2_dimension),
        ("mismatch bound", c3_mismatch_bound),
        ("local decode optimality", c4_local_decode),
        ("robustness certification", c5_robustness),
        ("decoder correctness sweep", c6_decoder_sweep),
        ("stabilizer invisibility", c7_stabilizers),
        ("lifted product reduction", c8_lifted_product),
        ("spectral bounds", c9_spectral),
        ("linear-time behaviour", c10_linear_time),
        ("determinism", c11_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = f();
        failed += (!v.pass) as usize;
        println!(
            "criterion {:>2} {:<26} {}  {} [{:.1}s]",
            i + 1,
            name,
            if v.pass { "PASS" } else { "FAIL" },
            v.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
