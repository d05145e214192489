//! The CSS pair of Tanner codes on the square graphs.

use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{spectral_lambda, GraphSpectrum, LeftRightComplex, VertexClass};
use crate::error::QTannerError;
use crate::gf2::{BitMatrix, BitVector, RowEchelon, SparseBitMatrix};
use crate::local_codes::{DualTensorCode, LinearCode, MinDistance};

/// Quantum Tanner code: `hz` holds `C_A ⊗ C_B` generators in the local views
/// of `V_00` then `V_11`; `hx` holds `C_A^⊥ ⊗ C_B^⊥` generators in the views
/// of `V_01` then `V_10`.
///
/// Row `s·r + t` of `hx` is parity check `t` of the dual tensor code placed in
/// the view of `V_1` slot `s` (slot `g` is `V_01` vertex `g`, slot `|G| + g`
/// is `V_10` vertex `g`), so a syndrome slice is a dual-tensor syndrome.
#[derive(Debug)]
pub struct QuantumTannerCode {
    complex: LeftRightComplex,
    ca: LinearCode,
    cb: LinearCode,
    dt: DualTensorCode,
    hx: SparseBitMatrix,
    hz: SparseBitMatrix,
    hx_dense: BitMatrix,
    hz_dense: BitMatrix,
    rank_hx: usize,
    rank_hz: usize,
    hz_echelon: OnceLock<RowEchelon>,
}

pub fn build_qtanner(
    complex: &LeftRightComplex,
    ca: &LinearCode,
    cb: &LinearCode,
) -> Result<QuantumTannerCode, QTannerError> {
    QuantumTannerCode::new(complex.clone(), ca.clone(), cb.clone())
}

impl QuantumTannerCode {
    pub fn new(complex: LeftRightComplex, ca: LinearCode, cb: LinearCode) -> Result<Self, QTannerError> {
        let delta = complex.delta();
        for code in [&ca, &cb] {
            if code.length() != delta {
                return Err(QTannerError::LengthMismatch {
                    expected: delta,
                    found: code.length(),
                });
            }
        }
        let dt = DualTensorCode::new(&ca, &cb)?;
        let n = complex.num_squares();
        let order = complex.group().order();

        let local_par = dt.parity_check();
        let mut hx = SparseBitMatrix::new(n);
        for class in [VertexClass::V01, VertexClass::V10] {
            for g in 0..order {
                let view = complex.local_view(complex.vertex_id(class, g));
                for row in local_par.rows() {
                    hx.push_row(row.iter_ones().map(|i| view[i]).collect());
                }
            }
        }
        let local_gen = ca.generator().kron(cb.generator());
        let mut hz = SparseBitMatrix::new(n);
        for class in [VertexClass::V00, VertexClass::V11] {
            for g in 0..order {
                let view = complex.local_view(complex.vertex_id(class, g));
                for row in local_gen.rows() {
                    hz.push_row(row.iter_ones().map(|i| view[i]).collect());
                }
            }
        }
        let hx_dense = hx.to_dense();
        let hz_dense = hz.to_dense();
        let product = hx_dense.mul(&hz_dense.transpose());
        for (i, row) in product.rows().iter().enumerate() {
            if let Some(j) = row.first_one() {
                return Err(QTannerError::NotOrthogonal(i, j));
            }
        }
        let rank_hx = hx_dense.rank();
        let rank_hz = hz_dense.rank();
        Ok(Self {
            complex,
            ca,
            cb,
            dt,
            hx,
            hz,
            hx_dense,
            hz_dense,
            rank_hx,
            rank_hz,
            hz_echelon: OnceLock::new(),
        })
    }

    pub fn complex(&self) -> &LeftRightComplex {
        &self.complex
    }

    pub fn code_a(&self) -> &LinearCode {
        &self.ca
    }

    pub fn code_b(&self) -> &LinearCode {
        &self.cb
    }

    pub fn dual_tensor(&self) -> &DualTensorCode {
        &self.dt
    }

    pub fn hx(&self) -> &SparseBitMatrix {
        &self.hx
    }

    pub fn hz(&self) -> &SparseBitMatrix {
        &self.hz
    }

    pub fn hx_dense(&self) -> &BitMatrix {
        &self.hx_dense
    }

    pub fn hz_dense(&self) -> &BitMatrix {
        &self.hz_dense
    }

    pub fn n(&self) -> usize {
        self.complex.num_squares()
    }

    pub fn rank_hx(&self) -> usize {
        self.rank_hx
    }

    pub fn rank_hz(&self) -> usize {
        self.rank_hz
    }

    /// `dim ℰC_0 + dim ℰC_1 - n`, with `dim ℰC_i = n - rank`.
    pub fn k(&self) -> usize {
        self.n() - self.rank_hx - self.rank_hz
    }

    /// Independent logical classes, counted as `dim(ker hx / row hz)` by
    /// stacking a kernel basis under `hz`.
    pub fn logical_class_count(&self) -> usize {
        let kernel = BitMatrix::from_rows(crate::gf2::kernel_basis(&self.hx_dense), self.n());
        self.hz_dense.vstack(&kernel).rank() - self.rank_hz
    }

    /// Syndrome bits per `V_1` vertex.
    pub fn local_syndrome_bits(&self) -> usize {
        self.dt.syndrome_bits()
    }

    pub fn syndrome_z(&self, e: &BitVector) -> Result<BitVector, QTannerError> {
        self.check_len(e)?;
        Ok(self.hx.mul_vec(e))
    }

    pub fn syndrome_x(&self, e: &BitVector) -> Result<BitVector, QTannerError> {
        self.check_len(e)?;
        Ok(self.hz.mul_vec(e))
    }

    fn check_len(&self, e: &BitVector) -> Result<(), QTannerError> {
        if e.len() != self.n() {
            return Err(QTannerError::ErrorLength {
                expected: self.n(),
                found: e.len(),
            });
        }
        Ok(())
    }

    fn hz_echelon(&self) -> &RowEchelon {
        self.hz_echelon.get_or_init(|| RowEchelon::new(&self.hz_dense))
    }

    /// Whether `v` is a product of Z-type generators.
    pub fn in_stabilizer(&self, v: &BitVector) -> bool {
        self.hz_echelon().contains(v)
    }

    /// `e1 + e2` lies in the row space of `hz`.
    pub fn stabilizer_equivalent(&self, e1: &BitVector, e2: &BitVector) -> bool {
        self.in_stabilizer(&(e1 ^ e2))
    }

    /// In `ℰC_1` but not in `ℰC_0^⊥`.
    pub fn is_nontrivial_logical(&self, v: &BitVector) -> bool {
        self.hx.mul_vec(v).is_zero() && !self.in_stabilizer(v)
    }

    pub fn metadata(&self) -> QTannerMetadata {
        let (g0, g1) = self.complex.square_graphs();
        let lambdas = vec![
            spectral_lambda(&self.complex.gens_a().cayley_graph(self.complex.group())),
            spectral_lambda(&self.complex.gens_b().cayley_graph(self.complex.group())),
            spectral_lambda(&g0),
            spectral_lambda(&g1),
        ];
        let delta = self.complex.delta();
        let distances = [
            self.ca.min_distance(),
            self.cb.min_distance(),
            self.ca.dual().min_distance(),
            self.cb.dual().min_distance(),
        ];
        let relative_distance = distances
            .iter()
            .filter_map(|d| d.value())
            .min()
            .map(|d| d as f64 / delta as f64);
        QTannerMetadata {
            group: self.complex.group().name().to_string(),
            group_order: self.complex.group().order(),
            delta,
            n: self.n(),
            k: self.k(),
            rho: self.ca.rate(),
            relative_distance,
            component_distances: distances,
            hx_rows: self.hx.nrows(),
            hz_rows: self.hz.nrows(),
            rank_hx: self.rank_hx,
            rank_hz: self.rank_hz,
            lambdas,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QTannerMetadata {
    pub group: String,
    pub group_order: usize,
    pub delta: usize,
    pub n: usize,
    pub k: usize,
    /// `dim C_A / Δ`.
    pub rho: f64,
    /// Smallest of the four component distances over `Δ`.
    pub relative_distance: Option<f64>,
    /// `d(C_A), d(C_B), d(C_A^⊥), d(C_B^⊥)`.
    pub component_distances: [MinDistance; 4],
    pub hx_rows: usize,
    pub hz_rows: usize,
    pub rank_hx: usize,
    pub rank_hz: usize,
    /// `Cay(G, A)`, `Cay(G, B)`, `𝒢□_0`, `𝒢□_1`.
    pub lambdas: Vec<GraphSpectrum>,
}

/// Column signatures `(hx·e_j, K_z·e_j)`: a set of columns XORs to zero in
/// the first part and nonzero in the second exactly when it is a
/// nontrivial Z logical (`K_z` spans `ker hz`, whose kernel is `row hz`).
struct Signatures {
    words: usize,
    split_word: usize,
    split_bit: u32,
    columns: Vec<Vec<u64>>,
}

impl Signatures {
    fn new(q: &QuantumTannerCode) -> Self {
        let kz = BitMatrix::from_rows(crate::gf2::kernel_basis(&q.hz_dense), q.n());
        let hx_bits = q.hx_dense.nrows();
        let total = hx_bits + kz.nrows();
        let words = total.div_ceil(64).max(1);
        let hx_t = q.hx_dense.transpose();
        let kz_t = kz.transpose();
        let columns = (0..q.n())
            .map(|j| {
                let mut sig = vec![0u64; words];
                for i in hx_t.row(j).iter_ones() {
                    sig[i / 64] |= 1 << (i % 64);
                }
                for i in kz_t.row(j).iter_ones() {
                    let t = hx_bits + i;
                    sig[t / 64] |= 1 << (t % 64);
                }
                sig
            })
            .collect();
        Self {
            words,
            split_word: hx_bits / 64,
            split_bit: (hx_bits % 64) as u32,
            columns,
        }
    }

    fn is_logical(&self, acc: &[u64]) -> bool {
        let low_mask = if self.split_bit == 0 { 0 } else { (1u64 << self.split_bit) - 1 };
        if acc[..self.split_word].iter().any(|&w| w != 0) {
            return false;
        }
        if self.split_word < self.words && acc[self.split_word] & low_mask != 0 {
            return false;
        }
        let high = if self.split_word < self.words { acc[self.split_word] & !low_mask } else { 0 };
        high != 0 || acc[(self.split_word + 1).min(self.words)..].iter().any(|&w| w != 0)
    }
}

/// Lowest-index logical operator of weight exactly `w`, if any.
fn search_weight(sig: &Signatures, n: usize, w: usize) -> Option<Vec<usize>> {
    if w == 0 || w > n {
        return None;
    }
    (0..=n - w).into_par_iter().find_map_first(|first| {
        let mut chosen = vec![first];
        let acc = sig.columns[first].clone();
        dfs(sig, n, w - 1, first + 1, &acc, &mut chosen).then_some(chosen)
    })
}

fn dfs(sig: &Signatures, n: usize, remaining: usize, start: usize, acc: &[u64], chosen: &mut Vec<usize>) -> bool {
    if remaining == 0 {
        return sig.is_logical(acc);
    }
    let mut next = acc.to_vec();
    for j in start..=(n - remaining) {
        for (d, s) in next.iter_mut().zip(&sig.columns[j]) {
            *d ^= s;
        }
        chosen.push(j);
        if dfs(sig, n, remaining - 1, j + 1, &next, chosen) {
            return true;
        }
        chosen.pop();
        for (d, s) in next.iter_mut().zip(&sig.columns[j]) {
            *d ^= s;
        }
    }
    false
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Result of an exhaustive search for a minimum-weight Z logical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalSearch {
    /// No nontrivial logical has weight `≤ searched_up_to` (other than the
    /// witness weight, if a witness was found).
    pub searched_up_to: usize,
    /// The first logical found, of minimum weight.
    pub witness: Option<BitVector>,
}

impl LogicalSearch {
    /// Exact `d_Z` when a witness was found.
    pub fn distance(&self) -> Option<usize> {
        self.witness.as_ref().map(BitVector::weight)
    }

    /// Largest `t` with `2t < d_Z` (every error of weight `≤ t` is
    /// distinguishable from every other up to stabilizers).
    pub fn correctable_weight(&self) -> Option<usize> {
        self.distance().map(|d| (d - 1) / 2)
    }
}

/// Tries all supports of weight `1, 2, …` until a nontrivial logical is found
/// or `max_weight` is passed.
pub fn exhaustive_logical_search(q: &QuantumTannerCode, max_weight: usize) -> LogicalSearch {
    let sig = Signatures::new(q);
    let n = q.n();
    for w in 1..=max_weight.min(n) {
        if let Some(support) = search_weight(&sig, n, w) {
            return LogicalSearch {
                searched_up_to: w - 1,
                witness: Some(BitVector::from_indices(n, support)),
            };
        }
    }
    LogicalSearch {
        searched_up_to: max_weight.min(n),
        witness: None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceBudget {
    /// Random information sets tried.
    pub isd_trials: usize,
    /// Exhaustive search stops before a weight whose supports would push the
    /// cumulative count past this.
    pub exhaustive_supports: u128,
    pub seed: u64,
}

impl Default for DistanceBudget {
    fn default() -> Self {
        Self {
            isd_trials: 200,
            exhaustive_supports: 5_000_000,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistanceEstimate {
    /// No nontrivial Z logical of weight `≤ lower_witnessed` exists.
    pub lower_witnessed: usize,
    /// Whether the exhaustive search reached a witness, making `upper` exact.
    pub exact: bool,
    pub upper: Option<usize>,
    pub upper_witness: Option<BitVector>,
}

/// Bounds on `d_Z = min |w|, w ∈ ℰC_1 \ ℰC_0^⊥`.
pub fn estimate_distance(q: &QuantumTannerCode, budget: DistanceBudget) -> DistanceEstimate {
    let n = q.n();
    let mut spent = 0u128;
    let mut max_weight = 0;
    while max_weight < n {
        let next = binomial(n, max_weight + 1);
        if spent + next > budget.exhaustive_supports {
            break;
        }
        spent += next;
        max_weight += 1;
    }
    let search = exhaustive_logical_search(q, max_weight);
    if let Some(w) = search.witness {
        return DistanceEstimate {
            lower_witnessed: search.searched_up_to,
            exact: true,
            upper: Some(w.weight()),
            upper_witness: Some(w),
        };
    }
    let witness = information_set_search(q, budget.isd_trials, budget.seed);
    DistanceEstimate {
        lower_witnessed: search.searched_up_to,
        exact: false,
        upper: witness.as_ref().map(BitVector::weight),
        upper_witness: witness,
    }
}

/// Lightest nontrivial logical among reduced bases of `ker hx` under random
/// column orders, including pairwise sums of basis rows.
pub fn information_set_search(q: &QuantumTannerCode, trials: usize, seed: u64) -> Option<BitVector> {
    if q.k() == 0 {
        return None;
    }
    let n = q.n();
    let kernel = crate::gf2::kernel_basis(&q.hx_dense);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<BitVector> = None;
    let consider = |v: BitVector, best: &mut Option<BitVector>| {
        if v.is_zero() || best.as_ref().is_some_and(|b| b.weight() <= v.weight()) {
            return;
        }
        if !q.in_stabilizer(&v) {
            *best = Some(v);
        }
    };
    for _ in 0..trials.max(1) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let permuted = BitMatrix::from_rows(kernel.iter().map(|v| v.select(&perm)).collect(), n);
        let reduced = RowEchelon::new(&permuted).basis();
        let unpermute = |v: &BitVector| BitVector::from_indices(n, v.iter_ones().map(|i| perm[i]));
        let rows: Vec<BitVector> = reduced.rows().iter().map(unpermute).collect();
        for (i, r) in rows.iter().enumerate() {
            consider(r.clone(), &mut best);
            for s in &rows[i + 1..] {
                consider(r ^ s, &mut best);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_complex, GeneratorSet, Side};
    use crate::group::{build_group, GroupSpec};
    use crate::local_codes::tensor_code;

    fn complex(spec: GroupSpec, a: Vec<usize>, b: Vec<usize>) -> LeftRightComplex {
        let g = build_group(&spec).unwrap();
        let ga = GeneratorSet::new(&g, a, Side::Left).unwrap();
        let gb = GeneratorSet::new(&g, b, Side::Right).unwrap();
        build_complex(&g, &ga, &gb).unwrap()
    }

    fn reference() -> QuantumTannerCode {
        let x = complex(GroupSpec::Cyclic(6), vec![1, 3, 5], vec![1, 3, 5]);
        build_qtanner(&x, &LinearCode::repetition(3), &LinearCode::single_parity(3)).unwrap()
    }

    #[test]
    fn reference_parameters() {
        let q = reference();
        assert_eq!(q.n(), 54);
        assert!(q.hx_dense().mul(&q.hz_dense().transpose()).is_zero());
        // (1 - 2ρ)² n with ρ = 1/3
        assert!(q.k() >= 6, "k = {}", q.k());
        assert_eq!(q.k(), q.logical_class_count());
        for w in q.hx().row_weights().into_iter().chain(q.hz().row_weights()) {
            assert!(w <= 9);
        }
    }

    #[test]
    fn hz_rows_are_local_tensor_codewords() {
        let q = reference();
        let x = q.complex();
        let tensor = tensor_code(q.code_a(), q.code_b());
        let per_vertex = tensor.dimension();
        let order = x.group().order();
        for (r, row) in q.hz().rows().iter().enumerate() {
            let slot = r / per_vertex;
            let class = if slot < order { VertexClass::V00 } else { VertexClass::V11 };
            let v = x.vertex_id(class, slot % order);
            let view = x.local_view(v);
            let local = BitVector::from_indices(9, row.iter().map(|q| view.iter().position(|s| s == q).unwrap()));
            assert_eq!(local.weight(), row.len());
            assert!(tensor.contains(&local));
        }
    }

    #[test]
    fn degenerate_codes_stay_orthogonal() {
        let x = complex(GroupSpec::Cyclic(6), vec![1, 3, 5], vec![1, 3, 5]);
        let q = build_qtanner(&x, &LinearCode::full(3), &LinearCode::zero(3)).unwrap();
        assert_eq!(q.hz().nrows(), 0);
        assert!(q.hx_dense().mul(&q.hz_dense().transpose()).is_zero());
    }

    #[test]
    fn length_mismatch_rejected() {
        let x = complex(GroupSpec::Cyclic(6), vec![1, 5], vec![1, 5]);
        let err = build_qtanner(&x, &LinearCode::repetition(3), &LinearCode::repetition(2)).unwrap_err();
        assert_eq!(err, QTannerError::LengthMismatch { expected: 2, found: 3 });
    }

    #[test]
    fn syndrome_matches_dense_product() {
        let q = reference();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        assert!(q.syndrome_z(&BitVector::zeros(54)).unwrap().is_zero());
        for row in q.hz().rows() {
            assert!(q.syndrome_z(&BitVector::from_indices(54, row.iter().copied())).unwrap().is_zero());
        }
        for _ in 0..50 {
            let e = BitVector::from_indices(54, rand::seq::index::sample(&mut rng, 54, 3));
            let dense = q.hx_dense().mul_vec(&e);
            assert_eq!(q.syndrome_z(&e).unwrap(), dense);
        }
        assert!(q.syndrome_z(&BitVector::zeros(3)).is_err());
    }

    #[test]
    fn stabilizer_equivalence() {
        let q = reference();
        let e = BitVector::from_indices(54, [1, 7, 30]);
        assert!(q.stabilizer_equivalent(&e, &e));
        let g = BitVector::from_indices(54, q.hz().row(5).iter().copied());
        assert!(q.stabilizer_equivalent(&e, &(&e ^ &g)));
        for i in 0..54 {
            let flip = BitVector::from_indices(54, [i]);
            let expected = crate::gf2::in_row_space(q.hz_dense(), &flip);
            assert_eq!(q.stabilizer_equivalent(&e, &(&e ^ &flip)), expected);
        }
    }

    #[test]
    fn swapping_roles_keeps_parameters() {
        let q = reference();
        let swapped = build_qtanner(q.complex(), &q.code_a().dual(), &q.code_b().dual()).unwrap();
        assert_eq!((swapped.n(), swapped.k()), (q.n(), q.k()));
    }

    #[test]
    fn exhaustive_search_finds_a_verified_logical() {
        let q = reference();
        let search = exhaustive_logical_search(&q, 8);
        let w = search.witness.clone().expect("k > 0 so a logical exists");
        assert!(q.is_nontrivial_logical(&w));
        let isd = information_set_search(&q, 100, 1).unwrap();
        assert!(q.is_nontrivial_logical(&isd));
        assert!(isd.weight() >= w.weight());
    }

    /// Minimum logical weight by walking all 2^n vectors.
    fn brute_distance(q: &QuantumTannerCode) -> Option<usize> {
        let n = q.n();
        (1u64..(1 << n))
            .map(|m| BitVector::from_u64(n, m))
            .filter(|v| q.is_nontrivial_logical(v))
            .map(|v| v.weight())
            .min()
    }

    #[test]
    fn small_instance_matches_brute_force() {
        let x = complex(GroupSpec::Cyclic(4), vec![1, 3], vec![1, 3]);
        for (ca, cb) in [
            (LinearCode::repetition(2), LinearCode::full(2)),
            (LinearCode::repetition(2), LinearCode::zero(2)),
            (LinearCode::repetition(2), LinearCode::repetition(2)),
        ] {
            let q = build_qtanner(&x, &ca, &cb).unwrap();
            assert_eq!(q.n(), 16);
            let search = exhaustive_logical_search(&q, 16);
            assert_eq!(search.distance(), brute_distance(&q));
            let est = estimate_distance(&q, DistanceBudget::default());
            assert_eq!(est.upper, brute_distance(&q));
            if let Some(d) = est.upper {
                assert_eq!(est.lower_witnessed, d - 1);
            }
        }
    }

    #[test]
    fn k_zero_has_no_witness() {
        let x = complex(GroupSpec::Cyclic(4), vec![1, 3], vec![1, 3]);
        let q = build_qtanner(&x, &LinearCode::full(2), &LinearCode::full(2)).unwrap();
        if q.k() == 0 {
            assert!(information_set_search(&q, 10, 0).is_none());
            assert!(estimate_distance(&q, DistanceBudget::default()).upper_witness.is_none());
        }
    }

    #[test]
    fn metadata_serializes() {
        let q = reference();
        let m = q.metadata();
        assert_eq!(m.n, 54);
        assert_eq!(m.lambdas.len(), 4);
        let json = serde_json::to_string(&m).unwrap();
        assert!(json.contains("\"k\""));
    }
}
