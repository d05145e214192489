use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::CodeError;
use crate::gf2::{kernel_basis, BitMatrix, BitVector, RowEchelon};

/// Largest dimension for which minimum distances are certified by walking
/// every codeword (2^24 Gray-code steps).
pub const EXHAUSTIVE_DIM_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinDistance {
    /// Certified by enumerating every nonzero codeword.
    Exact(usize),
    /// The zero code has no nonzero codeword.
    Infinite,
    /// Smallest weight seen among random codewords; an upper bound only.
    Sampled(usize),
    Unknown,
}

impl MinDistance {
    /// Value usable in `|x| / d` style bounds; `None` for the zero code.
    pub fn value(self) -> Option<usize> {
        match self {
            MinDistance::Exact(d) | MinDistance::Sampled(d) => Some(d),
            MinDistance::Infinite | MinDistance::Unknown => None,
        }
    }

    pub fn is_certified(self) -> bool {
        matches!(self, MinDistance::Exact(_) | MinDistance::Infinite)
    }

    /// True when the distance is known to be at least `target`.
    pub fn at_least(self, target: usize) -> bool {
        match self {
            MinDistance::Exact(d) => d >= target,
            MinDistance::Infinite => true,
            MinDistance::Sampled(_) | MinDistance::Unknown => false,
        }
    }
}

impl fmt::Display for MinDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinDistance::Exact(d) => write!(f, "{d}"),
            MinDistance::Infinite => write!(f, "inf"),
            MinDistance::Sampled(d) => write!(f, "<={d} (sampled)"),
            MinDistance::Unknown => write!(f, "?"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceMode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

/// A binary linear code of length `length` with a full-rank generator
/// matrix (`k` rows) and a full-rank parity-check matrix (`length - k` rows).
#[derive(Clone)]
pub struct LinearCode {
    length: usize,
    gen: BitMatrix,
    par: BitMatrix,
    min_dist: MinDistance,
}

/// Equality of codes as subspaces, whatever bases are stored.
impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.length == other.length
            && self.dimension() == other.dimension()
            && other.gen.rows().iter().all(|r| self.contains(r))
    }
}

impl Eq for LinearCode {}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}] code", self.length, self.dimension(), self.min_dist)
    }
}

impl LinearCode {
    /// Code spanned by the rows of `gen`; dependent rows are dropped and the
    /// basis is put in reduced row echelon form.
    pub fn from_generator(gen: &BitMatrix) -> Self {
        let echelon = RowEchelon::new(gen);
        let length = gen.ncols();
        let basis = echelon.basis();
        let par = BitMatrix::from_rows(echelon.kernel_basis(), length);
        Self::assemble(length, basis, par)
    }

    /// Code `{x : par · x = 0}`.
    pub fn from_parity_check(par: &BitMatrix) -> Self {
        let echelon = RowEchelon::new(par);
        let length = par.ncols();
        let gen = BitMatrix::from_rows(echelon.kernel_basis(), length);
        Self::assemble(length, gen, echelon.basis())
    }

    /// Uses both matrices exactly as given, after checking they describe the
    /// same code (`gen · parᵀ = 0`, both full rank, ranks summing to the length).
    pub fn from_parts(gen: BitMatrix, par: BitMatrix) -> Result<Self, CodeError> {
        if gen.ncols() != par.ncols() {
            return Err(CodeError::Inconsistent(format!(
                "generator has {} columns, parity check {}",
                gen.ncols(),
                par.ncols()
            )));
        }
        let length = gen.ncols();
        if gen.rank() != gen.nrows() || par.rank() != par.nrows() {
            return Err(CodeError::Inconsistent("matrices must have independent rows".into()));
        }
        if gen.nrows() + par.nrows() != length {
            return Err(CodeError::Inconsistent(format!(
                "ranks {} + {} do not add up to length {length}",
                gen.nrows(),
                par.nrows()
            )));
        }
        if !gen.mul(&par.transpose()).is_zero() {
            return Err(CodeError::Inconsistent("gen · parᵀ is nonzero".into()));
        }
        Ok(Self::assemble(length, gen, par))
    }

    fn assemble(length: usize, gen: BitMatrix, par: BitMatrix) -> Self {
        let mut code = Self {
            length,
            gen,
            par,
            min_dist: MinDistance::Unknown,
        };
        if code.dimension() <= EXHAUSTIVE_DIM_CAP {
            code.min_dist = exhaustive_min_distance(&code.gen);
        }
        code
    }

    pub fn repetition(n: usize) -> Self {
        Self::from_generator(&BitMatrix::from_rows(vec![BitVector::ones(n)], n))
    }

    /// The `[n, n-1, 2]` even-weight code.
    pub fn single_parity(n: usize) -> Self {
        Self::from_parity_check(&BitMatrix::from_rows(vec![BitVector::ones(n)], n))
    }

    pub fn full(n: usize) -> Self {
        Self::from_generator(&BitMatrix::identity(n))
    }

    pub fn zero(n: usize) -> Self {
        Self::from_parity_check(&BitMatrix::identity(n))
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.gen.nrows()
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.gen
    }

    pub fn parity_check(&self) -> &BitMatrix {
        &self.par
    }

    pub fn min_distance(&self) -> MinDistance {
        self.min_dist
    }

    pub fn rate(&self) -> f64 {
        if self.length == 0 {
            0.0
        } else {
            self.dimension() as f64 / self.length as f64
        }
    }

    pub fn dual(&self) -> LinearCode {
        Self::assemble(self.length, self.par.clone(), self.gen.clone())
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.par.mul_vec(v).is_zero()
    }

    pub fn syndrome(&self, v: &BitVector) -> BitVector {
        self.par.mul_vec(v)
    }

    pub fn encode(&self, message: &BitVector) -> BitVector {
        self.gen.combine_rows(message)
    }

    /// Restriction of every codeword to the `keep` coordinates.
    pub fn puncture(&self, keep: &[usize]) -> LinearCode {
        Self::from_generator(&self.gen.select_columns(keep))
    }

    /// Generator matrix in the plain-text matrix format.
    pub fn to_text(&self) -> String {
        self.gen.to_text()
    }

    /// Reads a generator matrix in the plain-text matrix format.
    pub fn parse_text(text: &str) -> Result<Self, CodeError> {
        Ok(Self::from_generator(&BitMatrix::parse_text(text)?))
    }
}

/// Minimum nonzero weight of the span of `gen` (rows assumed independent).
fn exhaustive_min_distance(gen: &BitMatrix) -> MinDistance {
    let k = gen.nrows();
    if k == 0 {
        return MinDistance::Infinite;
    }
    let mut best = usize::MAX;
    if gen.ncols() <= 64 {
        let rows: Vec<u64> = gen.rows().iter().map(BitVector::to_u64).collect();
        let mut word = 0u64;
        for step in 1u64..(1u64 << k) {
            word ^= rows[step.trailing_zeros() as usize];
            best = best.min(word.count_ones() as usize);
        }
    } else {
        let mut word = BitVector::zeros(gen.ncols());
        for step in 1u64..(1u64 << k) {
            word ^= gen.row(step.trailing_zeros() as usize);
            best = best.min(word.weight());
        }
    }
    MinDistance::Exact(best)
}

/// Minimum distance of `code`, either certified by enumeration or estimated
/// from random codewords.
pub fn min_distance(code: &LinearCode, mode: DistanceMode) -> Result<MinDistance, CodeError> {
    match mode {
        DistanceMode::Exhaustive => {
            if code.dimension() > EXHAUSTIVE_DIM_CAP {
                return Err(CodeError::ExhaustiveCapExceeded {
                    length: code.dimension(),
                    cap: EXHAUSTIVE_DIM_CAP,
                });
            }
            Ok(exhaustive_min_distance(code.generator()))
        }
        DistanceMode::Sampled { samples, seed } => {
            let k = code.dimension();
            if k == 0 {
                return Ok(MinDistance::Infinite);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut best = code.generator().rows().iter().map(BitVector::weight).min().unwrap_or(usize::MAX);
            for _ in 0..samples {
                let msg = BitVector::from_indices(k, (0..k).filter(|_| rng.gen_bool(0.5)));
                let w = code.encode(&msg).weight();
                if w > 0 {
                    best = best.min(w);
                }
            }
            Ok(MinDistance::Sampled(best))
        }
    }
}

/// `C_A ⊗ C_B` on `A × B`, coordinate `(a, b)` at `a * |B| + b`.
pub fn tensor_code(ca: &LinearCode, cb: &LinearCode) -> LinearCode {
    let gen = ca.generator().kron(cb.generator());
    let par_rows = tensor_parity_rows(ca, cb);
    let mut code = LinearCode {
        length: ca.length() * cb.length(),
        gen,
        par: par_rows,
        min_dist: MinDistance::Unknown,
    };
    if code.dimension() <= EXHAUSTIVE_DIM_CAP {
        code.min_dist = exhaustive_min_distance(&code.gen);
    }
    code
}

/// A basis of `(C_A ⊗ C_B)^⊥ = C_A^⊥ ⊗ F_2^B + F_2^A ⊗ C_B^⊥`.
fn tensor_parity_rows(ca: &LinearCode, cb: &LinearCode) -> BitMatrix {
    let n = ca.length() * cb.length();
    let spanning = ca
        .parity_check()
        .kron(&BitMatrix::identity(cb.length()))
        .vstack(&BitMatrix::identity(ca.length()).kron(cb.parity_check()));
    let basis = RowEchelon::new(&spanning).basis();
    debug_assert_eq!(basis.nrows(), n - ca.dimension() * cb.dimension());
    basis
}

/// Random pair `(C_A, C_B)` with `dim C_A = ⌊ρΔ⌋`, `dim C_B = Δ - dim C_A`
/// and all four of `C_A, C_B, C_A^⊥, C_B^⊥` at distance `≥ ⌈δΔ⌉`.
pub fn sample_component_pair(
    delta: usize,
    rho: f64,
    delta_target: f64,
    seed: u64,
    budget: usize,
) -> Result<(LinearCode, LinearCode), CodeError> {
    if delta == 0 || delta > EXHAUSTIVE_DIM_CAP {
        return Err(CodeError::InvalidParameters(format!(
            "Δ = {delta} must lie in 1..={EXHAUSTIVE_DIM_CAP}"
        )));
    }
    if !(0.0..=1.0).contains(&rho) || !(0.0..=1.0).contains(&delta_target) {
        return Err(CodeError::InvalidParameters("ρ and δ must lie in [0, 1]".into()));
    }
    let k_a = ((rho * delta as f64) + 1e-9).floor() as usize;
    let k_b = delta - k_a;
    let target = ((delta_target * delta as f64) - 1e-9).ceil().max(0.0) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let meets = |c: &LinearCode| c.min_distance().at_least(target) && c.dual().min_distance().at_least(target);

    for _ in 0..budget {
        let ca = random_full_rank_code(&mut rng, k_a, delta);
        if !meets(&ca) {
            continue;
        }
        let cb = random_full_rank_code(&mut rng, k_b, delta);
        if meets(&cb) {
            return Ok((ca, cb));
        }
    }
    Err(CodeError::BudgetExhausted { budget })
}

/// Uniformly random `k`-dimensional code of length `n`, drawn by rejecting
/// rank-deficient generator matrices.
pub fn random_full_rank_code<R: Rng>(rng: &mut R, k: usize, n: usize) -> LinearCode {
    loop {
        let rows: Vec<BitVector> = (0..k)
            .map(|_| BitVector::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5))))
            .collect();
        let gen = BitMatrix::from_rows(rows, n);
        if gen.rank() == k {
            return LinearCode::from_generator(&gen);
        }
    }
}

/// Kernel of a parity-check matrix as a code; convenience for callers
/// holding only `h`.
pub fn code_from_kernel(h: &BitMatrix) -> LinearCode {
    LinearCode::from_generator(&BitMatrix::from_rows(kernel_basis(h), h.ncols()))
}
