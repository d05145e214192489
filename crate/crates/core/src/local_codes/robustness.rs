use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::CodeError;
use crate::gf2::{BitMatrix, BitVector, RowEchelon};

use super::dual_tensor::DualTensorCode;
use super::linear::{LinearCode, MinDistance};

/// Largest dual tensor dimension enumerated in exhaustive mode.
pub const ROBUSTNESS_DIM_CAP: usize = 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RobustnessMode {
    Exhaustive,
    /// Random low-weight codewords built from a few rows and columns.
    Sampled { samples: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certainty {
    Certified,
    Sampled,
}

/// A dual tensor codeword of weight at most `w` with no admissible cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverFailure {
    /// Coordinates `(a, b)` of the punctured code, flattened as `a * |B'| + b`.
    pub codeword: BitVector,
    pub weight: usize,
    /// Rows and columns kept by the puncturing (all of them when `p = 0`).
    pub kept_rows: Vec<usize>,
    pub kept_cols: Vec<usize>,
    /// Cover size limits `⌊|x|/d_B⌋` rows and `⌊|x|/d_A⌋` columns.
    pub max_rows: usize,
    pub max_cols: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PuncturedDistances {
    pub kept_rows: Vec<usize>,
    pub kept_cols: Vec<usize>,
    pub d_a: MinDistance,
    pub d_b: MinDistance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RobustnessReport {
    pub w: usize,
    pub p: usize,
    pub holds: bool,
    pub certainty: Certainty,
    pub witness: Option<CoverFailure>,
    /// Codewords of weight `≤ w` whose cover was checked.
    pub codewords_checked: u64,
    /// One entry per puncture pattern examined (a single entry when `p = 0`).
    pub punctured: Vec<PuncturedDistances>,
}

/// Decides `w`-robustness of `C_A ⊗ F_2^B + F_2^A ⊗ C_B`.
pub fn check_robustness(
    ca: &LinearCode,
    cb: &LinearCode,
    w: usize,
    mode: RobustnessMode,
) -> Result<RobustnessReport, CodeError> {
    check_puncture_resistance(ca, cb, w, 0, mode)
}

/// `w`-robustness of every punctured pair keeping `|A| - w'` rows and
/// `|B| - w'` columns, for all `w' ≤ p`.
pub fn check_puncture_resistance(
    ca: &LinearCode,
    cb: &LinearCode,
    w: usize,
    p: usize,
    mode: RobustnessMode,
) -> Result<RobustnessReport, CodeError> {
    let (da, db) = (ca.length(), cb.length());
    if da * db > 64 {
        return Err(CodeError::InvalidParameters(format!(
            "robustness checks need |A|·|B| ≤ 64, got {}",
            da * db
        )));
    }
    if p > da.min(db) {
        return Err(CodeError::InvalidParameters(format!("p = {p} exceeds the code length")));
    }
    let mut report = RobustnessReport {
        w,
        p,
        holds: true,
        certainty: match mode {
            RobustnessMode::Exhaustive => Certainty::Certified,
            RobustnessMode::Sampled { .. } => Certainty::Sampled,
        },
        witness: None,
        codewords_checked: 0,
        punctured: Vec::new(),
    };
    for removed in 0..=p {
        for kept_rows in (0..da).combinations(da - removed) {
            for kept_cols in (0..db).combinations(db - removed) {
                let pa = ca.puncture(&kept_rows);
                let pb = cb.puncture(&kept_cols);
                report.punctured.push(PuncturedDistances {
                    kept_rows: kept_rows.clone(),
                    kept_cols: kept_cols.clone(),
                    d_a: pa.min_distance(),
                    d_b: pb.min_distance(),
                });
                let (checked, failure) = match mode {
                    RobustnessMode::Exhaustive => exhaustive_pair(&pa, &pb, w)?,
                    RobustnessMode::Sampled { samples, seed } => sampled_pair(&pa, &pb, w, samples, seed),
                };
                report.codewords_checked += checked;
                if let Some((codeword, max_rows, max_cols)) = failure {
                    report.holds = false;
                    report.witness = Some(CoverFailure {
                        weight: codeword.weight(),
                        codeword,
                        kept_rows,
                        kept_cols,
                        max_rows,
                        max_cols,
                    });
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

/// `⌊weight / d⌋`, with an infinite distance admitting no line at all.
pub fn line_bound(weight: usize, d: MinDistance) -> usize {
    match d.value() {
        Some(d) if d > 0 => weight / d,
        _ => 0,
    }
}

/// Rows `A'` and columns `B'` with `supp(x) ⊆ A'×B ∪ A×B'`, `|A'| ≤ max_rows`,
/// `|B'| ≤ max_cols`, or `None`. `row_masks[a]` holds row `a` of `x` as a
/// bitmask over columns. Column subsets are tried by increasing size in
/// lexicographic order; for each the forced row set is minimal.
pub fn find_cover(row_masks: &[u64], max_rows: usize, max_cols: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let occupied = row_masks.iter().fold(0u64, |acc, &m| acc | m);
    let candidates: Vec<usize> = (0..64).filter(|&b| occupied >> b & 1 == 1).collect();
    for size in 0..=max_cols.min(candidates.len()) {
        for cols in candidates.iter().copied().combinations(size) {
            let col_mask = cols.iter().fold(0u64, |acc, &b| acc | 1 << b);
            let rows: Vec<usize> = (0..row_masks.len())
                .filter(|&a| row_masks[a] & !col_mask != 0)
                .collect();
            if rows.len() <= max_rows {
                return Some((rows, cols));
            }
        }
    }
    None
}

fn row_masks_of(word: u64, rows: usize, cols: usize) -> Vec<u64> {
    let line = if cols == 64 { u64::MAX } else { (1u64 << cols) - 1 };
    (0..rows).map(|a| (word >> (a * cols)) & line).collect()
}

type Failure = Option<(BitVector, usize, usize)>;

fn judge(word: u64, rows: usize, cols: usize, d_a: MinDistance, d_b: MinDistance) -> Failure {
    let weight = word.count_ones() as usize;
    let max_rows = line_bound(weight, d_b);
    let max_cols = line_bound(weight, d_a);
    let masks = row_masks_of(word, rows, cols);
    match find_cover(&masks, max_rows, max_cols) {
        Some(_) => None,
        None => Some((BitVector::from_u64(rows * cols, word), max_rows, max_cols)),
    }
}

fn exhaustive_pair(ca: &LinearCode, cb: &LinearCode, w: usize) -> Result<(u64, Failure), CodeError> {
    let (rows, cols) = (ca.length(), cb.length());
    let spanning = spanning_rows(ca, cb);
    let basis: Vec<u64> = RowEchelon::new(&spanning).basis().rows().iter().map(BitVector::to_u64).collect();
    if basis.len() > ROBUSTNESS_DIM_CAP {
        return Err(CodeError::EnumerationCapExceeded {
            dim: basis.len(),
            cap: ROBUSTNESS_DIM_CAP,
        });
    }
    let mut checked = 0;
    let mut word = 0u64;
    for step in 1u64..(1u64 << basis.len()) {
        word ^= basis[step.trailing_zeros() as usize];
        if word.count_ones() as usize > w {
            continue;
        }
        checked += 1;
        if let Some(f) = judge(word, rows, cols, ca.min_distance(), cb.min_distance()) {
            return Ok((checked, Some(f)));
        }
    }
    Ok((checked, None))
}

fn sampled_pair(ca: &LinearCode, cb: &LinearCode, w: usize, samples: usize, seed: u64) -> (u64, Failure) {
    let (rows, cols) = (ca.length(), cb.length());
    let row_cap = w.div_ceil(cb.min_distance().value().unwrap_or(usize::MAX).max(1)).min(rows);
    let col_cap = w.div_ceil(ca.min_distance().value().unwrap_or(usize::MAX).max(1)).min(cols);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    for _ in 0..samples {
        let mut word = 0u64;
        let n_rows = rng.gen_range(0..=row_cap);
        let n_cols = rng.gen_range(0..=col_cap);
        for a in rand::seq::index::sample(&mut rng, rows, n_rows) {
            let v = random_codeword(&mut rng, cb);
            word ^= v.to_u64() << (a * cols);
        }
        for b in rand::seq::index::sample(&mut rng, cols, n_cols) {
            let v = random_codeword(&mut rng, ca);
            for a in v.iter_ones() {
                word ^= 1u64 << (a * cols + b);
            }
        }
        if word == 0 || word.count_ones() as usize > w {
            continue;
        }
        checked += 1;
        if let Some(f) = judge(word, rows, cols, ca.min_distance(), cb.min_distance()) {
            return (checked, Some(f));
        }
    }
    (checked, None)
}

fn random_codeword<R: Rng>(rng: &mut R, code: &LinearCode) -> BitVector {
    let k = code.dimension();
    code.encode(&BitVector::from_indices(k, (0..k).filter(|_| rng.gen_bool(0.5))))
}

fn spanning_rows(ca: &LinearCode, cb: &LinearCode) -> BitMatrix {
    let (rows, cols) = (ca.length(), cb.length());
    let n = rows * cols;
    let mut out = Vec::new();
    for b in 0..cols {
        for g in ca.generator().rows() {
            out.push(BitVector::from_indices(n, g.iter_ones().map(|a| a * cols + b)));
        }
    }
    for a in 0..rows {
        for g in cb.generator().rows() {
            out.push(BitVector::from_indices(n, g.iter_ones().map(|b| a * cols + b)));
        }
    }
    BitMatrix::from_rows(out, n)
}

/// `x = r + c` with `r` on rows `A'`, `c` on columns `B'`, within the
/// cardinality bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub r: BitVector,
    pub c: BitVector,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// Splits a low-weight dual tensor codeword into few rows and few columns.
/// Fails with `NoDecomposition` when no cover admits one, which happens only
/// if the pair is not robust at this weight.
pub fn decompose_r_plus_c(dt: &DualTensorCode, x: &BitVector) -> Result<Decomposition, CodeError> {
    if !dt.contains(x) {
        return Err(CodeError::NotACodeword);
    }
    let (rows, cols) = (dt.rows(), dt.cols());
    if rows * cols > 64 {
        return Err(CodeError::InvalidParameters("decomposition needs |A|·|B| ≤ 64".into()));
    }
    let n = rows * cols;
    let weight = x.weight();
    let max_rows = line_bound(weight, dt.code_b().min_distance());
    let max_cols = line_bound(weight, dt.code_a().min_distance());
    let masks = row_masks_of(x.to_u64(), rows, cols);
    let occupied: Vec<usize> = dt.nonzero_cols(x);
    let ka = dt.code_a().dimension();
    let kb = dt.code_b().dimension();
    let spanning = dt.spanning_set();
    let column_block = cols * ka;

    for size in 0..=max_cols.min(occupied.len()) {
        for sel_cols in occupied.iter().copied().combinations(size) {
            let col_mask = sel_cols.iter().fold(0u64, |acc, &b| acc | 1 << b);
            let sel_rows: Vec<usize> = (0..rows).filter(|&a| masks[a] & !col_mask != 0).collect();
            if sel_rows.len() > max_rows {
                continue;
            }
            let mut index = Vec::new();
            for &b in &sel_cols {
                index.extend((0..ka).map(|i| b * ka + i));
            }
            let n_col = index.len();
            for &a in &sel_rows {
                index.extend((0..kb).map(|j| column_block + a * kb + j));
            }
            let restricted = BitMatrix::from_rows(index.iter().map(|&i| spanning.row(i).clone()).collect(), n);
            if let Some(coeffs) = RowEchelon::with_transform(&restricted).express(x) {
                let mut c = BitVector::zeros(n);
                let mut r = BitVector::zeros(n);
                for t in coeffs.iter_ones() {
                    if t < n_col {
                        c ^= restricted.row(t);
                    } else {
                        r ^= restricted.row(t);
                    }
                }
                return Ok(Decomposition {
                    r,
                    c,
                    rows: sel_rows,
                    cols: sel_cols,
                });
            }
        }
    }
    Err(CodeError::NoDecomposition)
}
