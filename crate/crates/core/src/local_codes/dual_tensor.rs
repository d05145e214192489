use crate::error::CodeError;
use crate::gf2::{BitMatrix, BitVector, RowEchelon};

use super::linear::LinearCode;

/// Largest number of syndrome bits for which the coset-leader table is built.
pub const COSET_TABLE_BITS_CAP: usize = 20;

/// `C_A ⊗ F_2^B + F_2^A ⊗ C_B` on `A × B` with a complete coset-leader table.
///
/// Coordinate `(a, b)` sits at `a * |B| + b`; a "column" is a fixed `b`, a
/// "row" a fixed `a`.
#[derive(Clone, Debug)]
pub struct DualTensorCode {
    code_a: LinearCode,
    code_b: LinearCode,
    par: BitMatrix,
    unit_syndromes: Vec<u32>,
    leaders: Vec<BitVector>,
    /// Column generators (gen_a row `i` in column `b`, ordered by `b` then `i`)
    /// followed by row generators (gen_b row `j` in row `a`).
    spanning: BitMatrix,
    column_gens: usize,
    spanning_solver: RowEchelon,
}

/// A dual-tensor codeword split into its column part `c` and row part `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub c: BitVector,
    pub r: BitVector,
}

impl DualTensorCode {
    pub fn new(code_a: &LinearCode, code_b: &LinearCode) -> Result<Self, CodeError> {
        let (da, db) = (code_a.length(), code_b.length());
        let par = code_a.parity_check().kron(code_b.parity_check());
        let bits = par.nrows();
        if bits > COSET_TABLE_BITS_CAP {
            return Err(CodeError::TableCapExceeded {
                syndrome_bits: bits,
                cap: COSET_TABLE_BITS_CAP,
            });
        }
        let n = da * db;
        let par_t = par.transpose();
        let unit_syndromes: Vec<u32> = (0..n).map(|i| par_t.row(i).to_u64() as u32).collect();
        let leaders = build_leader_table(n, bits, &unit_syndromes);

        let mut rows = Vec::new();
        for b in 0..db {
            for g in code_a.generator().rows() {
                rows.push(BitVector::from_indices(n, g.iter_ones().map(|a| a * db + b)));
            }
        }
        let column_gens = rows.len();
        for a in 0..da {
            for g in code_b.generator().rows() {
                rows.push(BitVector::from_indices(n, g.iter_ones().map(|b| a * db + b)));
            }
        }
        let spanning = BitMatrix::from_rows(rows, n);
        let spanning_solver = RowEchelon::with_transform(&spanning);
        Ok(Self {
            code_a: code_a.clone(),
            code_b: code_b.clone(),
            par,
            unit_syndromes,
            leaders,
            spanning,
            column_gens,
            spanning_solver,
        })
    }

    pub fn code_a(&self) -> &LinearCode {
        &self.code_a
    }

    pub fn code_b(&self) -> &LinearCode {
        &self.code_b
    }

    pub fn rows(&self) -> usize {
        self.code_a.length()
    }

    pub fn cols(&self) -> usize {
        self.code_b.length()
    }

    pub fn length(&self) -> usize {
        self.rows() * self.cols()
    }

    pub fn dimension(&self) -> usize {
        self.length() - self.par.nrows()
    }

    pub fn parity_check(&self) -> &BitMatrix {
        &self.par
    }

    pub fn syndrome_bits(&self) -> usize {
        self.par.nrows()
    }

    /// Generators spanning the code: column codewords first, then row codewords.
    pub fn spanning_set(&self) -> &BitMatrix {
        &self.spanning
    }

    /// A basis of the code.
    pub fn basis(&self) -> BitMatrix {
        self.spanning_solver.basis()
    }

    /// Syndrome as an integer; bit `t` is parity-check row `t`.
    pub fn syndrome(&self, x: &BitVector) -> u32 {
        assert_eq!(x.len(), self.length(), "word length does not match A × B");
        x.iter_ones().fold(0, |acc, i| acc ^ self.unit_syndromes[i])
    }

    /// Syndrome of a unit vector at coordinate `i`.
    pub fn unit_syndrome(&self, i: usize) -> u32 {
        self.unit_syndromes[i]
    }

    pub fn syndrome_vector(&self, syndrome: u32) -> BitVector {
        BitVector::from_u64(self.syndrome_bits(), syndrome as u64)
    }

    pub fn syndrome_from_vector(&self, s: &BitVector) -> u32 {
        assert_eq!(s.len(), self.syndrome_bits(), "syndrome length mismatch");
        s.to_u64() as u32
    }

    /// Minimum-weight word with the given syndrome.
    pub fn leader(&self, syndrome: u32) -> &BitVector {
        &self.leaders[syndrome as usize]
    }

    pub fn contains(&self, x: &BitVector) -> bool {
        self.syndrome(x) == 0
    }

    /// Coefficients over `spanning_set()` producing `x`, or `None` off the code.
    pub fn express(&self, x: &BitVector) -> Option<BitVector> {
        self.spanning_solver.express(x)
    }

    /// Some split `x = c + r` with `c ∈ C_A ⊗ F_2^B` and `r ∈ F_2^A ⊗ C_B`.
    pub fn split(&self, x: &BitVector) -> Option<Split> {
        let coeffs = self.express(x)?;
        let n = self.length();
        let mut c = BitVector::zeros(n);
        let mut r = BitVector::zeros(n);
        for i in coeffs.iter_ones() {
            if i < self.column_gens {
                c ^= self.spanning.row(i);
            } else {
                r ^= self.spanning.row(i);
            }
        }
        Some(Split { c, r })
    }

    pub fn coordinate(&self, a: usize, b: usize) -> usize {
        a * self.cols() + b
    }

    /// Rows `a` on which `x` is nonzero.
    pub fn nonzero_rows(&self, x: &BitVector) -> Vec<usize> {
        let mut rows: Vec<usize> = x.iter_ones().map(|i| i / self.cols()).collect();
        rows.dedup();
        rows
    }

    /// Columns `b` on which `x` is nonzero.
    pub fn nonzero_cols(&self, x: &BitVector) -> Vec<usize> {
        let mut seen = vec![false; self.cols()];
        for i in x.iter_ones() {
            seen[i % self.cols()] = true;
        }
        (0..self.cols()).filter(|&b| seen[b]).collect()
    }
}

/// Minimum-weight error `ε` sharing the syndrome of `x`; `x + ε` is a nearest codeword.
pub fn coset_leader_decode(dt: &DualTensorCode, x: &BitVector) -> BitVector {
    dt.leader(dt.syndrome(x)).clone()
}

/// Fills one leader per syndrome, walking supports by increasing weight and in
/// lexicographic order within a weight, keeping the first hit.
fn build_leader_table(n: usize, bits: usize, unit: &[u32]) -> Vec<BitVector> {
    let size = 1usize << bits;
    let mut table: Vec<Option<BitVector>> = vec![None; size];
    table[0] = Some(BitVector::zeros(n));
    let mut filled = 1;
    let mut chosen = Vec::with_capacity(n);
    let mut weight = 1;
    while filled < size && weight <= n {
        fill_weight(n, weight, 0, 0, unit, &mut chosen, &mut table, &mut filled);
        weight += 1;
    }
    table
        .into_iter()
        .map(|e| e.expect("parity checks are full rank, so every syndrome is reached"))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn fill_weight(
    n: usize,
    remaining: usize,
    start: usize,
    acc: u32,
    unit: &[u32],
    chosen: &mut Vec<usize>,
    table: &mut [Option<BitVector>],
    filled: &mut usize,
) {
    if *filled == table.len() {
        return;
    }
    if remaining == 0 {
        let slot = &mut table[acc as usize];
        if slot.is_none() {
            *slot = Some(BitVector::from_indices(n, chosen.iter().copied()));
            *filled += 1;
        }
        return;
    }
    for i in start..=(n - remaining) {
        chosen.push(i);
        fill_weight(n, remaining - 1, i + 1, acc ^ unit[i], unit, chosen, table, filled);
        chosen.pop();
    }
}
