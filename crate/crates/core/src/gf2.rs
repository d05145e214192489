//! Dense bit-packed linear algebra over GF(2).
//!
//! Vectors pack 64 coordinates per word; matrices are stored row-major as a
//! list of [`BitVector`] rows. Row reduction always picks the leftmost pivot
//! and the first row carrying it, so every derived object (kernels,
//! solutions, echelon forms) is reproducible across runs.

use std::fmt;
use std::ops::{BitAnd, BitXor, BitXorAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A vector in `F_2^len`. Padding bits past `len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; words_for(len)],
            len,
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            words: vec![!0; words_for(len)],
            len,
        };
        v.clear_padding();
        v
    }

    /// Builds a vector with the listed coordinates set. Repeated indices toggle.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Low `len` bits of `mask`, coordinate `i` taken from bit `i`.
    pub fn from_u64(len: usize, mask: u64) -> Self {
        assert!(len <= WORD, "from_u64 needs len <= 64");
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = mask;
            v.clear_padding();
        }
        v
    }

    /// First word of the packing; only meaningful for `len <= 64`.
    pub fn to_u64(&self) -> u64 {
        debug_assert!(self.len <= WORD);
        self.words.first().copied().unwrap_or(0)
    }

    fn clear_padding(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let bit = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= bit;
        } else {
            self.words[i / WORD] &= !bit;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot product");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn xor_with(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Index of the lowest set coordinate.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * WORD + t)
                }
            })
        })
    }

    pub fn support(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }

    /// Restriction to the listed coordinates, in the given order.
    pub fn select(&self, coords: &[usize]) -> BitVector {
        let mut out = BitVector::zeros(coords.len());
        for (k, &c) in coords.iter().enumerate() {
            if self.get(c) {
                out.set(k, true);
            }
        }
        out
    }

    /// Concatenation `self || other`.
    pub fn concat(&self, other: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitVector {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut v = BitVector::zeros(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(i, true),
                other => return Err(ParseError::new(format!("unexpected character {other:?} in bit string"))),
            }
        }
        Ok(v)
    }
}

impl Serialize for BitVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitVector {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl BitXorAssign<&BitVector> for BitVector {
    fn bitxor_assign(&mut self, rhs: &BitVector) {
        self.xor_with(rhs);
    }
}

impl BitXor for &BitVector {
    type Output = BitVector;

    fn bitxor(self, rhs: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_with(rhs);
        out
    }
}

impl BitAnd for &BitVector {
    type Output = BitVector;

    fn bitand(self, rhs: &BitVector) -> BitVector {
        assert_eq!(self.len, rhs.len, "length mismatch in and");
        BitVector {
            words: self.words.iter().zip(&rhs.words).map(|(a, b)| a & b).collect(),
            len: self.len,
        }
    }
}

/// Dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitVector>, cols: usize) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "row length does not match column count");
        }
        Self { cols, rows }
    }

    /// Parses rows of `0`/`1` characters; all rows must have equal length.
    pub fn from_strs(rows: &[&str]) -> Result<Self, ParseError> {
        let parsed: Vec<BitVector> = rows.iter().map(|r| r.parse()).collect::<Result<_, _>>()?;
        let cols = parsed.first().map_or(0, BitVector::len);
        if parsed.iter().any(|r| r.len() != cols) {
            return Err(ParseError::new("rows have differing lengths"));
        }
        Ok(Self { cols, rows: parsed })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn push_row(&mut self, row: BitVector) {
        assert_eq!(row.len(), self.cols, "row length does not match column count");
        self.rows.push(row);
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVector::is_zero)
    }

    pub fn column(&self, c: usize) -> BitVector {
        let mut v = BitVector::zeros(self.nrows());
        for (r, row) in self.rows.iter().enumerate() {
            if row.get(c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.nrows());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.iter_ones() {
                t.rows[c].set(r, true);
            }
        }
        t
    }

    /// `M · v`.
    pub fn mul_vec(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.cols, "vector length does not match column count");
        let mut out = BitVector::zeros(self.nrows());
        for (r, row) in self.rows.iter().enumerate() {
            if row.dot(v) {
                out.set(r, true);
            }
        }
        out
    }

    /// `vᵀ · M`, i.e. the combination of rows selected by `v`.
    pub fn combine_rows(&self, coeffs: &BitVector) -> BitVector {
        assert_eq!(coeffs.len(), self.nrows(), "coefficient length does not match row count");
        let mut out = BitVector::zeros(self.cols);
        for r in coeffs.iter_ones() {
            out ^= &self.rows[r];
        }
        out
    }

    /// `self · other`.
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.nrows(), "inner dimensions differ");
        let rows = self.rows.iter().map(|row| other.combine_rows(row)).collect();
        BitMatrix {
            cols: other.cols,
            rows,
        }
    }

    pub fn vstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols, "column counts differ");
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        BitMatrix { cols: self.cols, rows }
    }

    /// Kronecker product; row `(i, j)` is `self[i] ⊗ other[j]` with index
    /// `i * other.nrows() + j`, coordinate `(a, b)` at `a * other.ncols() + b`.
    pub fn kron(&self, other: &BitMatrix) -> BitMatrix {
        let cols = self.cols * other.cols;
        let mut rows = Vec::with_capacity(self.nrows() * other.nrows());
        for left in &self.rows {
            for right in &other.rows {
                rows.push(kron_vec(left, right));
            }
        }
        BitMatrix { cols, rows }
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, coords: &[usize]) -> BitMatrix {
        BitMatrix {
            cols: coords.len(),
            rows: self.rows.iter().map(|r| r.select(coords)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    /// Plain-text form: `rows cols` header, then one line of `0`/`1` per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.nrows(), self.cols);
        for row in &self.rows {
            s.push_str(&row.to_string());
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self, ParseError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| ParseError::new("missing header line"))?;
        let mut dims = header.split_whitespace().map(str::parse::<usize>);
        let (rows, cols) = match (dims.next(), dims.next(), dims.next()) {
            (Some(Ok(r)), Some(Ok(c)), None) => (r, c),
            _ => return Err(ParseError::new(format!("bad header {header:?}, expected \"rows cols\""))),
        };
        let mut out = BitMatrix::zeros(0, cols);
        for line in lines.by_ref().take(rows) {
            let row: BitVector = line.parse()?;
            if row.len() != cols {
                return Err(ParseError::new(format!("row {line:?} has length {}, expected {cols}", row.len())));
            }
            out.rows.push(row);
        }
        if out.nrows() != rows {
            return Err(ParseError::new(format!("expected {rows} rows, found {}", out.nrows())));
        }
        if lines.next().is_some() {
            return Err(ParseError::new("trailing data after matrix rows"));
        }
        Ok(out)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.nrows(), self.cols)?;
        for row in &self.rows {
            writeln!(f, "  {row}")?;
        }
        write!(f, "]")
    }
}

pub fn kron_vec(left: &BitVector, right: &BitVector) -> BitVector {
    let mut out = BitVector::zeros(left.len() * right.len());
    for a in left.iter_ones() {
        for b in right.iter_ones() {
            out.set(a * right.len() + b, true);
        }
    }
    out
}

/// Reduced row echelon form of a matrix, optionally tracking how each
/// reduced row is built from the original rows.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    cols: usize,
    source_rows: usize,
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
    transform: Option<Vec<BitVector>>,
}

impl RowEchelon {
    pub fn new(m: &BitMatrix) -> Self {
        Self::build(m, false)
    }

    pub fn with_transform(m: &BitMatrix) -> Self {
        Self::build(m, true)
    }

    fn build(m: &BitMatrix, track: bool) -> Self {
        let mut rows = m.rows.clone();
        let mut transform: Option<Vec<BitVector>> =
            track.then(|| (0..m.nrows()).map(|i| BitVector::from_indices(m.nrows(), [i])).collect());
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..m.cols {
            if next == rows.len() {
                break;
            }
            let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, found);
            if let Some(t) = transform.as_mut() {
                t.swap(next, found);
            }
            let pivot_row = rows[next].clone();
            let pivot_t = transform.as_ref().map(|t| t[next].clone());
            for r in 0..rows.len() {
                if r != next && rows[r].get(col) {
                    rows[r] ^= &pivot_row;
                    if let (Some(t), Some(pt)) = (transform.as_mut(), pivot_t.as_ref()) {
                        t[r] ^= pt;
                    }
                }
            }
            pivots.push(col);
            next += 1;
        }
        rows.truncate(next);
        if let Some(t) = transform.as_mut() {
            t.truncate(next);
        }
        Self {
            cols: m.cols,
            source_rows: m.nrows(),
            rows,
            pivots,
            transform,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The nonzero rows of the reduced form.
    pub fn basis(&self) -> BitMatrix {
        BitMatrix::from_rows(self.rows.clone(), self.cols)
    }

    /// Residual of `v` after eliminating every pivot; zero iff `v` is in the row space.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.cols, "vector length does not match column count");
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r.get(p) {
                r ^= row;
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coefficients over the original rows whose combination equals `v`,
    /// or `None` when `v` is outside the row space. Needs `with_transform`.
    pub fn express(&self, v: &BitVector) -> Option<BitVector> {
        let transform = self.transform.as_ref().expect("RowEchelon built without transform");
        assert_eq!(v.len(), self.cols, "vector length does not match column count");
        let mut r = v.clone();
        let mut coeffs = BitVector::zeros(self.source_rows);
        for ((row, &p), t) in self.rows.iter().zip(&self.pivots).zip(transform) {
            if r.get(p) {
                r ^= row;
                coeffs ^= t;
            }
        }
        r.is_zero().then_some(coeffs)
    }

    /// Basis of `{x : M x = 0}` read off the reduced form.
    pub fn kernel_basis(&self) -> Vec<BitVector> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVector::zeros(self.cols);
                v.set(free, true);
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if row.get(free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }
}

pub fn rank(m: &BitMatrix) -> usize {
    RowEchelon::new(m).rank()
}

/// Independent vectors spanning `ker M`; exactly `cols - rank(M)` of them.
pub fn kernel_basis(m: &BitMatrix) -> Vec<BitVector> {
    RowEchelon::new(m).kernel_basis()
}

/// Some `x` with `M x = b`, or `None` if `b` is outside the column space.
pub fn solve(m: &BitMatrix, b: &BitVector) -> Option<BitVector> {
    assert_eq!(b.len(), m.nrows(), "right-hand side length does not match row count");
    RowEchelon::with_transform(&m.transpose()).express(b)
}

pub fn in_row_space(m: &BitMatrix, v: &BitVector) -> bool {
    RowEchelon::new(m).contains(v)
}

/// Sparse GF(2) matrix stored as sorted column indices per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseBitMatrix {
    cols: usize,
    rows: Vec<Vec<usize>>,
}

impl SparseBitMatrix {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new() }
    }

    pub fn from_row_supports(rows: Vec<Vec<usize>>, cols: usize) -> Self {
        let mut m = Self::new(cols);
        for r in rows {
            m.push_row(r);
        }
        m
    }

    /// Adds a row given by its support; duplicate indices cancel.
    pub fn push_row(&mut self, mut support: Vec<usize>) {
        support.sort_unstable();
        let mut cleaned: Vec<usize> = Vec::with_capacity(support.len());
        for c in support {
            assert!(c < self.cols, "column {c} out of range");
            if cleaned.last() == Some(&c) {
                cleaned.pop();
            } else {
                cleaned.push(c);
            }
        }
        self.rows.push(cleaned);
    }

    pub fn from_dense(m: &BitMatrix) -> Self {
        Self {
            cols: m.ncols(),
            rows: m.rows().iter().map(BitVector::support).collect(),
        }
    }

    pub fn to_dense(&self) -> BitMatrix {
        BitMatrix::from_rows(
            self.rows
                .iter()
                .map(|r| BitVector::from_indices(self.cols, r.iter().copied()))
                .collect(),
            self.cols,
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn column_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.cols];
        for r in &self.rows {
            for &c in r {
                w[c] += 1;
            }
        }
        w
    }

    pub fn mul_vec(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.cols, "vector length does not match column count");
        let mut out = BitVector::zeros(self.rows.len());
        for (r, support) in self.rows.iter().enumerate() {
            if support.iter().filter(|&&c| v.get(c)).count() % 2 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    pub fn transpose(&self) -> SparseBitMatrix {
        let mut rows = vec![Vec::new(); self.cols];
        for (r, support) in self.rows.iter().enumerate() {
            for &c in support {
                rows[c].push(r);
            }
        }
        SparseBitMatrix {
            cols: self.rows.len(),
            rows,
        }
    }

    /// `"rows cols nnz"` header followed by one `"row col"` pair per entry.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.nrows(), self.cols, self.nnz());
        for (r, support) in self.rows.iter().enumerate() {
            for c in support {
                s.push_str(&format!("{r} {c}\n"));
            }
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self, ParseError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| ParseError::new("missing header line"))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|e| ParseError::new(format!("bad header {header:?}: {e}")))?;
        let [rows, cols, nnz] = dims[..] else {
            return Err(ParseError::new(format!("bad header {header:?}, expected \"rows cols nnz\"")));
        };
        let mut supports = vec![Vec::new(); rows];
        let mut count = 0;
        for line in lines {
            let mut it = line.split_whitespace().map(str::parse::<usize>);
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(r)), Some(Ok(c)), None) if r < rows && c < cols => supports[r].push(c),
                _ => return Err(ParseError::new(format!("bad entry line {line:?}"))),
            }
            count += 1;
        }
        if count != nnz {
            return Err(ParseError::new(format!("header declares {nnz} entries, found {count}")));
        }
        Ok(Self::from_row_supports(supports, cols))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Textbook elimination on `Vec<Vec<u8>>`, independent of the packed code path.
    fn oracle_rank(rows: &[Vec<u8>]) -> usize {
        let mut m: Vec<Vec<u8>> = rows.to_vec();
        let cols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            if let Some(p) = (rank..m.len()).find(|&r| m[r][c] == 1) {
                m.swap(rank, p);
                let pivot = m[rank].clone();
                for (r, row) in m.iter_mut().enumerate() {
                    if r != rank && row[c] == 1 {
                        row.iter_mut().zip(&pivot).for_each(|(x, y)| *x ^= y);
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    fn to_rows(m: &BitMatrix) -> Vec<Vec<u8>> {
        m.rows().iter().map(|r| r.to_bools().into_iter().map(u8::from).collect()).collect()
    }

    fn matrix_strategy(max_r: usize, max_c: usize) -> impl Strategy<Value = BitMatrix> {
        (1..=max_r, 1..=max_c).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r)
                .prop_map(move |rows| BitMatrix::from_rows(rows.iter().map(|b| BitVector::from_bools(b)).collect(), c))
        })
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(rank(&BitMatrix::identity(3)), 3);
        assert_eq!(rank(&BitMatrix::zeros(4, 6)), 0);
    }

    #[test]
    fn rank_random_5x8_matches_oracle() {
        let m = BitMatrix::from_strs(&["10110010", "01101101", "11011111", "00111000", "10000110"]).unwrap();
        assert_eq!(rank(&m), oracle_rank(&to_rows(&m)));
        // row 2 = row 0 + row 1
        assert_eq!(rank(&m), 4);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&BitMatrix::identity(4)).is_empty());

        let m = BitMatrix::from_strs(&["111"]).unwrap();
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(v.weight() % 2, 0);
            assert!(m.mul_vec(v).is_zero());
        }
        assert_eq!(rank(&BitMatrix::from_rows(k, 3)), 2);

        let k = kernel_basis(&BitMatrix::zeros(2, 4));
        assert_eq!(k.len(), 4);
        assert_eq!(rank(&BitMatrix::from_rows(k, 4)), 4);
    }

    #[test]
    fn solve_examples() {
        let b: BitVector = "1011".parse().unwrap();
        assert_eq!(solve(&BitMatrix::identity(4), &b), Some(b.clone()));
        let m = BitMatrix::from_strs(&["110", "011", "101"]).unwrap();
        assert_eq!(solve(&m, &BitVector::zeros(3)), Some(BitVector::zeros(3)));
    }

    #[test]
    fn solve_3x3_against_span_enumeration() {
        // columns 110, 011, 101 span the even-weight vectors only
        let m = BitMatrix::from_strs(&["101", "110", "011"]).unwrap();
        let cols: Vec<u8> = (0..3)
            .map(|c| (0..3).fold(0u8, |acc, r| acc | (u8::from(m.get(r, c)) << r)))
            .collect();
        let span: Vec<u8> = (0u8..8)
            .map(|mask| (0..3).filter(|&i| mask >> i & 1 == 1).fold(0u8, |acc, i| acc ^ cols[i]))
            .collect();
        for target in 0u8..8 {
            let b = BitVector::from_u64(3, u64::from(target));
            let reachable = span.contains(&target);
            match solve(&m, &b) {
                Some(x) => {
                    assert!(reachable);
                    assert_eq!(m.mul_vec(&x), b);
                }
                None => assert!(!reachable, "target {target:03b} is in the span"),
            }
        }
    }

    #[test]
    fn row_space_against_enumeration() {
        let m = BitMatrix::from_strs(&["110100", "011010", "001101", "110111"]).unwrap();
        let mut span = std::collections::HashSet::new();
        for mask in 0u32..16 {
            let coeffs = BitVector::from_u64(4, u64::from(mask));
            span.insert(m.combine_rows(&coeffs));
        }
        for v in 0u64..64 {
            let v = BitVector::from_u64(6, v);
            assert_eq!(in_row_space(&m, &v), span.contains(&v), "{v}");
        }
        assert!(in_row_space(&m, m.row(2)));
        assert!(in_row_space(&m, &BitVector::zeros(6)));
    }

    #[test]
    fn padding_stays_clear() {
        let v = BitVector::ones(70);
        assert_eq!(v.weight(), 70);
        let w = &v ^ &v;
        assert!(w.is_zero());
        assert_eq!(BitVector::from_u64(3, 0xff).weight(), 3);
    }

    #[test]
    fn text_round_trip() {
        let m = BitMatrix::from_strs(&["101", "011"]).unwrap();
        assert_eq!(BitMatrix::parse_text(&m.to_text()).unwrap(), m);
        assert!(BitMatrix::parse_text("2 3\n101\n").is_err());
        assert!(BitMatrix::parse_text("1 3\n1a1\n").is_err());
        let s = SparseBitMatrix::from_dense(&m);
        assert_eq!(s.to_text(), "2 3 4\n0 0\n0 2\n1 1\n1 2\n");
        assert_eq!(SparseBitMatrix::parse_text(&s.to_text()).unwrap(), s);
    }

    proptest! {
        #[test]
        fn xor_laws(a in proptest::collection::vec(any::<bool>(), 0..150), b_seed in any::<u64>()) {
            let a = BitVector::from_bools(&a);
            let b = BitVector::from_indices(a.len(), (0..a.len()).filter(|i| (b_seed >> (i % 64)) & 1 == 1));
            prop_assert_eq!(&a ^ &b, &b ^ &a);
            prop_assert_eq!((&a ^ &a).weight(), 0);
            let mut c = a.clone();
            c ^= &b;
            c ^= &b;
            prop_assert_eq!(c, a);
        }

        #[test]
        fn rank_is_transpose_invariant(m in matrix_strategy(16, 16)) {
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
            prop_assert_eq!(rank(&m), oracle_rank(&to_rows(&m)));
            prop_assert!(rank(&m) <= m.nrows().min(m.ncols()));
        }

        #[test]
        fn kernel_is_independent_and_annihilated(m in matrix_strategy(12, 16)) {
            let k = kernel_basis(&m);
            prop_assert_eq!(k.len(), m.ncols() - rank(&m));
            for v in &k {
                prop_assert!(m.mul_vec(v).is_zero());
            }
            if !k.is_empty() {
                prop_assert_eq!(rank(&BitMatrix::from_rows(k.clone(), m.ncols())), k.len());
            }
        }

        #[test]
        fn solve_is_exact(m in matrix_strategy(10, 10), seed in any::<u64>()) {
            let x0 = BitVector::from_indices(m.ncols(), (0..m.ncols()).filter(|i| (seed >> i) & 1 == 1));
            let b = m.mul_vec(&x0);
            let x = solve(&m, &b).expect("consistent system");
            prop_assert_eq!(m.mul_vec(&x), b);
        }
    }
}
