//! Lifted product codes over the group algebra `F_2[G]`, their restriction to
//! a quantum Tanner code, and the decoding reduction between the two.
//!
//! Conventions: `M*` is the transpose with every group element inverted, so
//! that `⟨M x, y⟩ = ⟨x, M* y⟩` for the coefficient-wise inner product. With
//! that adjoint, `G_A = g_A D_A`, `G_B = g_B D_B` and `N_A = n_A D_A`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::complex::{build_complex, GeneratorSet, Side};
use crate::decoder::{DecodeOutcome, Decoder, DecoderConfig};
use crate::error::LiftError;
use crate::gf2::{kernel_basis, rank, solve, BitMatrix, BitVector, RowEchelon};
use crate::group::{build_group, FiniteGroup, GroupSpec};
use crate::local_codes::LinearCode;
use crate::qtanner::{build_qtanner, QuantumTannerCode};

/// Product of two group-algebra elements given by their supports.
fn elem_mul(x: &BitVector, y: &BitVector, group: &FiniteGroup) -> BitVector {
    let mut out = BitVector::zeros(group.order());
    for g in x.iter_ones() {
        for h in y.iter_ones() {
            out.flip(group.mul(g, h));
        }
    }
    out
}

/// Matrix over `F_2[G]`; each entry is the support of an algebra element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraMatrix {
    rows: usize,
    cols: usize,
    order: usize,
    entries: Vec<BitVector>,
}

impl GroupAlgebraMatrix {
    pub fn zeros(rows: usize, cols: usize, order: usize) -> Self {
        Self {
            rows,
            cols,
            order,
            entries: vec![BitVector::zeros(order); rows * cols],
        }
    }

    /// Embeds a binary matrix through `F_2 ⊂ F_2[G]`.
    pub fn from_bits(m: &BitMatrix, group: &FiniteGroup) -> Self {
        let mut out = Self::zeros(m.nrows(), m.ncols(), group.order());
        for r in 0..m.nrows() {
            for c in m.row(r).iter_ones() {
                out.toggle(r, c, group.identity());
            }
        }
        out
    }

    pub fn diagonal(elems: &[usize], order: usize) -> Self {
        let mut out = Self::zeros(elems.len(), elems.len(), order);
        for (i, &g) in elems.iter().enumerate() {
            out.toggle(i, i, g);
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, r: usize, c: usize) -> &BitVector {
        &self.entries[r * self.cols + c]
    }

    /// Adds the group element `g` to entry `(r, c)`.
    pub fn toggle(&mut self, r: usize, c: usize, g: usize) {
        self.entries[r * self.cols + c].flip(g);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BitVector::is_zero)
    }

    /// Total support size over all entries.
    pub fn weight(&self) -> usize {
        self.entries.iter().map(BitVector::weight).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a ^ b).collect();
        Self { entries, ..*self }
    }

    pub fn mul(&self, other: &Self, group: &FiniteGroup) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Self::zeros(self.rows, other.cols, self.order);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if x.is_zero() {
                    continue;
                }
                for k in 0..other.cols {
                    let y = other.get(j, k);
                    if !y.is_zero() {
                        out.entries[i * other.cols + k] ^= &elem_mul(x, y, group);
                    }
                }
            }
        }
        out
    }

    /// Transpose with element-wise group inversion.
    pub fn star(&self, group: &FiniteGroup) -> Self {
        let mut out = Self::zeros(self.cols, self.rows, self.order);
        for r in 0..self.rows {
            for c in 0..self.cols {
                for g in self.get(r, c).iter_ones() {
                    out.toggle(c, r, group.inv(g));
                }
            }
        }
        out
    }

    /// Bit matrix of `x ↦ M x` on `F_2[G]^cols`: entry `((r, g), (c, h))` is
    /// set iff `g·h⁻¹ ∈ M_rc`.
    pub fn flatten(&self, group: &FiniteGroup) -> BitMatrix {
        let n = self.order;
        let mut out = BitMatrix::zeros(self.rows * n, self.cols * n);
        for r in 0..self.rows {
            for c in 0..self.cols {
                for m in self.get(r, c).iter_ones() {
                    for h in 0..n {
                        out.set(r * n + group.mul(m, h), c * n + h, true);
                    }
                }
            }
        }
        out
    }

    /// Layout `(r·cols + c)·|G| + g`.
    pub fn to_vector(&self) -> BitVector {
        let n = self.order;
        BitVector::from_indices(
            self.entries.len() * n,
            self.entries.iter().enumerate().flat_map(|(k, e)| e.iter_ones().map(move |g| k * n + g)),
        )
    }

    pub fn from_vector(rows: usize, cols: usize, order: usize, v: &BitVector) -> Self {
        assert_eq!(v.len(), rows * cols * order, "vector length does not match the shape");
        let mut out = Self::zeros(rows, cols, order);
        for i in v.iter_ones() {
            out.entries[i / order].flip(i % order);
        }
        out
    }

    /// Solves `X·hᵀ = E` coefficient by coefficient for a full-rank binary
    /// `h`; pivot-leftmost particular solution.
    fn solve_right_transpose(e: &Self, h: &BitMatrix) -> Option<Self> {
        let n = e.order;
        let mut out = Self::zeros(e.rows, h.ncols(), n);
        for r in 0..e.rows {
            for g in 0..n {
                let target = BitVector::from_indices(e.cols, (0..e.cols).filter(|&c| e.get(r, c).get(g)));
                if target.is_zero() {
                    continue;
                }
                let x = solve(h, &target)?;
                for j in x.iter_ones() {
                    out.toggle(r, j, g);
                }
            }
        }
        Some(out)
    }
}

/// Error (or stabilizer support) on the lifted product qubits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpError {
    /// Block over `A × B`.
    pub ab: GroupAlgebraMatrix,
    /// Block `e_ij` over `C_j × D_i`.
    pub e00: GroupAlgebraMatrix,
    pub e01: GroupAlgebraMatrix,
    pub e10: GroupAlgebraMatrix,
    pub e11: GroupAlgebraMatrix,
}

impl LpError {
    fn blocks(&self) -> [&GroupAlgebraMatrix; 5] {
        [&self.ab, &self.e00, &self.e01, &self.e10, &self.e11]
    }

    pub fn weight(&self) -> usize {
        self.blocks().iter().map(|b| b.weight()).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            ab: self.ab.add(&other.ab),
            e00: self.e00.add(&other.e00),
            e01: self.e01.add(&other.e01),
            e10: self.e10.add(&other.e10),
            e11: self.e11.add(&other.e11),
        }
    }

    /// Blocks concatenated in the order `AB, 00, 01, 10, 11`.
    pub fn to_vector(&self) -> BitVector {
        self.blocks()
            .iter()
            .map(|b| b.to_vector())
            .reduce(|a, b| a.concat(&b))
            .expect("five blocks")
    }
}

/// The four syndrome blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSyndrome {
    /// `C_0 × B`.
    pub s0: GroupAlgebraMatrix,
    /// `C_1 × B`.
    pub s1: GroupAlgebraMatrix,
    /// `A × D_0`.
    pub t0: GroupAlgebraMatrix,
    /// `A × D_1`.
    pub t1: GroupAlgebraMatrix,
}

impl LpSyndrome {
    /// `(T_0, T_1)` flattened, matching the row order of the X-check matrix.
    pub fn t_vector(&self) -> BitVector {
        self.t0.to_vector().concat(&self.t1.to_vector())
    }

    /// `(S_0, S_1)` flattened, matching the row order of the Z-check matrix.
    pub fn s_vector(&self) -> BitVector {
        self.s0.to_vector().concat(&self.s1.to_vector())
    }
}

/// Serializable description of a lifted product instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpInstance {
    pub group: GroupSpec,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// Rows of `h_A` as 0/1 strings.
    pub ha: Vec<String>,
    pub hb: Vec<String>,
}

impl LpInstance {
    pub fn build(&self) -> Result<LiftedProductCode, LiftError> {
        let group = build_group(&self.group)?;
        let parse = |rows: &[String], len: usize| -> Result<BitMatrix, LiftError> {
            if rows.is_empty() {
                return Ok(BitMatrix::zeros(0, len));
            }
            let refs: Vec<&str> = rows.iter().map(String::as_str).collect();
            BitMatrix::from_strs(&refs).map_err(|e| LiftError::Dimension(e.to_string()))
        };
        let ha = parse(&self.ha, self.a.len())?;
        let hb = parse(&self.hb, self.b.len())?;
        build_lp(group, &ha, &hb, &self.a, &self.b)
    }
}

pub struct LiftedProductCode {
    group: FiniteGroup,
    gens_a: GeneratorSet,
    gens_b: GeneratorSet,
    ha: BitMatrix,
    hb: BitMatrix,
    ga: BitMatrix,
    gb: BitMatrix,
    na: BitMatrix,
    // group-algebra forms
    h_a: GroupAlgebraMatrix,
    h_b: GroupAlgebraMatrix,
    big_ha: GroupAlgebraMatrix,
    big_hb: GroupAlgebraMatrix,
    h_a_star: GroupAlgebraMatrix,
    h_b_star: GroupAlgebraMatrix,
    big_ha_star: GroupAlgebraMatrix,
    big_hb_star: GroupAlgebraMatrix,
    hx: BitMatrix,
    hz: BitMatrix,
    hz_echelon: OnceLock<RowEchelon>,
}

/// `n` with `n · hᵀ = I` for a full-rank binary `h`.
pub fn pseudo_right_inverse(h: &BitMatrix) -> Result<BitMatrix, LiftError> {
    let m = h.nrows();
    if rank(h) != m {
        return Err(LiftError::RankDeficient("h"));
    }
    let rows = (0..m)
        .map(|i| solve(h, &BitVector::from_indices(m, [i])).expect("full row rank is surjective"))
        .collect();
    Ok(BitMatrix::from_rows(rows, h.ncols()))
}

/// Rows spanning the kernel of `h`, as a matrix.
fn kernel_matrix(h: &BitMatrix) -> BitMatrix {
    BitMatrix::from_rows(kernel_basis(h), h.ncols())
}

pub fn build_lp(
    group: FiniteGroup,
    ha: &BitMatrix,
    hb: &BitMatrix,
    a: &[usize],
    b: &[usize],
) -> Result<LiftedProductCode, LiftError> {
    let gens_a = GeneratorSet::new(&group, a.to_vec(), Side::Left)?;
    let gens_b = GeneratorSet::new(&group, b.to_vec(), Side::Right)?;
    let delta = a.len();
    if b.len() != delta {
        return Err(LiftError::Dimension(format!("|A| = {delta} but |B| = {}", b.len())));
    }
    if ha.ncols() != delta || hb.ncols() != delta {
        return Err(LiftError::Dimension(format!(
            "parity checks must have {delta} columns, got {} and {}",
            ha.ncols(),
            hb.ncols()
        )));
    }
    if rank(ha) != ha.nrows() {
        return Err(LiftError::RankDeficient("h_A"));
    }
    if rank(hb) != hb.nrows() {
        return Err(LiftError::RankDeficient("h_B"));
    }
    let order = group.order();
    let na = pseudo_right_inverse(ha)?;
    let h_a = GroupAlgebraMatrix::from_bits(ha, &group);
    let h_b = GroupAlgebraMatrix::from_bits(hb, &group);
    let d_a = GroupAlgebraMatrix::diagonal(a, order);
    let d_b = GroupAlgebraMatrix::diagonal(b, order);
    let big_ha = h_a.mul(&d_a, &group);
    let big_hb = h_b.mul(&d_b, &group);
    let mut lp = LiftedProductCode {
        h_a_star: h_a.star(&group),
        h_b_star: h_b.star(&group),
        big_ha_star: big_ha.star(&group),
        big_hb_star: big_hb.star(&group),
        h_a,
        h_b,
        big_ha,
        big_hb,
        ga: kernel_matrix(ha),
        gb: kernel_matrix(hb),
        na,
        ha: ha.clone(),
        hb: hb.clone(),
        gens_a,
        gens_b,
        group,
        hx: BitMatrix::zeros(0, 0),
        hz: BitMatrix::zeros(0, 0),
        hz_echelon: OnceLock::new(),
    };
    lp.hx = lp.generator_matrix(false);
    lp.hz = lp.generator_matrix(true);
    Ok(lp)
}

impl LiftedProductCode {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn delta(&self) -> usize {
        self.gens_a.len()
    }

    pub fn m_a(&self) -> usize {
        self.ha.nrows()
    }

    pub fn m_b(&self) -> usize {
        self.hb.nrows()
    }

    pub fn ha(&self) -> &BitMatrix {
        &self.ha
    }

    pub fn hb(&self) -> &BitMatrix {
        &self.hb
    }

    /// Parity check of `(ker h_A)^⊥`, so `g_A h_Aᵀ = 0`.
    pub fn ga(&self) -> &BitMatrix {
        &self.ga
    }

    pub fn gb(&self) -> &BitMatrix {
        &self.gb
    }

    /// `n_A` with `n_A h_Aᵀ = I`.
    pub fn na(&self) -> &BitMatrix {
        &self.na
    }

    pub fn gens_a(&self) -> &GeneratorSet {
        &self.gens_a
    }

    pub fn gens_b(&self) -> &GeneratorSet {
        &self.gens_b
    }

    /// `|G|·(Δ² + 4 m_A m_B)`.
    pub fn n(&self) -> usize {
        let d = self.delta();
        self.group.order() * (d * d + 4 * self.m_a() * self.m_b())
    }

    /// X-type generators, one per weight-1 `(V_0, V_1)`; rows ordered like `(T_0, T_1)`.
    pub fn hx(&self) -> &BitMatrix {
        &self.hx
    }

    /// Z-type generators, one per weight-1 `(U_0, U_1)`; rows ordered like `(S_0, S_1)`.
    pub fn hz(&self) -> &BitMatrix {
        &self.hz
    }

    pub fn zero_error(&self) -> LpError {
        let (d, ma, mb, n) = (self.delta(), self.m_a(), self.m_b(), self.group.order());
        LpError {
            ab: GroupAlgebraMatrix::zeros(d, d, n),
            e00: GroupAlgebraMatrix::zeros(ma, mb, n),
            e01: GroupAlgebraMatrix::zeros(ma, mb, n),
            e10: GroupAlgebraMatrix::zeros(ma, mb, n),
            e11: GroupAlgebraMatrix::zeros(ma, mb, n),
        }
    }

    pub fn error_from_vector(&self, v: &BitVector) -> Result<LpError, LiftError> {
        if v.len() != self.n() {
            return Err(LiftError::Dimension(format!("error has length {}, expected {}", v.len(), self.n())));
        }
        let (d, ma, mb, n) = (self.delta(), self.m_a(), self.m_b(), self.group.order());
        let mut offset = 0;
        let mut take = |rows: usize, cols: usize| {
            let len = rows * cols * n;
            let part = BitVector::from_indices(len, (0..len).filter(|&i| v.get(offset + i)));
            offset += len;
            GroupAlgebraMatrix::from_vector(rows, cols, n, &part)
        };
        Ok(LpError {
            ab: take(d, d),
            e00: take(ma, mb),
            e01: take(ma, mb),
            e10: take(ma, mb),
            e11: take(ma, mb),
        })
    }

    /// Support of the Z-type stabilizer `(U_0, U_1)`, both over `C × B`.
    pub fn z_stabilizer(&self, u0: &GroupAlgebraMatrix, u1: &GroupAlgebraMatrix) -> LpError {
        let g = &self.group;
        LpError {
            ab: self.h_a_star.mul(u0, g).add(&self.big_ha_star.mul(u1, g)),
            e00: u0.mul(&self.h_b_star, g),
            e10: u0.mul(&self.big_hb_star, g),
            e01: u1.mul(&self.h_b_star, g),
            e11: u1.mul(&self.big_hb_star, g),
        }
    }

    /// Support of the X-type stabilizer `(V_0, V_1)`, both over `A × D`.
    pub fn x_stabilizer(&self, v0: &GroupAlgebraMatrix, v1: &GroupAlgebraMatrix) -> LpError {
        let g = &self.group;
        LpError {
            ab: v0.mul(&self.h_b, g).add(&v1.mul(&self.big_hb, g)),
            e00: self.h_a.mul(v0, g),
            e01: self.big_ha.mul(v0, g),
            e10: self.h_a.mul(v1, g),
            e11: self.big_ha.mul(v1, g),
        }
    }

    fn generator_matrix(&self, z_type: bool) -> BitMatrix {
        let (d, ma, mb, n) = (self.delta(), self.m_a(), self.m_b(), self.group.order());
        let (rows, cols) = if z_type { (ma, d) } else { (d, mb) };
        let zero = GroupAlgebraMatrix::zeros(rows, cols, n);
        let mut out = Vec::with_capacity(2 * rows * cols * n);
        for block in 0..2 {
            for r in 0..rows {
                for c in 0..cols {
                    for g in 0..n {
                        let mut unit = zero.clone();
                        unit.toggle(r, c, g);
                        let (p0, p1) = if block == 0 { (&unit, &zero) } else { (&zero, &unit) };
                        let support = if z_type {
                            self.z_stabilizer(p0, p1)
                        } else {
                            self.x_stabilizer(p0, p1)
                        };
                        out.push(support.to_vector());
                    }
                }
            }
        }
        BitMatrix::from_rows(out, self.n())
    }

    pub fn syndrome(&self, e: &LpError) -> LpSyndrome {
        let g = &self.group;
        LpSyndrome {
            s0: self.h_a.mul(&e.ab, g).add(&e.e00.mul(&self.h_b, g)).add(&e.e10.mul(&self.big_hb, g)),
            s1: self.big_ha.mul(&e.ab, g).add(&e.e01.mul(&self.h_b, g)).add(&e.e11.mul(&self.big_hb, g)),
            t0: e.ab.mul(&self.h_b_star, g).add(&self.h_a_star.mul(&e.e00, g)).add(&self.big_ha_star.mul(&e.e01, g)),
            t1: e.ab.mul(&self.big_hb_star, g).add(&self.h_a_star.mul(&e.e10, g)).add(&self.big_ha_star.mul(&e.e11, g)),
        }
    }

    fn hz_echelon(&self) -> &RowEchelon {
        self.hz_echelon.get_or_init(|| RowEchelon::new(&self.hz))
    }

    /// Whether `v` is in the row space of the Z-type generators.
    pub fn in_stabilizer(&self, v: &BitVector) -> bool {
        self.hz_echelon().contains(v)
    }

    pub fn stabilizer_equivalent(&self, e1: &LpError, e2: &LpError) -> bool {
        self.in_stabilizer(&e1.add(e2).to_vector())
    }

    /// Largest generator weight over both types.
    pub fn max_generator_weight(&self) -> usize {
        self.hx.rows().iter().chain(self.hz.rows()).map(BitVector::weight).max().unwrap_or(0)
    }

    /// Equivalent error with `e_01 = e_10 = 0`, obtained by adding the Z-type
    /// stabilizer with `U_0 H_B* = e_10` and `U_1 h_B* = e_01`.
    pub fn simplify_error(&self, e: &LpError) -> LpError {
        let g = &self.group;
        // U_0 H_B* = U_0 D_B⁻¹ h_Bᵀ, so solve W h_Bᵀ = e_10 and set U_0 = W D_B.
        let w = GroupAlgebraMatrix::solve_right_transpose(&e.e10, &self.hb).expect("h_B has full row rank");
        let d_b = GroupAlgebraMatrix::diagonal(self.gens_b.elems(), g.order());
        let u0 = w.mul(&d_b, g);
        let u1 = GroupAlgebraMatrix::solve_right_transpose(&e.e01, &self.hb).expect("h_B has full row rank");
        let simplified = e.add(&self.z_stabilizer(&u0, &u1));
        debug_assert!(simplified.e01.is_zero() && simplified.e10.is_zero());
        simplified
    }

    fn d_a(&self) -> GroupAlgebraMatrix {
        GroupAlgebraMatrix::diagonal(self.gens_a.elems(), self.group.order())
    }

    fn d_b(&self) -> GroupAlgebraMatrix {
        GroupAlgebraMatrix::diagonal(self.gens_b.elems(), self.group.order())
    }

    /// `AB`-block index `(i·Δ + j)·|G| + x` to the square of the complex whose
    /// `V_10` corner is `x`, i.e. the triple `(x·b_j⁻¹, a_i, b_j)`.
    fn ab_to_square(&self, q: &QuantumTannerCode) -> Vec<usize> {
        let (d, n) = (self.delta(), self.group.order());
        let b = self.gens_b.elems();
        let mut map = vec![0; d * d * n];
        for i in 0..d {
            for j in 0..d {
                for x in 0..n {
                    let g = self.group.mul(x, self.group.inv(b[j]));
                    map[(i * d + j) * n + x] = q.complex().square_id(g, i, j);
                }
            }
        }
        map
    }

    /// `A × B` blocks of the stabilizers `(U_0' G_B, U_1' g_B)` and
    /// `(g_A* V_0', G_A* V_1')`, as vectors over the squares of `q`.
    /// Returns `(x_rows, z_rows)`.
    pub fn restricted_stabilizers(&self, q: &QuantumTannerCode) -> (BitMatrix, BitMatrix) {
        let g = &self.group;
        let n = g.order();
        let map = self.ab_to_square(q);
        let to_squares = |ab: &GroupAlgebraMatrix| {
            BitVector::from_indices(q.n(), ab.to_vector().iter_ones().map(|k| map[k]))
        };
        let ga = GroupAlgebraMatrix::from_bits(&self.ga, g);
        let gb = GroupAlgebraMatrix::from_bits(&self.gb, g);
        let big_ga = ga.mul(&self.d_a(), g);
        let big_gb = gb.mul(&self.d_b(), g);
        let ga_star = ga.star(g);
        let big_ga_star = big_ga.star(g);

        let mut z_rows = Vec::new();
        let zero_u = GroupAlgebraMatrix::zeros(self.m_a(), self.gb.nrows(), n);
        for (left, right) in [(&self.h_a_star, &big_gb), (&self.big_ha_star, &gb)] {
            for r in 0..zero_u.rows() {
                for c in 0..zero_u.cols() {
                    for x in 0..n {
                        let mut unit = zero_u.clone();
                        unit.toggle(r, c, x);
                        z_rows.push(to_squares(&left.mul(&unit, g).mul(right, g)));
                    }
                }
            }
        }
        let mut x_rows = Vec::new();
        let zero_v = GroupAlgebraMatrix::zeros(self.ga.nrows(), self.m_b(), n);
        for (left, right) in [(&ga_star, &self.h_b), (&big_ga_star, &self.big_hb)] {
            for r in 0..zero_v.rows() {
                for c in 0..zero_v.cols() {
                    for x in 0..n {
                        let mut unit = zero_v.clone();
                        unit.toggle(r, c, x);
                        x_rows.push(to_squares(&left.mul(&unit, g).mul(right, g)));
                    }
                }
            }
        }
        (BitMatrix::from_rows(x_rows, q.n()), BitMatrix::from_rows(z_rows, q.n()))
    }

    /// Local codes of the restricted code: `C_A = ker g_A` (generated by
    /// `h_A`) and `C_B = ker h_B` (generated by `g_B`).
    pub fn local_codes(&self) -> Result<(LinearCode, LinearCode), LiftError> {
        let ca = LinearCode::from_parts(self.ha.clone(), self.ga.clone()).map_err(crate::error::QTannerError::from)?;
        let cb = LinearCode::from_parts(self.gb.clone(), self.hb.clone()).map_err(crate::error::QTannerError::from)?;
        Ok((ca, cb))
    }

    /// `T_0`, `T_1` from the flattened X-syndrome.
    fn split_t(&self, syndrome: &BitVector) -> Result<(GroupAlgebraMatrix, GroupAlgebraMatrix), LiftError> {
        let (d, mb, n) = (self.delta(), self.m_b(), self.group.order());
        let half = d * mb * n;
        if syndrome.len() != 2 * half {
            return Err(LiftError::Dimension(format!("syndrome has length {}, expected {}", syndrome.len(), 2 * half)));
        }
        let part = |off: usize| BitVector::from_indices(half, (0..half).filter(|&i| syndrome.get(off + i)));
        Ok((
            GroupAlgebraMatrix::from_vector(d, mb, n, &part(0)),
            GroupAlgebraMatrix::from_vector(d, mb, n, &part(half)),
        ))
    }

    /// Projects `(T_0, T_1)` through `g_A` and `G_A` onto the X-syndrome of
    /// the restricted code: `g_A T_0` sits on `V_10`, `G_A T_1` on `V_01`.
    pub fn project_syndrome(&self, q: &QuantumTannerCode, syndrome: &BitVector) -> Result<BitVector, LiftError> {
        let g = &self.group;
        let n = g.order();
        let (t0, t1) = self.split_t(syndrome)?;
        let ga = GroupAlgebraMatrix::from_bits(&self.ga, g);
        let big_ga = ga.mul(&self.d_a(), g);
        let p0 = ga.mul(&t0, g);
        let p1 = big_ga.mul(&t1, g);
        let r = q.local_syndrome_bits();
        let mb = self.m_b();
        let mut out = BitVector::zeros(q.hx().nrows());
        for (p, slot_offset) in [(&p1, 0), (&p0, n)] {
            for c in 0..p.rows() {
                for d in 0..mb {
                    for x in p.get(c, d).iter_ones() {
                        out.flip((slot_offset + x) * r + c * mb + d);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Builds the quantum Tanner code on the left-right complex of the same
/// group and generators, and checks that its generator row spaces equal the
/// `A × B` restriction of the corresponding lifted product stabilizers.
pub fn qtanner_from_lp(lp: &LiftedProductCode) -> Result<QuantumTannerCode, LiftError> {
    let complex = build_complex(lp.group(), lp.gens_a(), lp.gens_b())?;
    let (ca, cb) = lp.local_codes()?;
    let q = build_qtanner(&complex, &ca, &cb)?;
    let (x_rows, z_rows) = lp.restricted_stabilizers(&q);
    let same = |a: &BitMatrix, b: &BitMatrix| {
        let (ra, rb) = (rank(a), rank(b));
        ra == rb && rank(&a.vstack(b)) == ra
    };
    if !same(&x_rows, q.hx_dense()) {
        return Err(LiftError::Correspondence("X-type"));
    }
    if !same(&z_rows, q.hz_dense()) {
        return Err(LiftError::Correspondence("Z-type"));
    }
    Ok(q)
}

#[derive(Clone, Debug)]
pub struct LpDecodeOutcome {
    pub estimate: LpError,
    pub converged: bool,
    pub inner: DecodeOutcome,
}

/// Decodes an X-syndrome `(T_0, T_1)` of the lifted product code with a
/// decoder bound to `qtanner_from_lp(lp)`.
pub fn lp_decode_with(
    lp: &LiftedProductCode,
    decoder: &Decoder<'_>,
    syndrome: &BitVector,
) -> Result<LpDecodeOutcome, LiftError> {
    let q = decoder.code();
    let g = lp.group();
    let projected = lp.project_syndrome(q, syndrome)?;
    let (inner, _) = decoder.decode(&projected)?;
    let map = lp.ab_to_square(q);
    let (d, n) = (lp.delta(), g.order());
    let ab_vec = BitVector::from_indices(d * d * n, (0..d * d * n).filter(|&k| inner.ehat.get(map[k])));
    let ab = GroupAlgebraMatrix::from_vector(d, d, n, &ab_vec);
    let (t0, t1) = lp.split_t(syndrome)?;
    let na = GroupAlgebraMatrix::from_bits(lp.na(), g);
    let big_na = na.mul(&lp.d_a(), g);
    let mut estimate = lp.zero_error();
    estimate.e00 = na.mul(&t0.add(&ab.mul(&lp.h_b_star, g)), g);
    estimate.e11 = big_na.mul(&t1.add(&ab.mul(&lp.big_hb_star, g)), g);
    estimate.ab = ab;
    Ok(LpDecodeOutcome {
        estimate,
        converged: inner.converged,
        inner,
    })
}

pub fn lp_decode(
    lp: &LiftedProductCode,
    q: &QuantumTannerCode,
    syndrome: &BitVector,
    cfg: DecoderConfig,
) -> Result<LpDecodeOutcome, LiftError> {
    let decoder = Decoder::new(q, cfg).map_err(LiftError::Dimension)?;
    lp_decode_with(lp, &decoder, syndrome)
}

/// The Z_6 instance with `h_A` the parity check of `[3,2,2]` and `h_B` that
/// of `[3,1,3]`.
pub fn reference_lp_instance() -> LpInstance {
    LpInstance {
        group: GroupSpec::Cyclic(6),
        a: vec![1, 3, 5],
        b: vec![1, 3, 5],
        ha: vec!["111".into()],
        hb: vec!["110".into(), "011".into()],
    }
}
