//! The quadripartite left-right Cayley complex and its graphs.

use std::collections::VecDeque;
use std::fmt;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::ComplexError;
use crate::group::FiniteGroup;

/// Eigenvalues within this distance (scaled by `1 + degree`) of `±degree`
/// count as trivial.
pub const EIGEN_TOLERANCE: f64 = 1e-8;
/// Slack allowed when comparing `λ` against the Ramanujan bound.
pub const RAMANUJAN_SLACK: f64 = 1e-6;

/// Whether generators act by left (`g ↦ a·g`) or right (`g ↦ g·b`) multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// A symmetric generating set without the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    elems: Vec<usize>,
    side: Side,
}

impl GeneratorSet {
    pub fn new(group: &FiniteGroup, elems: Vec<usize>, side: Side) -> Result<Self, ComplexError> {
        if elems.is_empty() {
            return Err(ComplexError::Empty);
        }
        let mut present = vec![false; group.order()];
        for &x in &elems {
            if x >= group.order() {
                return Err(ComplexError::OutOfRange(x, group.order()));
            }
            if x == group.identity() {
                return Err(ComplexError::ContainsIdentity);
            }
            if std::mem::replace(&mut present[x], true) {
                return Err(ComplexError::Duplicate(x));
            }
        }
        for &x in &elems {
            if !present[group.inv(x)] {
                return Err(ComplexError::NotSymmetric(x, group.inv(x)));
            }
        }
        let set = Self { elems, side };
        let reached = set.reachable(group);
        if reached < group.order() {
            return Err(ComplexError::Disconnected {
                reached,
                order: group.order(),
            });
        }
        Ok(set)
    }

    fn reachable(&self, group: &FiniteGroup) -> usize {
        let mut seen = vec![false; group.order()];
        let mut queue = VecDeque::from([group.identity()]);
        seen[group.identity()] = true;
        let mut count = 1;
        while let Some(g) = queue.pop_front() {
            for &s in &self.elems {
                let h = self.act(group, s, g);
                if !seen[h] {
                    seen[h] = true;
                    count += 1;
                    queue.push_back(h);
                }
            }
        }
        count
    }

    /// `s·g` for a left set, `g·s` for a right set.
    #[inline]
    pub fn act(&self, group: &FiniteGroup, s: usize, g: usize) -> usize {
        match self.side {
            Side::Left => group.mul(s, g),
            Side::Right => group.mul(g, s),
        }
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// The Cayley graph on the group elements.
    pub fn cayley_graph(&self, group: &FiniteGroup) -> Graph {
        let adjacency = (0..group.order())
            .map(|g| self.elems.iter().map(|&s| self.act(group, s, g)).collect())
            .collect();
        Graph {
            name: format!("Cay({}, {:?})", group.name(), self.side),
            adjacency,
            side0: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VertexClass {
    V00,
    V01,
    V10,
    V11,
}

impl VertexClass {
    pub const ALL: [VertexClass; 4] = [VertexClass::V00, VertexClass::V01, VertexClass::V10, VertexClass::V11];

    pub fn index(self) -> usize {
        self as usize
    }

    /// `V_0 = V_00 ∪ V_11`; `V_1 = V_01 ∪ V_10`.
    pub fn in_v0(self) -> bool {
        matches!(self, VertexClass::V00 | VertexClass::V11)
    }

    pub fn label(self) -> &'static str {
        match self {
            VertexClass::V00 => "00",
            VertexClass::V01 => "01",
            VertexClass::V10 => "10",
            VertexClass::V11 => "11",
        }
    }
}

impl fmt::Display for VertexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{}", self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub class: VertexClass,
    pub g: usize,
}

/// Undirected multigraph as neighbour lists (repeated entries are parallel edges).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub name: String,
    pub adjacency: Vec<Vec<usize>>,
    /// For a bipartite graph, the vertices `0..side0` form one side.
    pub side0: Option<usize>,
}

impl Graph {
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Each undirected edge once, with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Common degree, or `None` when irregular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency.iter().all(|n| n.len() == d).then_some(d)
    }

    pub fn adjacency_matrix(&self) -> DMatrix<f64> {
        let n = self.vertex_count();
        let mut m = DMatrix::zeros(n, n);
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                m[(u, v)] += 1.0;
            }
        }
        m
    }

    /// Number of edges (with multiplicity) between `s` and `t`.
    pub fn edges_between(&self, s: &[usize], t: &[usize]) -> usize {
        let mut in_t = vec![false; self.vertex_count()];
        for &v in t {
            in_t[v] = true;
        }
        s.iter()
            .map(|&u| self.adjacency[u].iter().filter(|&&v| in_t[v]).count())
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphSpectrum {
    pub graph: String,
    pub vertices: usize,
    pub degree: usize,
    pub lambda: f64,
    pub ramanujan: bool,
}

/// Largest absolute eigenvalue once one eigenvalue at `+degree` and (if
/// present) one at `-degree` are set aside.
///
/// Only a single copy of each is removed: a disconnected graph keeps its
/// extra `±degree` eigenvalues, which is what the mixing inequality needs.
pub fn spectral_lambda(graph: &Graph) -> GraphSpectrum {
    let degree = graph.regular_degree().expect("spectral_lambda needs a regular graph");
    let mut eig: Vec<f64> = SymmetricEigen::new(graph.adjacency_matrix()).eigenvalues.iter().copied().collect();
    eig.sort_by(|a, b| a.total_cmp(b));
    let d = degree as f64;
    let tol = EIGEN_TOLERANCE * (1.0 + d);
    if let Some(i) = eig.iter().rposition(|&x| (x - d).abs() <= tol) {
        eig.remove(i);
    }
    if let Some(i) = eig.iter().position(|&x| (x + d).abs() <= tol) {
        eig.remove(i);
    }
    let lambda = eig.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    GraphSpectrum {
        graph: graph.name.clone(),
        vertices: graph.vertex_count(),
        degree,
        lambda,
        ramanujan: lambda <= 2.0 * (d - 1.0).max(0.0).sqrt() + RAMANUJAN_SLACK,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MixingCheck {
    pub edges: usize,
    pub bound: f64,
    pub holds: bool,
}

/// `|E(S, T)| ≤ (Δ/|V_0|)|S||T| + λ√(|S||T|)` for `S` on side 0 and `T` on side 1.
pub fn check_mixing(graph: &Graph, lambda: f64, s: &[usize], t: &[usize]) -> MixingCheck {
    let side0 = graph.side0.expect("check_mixing needs a bipartite graph");
    assert!(s.iter().all(|&v| v < side0), "S must lie on side 0");
    assert!(t.iter().all(|&v| v >= side0), "T must lie on side 1");
    let degree = graph.regular_degree().expect("check_mixing needs a regular graph") as f64;
    let (ns, nt) = (s.len() as f64, t.len() as f64);
    let edges = graph.edges_between(s, t);
    let bound = degree / side0 as f64 * ns * nt + lambda * (ns * nt).sqrt();
    MixingCheck {
        edges,
        bound,
        holds: edges as f64 <= bound + 1e-9,
    }
}

/// The square complex on four copies of `G`.
///
/// Squares are indexed by `(g, a, b)` with `g` the `V_00` corner, at id
/// `(g·Δ + i_a)·Δ + i_b`. Corners: `g`, `a·g`, `g·b`, `a·g·b` in classes
/// 00, 01, 10, 11. Vertex id is `class · |G| + g`.
#[derive(Clone, Debug)]
pub struct LeftRightComplex {
    group: FiniteGroup,
    gens_a: GeneratorSet,
    gens_b: GeneratorSet,
    /// Per vertex id, the squares `φ_v(a, b)` at local index `i_a·Δ + i_b`.
    local: Vec<Vec<usize>>,
}

pub fn build_complex(
    group: &FiniteGroup,
    gens_a: &GeneratorSet,
    gens_b: &GeneratorSet,
) -> Result<LeftRightComplex, ComplexError> {
    LeftRightComplex::new(group.clone(), gens_a.clone(), gens_b.clone())
}

impl LeftRightComplex {
    pub fn new(group: FiniteGroup, gens_a: GeneratorSet, gens_b: GeneratorSet) -> Result<Self, ComplexError> {
        if gens_a.side() != Side::Left {
            return Err(ComplexError::WrongSide { expected: Side::Left });
        }
        if gens_b.side() != Side::Right {
            return Err(ComplexError::WrongSide { expected: Side::Right });
        }
        if gens_a.len() != gens_b.len() {
            return Err(ComplexError::SizeMismatch(gens_a.len(), gens_b.len()));
        }
        let delta = gens_a.len();
        let order = group.order();
        let mut local = Vec::with_capacity(4 * order);
        for class in VertexClass::ALL {
            for h in 0..order {
                let mut view = Vec::with_capacity(delta * delta);
                for &a in gens_a.elems() {
                    for &b in gens_b.elems() {
                        let g = match class {
                            VertexClass::V00 => h,
                            VertexClass::V01 => group.mul(group.inv(a), h),
                            VertexClass::V10 => group.mul(h, group.inv(b)),
                            VertexClass::V11 => group.mul(group.mul(group.inv(a), h), group.inv(b)),
                        };
                        view.push(g);
                    }
                }
                let view = view
                    .into_iter()
                    .enumerate()
                    .map(|(local_idx, g)| g * delta * delta + local_idx)
                    .collect();
                local.push(view);
            }
        }
        Ok(Self {
            group,
            gens_a,
            gens_b,
            local,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn gens_a(&self) -> &GeneratorSet {
        &self.gens_a
    }

    pub fn gens_b(&self) -> &GeneratorSet {
        &self.gens_b
    }

    pub fn delta(&self) -> usize {
        self.gens_a.len()
    }

    pub fn num_squares(&self) -> usize {
        self.group.order() * self.delta() * self.delta()
    }

    pub fn num_vertices(&self) -> usize {
        4 * self.group.order()
    }

    pub fn vertex_id(&self, class: VertexClass, g: usize) -> usize {
        class.index() * self.group.order() + g
    }

    pub fn vertex(&self, id: usize) -> Vertex {
        let order = self.group.order();
        Vertex {
            class: VertexClass::ALL[id / order],
            g: id % order,
        }
    }

    pub fn square_id(&self, g: usize, ia: usize, ib: usize) -> usize {
        let d = self.delta();
        (g * d + ia) * d + ib
    }

    /// `(g, i_a, i_b)` with `g` the `V_00` corner.
    pub fn square_triple(&self, q: usize) -> (usize, usize, usize) {
        let d = self.delta();
        (q / (d * d), (q / d) % d, q % d)
    }

    /// Group element of the corner of `q` in the given class.
    pub fn corner(&self, q: usize, class: VertexClass) -> usize {
        let (g, ia, ib) = self.square_triple(q);
        let grp = &self.group;
        let a = self.gens_a.elems()[ia];
        let b = self.gens_b.elems()[ib];
        match class {
            VertexClass::V00 => g,
            VertexClass::V01 => grp.mul(a, g),
            VertexClass::V10 => grp.mul(g, b),
            VertexClass::V11 => grp.mul(grp.mul(a, g), b),
        }
    }

    /// Vertex id of the corner of `q` in the given class.
    pub fn corner_vertex(&self, q: usize, class: VertexClass) -> usize {
        self.vertex_id(class, self.corner(q, class))
    }

    /// `Q(v)` in local order: entry `i_a·Δ + i_b` is `φ_v(a, b)`.
    pub fn local_view(&self, v: usize) -> &[usize] {
        &self.local[v]
    }

    /// Local label `(i_a, i_b)` of square `q` at vertex `v`, if `q ∈ Q(v)`.
    pub fn label(&self, v: usize, q: usize) -> Option<(usize, usize)> {
        let vertex = self.vertex(v);
        (self.corner(q, vertex.class) == vertex.g).then(|| {
            let (_, ia, ib) = self.square_triple(q);
            (ia, ib)
        })
    }

    /// `𝒢□_0` on `V_00 ∪ V_11` and `𝒢□_1` on `V_01 ∪ V_10`, one edge per square.
    pub fn square_graphs(&self) -> (Graph, Graph) {
        let order = self.group.order();
        let build = |name: &str, left: VertexClass, right: VertexClass| {
            let mut adjacency = vec![Vec::new(); 2 * order];
            for q in 0..self.num_squares() {
                let u = self.corner(q, left);
                let v = order + self.corner(q, right);
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
            Graph {
                name: name.to_string(),
                adjacency,
                side0: Some(order),
            }
        };
        (
            build("G0_square", VertexClass::V00, VertexClass::V11),
            build("G1_square", VertexClass::V01, VertexClass::V10),
        )
    }

    /// `𝒢_A` on all four classes: `V_00 – V_01` and `V_10 – V_11` through `g ↦ a·g`.
    pub fn graph_a(&self) -> Graph {
        self.class_graph("G_A", self.gens_a.elems(), Side::Left, [(VertexClass::V00, VertexClass::V01), (VertexClass::V10, VertexClass::V11)])
    }

    /// `𝒢_B` on all four classes: `V_00 – V_10` and `V_01 – V_11` through `g ↦ g·b`.
    pub fn graph_b(&self) -> Graph {
        self.class_graph("G_B", self.gens_b.elems(), Side::Right, [(VertexClass::V00, VertexClass::V10), (VertexClass::V01, VertexClass::V11)])
    }

    fn class_graph(&self, name: &str, gens: &[usize], side: Side, pairs: [(VertexClass, VertexClass); 2]) -> Graph {
        let order = self.group.order();
        let mut adjacency = vec![Vec::new(); 4 * order];
        for (from, to) in pairs {
            for g in 0..order {
                for &s in gens {
                    let h = match side {
                        Side::Left => self.group.mul(s, g),
                        Side::Right => self.group.mul(g, s),
                    };
                    let (u, v) = (self.vertex_id(from, g), self.vertex_id(to, h));
                    adjacency[u].push(v);
                    adjacency[v].push(u);
                }
            }
        }
        Graph {
            name: name.to_string(),
            adjacency,
            side0: None,
        }
    }

    /// Whether the adjacency matrices of `𝒢_A` and `𝒢_B` commute.
    pub fn adjacencies_commute(&self) -> bool {
        let n = self.num_vertices();
        let dense = |g: &Graph| {
            let mut m = vec![0u32; n * n];
            for (u, nbrs) in g.adjacency.iter().enumerate() {
                for &v in nbrs {
                    m[u * n + v] += 1;
                }
            }
            m
        };
        let (a, b) = (dense(&self.graph_a()), dense(&self.graph_b()));
        let product = |x: &[u32], y: &[u32]| {
            let mut out = vec![0u32; n * n];
            for i in 0..n {
                for k in 0..n {
                    let xv = x[i * n + k];
                    if xv != 0 {
                        for j in 0..n {
                            out[i * n + j] += xv * y[k * n + j];
                        }
                    }
                }
            }
            out
        };
        product(&a, &b) == product(&b, &a)
    }

    pub fn to_export(&self) -> ComplexExport {
        ComplexExport {
            group: self.group.name().to_string(),
            order: self.group.order(),
            multiplication_table: self.group.table(),
            gens_a: self.gens_a.elems().to_vec(),
            gens_b: self.gens_b.elems().to_vec(),
            vertex_classes: VertexClass::ALL.iter().map(|c| c.label().to_string()).collect(),
            squares: (0..self.num_squares())
                .map(|q| {
                    let (g, ia, ib) = self.square_triple(q);
                    [g, self.gens_a.elems()[ia], self.gens_b.elems()[ib]]
                })
                .collect(),
        }
    }
}

/// JSON form of a complex; squares are `(g, a, b)` group-element triples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexExport {
    pub group: String,
    pub order: usize,
    pub multiplication_table: Vec<Vec<usize>>,
    pub gens_a: Vec<usize>,
    pub gens_b: Vec<usize>,
    pub vertex_classes: Vec<String>,
    pub squares: Vec<[usize; 3]>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};
    use rand::{seq::SliceRandom, Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn z6() -> LeftRightComplex {
        let g = build_group(&GroupSpec::Cyclic(6)).unwrap();
        let a = GeneratorSet::new(&g, vec![1, 3, 5], Side::Left).unwrap();
        let b = GeneratorSet::new(&g, vec![1, 3, 5], Side::Right).unwrap();
        build_complex(&g, &a, &b).unwrap()
    }

    fn d4() -> LeftRightComplex {
        let g = build_group(&GroupSpec::Dihedral(4)).unwrap();
        // reflections s, r s, and r, r^3
        let a = GeneratorSet::new(&g, vec![4, 5, 1, 3], Side::Left).unwrap();
        let b = GeneratorSet::new(&g, vec![4, 6, 1, 3], Side::Right).unwrap();
        build_complex(&g, &a, &b).unwrap()
    }

    #[test]
    fn generator_set_validation() {
        let g = build_group(&GroupSpec::Cyclic(6)).unwrap();
        assert_eq!(GeneratorSet::new(&g, vec![1], Side::Left), Err(ComplexError::NotSymmetric(1, 5)));
        assert_eq!(GeneratorSet::new(&g, vec![0, 1, 5], Side::Left), Err(ComplexError::ContainsIdentity));
        assert_eq!(GeneratorSet::new(&g, vec![3, 3], Side::Left), Err(ComplexError::Duplicate(3)));
        assert_eq!(
            GeneratorSet::new(&g, vec![2, 4], Side::Left),
            Err(ComplexError::Disconnected { reached: 3, order: 6 })
        );
    }

    #[test]
    fn z6_counts() {
        let x = z6();
        assert_eq!(x.num_squares(), 54);
        for v in 0..x.num_vertices() {
            assert_eq!(x.local_view(v).len(), 9);
        }
    }

    #[test]
    fn minimal_complex() {
        let g = build_group(&GroupSpec::Cyclic(2)).unwrap();
        let a = GeneratorSet::new(&g, vec![1], Side::Left).unwrap();
        let b = GeneratorSet::new(&g, vec![1], Side::Right).unwrap();
        let x = build_complex(&g, &a, &b).unwrap();
        assert_eq!(x.num_squares(), 2);
    }

    #[test]
    fn wrong_side_rejected() {
        let g = build_group(&GroupSpec::Cyclic(6)).unwrap();
        let a = GeneratorSet::new(&g, vec![1, 5], Side::Right).unwrap();
        assert_eq!(
            build_complex(&g, &a, &a).unwrap_err(),
            ComplexError::WrongSide { expected: Side::Left }
        );
    }

    fn audit_labels(x: &LeftRightComplex) {
        let d = x.delta();
        for class in VertexClass::ALL {
            let mut hit = vec![0; x.num_squares()];
            for g in 0..x.group().order() {
                let v = x.vertex_id(class, g);
                for (local, &q) in x.local_view(v).iter().enumerate() {
                    hit[q] += 1;
                    // the same (a, b) label in every view
                    assert_eq!(x.label(v, q), Some((local / d, local % d)));
                    assert_eq!(x.corner(q, class), g);
                }
            }
            assert!(hit.iter().all(|&c| c == 1), "class {class} views partition Q");
        }
    }

    #[test]
    fn labels_agree_across_views() {
        audit_labels(&z6());
        audit_labels(&d4());
    }

    #[test]
    fn shared_rows_and_columns() {
        let x = d4();
        let grp = x.group();
        let d = x.delta();
        for g in 0..grp.order() {
            let v00 = x.vertex_id(VertexClass::V00, g);
            for (ia, &a) in x.gens_a().elems().iter().enumerate() {
                let v01 = x.vertex_id(VertexClass::V01, grp.mul(a, g));
                let row00: Vec<usize> = (0..d).map(|ib| x.local_view(v00)[ia * d + ib]).collect();
                let row01: Vec<usize> = (0..d).map(|ib| x.local_view(v01)[ia * d + ib]).collect();
                assert_eq!(row00, row01);
            }
            for (ib, &b) in x.gens_b().elems().iter().enumerate() {
                let v10 = x.vertex_id(VertexClass::V10, grp.mul(g, b));
                let col00: Vec<usize> = (0..d).map(|ia| x.local_view(v00)[ia * d + ib]).collect();
                let col10: Vec<usize> = (0..d).map(|ia| x.local_view(v10)[ia * d + ib]).collect();
                assert_eq!(col00, col10);
            }
        }
    }

    #[test]
    fn square_graphs_are_replicas() {
        for x in [z6(), d4()] {
            let (g0, g1) = x.square_graphs();
            assert_eq!(g0.edge_count(), x.num_squares());
            assert_eq!(g1.edge_count(), x.num_squares());
            assert_eq!(g0.regular_degree(), Some(x.delta() * x.delta()));
            let sorted = |g: &Graph| {
                let mut a = g.adjacency.clone();
                a.iter_mut().for_each(|n| n.sort_unstable());
                a
            };
            assert_eq!(sorted(&g0), sorted(&g1));
        }
    }

    #[test]
    fn class_graphs_are_regular_and_commute() {
        for x in [z6(), d4()] {
            assert_eq!(x.graph_a().regular_degree(), Some(x.delta()));
            assert_eq!(x.graph_b().regular_degree(), Some(x.delta()));
            assert!(x.adjacencies_commute());
        }
    }

    #[test]
    fn known_spectra() {
        let c6 = build_group(&GroupSpec::Cyclic(6)).unwrap();
        let cyc = GeneratorSet::new(&c6, vec![1, 5], Side::Left).unwrap();
        let s = spectral_lambda(&cyc.cayley_graph(&c6));
        assert!((s.lambda - 1.0).abs() < 1e-9);
        let c4 = build_group(&GroupSpec::Cyclic(4)).unwrap();
        let k4 = GeneratorSet::new(&c4, vec![1, 2, 3], Side::Left).unwrap();
        let s = spectral_lambda(&k4.cayley_graph(&c4));
        assert!((s.lambda - 1.0).abs() < 1e-9);
        assert!(s.ramanujan);
    }

    #[test]
    fn square_graph_lambda_bound_when_ramanujan() {
        for x in [z6(), d4()] {
            let ra = spectral_lambda(&x.gens_a().cayley_graph(x.group()));
            let rb = spectral_lambda(&x.gens_b().cayley_graph(x.group()));
            let (g0, g1) = x.square_graphs();
            if ra.ramanujan && rb.ramanujan {
                let bound = 4.0 * x.delta() as f64 + RAMANUJAN_SLACK;
                assert!(spectral_lambda(&g0).lambda <= bound);
                assert!(spectral_lambda(&g1).lambda <= bound);
            }
        }
    }

    #[test]
    fn mixing_trivial_and_random() {
        let x = z6();
        let (g0, _) = x.square_graphs();
        let lambda = spectral_lambda(&g0).lambda;
        let n = x.group().order();
        assert!(check_mixing(&g0, lambda, &[], &[n]).holds);
        let all0: Vec<usize> = (0..n).collect();
        let all1: Vec<usize> = (n..2 * n).collect();
        let full = check_mixing(&g0, lambda, &all0, &all1);
        assert!(full.holds);
        assert_eq!(full.edges, 54);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let ks = rng.gen_range(0..=n);
            let kt = rng.gen_range(0..=n);
            let mut s = all0.clone();
            s.shuffle(&mut rng);
            let mut t = all1.clone();
            t.shuffle(&mut rng);
            assert!(check_mixing(&g0, lambda, &s[..ks], &t[..kt]).holds);
        }
    }

    #[test]
    fn export_lists_all_squares() {
        let x = z6();
        let e = x.to_export();
        assert_eq!(e.squares.len(), 54);
        assert_eq!(e.squares[1], [0, 1, 3]);
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(serde_json::from_str::<ComplexExport>(&json).unwrap(), e);
    }
}
