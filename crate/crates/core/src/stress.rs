//! Equilibrium matrices, self-stress spaces, loads and atoms.

use std::fmt;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{exact_rank, kernel_basis, Matrix, RationalMatrix};
use crate::model::{Configuration, Edge, Framework, Graph, Load};
use crate::projective::orient2;
use crate::scalar::{format_rational, primitive_integer_vector, Rational};

/// All k-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(k).collect()
}

/// Edge weights of a graph; pairs that are not edges carry weight zero.
/// Negative weight is a cable, positive a strut.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StressAssignment {
    n: usize,
    edges: Vec<Edge>,
    weights: Vec<Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Member {
    Cable,
    Strut,
    Unstressed,
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Member::Cable => "cable",
            Member::Strut => "strut",
            Member::Unstressed => "zero",
        })
    }
}

impl StressAssignment {
    pub fn new(graph: &Graph, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != graph.edge_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} weights for {} edges",
                weights.len(),
                graph.edge_count()
            )));
        }
        Ok(StressAssignment { n: graph.vertex_count(), edges: graph.edge_list(), weights })
    }

    pub fn zero(graph: &Graph) -> Self {
        StressAssignment { n: graph.vertex_count(), edges: graph.edge_list(), weights: vec![Rational::zero(); graph.edge_count()] }
    }

    /// `w_{i,j}`, symmetric, zero off the edge set.
    pub fn weight(&self, i: usize, j: usize) -> Rational {
        if i == j {
            return Rational::zero();
        }
        let e = Edge::new(i, j);
        self.edges.iter().position(|&x| x == e).map(|k| self.weights[k].clone()).unwrap_or_else(Rational::zero)
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(Zero::is_zero)
    }

    pub fn member(&self, k: usize) -> Member {
        let w = &self.weights[k];
        if w.is_zero() {
            Member::Unstressed
        } else if w.is_negative() {
            Member::Cable
        } else {
            Member::Strut
        }
    }

    pub fn scaled(&self, s: &Rational) -> Self {
        StressAssignment { weights: self.weights.iter().map(|w| w * s).collect(), ..self.clone() }
    }

    /// Sum with a stress on the same edge set.
    pub fn plus(&self, other: &StressAssignment) -> Self {
        assert_eq!(self.edges, other.edges, "stresses live on different edge sets");
        StressAssignment { weights: self.weights.iter().zip(&other.weights).map(|(a, b)| a + b).collect(), ..self.clone() }
    }

    /// Re-expresses the stress on a supergraph (extra edges get zero).
    pub fn lift_to(&self, graph: &Graph) -> Self {
        let weights = graph.edges().map(|e| self.weight(e.0, e.1)).collect();
        StressAssignment { n: graph.vertex_count(), edges: graph.edge_list(), weights }
    }

    pub fn canonical(&self) -> Self {
        StressAssignment { weights: primitive_integer_vector(&self.weights), ..self.clone() }
    }
}

impl fmt::Display for StressAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().zip(&self.weights).map(|(e, w)| format!("{e}={}", format_rational(w))).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `W(G,P)` with its canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StressSpace {
    pub edges: Vec<Edge>,
    pub basis: Vec<StressAssignment>,
}

impl StressSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// The `(d n) x m` matrix whose kernel is `W(G,P)`: column `{i,j}` holds
/// `p_j - p_i` in the rows of vertex `i` and `p_i - p_j` in those of `j`.
pub fn equilibrium_matrix(f: &Framework) -> RationalMatrix {
    let d = f.dim();
    let n = f.vertex_count();
    let edges = f.graph().edge_list();
    let mut m = Matrix::zeros(d * n, edges.len());
    for (c, e) in edges.iter().enumerate() {
        let (pi, pj) = (f.config().point(e.0), f.config().point(e.1));
        for t in 0..d {
            let diff = &pj[t] - &pi[t];
            m.set(d * (e.0 - 1) + t, c, diff.clone());
            m.set(d * (e.1 - 1) + t, c, -diff);
        }
    }
    m
}

pub fn self_stress_space(f: &Framework) -> StressSpace {
    let k = kernel_basis(&equilibrium_matrix(f));
    let basis = k
        .vectors
        .into_iter()
        .map(|v| StressAssignment::new(f.graph(), v).expect("kernel vector has one entry per edge"))
        .collect();
    StressSpace { edges: f.graph().edge_list(), basis }
}

/// `dim W(G,P)` without building the basis.
pub fn stress_dim(f: &Framework) -> usize {
    f.edge_count() - exact_rank(&equilibrium_matrix(f))
}

/// Residual `f_i + sum_j w_ij (p_j - p_i)` at every vertex.
pub fn load_residual(f: &Framework, w: &StressAssignment, load: &Load) -> Result<Vec<Vec<Rational>>> {
    let (n, d) = (f.vertex_count(), f.dim());
    if load.vectors.len() != n || load.vectors.iter().any(|v| v.len() != d) {
        return Err(Error::DimensionMismatch("load shape does not match the framework".into()));
    }
    if w.vertex_count() != n {
        return Err(Error::DimensionMismatch("stress belongs to a different vertex set".into()));
    }
    let mut res = load.vectors.clone();
    for (e, wt) in w.edges().iter().zip(w.weights()) {
        if wt.is_zero() {
            continue;
        }
        let (pi, pj) = (f.config().point(e.0), f.config().point(e.1));
        for t in 0..d {
            let diff = &pj[t] - &pi[t];
            res[e.0 - 1][t] += wt * &diff;
            res[e.1 - 1][t] -= wt * &diff;
        }
    }
    Ok(res)
}

pub fn resolves_load(f: &Framework, w: &StressAssignment, load: &Load) -> Result<bool> {
    Ok(load_residual(f, w, load)?.iter().flatten().all(Zero::is_zero))
}

pub fn is_self_stress(f: &Framework, w: &StressAssignment) -> bool {
    resolves_load(f, w, &Load::zero(f.vertex_count(), f.dim())).unwrap_or(false)
}

/// The unique-up-to-scale self stress of a `K4` in general position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub labels: [usize; 4],
    pub stress: StressAssignment,
}

fn k4_space(points: &[Vec<Rational>]) -> Result<StressSpace> {
    let dim = points[0].len();
    let cfg = Configuration::new(dim, points.to_vec())?;
    Ok(self_stress_space(&Framework::new(Graph::complete(4), cfg)?))
}

fn planar_general_position(points: &[Vec<Rational>]) -> Result<()> {
    for t in combinations(4, 3) {
        if orient2(&points[t[0]], &points[t[1]], &points[t[2]]).is_zero() {
            return Err(Error::DegeneratePosition(format!("v{}, v{}, v{} are collinear or coincide", t[0] + 1, t[1] + 1, t[2] + 1)));
        }
    }
    Ok(())
}

/// Canonical atom of four planar points (labels 1..4).
pub fn atom_stress(points: &[Vec<Rational>]) -> Result<Atom> {
    if points.len() != 4 || points.iter().any(|p| p.len() != 2) {
        return Err(Error::DimensionMismatch("an atom needs four planar points".into()));
    }
    planar_general_position(points)?;
    let space = k4_space(points)?;
    debug_assert_eq!(space.dim(), 1);
    Ok(Atom { labels: [1, 2, 3, 4], stress: space.basis[0].clone() })
}

fn sub3(a: &[Rational], b: &[Rational]) -> [Rational; 3] {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

/// Atom of four coplanar points in space.
pub fn plane_atom_3d(points: &[Vec<Rational>]) -> Result<Atom> {
    if points.len() != 4 || points.iter().any(|p| p.len() != 3) {
        return Err(Error::DimensionMismatch("a plane atom needs four points in space".into()));
    }
    let (u, v, w) = (sub3(&points[1], &points[0]), sub3(&points[2], &points[0]), sub3(&points[3], &points[0]));
    if !crate::projective::det3(&u, &v, &w).is_zero() {
        return Err(Error::NonCoplanar);
    }
    for t in combinations(4, 3) {
        let a = sub3(&points[t[1]], &points[t[0]]);
        let b = sub3(&points[t[2]], &points[t[0]]);
        if crate::projective::cross(&a, &b).iter().all(Zero::is_zero) {
            return Err(Error::DegeneratePosition(format!("v{}, v{}, v{} are collinear or coincide", t[0] + 1, t[1] + 1, t[2] + 1)));
        }
    }
    let space = k4_space(points)?;
    debug_assert_eq!(space.dim(), 1);
    Ok(Atom { labels: [1, 2, 3, 4], stress: space.basis[0].clone() })
}

/// Writes `w` as a combination of atoms of `K_n`. Atoms are taken greedily
/// in lexicographic order of their 4-subsets, skipping those dependent on
/// earlier choices, until they span `W(K_n,P)`.
pub fn atom_decomposition(f: &Framework, w: &StressAssignment) -> Result<Vec<(Atom, Rational)>> {
    let n = f.vertex_count();
    if f.dim() != 2 {
        return Err(Error::UnsupportedDimension(f.dim()));
    }
    if *f.graph() != Graph::complete(n) {
        return Err(Error::Precondition("atom decomposition needs a complete graph".into()));
    }
    if w.edges() != f.graph().edge_list().as_slice() || !is_self_stress(f, w) {
        return Err(Error::Precondition("stress is not a self stress of the framework".into()));
    }
    let target_dim = stress_dim(f);
    let graph = f.graph();
    let mut chosen: Vec<Atom> = Vec::new();
    let mut columns: Vec<Vec<Rational>> = Vec::new();
    for s in combinations(n, 4) {
        if columns.len() == target_dim {
            break;
        }
        let labels = [s[0] + 1, s[1] + 1, s[2] + 1, s[3] + 1];
        let pts: Vec<Vec<Rational>> = labels.iter().map(|&l| f.config().point(l).to_vec()).collect();
        let Ok(local) = atom_stress(&pts) else { continue };
        let mut sub = Graph::empty(n);
        for a in 0..4 {
            for b in a + 1..4 {
                sub.add_edge(labels[a], labels[b])?;
            }
        }
        let mut lifted = Vec::with_capacity(graph.edge_count());
        for e in graph.edges() {
            let (ia, ib) = (labels.iter().position(|&x| x == e.0), labels.iter().position(|&x| x == e.1));
            lifted.push(match (ia, ib) {
                (Some(a), Some(b)) => local.stress.weight(a + 1, b + 1),
                _ => Rational::zero(),
            });
        }
        let mut trial = columns.clone();
        trial.push(lifted.clone());
        if Matrix::from_rows(trial.clone()).rank() == trial.len() {
            columns = trial;
            chosen.push(Atom { labels, stress: StressAssignment::new(graph, lifted)? });
        }
    }
    if columns.len() < target_dim {
        return Err(Error::DegeneratePosition(format!(
            "atoms in general position span only {} of {} dimensions",
            columns.len(),
            target_dim
        )));
    }
    if chosen.is_empty() {
        return Ok(Vec::new());
    }
    // Solve [A_1 .. A_s] lambda = w through the kernel of [A_1 .. A_s | w].
    let m = graph.edge_count();
    let mut rows = Vec::with_capacity(m);
    for e in 0..m {
        let mut r: Vec<Rational> = columns.iter().map(|c| c[e].clone()).collect();
        r.push(w.weights()[e].clone());
        rows.push(r);
    }
    let k = kernel_basis(&Matrix::from_rows(rows));
    let s = chosen.len();
    let v = k
        .vectors
        .iter()
        .find(|v| !v[s].is_zero())
        .ok_or_else(|| Error::Precondition("stress is outside the span of the atoms".into()))?;
    let scale = -v[s].clone();
    Ok(chosen.into_iter().zip(v[..s].iter().map(|x| x / &scale)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn fw(g: Graph, pts: &[(i64, i64)]) -> Framework {
        Framework::new(g, Configuration::planar_ints(pts)).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    const SQUARE: [(i64, i64); 4] = [(0, 0), (1, 0), (1, 1), (0, 1)];

    #[test]
    fn k2_distinct_and_coincident() {
        let f = fw(Graph::complete(2), &[(0, 0), (1, 0)]);
        let m = equilibrium_matrix(&f);
        assert_eq!((m.rows(), m.cols()), (4, 1));
        assert_eq!(self_stress_space(&f).dim(), 0);
        assert_eq!(self_stress_space(&fw(Graph::complete(2), &[(2, 3), (2, 3)])).dim(), 1);
    }

    #[test]
    fn square_k4_stress() {
        let s = self_stress_space(&fw(Graph::complete(4), &SQUARE));
        assert_eq!(s.dim(), 1);
        // edges 12, 13, 14, 23, 24, 34: 13 and 24 are the diagonals.
        assert_eq!(s.basis[0].weights(), ints(&[1, -1, 1, 1, -1, 1]).as_slice());
        assert_eq!(s.basis[0].member(1), Member::Cable);
        assert_eq!(s.basis[0].member(0), Member::Strut);
    }

    #[test]
    fn collinear_triple_kills_apex_edges() {
        let s = self_stress_space(&fw(Graph::complete(4), &[(0, 0), (1, 0), (3, 0), (1, 2)]));
        assert_eq!(s.dim(), 1);
        let w = &s.basis[0];
        for j in 1..=3 {
            assert!(w.weight(j, 4).is_zero());
        }
        assert!(!w.weight(1, 2).is_zero());
    }

    #[test]
    fn rigid_triangle() {
        assert_eq!(self_stress_space(&fw(Graph::complete(3), &[(0, 0), (4, 0), (1, 3)])).dim(), 0);
    }

    #[test]
    fn load_resolution() {
        let f = fw(Graph::complete(4), &SQUARE);
        let w = self_stress_space(&f).basis[0].clone();
        let zero = Load::zero(4, 2);
        assert!(resolves_load(&f, &w, &zero).unwrap());
        let bad = StressAssignment::new(f.graph(), ints(&[1, 0, 0, 0, 0, 0])).unwrap();
        assert!(!resolves_load(&f, &bad, &zero).unwrap());
        // Perturbed 2w: the load equal to minus its residual is resolved by it.
        let mut pert = w.scaled(&int(2));
        pert.weights[0] += rat(1, 3);
        let resid = load_residual(&f, &pert, &zero).unwrap();
        let load = Load { vectors: resid.iter().map(|v| v.iter().map(|x| -x).collect()).collect() };
        assert!(resolves_load(&f, &pert, &load).unwrap());
        assert!(!resolves_load(&f, &w.scaled(&int(2)), &load).unwrap());
        assert!(resolves_load(&f, &w, &Load::zero(3, 2)).is_err());
    }

    #[test]
    fn atoms() {
        let sq: Vec<Vec<Rational>> = SQUARE.iter().map(|&(x, y)| ints(&[x, y])).collect();
        assert_eq!(atom_stress(&sq).unwrap().stress.weights(), ints(&[1, -1, 1, 1, -1, 1]).as_slice());
        let col = vec![ints(&[0, 0]), ints(&[1, 0]), ints(&[3, 0]), ints(&[0, 5])];
        assert!(matches!(atom_stress(&col), Err(Error::DegeneratePosition(_))));
        // v4 = (2,1) is inside the triangle v1 v2 v3: spider web.
        let web = vec![ints(&[0, 0]), ints(&[4, 0]), ints(&[1, 3]), ints(&[2, 1])];
        let a = atom_stress(&web).unwrap().stress;
        let s = |i, j| a.weight(i, j).is_positive();
        assert!(s(1, 4) == s(2, 4) && s(2, 4) == s(3, 4));
        assert!(s(1, 2) == s(1, 3) && s(1, 3) == s(2, 3));
        assert_ne!(s(1, 4), s(1, 2));
    }

    #[test]
    fn decomposition_cases() {
        let f = fw(Graph::complete(4), &SQUARE);
        let atom = self_stress_space(&f).basis[0].clone();
        let zero = StressAssignment::zero(f.graph());
        assert!(atom_decomposition(&f, &zero).unwrap().iter().all(|(_, c)| c.is_zero()));
        let d = atom_decomposition(&f, &atom.scaled(&int(3))).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, int(3));
    }

    #[test]
    fn plane_atoms() {
        let sq: Vec<Vec<Rational>> = SQUARE.iter().map(|&(x, y)| ints(&[x, y, 1])).collect();
        assert_eq!(plane_atom_3d(&sq).unwrap().stress.weights(), ints(&[1, -1, 1, 1, -1, 1]).as_slice());
        let skew = vec![ints(&[0, 0, 0]), ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1])];
        assert_eq!(plane_atom_3d(&skew), Err(Error::NonCoplanar));
        let f = Framework::new(Graph::complete(4), Configuration::new(3, skew).unwrap()).unwrap();
        assert_eq!(stress_dim(&f), 0);
        let col = vec![ints(&[0, 0, 0]), ints(&[1, 1, 1]), ints(&[2, 2, 2]), ints(&[0, 1, 0])];
        assert!(matches!(plane_atom_3d(&col), Err(Error::DegeneratePosition(_))));
    }
}
