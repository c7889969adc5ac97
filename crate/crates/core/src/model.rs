//! Graphs, point configurations, frameworks and loads.
//!
//! Vertex labels are 1-based everywhere in the public surface.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, Rational};

/// Unordered vertex pair `{a, b}` stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    /// Normalizes the pair; panics on a loop.
    pub fn new(i: usize, j: usize) -> Self {
        assert_ne!(i, j, "loop edge {{{i},{i}}}");
        if i < j {
            Edge(i, j)
        } else {
            Edge(j, i)
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn other(&self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}v{}", self.0, self.1)
    }
}

/// Simple graph on the labels `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new() }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..=n {
            for j in i + 1..=n {
                g.edges.insert(Edge(i, j));
            }
        }
        g
    }

    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(i, j) in pairs {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(Error::InvalidGraph(format!("loop at v{i}")));
        }
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(Error::InvalidGraph(format!("edge {{{i},{j}}} outside 1..={}", self.n)));
        }
        self.edges.insert(Edge::new(i, j));
        Ok(())
    }

    pub fn remove_edge(&mut self, e: Edge) -> bool {
        self.edges.remove(&e)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    /// Edges in lexicographic order; this is the column order of every
    /// equilibrium matrix and sign vector.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges.iter().copied().collect()
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.iter().position(|&x| x == e)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n <= other.n && self.edges.is_subset(&other.edges)
    }

    /// Relabels vertex `i` as `perm[i - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for e in &self.edges {
            g.edges.insert(Edge::new(perm[e.0 - 1], perm[e.1 - 1]));
        }
        g
    }
}

/// A labeled point configuration in the plane or in space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

impl Configuration {
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        if dim != 2 && dim != 3 {
            return Err(Error::UnsupportedDimension(dim));
        }
        if let Some((i, p)) = points.iter().enumerate().find(|(_, p)| p.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "point v{} has {} coordinates, expected {dim}",
                i + 1,
                p.len()
            )));
        }
        Ok(Configuration { dim, points })
    }

    /// Planar configuration from integer coordinates (handy in tests).
    pub fn planar_ints(pts: &[(i64, i64)]) -> Self {
        let points = pts.iter().map(|&(x, y)| vec![Rational::from_integer(x.into()), Rational::from_integer(y.into())]).collect();
        Configuration { dim: 2, points }
    }

    pub fn planar(pts: Vec<[Rational; 2]>) -> Self {
        Configuration { dim: 2, points: pts.into_iter().map(|p| p.to_vec()).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Point of vertex `label` (1-based).
    pub fn point(&self, label: usize) -> &[Rational] {
        &self.points[label - 1]
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn push(&mut self, p: Vec<Rational>) {
        assert_eq!(p.len(), self.dim);
        self.points.push(p);
    }

    pub fn map_points(&self, f: impl Fn(&[Rational]) -> Vec<Rational>) -> Configuration {
        Configuration { dim: self.dim, points: self.points.iter().map(|p| f(p)).collect() }
    }

    /// Reorders points so that new label `perm[i - 1]` carries old point `i`.
    pub fn relabel(&self, perm: &[usize]) -> Configuration {
        let mut points = self.points.clone();
        for (i, p) in self.points.iter().enumerate() {
            points[perm[i] - 1] = p.clone();
        }
        Configuration { dim: self.dim, points }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .points
            .iter()
            .map(|p| format!("({})", p.iter().map(format_rational).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A graph realized at a configuration, `G(P)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Framework {
    graph: Graph,
    config: Configuration,
}

/// Pairs a graph with a configuration after validating their shapes.
pub fn make_framework(graph: Graph, config: Configuration) -> Result<Framework> {
    if config.dim() != 2 && config.dim() != 3 {
        return Err(Error::UnsupportedDimension(config.dim()));
    }
    if graph.vertex_count() != config.len() {
        return Err(Error::DimensionMismatch(format!(
            "graph has {} vertices but configuration has {} points",
            graph.vertex_count(),
            config.len()
        )));
    }
    Ok(Framework { graph, config })
}

impl Framework {
    pub fn new(graph: Graph, config: Configuration) -> Result<Self> {
        make_framework(graph, config)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn config(&self) -> &Configuration {
        &self.config
    }

    pub fn dim(&self) -> usize {
        self.config.dim()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn with_graph(&self, graph: Graph) -> Result<Framework> {
        make_framework(graph, self.config.clone())
    }
}

/// One force vector per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Load {
    pub vectors: Vec<Vec<Rational>>,
}

impl Load {
    pub fn zero(n: usize, dim: usize) -> Self {
        Load { vectors: vec![vec![Rational::from_integer(0.into()); dim]; n] }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_framework() {
        let f = make_framework(Graph::complete(2), Configuration::planar_ints(&[(0, 0), (1, 0)])).unwrap();
        assert_eq!(f.vertex_count(), 2);
        assert_eq!(f.edge_count(), 1);
    }

    #[test]
    fn count_mismatch_is_rejected() {
        let err = make_framework(Graph::complete(4), Configuration::planar_ints(&[(0, 0), (1, 0), (0, 1)])).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)));
    }

    #[test]
    fn k5_has_ten_edges() {
        let cfg = Configuration::planar_ints(&[(0, 0), (5, 1), (2, 7), (-3, 4), (1, -6)]);
        assert_eq!(make_framework(Graph::complete(5), cfg).unwrap().edge_count(), 10);
    }

    #[test]
    fn unsupported_dimension() {
        let p = vec![vec![Rational::from_integer(0.into())]];
        assert_eq!(Configuration::new(1, p).unwrap_err(), Error::UnsupportedDimension(1));
    }

    #[test]
    fn edge_insertion_is_order_insensitive() {
        let a = Graph::from_edges(3, &[(1, 2), (3, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(2, 1), (2, 3)]).unwrap();
        assert_eq!(a, b);
        assert!(Graph::from_edges(3, &[(2, 2)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 4)]).is_err());
    }
}
