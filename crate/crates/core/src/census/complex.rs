//! Graded cell complexes with exact samples.

use std::collections::BTreeMap;

use crate::signature::FiberSignature;

use super::formal::FormalConfiguration;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub id: String,
    pub dim: usize,
    pub sample: FormalConfiguration,
    /// Defining condition of a wall, e.g. `"v1v2v3 collinear"`.
    pub condition: Option<String>,
    /// False for bookkeeping cells (the equator) that only take part in
    /// merging.
    pub stratum: bool,
    pub signature: Option<FiberSignature>,
    /// Indices of incident cells (both directions).
    pub adjacent: Vec<usize>,
    /// Raw chart cells merged into this one.
    pub members: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CellComplex {
    pub cells: Vec<Cell>,
}

impl CellComplex {
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn count(&self, dim: usize) -> usize {
        self.cells.iter().filter(|c| c.stratum && c.dim == dim).count()
    }

    /// `V - E + F` over stratum cells.
    pub fn euler_characteristic(&self) -> i64 {
        self.count(0) as i64 - self.count(1) as i64 + self.count(2) as i64
    }

    pub fn get(&self, id: &str) -> Option<&Cell> {
        self.cells.iter().find(|c| c.id == id)
    }

    /// Stratum cells of dimension 1 grouped by condition.
    pub fn arc_groups(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for c in self.cells.iter().filter(|c| c.stratum && c.dim == 1) {
            *out.entry(c.condition.clone().unwrap_or_default()).or_insert(0) += 1;
        }
        out
    }

    pub fn adjacency_is_symmetric(&self) -> bool {
        self.cells.iter().enumerate().all(|(i, c)| c.adjacent.iter().all(|&j| self.cells[j].adjacent.contains(&i)))
    }
}
