//! The sphere `Λ4` of four-point configurations as a cell complex: 14
//! faces, 24 arcs in four groups of six, 12 vertices.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::complex::{Cell, CellComplex};
use super::formal::{normalize_formal, FormalConfiguration};
use super::sphere::{build, collinearity_lines, Chart, RawSphere};
use crate::error::{Error, Result};
use crate::model::{Configuration, Framework, Graph};
use crate::signature::{fiber_signature, FiberSignature};

pub(crate) struct Uf(Vec<usize>);

impl Uf {
    pub(crate) fn new(n: usize) -> Self {
        Uf((0..n).collect())
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.0[hi] = lo;
        true
    }
}

pub(crate) fn k4_signature(f: &FormalConfiguration) -> Option<FiberSignature> {
    let c = f.configuration()?;
    Some(fiber_signature(&Framework::new(Graph::complete(4), c).expect("four planar points")).expect("K4 fibers have small rank"))
}

/// Raw chart cells of `Λ4` with their `K4` signatures.
fn raw() -> (RawSphere, Vec<Option<FiberSignature>>) {
    let sphere = build(&collinearity_lines(Chart::Plus), &collinearity_lines(Chart::Minus));
    let sigs = sphere.cells.par_iter().map(|c| k4_signature(&c.sample)).collect();
    (sphere, sigs)
}

fn construct() -> (CellComplex, RawSphere, Vec<usize>) {
    let (sphere, sigs) = raw();
    let n = sphere.cells.len();
    let mut uf = Uf::new(n);
    for &(a, b) in &sphere.incidences {
        if sphere.cells[b].dim == sphere.cells[a].dim + 1 && sigs[a].is_some() && sigs[a] == sigs[b] {
            uf.union(a, b);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        groups.entry(uf.find(i)).or_default().push(i);
    }
    // deterministic order: by dimension (faces first), then chart order
    let mut comps: Vec<Vec<usize>> = groups.into_values().collect();
    let dim_of = |g: &Vec<usize>| g.iter().map(|&i| sphere.cells[i].dim).max().unwrap();
    comps.sort_by_key(|g| (std::cmp::Reverse(dim_of(g)), g[0]));
    let mut comp_of = vec![0usize; n];
    for (k, g) in comps.iter().enumerate() {
        for &i in g {
            comp_of[i] = k;
        }
    }
    let mut counters = [0usize; 3];
    let mut eq_counter = 0usize;
    let mut cells: Vec<Cell> = comps
        .iter()
        .map(|g| {
            let dim = dim_of(g);
            let top = *g.iter().find(|&&i| sphere.cells[i].dim == dim && sphere.cells[i].chart != Chart::Equator).unwrap_or(&g[0]);
            let rc = &sphere.cells[top];
            let stratum = rc.chart != Chart::Equator || dim == 0;
            let id = if stratum {
                counters[dim] += 1;
                format!("{}{}", ["V", "A", "F"][dim], counters[dim])
            } else {
                eq_counter += 1;
                format!("E{eq_counter}")
            };
            let condition = if dim < 2 && !rc.on.is_empty() { Some(rc.on.join(", ")) } else { None };
            Cell {
                id,
                dim,
                sample: rc.sample.clone(),
                condition,
                stratum,
                signature: sigs[top].clone(),
                adjacent: Vec::new(),
                members: g.iter().map(|&i| sphere.cells[i].id.clone()).collect(),
            }
        })
        .collect();
    for &(a, b) in &sphere.incidences {
        let (ca, cb) = (comp_of[a], comp_of[b]);
        if ca != cb {
            if !cells[ca].adjacent.contains(&cb) {
                cells[ca].adjacent.push(cb);
            }
            if !cells[cb].adjacent.contains(&ca) {
                cells[cb].adjacent.push(ca);
            }
        }
    }
    for c in &mut cells {
        c.adjacent.sort_unstable();
    }
    (CellComplex { cells }, sphere, comp_of)
}

fn cached() -> &'static (CellComplex, RawSphere, Vec<usize>) {
    static CELLS: OnceLock<(CellComplex, RawSphere, Vec<usize>)> = OnceLock::new();
    CELLS.get_or_init(construct)
}

/// The merged complex of `Λ4`.
pub fn lambda4_arrangement() -> CellComplex {
    cached().0.clone()
}

/// Result of locating a four-point configuration on `Λ4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K4Class {
    pub cell: String,
    pub dim: usize,
    pub condition: Option<String>,
    pub formal: FormalConfiguration,
    pub signature: FiberSignature,
}

/// Locates a codimension-0 or -1 configuration of four points on `Λ4`.
pub fn classify_k4(p: &Configuration) -> Result<K4Class> {
    let formal = normalize_formal(p).map_err(|e| match e {
        Error::NotNormalizable(m) => Error::DeeperDegeneracy(m),
        other => other,
    })?;
    let (complex, sphere, comp_of) = cached();
    let raw = sphere.locate(&formal).ok_or_else(|| Error::DeeperDegeneracy(format!("cannot locate {formal}")))?;
    let k = comp_of[raw];
    let cell = &complex.cells[k];
    if cell.dim == 0 {
        return Err(Error::DeeperDegeneracy(format!("{formal} is a vertex of the sphere")));
    }
    let signature = fiber_signature(&Framework::new(Graph::complete(4), p.clone())?)?;
    Ok(K4Class { cell: cell.id.clone(), dim: cell.dim, condition: cell.condition.clone(), formal, signature })
}
