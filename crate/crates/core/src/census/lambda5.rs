//! Strata of `K_5` in codimension 0 and 1, as a product of the refined
//! sphere of the first four points with the fiber plane of the fifth.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use super::arrangement::{faces, Face, Line};
use super::formal::FormalConfiguration;
use super::lambda4::{lambda4_arrangement, Uf};
use super::sphere::{build, collinearity_lines, parallel_lines, Chart, RawSphere};
use crate::error::Result;
use crate::model::{Configuration, Framework, Graph};
use crate::projective::orient2;
use crate::scalar::{sign, Rational};
use crate::signature::{fiber_signature, FiberSignature};

/// Cells of dimension below this never touch codimension 0 or 1 strata.
const MIN_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lambda5Census {
    /// Strata of dimension 10.
    pub top: usize,
    /// Strata of dimension 9.
    pub codim1: usize,
    /// Product cells examined (dimension at least 8).
    pub cells: usize,
    /// Per `Λ4` face: the fiber 2-cell counts over its generic base cells.
    pub fiber_cells: BTreeMap<String, Vec<usize>>,
}

struct ProductCell {
    base: usize,
    dim: usize,
    key: Vec<i8>,
    signature: FiberSignature,
}

/// Orientation of every triple of the five points.
fn orientation_key(pts: &[[Rational; 2]]) -> Vec<i8> {
    let mut key = Vec::with_capacity(10);
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                key.push(sign(&orient2(&pts[i], &pts[j], &pts[k])));
            }
        }
    }
    key
}

/// Lines through pairs of distinct base points, duplicates removed.
fn pair_lines(base: &[[Rational; 2]]) -> Vec<Line> {
    let mut out: Vec<Line> = Vec::new();
    for i in 0..base.len() {
        for j in i + 1..base.len() {
            if base[i] == base[j] {
                continue;
            }
            let l = Line::through(&base[i], &base[j]);
            let dup = out.iter().any(|m| {
                (&l.a * &m.b - &l.b * &m.a).is_zero() && (&l.a * &m.c - &l.c * &m.a).is_zero() && (&l.b * &m.c - &l.c * &m.b).is_zero()
            });
            if !dup {
                out.push(l);
            }
        }
    }
    out
}

fn planar(c: &Configuration) -> Vec<[Rational; 2]> {
    c.points().iter().map(|p| [p[0].clone(), p[1].clone()]).collect()
}

/// The refined sphere: collinearity walls plus the parallel conditions.
pub fn refined_base() -> RawSphere {
    let with_parallels = |chart| {
        let mut ls = collinearity_lines(chart);
        ls.extend(parallel_lines(chart));
        ls
    };
    build(&with_parallels(Chart::Plus), &with_parallels(Chart::Minus))
}

fn fiber_faces(base: &[[Rational; 2]]) -> Vec<Face> {
    faces(&pair_lines(base))
}

fn product_cells(sphere: &RawSphere) -> Result<Vec<ProductCell>> {
    let jobs: Vec<(usize, Vec<[Rational; 2]>, Face)> = sphere
        .cells
        .iter()
        .enumerate()
        .filter_map(|(b, c)| c.sample.configuration().map(|cfg| (b, planar(&cfg))))
        .flat_map(|(b, pts)| {
            let bdim = sphere.cells[b].dim;
            fiber_faces(&pts).into_iter().filter(move |f| 6 + bdim + f.dim >= MIN_DIM).map(move |f| (b, pts.clone(), f)).collect::<Vec<_>>()
        })
        .collect();
    jobs.into_par_iter()
        .map(|(b, mut pts, f)| {
            pts.push(f.sample.clone());
            let key = orientation_key(&pts);
            let cfg = Configuration::planar(pts);
            let signature = fiber_signature(&Framework::new(Graph::complete(5), cfg)?)?;
            Ok(ProductCell { base: b, dim: 6 + sphere.cells[b].dim + f.dim, key, signature })
        })
        .collect()
}

fn conforms(low: &[i8], high: &[i8]) -> bool {
    low.iter().zip(high).all(|(a, b)| *a == 0 || a == b)
}

/// Counts the codimension-0 and -1 strata of `K_5`.
pub fn lambda5_census() -> Result<Lambda5Census> {
    let sphere = refined_base();
    let cells = product_cells(&sphere)?;
    let mut by_base: Vec<Vec<usize>> = vec![Vec::new(); sphere.cells.len()];
    for (i, c) in cells.iter().enumerate() {
        by_base[c.base].push(i);
    }
    let mut pairs: Vec<(usize, usize)> = sphere.incidences.clone();
    pairs.extend((0..sphere.cells.len()).map(|b| (b, b)));
    let mut uf = Uf::new(cells.len());
    for (lo, hi) in pairs {
        for &a in &by_base[lo] {
            for &b in &by_base[hi] {
                let (ca, cb) = (&cells[a], &cells[b]);
                if ca.dim < cb.dim && ca.signature == cb.signature && conforms(&ca.key, &cb.key) {
                    uf.union(a, b);
                }
            }
        }
    }
    let mut top_dim: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, c) in cells.iter().enumerate() {
        let r = uf.find(i);
        let e = top_dim.entry(r).or_insert(0);
        *e = (*e).max(c.dim);
    }
    let count = |d: usize| top_dim.values().filter(|&&x| x == d).count();
    Ok(Lambda5Census { top: count(10), codim1: count(9), cells: cells.len(), fiber_cells: fiber_cell_counts(&sphere) })
}

fn fiber_cell_counts(sphere: &RawSphere) -> BTreeMap<String, Vec<usize>> {
    let lambda4 = lambda4_arrangement();
    let mut out: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for c in sphere.cells.iter().filter(|c| c.dim == 2 && c.chart != Chart::Equator) {
        let Some(cfg) = c.sample.configuration() else { continue };
        let Ok(class) = super::lambda4::classify_k4(&cfg) else { continue };
        if let Some(face) = lambda4.get(&class.cell) {
            let n = fiber_faces(&planar(&cfg)).iter().filter(|f| f.dim == 2).count();
            out.entry(face.id.clone()).or_default().push(n);
        }
    }
    out
}

/// Formal sample of a refined base cell, for reporting.
pub fn base_sample(sphere: &RawSphere, i: usize) -> &FormalConfiguration {
    &sphere.cells[i].sample
}
