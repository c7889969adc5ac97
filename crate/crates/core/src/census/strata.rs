//! Strata tables of `K_n`, `n <= 5`, from degeneracy descriptors.
//!
//! A descriptor is a coincidence partition of the labels together with the
//! labeled order type (orientations plus orders along lines) of the
//! cluster positions. Each descriptor's realization space is connected for
//! at most five clusters, so descriptors are the candidate strata; two of
//! them are merged when one lies in the closure of the other and their
//! fiber signatures agree.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use rayon::prelude::*;

use super::order_types::{order_types, OrderType};
use crate::error::{Error, Result};
use crate::model::{Configuration, Framework, Graph};
use crate::projective::orient2;
use crate::scalar::{sign, Rational};
use crate::signature::{fiber_signature, FiberSignature};

#[derive(Debug, Clone)]
pub struct Descriptor {
    /// Clusters of coincident labels (1-based), ordered by least label.
    pub clusters: Vec<Vec<usize>>,
    /// Index into `order_types(clusters.len())`.
    pub order_type: usize,
    pub dim: usize,
    pub kind: String,
    pub sample: Configuration,
}

impl Descriptor {
    fn cluster_of(&self, label: usize) -> usize {
        self.clusters.iter().position(|c| c.contains(&label)).expect("label in partition")
    }
}

fn plural(k: usize, one: &str, many: &str) -> String {
    if k == 1 {
        one.to_string()
    } else {
        format!("{k} {many}")
    }
}

/// Human-readable degeneracy type, e.g. "two points coincide; three
/// collinear".
fn kind(clusters: &[Vec<usize>], t: &OrderType) -> String {
    let names = ["", "", "two", "three", "four", "five"];
    let mut parts = Vec::new();
    let mut sizes: Vec<usize> = clusters.iter().map(|c| c.len()).filter(|&s| s > 1).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    if clusters.len() == 1 {
        parts.push("all points coincide".to_string());
    } else if !sizes.is_empty() {
        let desc: Vec<String> = sizes
            .iter()
            .dedup_with_count()
            .map(|(k, s)| match k {
                1 => format!("{} points coincide", names[*s]),
                _ => format!("{} pairs of {} coincident points", names[k], names[*s]),
            })
            .collect();
        parts.push(desc.join(", "));
    }
    let mut lines: Vec<usize> = t.collinear_sets().iter().map(|l| l.len()).collect();
    lines.sort_unstable_by(|a, b| b.cmp(a));
    if !lines.is_empty() {
        let subject = if sizes.is_empty() { "points" } else { "clusters" };
        let desc: Vec<String> = lines.iter().map(|l| format!("{} {subject} collinear", names[*l])).collect();
        parts.push(match lines.len() {
            1 => desc[0].clone(),
            _ => format!("{} ({})", plural(lines.len(), "", "collinear sets"), desc.join(", ")),
        });
    }
    if parts.is_empty() {
        "general position".to_string()
    } else {
        parts.join("; ")
    }
}

fn set_partitions_labels(n: usize) -> Vec<Vec<Vec<usize>>> {
    super::order_types::set_partitions(n)
        .into_iter()
        .map(|p| p.into_iter().map(|b| b.into_iter().map(|i| i + 1).collect()).collect())
        .collect()
}

/// All degeneracy descriptors of `n` labeled points.
pub fn descriptors(n: usize) -> Result<Vec<Descriptor>> {
    if !(2..=5).contains(&n) {
        return Err(Error::UnsupportedN(n));
    }
    let types: Vec<Vec<OrderType>> = (0..=n).map(order_types).collect();
    let mut out = Vec::new();
    for clusters in set_partitions_labels(n) {
        let c = clusters.len();
        for (i, t) in types[c].iter().enumerate() {
            let mut pts: Vec<[Rational; 2]> = vec![t.points[0].clone(); n];
            for (k, cl) in clusters.iter().enumerate() {
                for &v in cl {
                    pts[v - 1] = t.points[k].clone();
                }
            }
            out.push(Descriptor {
                kind: kind(&clusters, t),
                clusters: clusters.clone(),
                order_type: i,
                dim: t.dimension(),
                sample: Configuration::planar(pts),
            });
        }
    }
    Ok(out)
}

/// Necessary condition for `d` to lie in the closure of `e`: every
/// orientation that is nonzero on `d` is already that orientation on `e`,
/// every coincidence and collinearity of `e` persists in `d`, and `d` is
/// strictly more degenerate.
pub fn may_specialize(d: &Descriptor, e: &Descriptor) -> bool {
    if d.dim >= e.dim {
        return false;
    }
    if !e.clusters.iter().all(|c| c.iter().all(|&v| d.cluster_of(v) == d.cluster_of(c[0]))) {
        return false;
    }
    let n = d.sample.len();
    let pd = d.sample.points();
    let pe = e.sample.points();
    (0..n).tuple_combinations().all(|(a, b, c)| {
        let sd = sign(&orient2(&pd[a], &pd[b], &pd[c]));
        let se = sign(&orient2(&pe[a], &pe[b], &pe[c]));
        sd == se || (sd == 0 && se != 0)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrataTable {
    pub n: usize,
    /// Stratum dimension to count.
    pub counts: BTreeMap<usize, usize>,
    /// Per dimension, count by degeneracy type.
    pub by_kind: BTreeMap<usize, BTreeMap<String, usize>>,
    /// Descriptor pairs that were merged because of equal signatures.
    pub merges: usize,
    /// Same-signature pairs examined for a merge.
    pub merge_candidates: usize,
    /// Rows replaced by the fibered count, as (dimension, descriptor count).
    pub replaced: BTreeMap<usize, usize>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the higher-dimensional representative (larger index here)
        self.0[ra.min(rb)] = ra.max(rb);
        true
    }
}

/// Fiber signature of `K_n` at each descriptor's sample.
pub fn descriptor_signatures(ds: &[Descriptor]) -> Result<Vec<FiberSignature>> {
    ds.par_iter()
        .map(|d| fiber_signature(&Framework::new(Graph::complete(d.sample.len()), d.sample.clone())?))
        .collect()
}

/// The strata table of `K_n` by descriptor enumeration.
pub fn descriptor_table(n: usize) -> Result<StrataTable> {
    let mut ds = descriptors(n)?;
    ds.sort_by_key(|d| d.dim);
    let sigs = descriptor_signatures(&ds)?;
    let mut groups: HashMap<&FiberSignature, Vec<usize>> = HashMap::new();
    for (i, s) in sigs.iter().enumerate() {
        groups.entry(s).or_default().push(i);
    }
    let mut dsu = Dsu((0..ds.len()).collect());
    let mut merges = 0;
    let mut merge_candidates = 0;
    let mut members: Vec<&Vec<usize>> = groups.values().filter(|g| g.len() > 1).collect();
    members.sort();
    for g in members {
        for (&a, &b) in g.iter().tuple_combinations() {
            let (lo, hi) = if ds[a].dim <= ds[b].dim { (a, b) } else { (b, a) };
            if ds[lo].dim == ds[hi].dim {
                continue;
            }
            merge_candidates += 1;
            if may_specialize(&ds[lo], &ds[hi]) && dsu.union(lo, hi) {
                merges += 1;
            }
        }
    }
    let mut counts = BTreeMap::new();
    let mut by_kind: BTreeMap<usize, BTreeMap<String, usize>> = BTreeMap::new();
    for i in 0..ds.len() {
        if dsu.find(i) == i {
            *counts.entry(ds[i].dim).or_insert(0) += 1;
            *by_kind.entry(ds[i].dim).or_default().entry(ds[i].kind.clone()).or_insert(0) += 1;
        }
    }
    Ok(StrataTable { n, counts, by_kind, merges, merge_candidates, replaced: BTreeMap::new() })
}

/// The strata table of `K_n`. For five points the rows of dimension 9 and
/// 10 come from [`lambda5_census`](super::lambda5::lambda5_census).
pub fn strata_table(n: usize) -> Result<StrataTable> {
    let mut t = descriptor_table(n)?;
    if n == 5 {
        let l5 = super::lambda5::lambda5_census()?;
        for (d, v) in [(10, l5.top), (9, l5.codim1)] {
            let old = t.counts.insert(d, v).unwrap_or(0);
            t.replaced.insert(d, old);
        }
    }
    Ok(t)
}
