//! Labeled order types (possibly degenerate, distinct points) of up to
//! five planar points, each with an exact realization.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Zero};

use super::arrangement::{sample_points, Line};
use crate::projective::orient2;
use crate::scalar::{int, sign, Rational};

pub type Chirotope = Vec<i8>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderType {
    pub chirotope: Chirotope,
    pub points: Vec<[Rational; 2]>,
}

impl OrderType {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Maximal collinear subsets with at least three points (0-based).
    pub fn collinear_sets(&self) -> Vec<Vec<usize>> {
        collinear_sets(&self.points)
    }

    /// Dimension of the realization space: two per point, minus one for
    /// each point beyond the second on every maximal collinear set.
    pub fn dimension(&self) -> usize {
        2 * self.len() - self.collinear_sets().iter().map(|l| l.len() - 2).sum::<usize>()
    }
}

/// Orientation of every triple in lexicographic order, followed by the
/// position (0, 1 or 2) of the middle point of every collinear triple, so
/// that the order along each line is recorded too.
pub fn chirotope(points: &[[Rational; 2]]) -> Chirotope {
    let mut out = Vec::new();
    let mut middles = Vec::new();
    for (i, j, k) in (0..points.len()).tuple_combinations() {
        let s = sign(&orient2(&points[i], &points[j], &points[k]));
        out.push(s);
        if s == 0 {
            let t = [i, j, k];
            let mid = (0..3)
                .find(|&m| {
                    let (a, b, c) = (&points[t[(m + 1) % 3]], &points[t[m]], &points[t[(m + 2) % 3]]);
                    let dot = (&b[0] - &a[0]) * (&c[0] - &b[0]) + (&b[1] - &a[1]) * (&c[1] - &b[1]);
                    dot > Rational::zero()
                })
                .expect("distinct collinear points have a middle one");
            middles.push(mid as i8);
        }
    }
    out.extend(middles);
    out
}

pub fn collinear_sets(points: &[[Rational; 2]]) -> Vec<Vec<usize>> {
    let n = points.len();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, j) in (0..n).tuple_combinations() {
        let set: Vec<usize> = (0..n)
            .filter(|&k| k == i || k == j || orient2(&points[i], &points[j], &points[k]).is_zero())
            .collect();
        if set.len() >= 3 && !out.contains(&set) {
            out.push(set);
        }
    }
    out
}

fn dot2(a: &[Rational; 2], b: &[Rational; 2]) -> Rational {
    &a[0] * &b[0] + &a[1] * &b[1]
}

fn sub2(a: &[Rational; 2], b: &[Rational; 2]) -> [Rational; 2] {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

fn in_hull(q: &[Rational; 2], pts: &[[Rational; 2]]) -> bool {
    if pts.contains(q) {
        return true;
    }
    let on_segment = |a: &[Rational; 2], b: &[Rational; 2]| {
        orient2(a, b, q).is_zero() && dot2(&sub2(q, a), &sub2(q, b)) <= Rational::zero()
    };
    if (0..pts.len()).tuple_combinations().any(|(i, j)| on_segment(&pts[i], &pts[j])) {
        return true;
    }
    (0..pts.len()).tuple_combinations().any(|(i, j, k)| {
        let s = [sign(&orient2(&pts[i], &pts[j], q)), sign(&orient2(&pts[j], &pts[k], q)), sign(&orient2(&pts[k], &pts[i], q))];
        s.iter().all(|&x| x > 0) || s.iter().all(|&x| x < 0)
    })
}

/// Point of `conv(pts)` nearest to `q` (exact: nearest over vertices and
/// all pair segments, which cover the hull boundary).
fn nearest_in_hull(q: &[Rational; 2], pts: &[[Rational; 2]]) -> [Rational; 2] {
    let mut best = pts[0].clone();
    let mut best_d = dot2(&sub2(q, &best), &sub2(q, &best));
    let mut consider = |m: [Rational; 2]| {
        let d = dot2(&sub2(q, &m), &sub2(q, &m));
        if d < best_d {
            best_d = d;
            best = m;
        }
    };
    for p in pts {
        consider(p.clone());
    }
    for (i, j) in (0..pts.len()).tuple_combinations() {
        let (a, b) = (&pts[i], &pts[j]);
        let ab = sub2(b, a);
        let t = dot2(&sub2(q, a), &ab) / dot2(&ab, &ab);
        if t > Rational::zero() && t < Rational::one() {
            consider([&a[0] + &t * &ab[0], &a[1] + &t * &ab[1]]);
        }
    }
    best
}

/// Chart functional `w = (a, b, c)` positive on every `(p, 1)` and on `u`,
/// if one exists.
fn positive_chart(u: &[Rational; 3], pts: &[[Rational; 2]]) -> Option<[Rational; 3]> {
    if u[2] > Rational::zero() {
        return Some([Rational::zero(), Rational::zero(), Rational::one()]);
    }
    if u[2].is_zero() {
        let d = [u[0].clone(), u[1].clone()];
        let lo = pts.iter().map(|p| dot2(&d, p)).min().unwrap();
        return Some([d[0].clone(), d[1].clone(), Rational::one() - lo]);
    }
    let q = [&u[0] / &u[2], &u[1] / &u[2]];
    if in_hull(&q, pts) {
        return None;
    }
    // f(x) = (x - q).(m - q) - eps is positive on the hull, negative at q.
    let m = nearest_in_hull(&q, pts);
    let d = sub2(&m, &q);
    let eps = dot2(&d, &d) / int(2);
    Some([d[0].clone(), d[1].clone(), -dot2(&d, &q) - eps])
}

/// Points of the affine chart `w = 1` with orientation-preserving
/// coordinates.
fn chart_coords(w: &[Rational; 3], v: &[Rational; 3]) -> [Rational; 2] {
    let e = |i: usize| {
        let mut r = [Rational::zero(), Rational::zero(), Rational::zero()];
        r[i] = Rational::one();
        r
    };
    let (mut r1, r2) = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .map(|(a, b)| (e(a), e(b)))
        .find(|(a, b)| !crate::projective::det3(a, b, w).is_zero())
        .expect("w is nonzero");
    if crate::projective::det3(&r1, &r2, w) < Rational::zero() {
        r1 = r1.map(|x| -x);
    }
    let dot3 = |a: &[Rational; 3]| &a[0] * &v[0] + &a[1] * &v[1] + &a[2] * &v[2];
    let s = dot3(w);
    [dot3(&r1) / &s, dot3(&r2) / &s]
}

fn sorted_directions(mut ds: Vec<[Rational; 2]>) -> Vec<[Rational; 2]> {
    let half = |d: &[Rational; 2]| if d[1] > Rational::zero() || (d[1].is_zero() && d[0] > Rational::zero()) { 0 } else { 1 };
    ds.sort_by(|a, b| {
        half(a).cmp(&half(b)).then_with(|| {
            let c = &a[0] * &b[1] - &a[1] * &b[0];
            Rational::zero().cmp(&c)
        })
    });
    ds.dedup_by(|a, b| half(a) == half(b) && (&a[0] * &b[1] - &a[1] * &b[0]).is_zero());
    ds
}

/// Homogeneous samples meeting every face of the great-circle arrangement
/// of the lines through pairs of `pts`, refined by the points `(p, +-1)`.
fn sphere_samples(pts: &[[Rational; 2]]) -> Vec<[Rational; 3]> {
    let lines: Vec<Line> = (0..pts.len()).tuple_combinations().map(|(i, j)| Line::through(&pts[i], &pts[j])).collect();
    let mut out = Vec::new();
    for q in sample_points(&lines, pts) {
        out.push([q[0].clone(), q[1].clone(), Rational::one()]);
        out.push([-q[0].clone(), -q[1].clone(), -Rational::one()]);
    }
    let mut dirs = Vec::new();
    for (i, j) in (0..pts.len()).tuple_combinations() {
        let d = sub2(&pts[j], &pts[i]);
        dirs.push([-d[0].clone(), -d[1].clone()]);
        dirs.push(d);
    }
    let dirs = sorted_directions(dirs);
    for (k, d) in dirs.iter().enumerate() {
        let e = &dirs[(k + 1) % dirs.len()];
        let between = if &d[0] * &e[1] - &d[1] * &e[0] > Rational::zero() {
            [&d[0] + &e[0], &d[1] + &e[1]]
        } else {
            [-d[1].clone(), d[0].clone()]
        };
        out.push([d[0].clone(), d[1].clone(), Rational::zero()]);
        out.push([between[0].clone(), between[1].clone(), Rational::zero()]);
    }
    out
}

/// Every realizable way to add one point to `t`, each realized exactly.
pub fn extensions(t: &OrderType) -> Vec<Vec<[Rational; 2]>> {
    let pts = &t.points;
    let mut out = Vec::new();
    for u in sphere_samples(pts) {
        if u[2] < Rational::zero() && pts.iter().any(|p| p[0] == &u[0] / &u[2] && p[1] == &u[1] / &u[2]) {
            continue;
        }
        if u[2] > Rational::zero() && pts.iter().any(|p| p[0] == u[0] && p[1] == u[1]) {
            continue;
        }
        let Some(w) = positive_chart(&u, pts) else { continue };
        let mut next: Vec<[Rational; 2]> =
            pts.iter().map(|p| chart_coords(&w, &[p[0].clone(), p[1].clone(), Rational::one()])).collect();
        next.push(chart_coords(&w, &u));
        out.push(next);
    }
    out
}

fn extend(parents: &[OrderType]) -> Vec<OrderType> {
    let mut found: BTreeMap<Chirotope, Vec<[Rational; 2]>> = BTreeMap::new();
    for t in parents {
        for next in extensions(t) {
            debug_assert_eq!(chirotope(&next[..t.len()]), t.chirotope);
            found.entry(chirotope(&next)).or_insert(next);
        }
    }
    found.into_iter().map(|(chirotope, points)| OrderType { chirotope, points }).collect()
}

/// All labeled order types of `c` distinct points, `c <= 5`, sorted by
/// chirotope.
pub fn order_types(c: usize) -> Vec<OrderType> {
    assert!(c <= 5, "order types are enumerated for at most five points");
    let base = |pts: Vec<[Rational; 2]>| vec![OrderType { chirotope: chirotope(&pts), points: pts }];
    match c {
        0 => base(vec![]),
        1 => base(vec![[Rational::zero(), Rational::zero()]]),
        2 => base(vec![[Rational::zero(), Rational::zero()], [Rational::one(), Rational::zero()]]),
        _ => extend(&order_types(c - 1)),
    }
}

/// Set partitions of `{0..n}` as block lists, blocks ordered by their least
/// element.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            rec(i + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        rec(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), &mut out);
    out
}
