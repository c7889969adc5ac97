//! Faces of an affine line arrangement, one exact sample per face.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalar::{int, sign, Rational};

/// Affine line `a x + b y + c = 0` with `(a, b) != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl Line {
    /// Line through two distinct points, oriented so that `eval(r)` is the
    /// orientation `orient(p, q, r)`.
    pub fn through(p: &[Rational; 2], q: &[Rational; 2]) -> Line {
        let a = &p[1] - &q[1];
        let b = &q[0] - &p[0];
        let c = &p[0] * &q[1] - &p[1] * &q[0];
        Line { a, b, c }
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        &self.a * x + &self.b * y + &self.c
    }

    pub fn side(&self, p: &[Rational; 2]) -> i8 {
        sign(&self.eval(&p[0], &p[1]))
    }

    fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    fn y_at(&self, x: &Rational) -> Rational {
        -(&self.a * x + &self.c) / &self.b
    }
}

fn meet(l: &Line, m: &Line) -> Option<[Rational; 2]> {
    let det = &l.a * &m.b - &l.b * &m.a;
    if det.is_zero() {
        return None;
    }
    let x = (&l.b * &m.c - &l.c * &m.b) / &det;
    let y = (&l.c * &m.a - &l.a * &m.c) / &det;
    Some([x, y])
}

/// Dimension of a face and its sign vector against the lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub dim: usize,
    pub signs: Vec<i8>,
    pub sample: [Rational; 2],
}

fn midpoints(sorted: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::new();
    match (sorted.first(), sorted.last()) {
        (Some(lo), Some(hi)) => {
            out.push(lo - Rational::one());
            out.extend(sorted.iter().cloned());
            for w in sorted.windows(2) {
                out.push((&w[0] + &w[1]) / int(2));
            }
            out.push(hi + Rational::one());
        }
        _ => out.push(Rational::zero()),
    }
    out
}

/// Sample points meeting every face of the arrangement, refined so that
/// the `cuts` also split the lines they lie on.
pub fn sample_points(lines: &[Line], cuts: &[[Rational; 2]]) -> Vec<[Rational; 2]> {
    let mut xs: Vec<Rational> = cuts.iter().map(|p| p[0].clone()).collect();
    for (i, l) in lines.iter().enumerate() {
        if l.is_vertical() {
            xs.push(-&l.c / &l.a);
        }
        for m in &lines[i + 1..] {
            if let Some(p) = meet(l, m) {
                xs.push(p[0].clone());
            }
        }
    }
    xs.sort();
    xs.dedup();
    let mut out = Vec::new();
    for x in midpoints(&xs) {
        let mut ys: Vec<Rational> = lines.iter().filter(|l| !l.is_vertical()).map(|l| l.y_at(&x)).collect();
        ys.extend(cuts.iter().filter(|p| p[0] == x).map(|p| p[1].clone()));
        ys.sort();
        ys.dedup();
        for y in midpoints(&ys) {
            out.push([x.clone(), y]);
        }
    }
    out
}

/// Every face (2-cells, edges, vertices) of the arrangement, keyed by sign
/// vector. Identical lines are allowed and simply share zeros.
pub fn faces(lines: &[Line]) -> Vec<Face> {
    let mut found: BTreeMap<Vec<i8>, [Rational; 2]> = BTreeMap::new();
    for p in sample_points(lines, &[]) {
        let s: Vec<i8> = lines.iter().map(|l| l.side(&p)).collect();
        found.entry(s).or_insert(p);
    }
    found
        .into_iter()
        .map(|(signs, sample)| {
            let dim = face_dim(lines, &signs);
            Face { dim, signs, sample }
        })
        .collect()
}

fn face_dim(lines: &[Line], signs: &[i8]) -> usize {
    let zero: Vec<&Line> = lines.iter().zip(signs).filter(|(_, s)| **s == 0).map(|(l, _)| l).collect();
    match zero.first() {
        None => 2,
        Some(l) => {
            if zero.iter().all(|m| &l.a * &m.b == &l.b * &m.a) {
                1
            } else {
                0
            }
        }
    }
}
