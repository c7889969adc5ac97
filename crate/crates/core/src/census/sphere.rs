//! The sphere of formal configurations as two affine charts glued along
//! the equator, cut by walls given as chart lines.

use std::fmt::Write;

use num_traits::Zero;

use super::arrangement::{faces, Line};
use super::formal::FormalConfiguration;
use crate::scalar::{int, sign, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Chart {
    Plus,
    Minus,
    Equator,
}

#[derive(Debug, Clone)]
pub struct ChartLine {
    pub line: Line,
    pub label: &'static str,
    /// Genuine walls are collinearity conditions; the others (parallel
    /// conditions) only refine.
    pub genuine: bool,
}

fn line(a: i64, b: i64, c: i64, label: &'static str, genuine: bool) -> ChartLine {
    ChartLine { line: Line { a: int(a), b: int(b), c: int(c) }, label, genuine }
}

pub const V123: &str = "v1v2v3 collinear";
pub const V124: &str = "v1v2v4 collinear";
pub const V134: &str = "v1v3v4 collinear";
pub const V234: &str = "v2v3v4 collinear";
pub const P13_24: &str = "v1v3 parallel to v2v4";
pub const P14_23: &str = "v1v4 parallel to v2v3";
pub const P12_34: &str = "v1v2 parallel to v3v4";

/// Collinearity walls of the two charts.
pub fn collinearity_lines(chart: Chart) -> Vec<ChartLine> {
    let s = if chart == Chart::Plus { 1 } else { -1 };
    vec![line(1, 0, 0, V134, true), line(1, 0, -1, V234, true), line(0, 1, 0, V123, true), line(0, 1, s, V124, true)]
}

/// Parallel-condition lines of the two charts.
pub fn parallel_lines(chart: Chart) -> Vec<ChartLine> {
    match chart {
        Chart::Plus => vec![line(1, 1, 0, P13_24, false), line(1, -1, -1, P14_23, false)],
        _ => vec![line(1, -1, 0, P13_24, false), line(1, 1, -1, P14_23, false)],
    }
}

#[derive(Debug, Clone)]
pub struct RawCell {
    pub id: String,
    pub dim: usize,
    pub chart: Chart,
    pub signs: Vec<i8>,
    pub sample: FormalConfiguration,
    /// Labels of the lines the cell lies on.
    pub on: Vec<&'static str>,
    /// Lies on at least one collinearity wall.
    pub genuine: bool,
}

#[derive(Debug, Clone)]
pub struct RawSphere {
    pub cells: Vec<RawCell>,
    /// Pairs `(a, b)` with cell `a` in the closure of cell `b`.
    pub incidences: Vec<(usize, usize)>,
    pub plus: Vec<ChartLine>,
    pub minus: Vec<ChartLine>,
}

impl RawSphere {
    /// Index of the raw cell containing a formal configuration.
    pub fn locate(&self, f: &FormalConfiguration) -> Option<usize> {
        let h = f.homogeneous();
        if !h[2].is_zero() {
            let (chart, lines) = if h[2] > Rational::zero() { (Chart::Plus, &self.plus) } else { (Chart::Minus, &self.minus) };
            let p = if chart == Chart::Plus { [&h[0] / &h[2], &h[1] / &h[2]] } else { [&h[0] / &h[2], -(&h[1] / &h[2])] };
            let signs: Vec<i8> = lines.iter().map(|l| l.line.side(&p)).collect();
            return self.cells.iter().position(|c| c.chart == chart && c.signs == signs);
        }
        let d = [h[0].clone(), h[1].clone()];
        let cross = |a: &[Rational; 3], b: &[Rational; 2]| &a[0] * &b[1] - &a[1] * &b[0];
        let eq: Vec<usize> = (0..self.cells.len()).filter(|&i| self.cells[i].chart == Chart::Equator).collect();
        for (k, &i) in eq.iter().enumerate().step_by(2) {
            let a = self.cells[i].sample.homogeneous();
            let b = self.cells[eq[(k + 2) % eq.len()]].sample.homogeneous();
            if cross(&a, &d).is_zero() && &a[0] * &d[0] + &a[1] * &d[1] > Rational::zero() {
                return Some(i);
            }
            if cross(&a, &d) > Rational::zero() && cross(&b, &d) < Rational::zero() {
                return Some(eq[k + 1]);
            }
        }
        None
    }
}

fn sign_string(s: &[i8]) -> String {
    let mut out = String::new();
    for x in s {
        out.push(match x {
            1 => '+',
            -1 => '-',
            _ => '0',
        });
    }
    out
}

fn direction_key(d: &[Rational; 2]) -> (u8, Rational) {
    // angle order: upper half-plane (and positive x-axis) first
    let upper = d[1] > Rational::zero() || (d[1].is_zero() && d[0] > Rational::zero());
    let slope_key = if d[1].is_zero() { Rational::zero() } else { -(&d[0] / &d[1]) };
    (if upper { 0 } else { 1 }, slope_key)
}

fn sorted_directions(mut ds: Vec<[Rational; 2]>) -> Vec<[Rational; 2]> {
    ds.sort_by(|a, b| {
        let (ha, hb) = (direction_key(a).0, direction_key(b).0);
        ha.cmp(&hb).then_with(|| {
            let c = &a[0] * &b[1] - &a[1] * &b[0];
            Rational::zero().cmp(&c)
        })
    });
    ds.dedup_by(|a, b| direction_key(a).0 == direction_key(b).0 && (&a[0] * &b[1] - &a[1] * &b[0]).is_zero());
    ds
}

fn chart_sample(chart: Chart, p: [Rational; 2]) -> FormalConfiguration {
    let [x, y] = p;
    match chart {
        Chart::Plus => FormalConfiguration::PlusChart { x, y },
        _ => FormalConfiguration::MinusChart { x, y },
    }
}

/// Chart direction for an equator direction `(X, Y)`.
fn chart_direction(chart: Chart, d: &[Rational; 2]) -> [Rational; 2] {
    match chart {
        Chart::Plus => d.clone(),
        _ => [-d[0].clone(), d[1].clone()],
    }
}

/// Whether the point at infinity in direction `d` lies in the closure of a
/// chart cell with sign vector `signs`.
fn reaches(lines: &[ChartLine], signs: &[i8], d: &[Rational; 2]) -> bool {
    lines.iter().zip(signs).all(|(l, &s)| {
        let lin = sign(&(&l.line.a * &d[0] + &l.line.b * &d[1]));
        if s == 0 {
            lin == 0
        } else {
            lin == 0 || lin == s
        }
    })
}

pub fn build(plus: &[ChartLine], minus: &[ChartLine]) -> RawSphere {
    let mut cells: Vec<RawCell> = Vec::new();
    let mut ranges = Vec::new();
    for (chart, lines) in [(Chart::Plus, plus), (Chart::Minus, minus)] {
        let start = cells.len();
        let ls: Vec<Line> = lines.iter().map(|l| l.line.clone()).collect();
        let mut fs = faces(&ls);
        fs.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.signs.cmp(&b.signs)));
        for f in fs {
            let on: Vec<&'static str> = lines.iter().zip(&f.signs).filter(|(_, s)| **s == 0).map(|(l, _)| l.label).collect();
            let genuine = lines.iter().zip(&f.signs).any(|(l, s)| *s == 0 && l.genuine);
            let tag = if chart == Chart::Plus { "plus" } else { "minus" };
            cells.push(RawCell {
                id: format!("{tag}:{}", sign_string(&f.signs)),
                dim: f.dim,
                chart,
                signs: f.signs,
                sample: chart_sample(chart, f.sample),
                on,
                genuine,
            });
        }
        ranges.push((chart, start, cells.len(), lines));
    }
    let mut incidences = Vec::new();
    for &(_, start, end, _) in &ranges {
        for a in start..end {
            for b in start..end {
                if cells[a].dim < cells[b].dim && cells[a].signs.iter().zip(&cells[b].signs).all(|(x, y)| *x == 0 || x == y) {
                    incidences.push((a, b));
                }
            }
        }
    }
    // Equator: cut at the asymptotic directions of every chart line.
    let mut dirs = Vec::new();
    for l in plus.iter().chain(minus) {
        let d = [-l.line.b.clone(), l.line.a.clone()];
        dirs.push([-d[0].clone(), -d[1].clone()]);
        dirs.push(d);
    }
    let dirs = sorted_directions(dirs);
    let eq_start = cells.len();
    for (k, d) in dirs.iter().enumerate() {
        let e = &dirs[(k + 1) % dirs.len()];
        let mid = if &d[0] * &e[1] - &d[1] * &e[0] > Rational::zero() {
            [&d[0] + &e[0], &d[1] + &e[1]]
        } else {
            [-d[1].clone(), d[0].clone()]
        };
        for (dim, v) in [(0usize, d.clone()), (1, mid)] {
            let h = [v[0].clone(), v[1].clone(), Rational::zero()];
            let mut id = String::new();
            write!(id, "equator:{}:{}", dim, crate::scalar::format_rational(&v[0])).unwrap();
            write!(id, ",{}", crate::scalar::format_rational(&v[1])).unwrap();
            cells.push(RawCell {
                id,
                dim,
                chart: Chart::Equator,
                signs: vec![],
                sample: FormalConfiguration::from_homogeneous(&h).expect("nonzero direction"),
                on: vec![P12_34],
                genuine: false,
            });
        }
    }
    let n_eq = cells.len() - eq_start;
    for k in 0..n_eq / 2 {
        let arc = eq_start + 2 * k + 1;
        incidences.push((eq_start + 2 * k, arc));
        incidences.push((eq_start + (2 * k + 2) % n_eq, arc));
    }
    for e in eq_start..cells.len() {
        let h = cells[e].sample.homogeneous();
        let d = [h[0].clone(), h[1].clone()];
        for &(chart, start, end, lines) in &ranges {
            let cd = chart_direction(chart, &d);
            for c in start..end {
                if cells[c].dim > cells[e].dim && reaches(lines, &cells[c].signs, &cd) {
                    incidences.push((e, c));
                }
            }
        }
    }
    incidences.sort_unstable();
    incidences.dedup();
    RawSphere { cells, incidences, plus: plus.to_vec(), minus: minus.to_vec() }
}
