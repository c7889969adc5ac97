//! SVG of the `Λ4` complex projected stereographically from `(0, 0, -1)`:
//! the plus chart fills the unit disk, the equator is the dashed unit
//! circle, the minus chart lies outside it.

use std::fmt::Write;

use num_traits::ToPrimitive;
use stressforge::census::sphere::{collinearity_lines, Chart, V123, V124, V134, V234};
use stressforge::census::CellComplex;
use stressforge::{Error, Result};

const VIEW: f64 = 2.6;
const CLIP: f64 = 2.5;

fn colour(condition: &str) -> &'static str {
    match condition {
        c if c == V123 => "#8ecae6",
        c if c == V124 => "#1d4e89",
        c if c == V134 => "#95d5b2",
        c if c == V234 => "#2d6a4f",
        _ => "#888888",
    }
}

/// Sphere point of a chart point, projected to the disk.
fn project(chart: Chart, x: f64, y: f64, w: f64) -> (f64, f64) {
    let h = match chart {
        Chart::Plus => [x, y, w],
        _ => [-x, y, -w],
    };
    let r = (h[0] * h[0] + h[1] * h[1] + h[2] * h[2]).sqrt();
    let (sx, sy, sz) = (h[0] / r, h[1] / r, h[2] / r);
    let den = (1.0 + sz).max(1e-9);
    (sx / den, -sy / den)
}

/// Polyline of the raw chart edge with sign vector `signs` (one zero).
fn edge_path(chart: Chart, signs: &[i8]) -> Option<Vec<(f64, f64)>> {
    let lines: Vec<[f64; 3]> = collinearity_lines(chart)
        .iter()
        .map(|l| [l.line.a.to_f64().unwrap_or(0.0), l.line.b.to_f64().unwrap_or(0.0), l.line.c.to_f64().unwrap_or(0.0)])
        .collect();
    let k = signs.iter().position(|&s| s == 0)?;
    let [a, b, c] = lines[k];
    let n2 = a * a + b * b;
    let p0 = (-a * c / n2, -b * c / n2);
    let d = (-b, a);
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    for (j, l) in lines.iter().enumerate() {
        if j == k || signs[j] == 0 {
            continue;
        }
        let base = l[0] * p0.0 + l[1] * p0.1 + l[2];
        let slope = l[0] * d.0 + l[1] * d.1;
        if slope == 0.0 {
            continue;
        }
        let t = -base / slope;
        // sign of base + slope * s must equal signs[j]
        if (slope > 0.0) == (signs[j] > 0) {
            lo = lo.max(t);
        } else {
            hi = hi.min(t);
        }
    }
    let param = |u: f64| -> (f64, f64, f64) {
        // u in [0, 1] covers [lo, hi], infinite ends reach the equator
        match (lo.is_finite(), hi.is_finite()) {
            (true, true) => {
                let t = lo + (hi - lo) * u;
                (p0.0 + t * d.0, p0.1 + t * d.1, 1.0)
            }
            (true, false) => {
                let s = lo + u / (1.0 - u).max(1e-6);
                let w = 1.0 / (1.0 + s.abs());
                ((p0.0 + s * d.0) * w, (p0.1 + s * d.1) * w, w)
            }
            (false, true) => {
                let s = hi - (1.0 - u) / u.max(1e-6);
                let w = 1.0 / (1.0 + s.abs());
                ((p0.0 + s * d.0) * w, (p0.1 + s * d.1) * w, w)
            }
            (false, false) => {
                let s = (u - 0.5) / (u * (1.0 - u)).max(1e-6);
                let w = 1.0 / (1.0 + s.abs());
                ((p0.0 + s * d.0) * w, (p0.1 + s * d.1) * w, w)
            }
        }
    };
    Some(
        (0..=200)
            .map(|i| {
                let (x, y, w) = param(i as f64 / 200.0);
                project(chart, x, y, w)
            })
            .collect(),
    )
}

fn parse_member(id: &str) -> Option<(Chart, Vec<i8>)> {
    let (tag, signs) = id.split_once(':')?;
    let chart = match tag {
        "plus" => Chart::Plus,
        "minus" => Chart::Minus,
        _ => return None,
    };
    Some((chart, signs.chars().map(|c| match c { '+' => 1, '-' => -1, _ => 0 }).collect()))
}

/// Renders the complex. Fails on an empty complex.
pub fn export_svg(complex: &CellComplex) -> Result<String> {
    if complex.is_empty() {
        return Err(Error::Precondition("cannot export an empty complex".into()));
    }
    let groups = complex.arc_groups();
    let mut s = String::new();
    let w = |s: &mut String, t: String| s.push_str(&t);
    w(&mut s, format!("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{:.1} {:.1} {:.1} {:.1}\" width=\"800\" height=\"800\">\n", -VIEW, -VIEW, 2.0 * VIEW, 2.0 * VIEW));
    w(&mut s, format!("<metadata>{}</metadata>\n", serde_json::json!({ "arc_groups": groups, "faces": complex.count(2), "arcs": complex.count(1) })));
    w(&mut s, format!("<defs><clipPath id=\"view\"><circle cx=\"0\" cy=\"0\" r=\"{CLIP}\"/></clipPath></defs>\n"));
    s.push_str("<g clip-path=\"url(#view)\" fill=\"none\" stroke-width=\"0.02\">\n");
    for cell in complex.cells.iter().filter(|c| c.dim == 1 && c.stratum) {
        let cond = cell.condition.clone().unwrap_or_default();
        for m in &cell.members {
            let Some((chart, signs)) = parse_member(m) else { continue };
            let Some(path) = edge_path(chart, &signs) else { continue };
            let pts: Vec<String> = path.iter().filter(|p| p.0.hypot(p.1) < 10.0 * CLIP).map(|p| format!("{:.4},{:.4}", p.0, p.1)).collect();
            let _ = writeln!(s, "<polyline class=\"arc\" data-cell=\"{}\" data-group=\"{}\" stroke=\"{}\" points=\"{}\"/>", cell.id, cond, colour(&cond), pts.join(" "));
        }
    }
    s.push_str("</g>\n");
    s.push_str("<circle class=\"equator\" cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" stroke-width=\"0.01\" stroke-dasharray=\"0.05 0.04\"/>\n");
    for cell in complex.cells.iter().filter(|c| c.dim == 2 && c.stratum) {
        let h = cell.sample.homogeneous();
        let f = |r: &stressforge::Rational| r.to_f64().unwrap_or(0.0);
        let (mut x, mut y) = project(Chart::Plus, f(&h[0]), f(&h[1]), f(&h[2]));
        let r = x.hypot(y);
        if r > 0.9 * CLIP {
            x *= 0.9 * CLIP / r;
            y *= 0.9 * CLIP / r;
        }
        let _ = writeln!(s, "<text x=\"{x:.4}\" y=\"{y:.4}\" font-size=\"0.12\" text-anchor=\"middle\">{}</text>", cell.id);
    }
    s.push_str("</svg>\n");
    Ok(s)
}
