//! Affine normal forms of four-point configurations (points of the sphere
//! `Λ4`).

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::model::Configuration;
use crate::projective::orient2;
use crate::scalar::{format_rational, sign, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormalConfiguration {
    /// `v1=(0,0), v2=(1,0), v3=(x,y), v4=(x,y+1)`.
    PlusChart { x: Rational, y: Rational },
    /// `v1=(0,0), v2=(1,0), v3=(x,y), v4=(x,y-1)`.
    MinusChart { x: Rational, y: Rational },
    /// `v1=(0,0), v2=(1,0), v3=(0,1), v4=(Δ,1)`.
    DegeneratePlus(Rational),
    /// `v1=(0,0), v2=(1,0), v3=(0,-1), v4=(Δ,-1)`.
    DegenerateMinus(Rational),
    PlusInfinity,
    MinusInfinity,
}

impl FormalConfiguration {
    pub fn tag(&self) -> &'static str {
        match self {
            FormalConfiguration::PlusChart { .. } => "plus",
            FormalConfiguration::MinusChart { .. } => "minus",
            FormalConfiguration::DegeneratePlus(_) => "degenerate-plus",
            FormalConfiguration::DegenerateMinus(_) => "degenerate-minus",
            FormalConfiguration::PlusInfinity => "plus-infinity",
            FormalConfiguration::MinusInfinity => "minus-infinity",
        }
    }

    /// The four points, or `None` for the two limit points.
    pub fn vertices(&self) -> Option<Vec<[Rational; 2]>> {
        let o = Rational::zero;
        let one = Rational::one;
        let base = |v3: [Rational; 2], v4: [Rational; 2]| Some(vec![[o(), o()], [one(), o()], v3, v4]);
        match self {
            FormalConfiguration::PlusChart { x, y } => base([x.clone(), y.clone()], [x.clone(), y + one()]),
            FormalConfiguration::MinusChart { x, y } => base([x.clone(), y.clone()], [x.clone(), y - one()]),
            FormalConfiguration::DegeneratePlus(d) => base([o(), one()], [d.clone(), one()]),
            FormalConfiguration::DegenerateMinus(d) => base([o(), -one()], [d.clone(), -one()]),
            _ => None,
        }
    }

    pub fn configuration(&self) -> Option<Configuration> {
        self.vertices().map(Configuration::planar)
    }

    /// Homogeneous point on the sphere: charts at `Z > 0` and `Z < 0`, the
    /// degenerate forms on the equator. The minus chart is mirrored in `y` so
    /// that a configuration tending to `v1v2 ∥ v3v4` has the same limit from
    /// both sides.
    pub fn homogeneous(&self) -> [Rational; 3] {
        let o = Rational::zero;
        let one = Rational::one;
        match self {
            FormalConfiguration::PlusChart { x, y } => [x.clone(), y.clone(), one()],
            FormalConfiguration::MinusChart { x, y } => [-x.clone(), y.clone(), -one()],
            FormalConfiguration::DegeneratePlus(d) => [-d.clone(), one(), o()],
            FormalConfiguration::DegenerateMinus(d) => [d.clone(), -one(), o()],
            FormalConfiguration::PlusInfinity => [one(), o(), o()],
            FormalConfiguration::MinusInfinity => [-one(), o(), o()],
        }
    }

    /// Inverse of [`homogeneous`](Self::homogeneous) up to positive scale.
    pub fn from_homogeneous(h: &[Rational; 3]) -> Result<Self> {
        let [x, y, z] = h;
        if z > &Rational::zero() {
            Ok(FormalConfiguration::PlusChart { x: x / z, y: y / z })
        } else if z < &Rational::zero() {
            Ok(FormalConfiguration::MinusChart { x: x / z, y: -(y / z) })
        } else if y > &Rational::zero() {
            Ok(FormalConfiguration::DegeneratePlus(-x / y))
        } else if y < &Rational::zero() {
            Ok(FormalConfiguration::DegenerateMinus(-x / y))
        } else if x > &Rational::zero() {
            Ok(FormalConfiguration::PlusInfinity)
        } else if x < &Rational::zero() {
            Ok(FormalConfiguration::MinusInfinity)
        } else {
            Err(Error::DegenerateConstruction("zero homogeneous vector".into()))
        }
    }
}

impl fmt::Display for FormalConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = format_rational;
        match self {
            FormalConfiguration::PlusChart { x, y } => write!(f, "P[{},{},+]", r(x), r(y)),
            FormalConfiguration::MinusChart { x, y } => write!(f, "P[{},{},-]", r(x), r(y)),
            FormalConfiguration::DegeneratePlus(d) => write!(f, "P[{},+]", r(d)),
            FormalConfiguration::DegenerateMinus(d) => write!(f, "P[{},-]", r(d)),
            FormalConfiguration::PlusInfinity => write!(f, "P[+inf]"),
            FormalConfiguration::MinusInfinity => write!(f, "P[-inf]"),
        }
    }
}

/// Normal form under orientation-preserving affine maps.
pub fn normalize_formal(p: &Configuration) -> Result<FormalConfiguration> {
    if p.dim() != 2 {
        return Err(Error::UnsupportedDimension(p.dim()));
    }
    if p.len() != 4 {
        return Err(Error::DimensionMismatch(format!("formal configurations have 4 points, got {}", p.len())));
    }
    let v: Vec<&[Rational]> = (1..=4).map(|i| p.point(i)).collect();
    let u = [&v[1][0] - &v[0][0], &v[1][1] - &v[0][1]];
    let w = [&v[3][0] - &v[2][0], &v[3][1] - &v[2][1]];
    if u[0].is_zero() && u[1].is_zero() {
        return Err(Error::NotNormalizable("v1 = v2".into()));
    }
    if w[0].is_zero() && w[1].is_zero() {
        return Err(Error::NotNormalizable("v3 = v4".into()));
    }
    let det = &u[0] * &w[1] - &u[1] * &w[0];
    // Apply the linear map L (as columns L u, L w) to v - v1.
    let apply = |cols: &[[Rational; 2]; 2], a: &[Rational; 2], b: &[Rational; 2], d: &Rational, q: &[Rational]| {
        // express q - v1 in the basis (a, b), then map a, b to cols
        let r = [&q[0] - &v[0][0], &q[1] - &v[0][1]];
        let s = (&r[0] * &b[1] - &r[1] * &b[0]) / d;
        let t = (&a[0] * &r[1] - &a[1] * &r[0]) / d;
        [&s * &cols[0][0] + &t * &cols[1][0], &s * &cols[0][1] + &t * &cols[1][1]]
    };
    let one = Rational::one;
    let zero = Rational::zero;
    if !det.is_zero() {
        let s = sign(&det);
        let e2 = if s > 0 { one() } else { -one() };
        let cols = [[one(), zero()], [zero(), e2]];
        let v3 = apply(&cols, &u, &w, &det, v[2]);
        let [x, y] = v3;
        return Ok(if s > 0 { FormalConfiguration::PlusChart { x, y } } else { FormalConfiguration::MinusChart { x, y } });
    }
    let a3 = [&v[2][0] - &v[0][0], &v[2][1] - &v[0][1]];
    let o = orient2(v[0], v[1], v[2]);
    if o.is_zero() {
        return Err(Error::DeeperDegeneracy("four collinear points".into()));
    }
    let e2 = if o > zero() { one() } else { -one() };
    let cols = [[one(), zero()], [zero(), e2]];
    let d = &u[0] * &a3[1] - &u[1] * &a3[0];
    let v4 = apply(&cols, &u, &a3, &d, v[3]);
    let delta = v4[0].clone();
    Ok(if o > zero() { FormalConfiguration::DegeneratePlus(delta) } else { FormalConfiguration::DegenerateMinus(delta) })
}
