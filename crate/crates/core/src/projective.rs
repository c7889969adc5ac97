//! Homogeneous points and lines of the projective plane.
//!
//! `Z = 0` is the line at infinity, so parallel affine lines meet at an
//! ordinary value of [`ProjectivePoint`] and never need a special case.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, Rational, Scalar};

/// 3x3 determinant of three row vectors.
pub fn det3<T: Scalar>(a: &[T; 3], b: &[T; 3], c: &[T; 3]) -> T {
    a[0].clone() * (b[1].clone() * c[2].clone() - b[2].clone() * c[1].clone())
        - a[1].clone() * (b[0].clone() * c[2].clone() - b[2].clone() * c[0].clone())
        + a[2].clone() * (b[0].clone() * c[1].clone() - b[1].clone() * c[0].clone())
}

/// Twice the signed area of the triangle `abc` in the plane.
pub fn orient2<T: Scalar>(a: &[T], b: &[T], c: &[T]) -> T {
    (b[0].clone() - a[0].clone()) * (c[1].clone() - a[1].clone())
        - (b[1].clone() - a[1].clone()) * (c[0].clone() - a[0].clone())
}

pub fn cross<T: Scalar>(a: &[T; 3], b: &[T; 3]) -> [T; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

fn canonical(mut v: [Rational; 3]) -> Option<[Rational; 3]> {
    let k = (0..3).rev().find(|&i| !v[i].is_zero())?;
    let s = v[k].clone();
    for x in v.iter_mut() {
        *x = &*x / &s;
    }
    Some(v)
}

/// Point `(X : Y : Z)` scaled so that its last nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint([Rational; 3]);

impl ProjectivePoint {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Result<Self> {
        canonical([x, y, z])
            .map(ProjectivePoint)
            .ok_or_else(|| Error::DegenerateConstruction("all homogeneous coordinates are zero".into()))
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.0
    }

    pub fn is_at_infinity(&self) -> bool {
        self.0[2].is_zero()
    }

    /// Affine coordinates, or `None` at infinity.
    pub fn affine(&self) -> Option<[Rational; 2]> {
        if self.is_at_infinity() {
            None
        } else {
            Some([self.0[0].clone(), self.0[1].clone()])
        }
    }

    pub fn canonicalized(&self) -> Self {
        ProjectivePoint(canonical(self.0.clone()).expect("canonical point is nonzero"))
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", c.join(":"))
    }
}

/// `(x, y) -> (x : y : 1)`.
pub fn to_projective(p: &[Rational]) -> ProjectivePoint {
    ProjectivePoint([p[0].clone(), p[1].clone(), Rational::one()])
}

/// Line `aX + bY + cZ = 0`, canonicalized like points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectiveLine([Rational; 3]);

impl ProjectiveLine {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        canonical([a, b, c])
            .map(ProjectiveLine)
            .ok_or_else(|| Error::DegenerateConstruction("all line coefficients are zero".into()))
    }

    pub fn coeffs(&self) -> &[Rational; 3] {
        &self.0
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        let (l, q) = (&self.0, &p.0);
        (&l[0] * &q[0] + &l[1] * &q[1] + &l[2] * &q[2]).is_zero()
    }
}

impl fmt::Display for ProjectiveLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "[{}]", c.join(":"))
    }
}

pub fn line_through(p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ProjectiveLine> {
    let [a, b, c] = cross(&p.0, &q.0);
    ProjectiveLine::new(a, b, c).map_err(|_| Error::IdenticalInput(format!("line through {p} and itself")))
}

pub fn intersection(l1: &ProjectiveLine, l2: &ProjectiveLine) -> Result<ProjectivePoint> {
    let [x, y, z] = cross(&l1.0, &l2.0);
    ProjectivePoint::new(x, y, z).map_err(|_| Error::IdenticalInput(format!("intersection of {l1} with itself")))
}

pub fn collinear(p: &ProjectivePoint, q: &ProjectivePoint, r: &ProjectivePoint) -> bool {
    det3(&p.0, &q.0, &r.0).is_zero()
}

pub fn concurrent(l1: &ProjectiveLine, l2: &ProjectiveLine, l3: &ProjectiveLine) -> Result<bool> {
    if l1 == l2 || l1 == l3 || l2 == l3 {
        return Err(Error::IdenticalInput("concurrency test needs three distinct lines".into()));
    }
    Ok(det3(&l1.0, &l2.0, &l3.0).is_zero())
}

/// Affine line through two planar points.
pub fn affine_line(p: &[Rational], q: &[Rational]) -> Result<ProjectiveLine> {
    line_through(&to_projective(p), &to_projective(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn pt(x: i64, y: i64) -> ProjectivePoint {
        to_projective(&[int(x), int(y)])
    }

    fn hp(x: i64, y: i64, z: i64) -> ProjectivePoint {
        ProjectivePoint::new(int(x), int(y), int(z)).unwrap()
    }

    fn ln(a: i64, b: i64, c: i64) -> ProjectiveLine {
        ProjectiveLine::new(int(a), int(b), int(c)).unwrap()
    }

    #[test]
    fn projective_embedding() {
        assert_eq!(pt(0, 0), hp(0, 0, 1));
        assert_eq!(to_projective(&[rat(3, 2), int(-2)]).coords(), &[rat(3, 2), int(-2), int(1)]);
        assert_eq!(hp(2, 2, 0), hp(1, 1, 0));
        assert_eq!(hp(4, 6, 2).coords(), &[int(2), int(3), int(1)]);
        assert!(ProjectivePoint::new(int(0), int(0), int(0)).is_err());
    }

    #[test]
    fn collinearity() {
        assert!(collinear(&pt(0, 0), &pt(1, 0), &pt(2, 0)));
        assert!(!collinear(&pt(0, 0), &pt(1, 0), &pt(0, 1)));
        assert!(collinear(&hp(1, 0, 0), &hp(0, 1, 0), &hp(1, 1, 0)));
    }

    #[test]
    fn intersections() {
        // x = 0 and y = 0
        assert_eq!(intersection(&ln(1, 0, 0), &ln(0, 1, 0)).unwrap(), pt(0, 0));
        // y = 0 and y = 1 meet at infinity
        assert_eq!(intersection(&ln(0, 1, 0), &ln(0, 1, -1)).unwrap(), hp(1, 0, 0));
        let d1 = line_through(&pt(0, 0), &pt(1, 1)).unwrap();
        let d2 = line_through(&pt(1, 0), &pt(0, 1)).unwrap();
        assert_eq!(intersection(&d1, &d2).unwrap().affine().unwrap(), [rat(1, 2), rat(1, 2)]);
        assert!(line_through(&pt(1, 1), &pt(1, 1)).is_err());
        assert!(intersection(&d1, &d1).is_err());
    }

    #[test]
    fn concurrency() {
        assert!(concurrent(&ln(1, 0, 0), &ln(0, 1, 0), &ln(1, 1, 0)).unwrap());
        assert!(concurrent(&ln(0, 1, 0), &ln(0, 1, -1), &ln(0, 1, -2)).unwrap());
        let a = affine_line(&[int(0), int(0)], &[int(4), int(0)]).unwrap();
        let b = affine_line(&[int(4), int(0)], &[int(0), int(3)]).unwrap();
        let c = affine_line(&[int(0), int(3)], &[int(0), int(0)]).unwrap();
        assert!(!concurrent(&a, &b, &c).unwrap());
        assert!(concurrent(&a, &a, &c).is_err());
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let p = hp(-3, 9, 6);
        assert_eq!(p.canonicalized(), p);
    }
}
