//! Graph surgeries with verified stress-space dimensions: edge exchange,
//! the 2-sum, the two planar surgeries and the plane-atom surgery in space.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::model::{Configuration, Edge, Framework, Graph};
use crate::projective::{cross, det3, orient2};
use crate::scalar::Rational;
use crate::stress::{plane_atom_3d, self_stress_space, stress_dim, StressAssignment};

/// Named roles bound to framework labels.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SurgerySite {
    pub roles: BTreeMap<String, usize>,
}

impl SurgerySite {
    pub fn new<'a>(pairs: impl IntoIterator<Item = (&'a str, usize)>) -> Self {
        SurgerySite { roles: pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect() }
    }

    pub fn get(&self, role: &str) -> Result<usize> {
        self.roles.get(role).copied().ok_or_else(|| Error::Precondition(format!("role {role} is not bound")))
    }

    /// Checks that the listed roles are bound, injectively, to labels of an
    /// `n`-vertex framework.
    pub fn validate(&self, required: &[&str], n: usize) -> Result<()> {
        let mut seen = BTreeSet::new();
        for r in required {
            let v = self.get(r)?;
            if v == 0 || v > n {
                return Err(Error::Precondition(format!("role {r} is bound to v{v}, outside 1..={n}")));
            }
            if !seen.insert(v) {
                return Err(Error::Precondition(format!("role {r} reuses v{v}")));
            }
        }
        Ok(())
    }
}

/// One checked precondition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub condition: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryVerdict {
    pub preconditions_ok: bool,
    pub checks: Vec<Check>,
    pub dim_before: usize,
    pub dim_after: usize,
    pub dims_equal: bool,
}

impl SurgeryVerdict {
    fn new(checks: Vec<Check>, dim_before: usize, dim_after: usize) -> Self {
        SurgeryVerdict { preconditions_ok: checks.iter().all(|c| c.ok), checks, dim_before, dim_after, dims_equal: dim_before == dim_after }
    }
}

fn require_planar(f: &Framework) -> Result<()> {
    if f.dim() == 2 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(f.dim()))
    }
}

fn without(g: &Graph, e: Edge) -> Graph {
    let mut h = g.clone();
    h.remove_edge(e);
    h
}

/// Edge exchange: with `dim W(H,P) = 1` and the generator nonzero on `e1`
/// and `e2`, removing either edge from `G` leaves the same dimension.
pub fn edge_exchange_check(g: &Graph, h: &Graph, e1: Edge, e2: Edge, p: &Configuration) -> Result<SurgeryVerdict> {
    if !h.is_subgraph_of(g) || h.vertex_count() != g.vertex_count() {
        return Err(Error::GraphMismatch("H is not a subgraph of G".into()));
    }
    for e in [e1, e2] {
        if !h.contains(e) {
            return Err(Error::GraphMismatch(format!("{e} is not an edge of H")));
        }
    }
    let space = self_stress_space(&Framework::new(h.clone(), p.clone())?);
    let mut checks = vec![Check { condition: "dim W(H,P) = 1".into(), ok: space.dim() == 1 }];
    for e in [e1, e2] {
        let ok = space.dim() == 1 && !space.basis[0].weight(e.0, e.1).is_zero();
        checks.push(Check { condition: format!("stress of H nonzero on {e}"), ok });
    }
    let before = stress_dim(&Framework::new(without(g, e1), p.clone())?);
    let after = stress_dim(&Framework::new(without(g, e2), p.clone())?);
    Ok(SurgeryVerdict::new(checks, before, after))
}

fn carries_stress(f: &Framework, e: Edge) -> Result<bool> {
    if !f.graph().contains(e) {
        return Err(Error::GraphMismatch(format!("{e} is not an edge")));
    }
    Ok(self_stress_space(f).basis.iter().any(|w| !w.weight(e.0, e.1).is_zero()))
}

/// 2-sum of two planar frameworks along `edge1` of `f1` and `edge2` of
/// `f2`. `f2` is moved by the orientation-preserving similarity taking
/// `p2 q2` onto `p1 q1`; its other vertices get the labels after those of
/// `f1`, in order. The verdict compares `dim W` of the sum (after) with
/// `dim W(f1) + dim W(f2) - 1` (before).
pub fn two_sum(f1: &Framework, edge1: (usize, usize), f2: &Framework, edge2: (usize, usize)) -> Result<(Framework, SurgeryVerdict)> {
    require_planar(f1)?;
    require_planar(f2)?;
    let (e1, e2) = (Edge::new(edge1.0, edge1.1), Edge::new(edge2.0, edge2.1));
    for (f, e) in [(f1, e1), (f2, e2)] {
        if !carries_stress(f, e)? {
            return Err(Error::Precondition(format!("every self stress vanishes on {e}")));
        }
    }
    let (p1, q1) = (f1.config().point(edge1.0), f1.config().point(edge1.1));
    let (p2, q2) = (f2.config().point(edge2.0), f2.config().point(edge2.1));
    // z -> a (z - p2) + p1 with a = (q1 - p1) / (q2 - p2) as complex numbers
    let (ur, ui) = (&q1[0] - &p1[0], &q1[1] - &p1[1]);
    let (vr, vi) = (&q2[0] - &p2[0], &q2[1] - &p2[1]);
    let den = &vr * &vr + &vi * &vi;
    let ar = (&ur * &vr + &ui * &vi) / &den;
    let ai = (&ui * &vr - &ur * &vi) / &den;
    let n1 = f1.vertex_count();
    let mut label = vec![0usize; f2.vertex_count() + 1];
    let mut points = f1.config().points().to_vec();
    for v in 1..=f2.vertex_count() {
        label[v] = if v == edge2.0 {
            edge1.0
        } else if v == edge2.1 {
            edge1.1
        } else {
            let z = f2.config().point(v);
            let (dr, di) = (&z[0] - &p2[0], &z[1] - &p2[1]);
            points.push(vec![&ar * &dr - &ai * &di + &p1[0], &ar * &di + &ai * &dr + &p1[1]]);
            points.len()
        };
    }
    let mut g = Graph::empty(points.len());
    for e in f1.graph().edges().filter(|&e| e != e1) {
        g.add_edge(e.0, e.1)?;
    }
    for e in f2.graph().edges().filter(|&e| e != e2) {
        g.add_edge(label[e.0], label[e.1])?;
    }
    let sum = Framework::new(g, Configuration::new(2, points)?)?;
    let expected = stress_dim(f1) + stress_dim(f2) - 1;
    let got = stress_dim(&sum);
    debug_assert!(n1 <= sum.vertex_count());
    let checks = vec![
        Check { condition: format!("first framework stressed on {e1}"), ok: true },
        Check { condition: format!("second framework stressed on {e2}"), ok: true },
    ];
    Ok((sum, SurgeryVerdict::new(checks, expected, got)))
}

fn triple_check(f: &Framework, names: [&str; 3], site: &SurgerySite) -> Result<Check> {
    let l: Vec<usize> = names.iter().map(|r| site.get(r)).collect::<Result<_>>()?;
    let c = f.config();
    let ok = !orient2(c.point(l[0]), c.point(l[1]), c.point(l[2])).is_zero();
    Ok(Check { condition: format!("({},{},{}) not collinear", names[0], names[1], names[2]), ok })
}

fn line_meet(a: &[Rational], b: &[Rational], c: &[Rational], d: &[Rational]) -> Option<Vec<Rational>> {
    let (r, s) = ([&b[0] - &a[0], &b[1] - &a[1]], [&d[0] - &c[0], &d[1] - &c[1]]);
    let den = &r[0] * &s[1] - &r[1] * &s[0];
    if den.is_zero() {
        return None;
    }
    let t = ((&c[0] - &a[0]) * &s[1] - (&c[1] - &a[1]) * &s[0]) / den;
    Some(vec![&a[0] + &t * &r[0], &a[1] + &t * &r[1]])
}

/// Roles of the first planar surgery.
pub const SURGERY1_ROLES: [&str; 5] = ["p", "q", "v2", "v3", "v4"];

/// Surgery I. The site binds `p`, `q`, `v2`, `v3`, `v4`, where `p` and `q`
/// have degree 3 with `p ~ v2, v4, q` and `q ~ v3, v4, p`. Both are replaced
/// by one vertex at `v2p ∩ v3q` joined to `v2`, `v3` and `v4`; it takes the
/// last label, the others keep their relative order.
pub fn surgery1_apply(f: &Framework, site: &SurgerySite) -> Result<(Framework, SurgeryVerdict)> {
    require_planar(f)?;
    site.validate(&SURGERY1_ROLES, f.vertex_count())?;
    let [p, q, v2, v3, v4] = SURGERY1_ROLES.map(|r| site.get(r).expect("validated"));
    let g = f.graph();
    for (a, nbrs) in [(p, [v2, v4, q]), (q, [v3, v4, p])] {
        if g.degree(a) != 3 || nbrs.iter().any(|&b| !g.contains(Edge::new(a, b))) {
            return Err(Error::Precondition(format!("v{a} does not match the surgery pattern")));
        }
    }
    let checks = [["p", "v2", "v3"], ["q", "v2", "v3"], ["p", "v2", "v4"], ["q", "v3", "v4"], ["v2", "v3", "v4"]]
        .into_iter()
        .map(|t| triple_check(f, t, site))
        .collect::<Result<Vec<_>>>()?;
    if let Some(bad) = checks.iter().find(|c| !c.ok) {
        return Err(Error::Precondition(bad.condition.replace("not collinear", "collinear")));
    }
    let c = f.config();
    let o = line_meet(c.point(v2), c.point(p), c.point(v3), c.point(q))
        .ok_or_else(|| Error::DegenerateConstruction("lines v2p and v3q are parallel".into()))?;
    let keep: Vec<usize> = (1..=f.vertex_count()).filter(|&v| v != p && v != q).collect();
    let mut label = vec![0usize; f.vertex_count() + 1];
    for (i, &v) in keep.iter().enumerate() {
        label[v] = i + 1;
    }
    let new = keep.len() + 1;
    let mut points: Vec<Vec<Rational>> = keep.iter().map(|&v| c.point(v).to_vec()).collect();
    points.push(o);
    let mut h = Graph::empty(new);
    for e in g.edges().filter(|e| !e.contains(p) && !e.contains(q)) {
        h.add_edge(label[e.0], label[e.1])?;
    }
    for v in [v2, v3, v4] {
        h.add_edge(label[v], new)?;
    }
    let after = Framework::new(h, Configuration::new(2, points)?)?;
    let verdict = SurgeryVerdict::new(checks, stress_dim(f), stress_dim(&after));
    Ok((after, verdict))
}

/// Roles of the second planar surgery.
pub const SURGERY2_ROLES: [&str; 6] = ["p", "q", "r", "s", "v1", "v4"];

/// Surgery II on a user-supplied before/after pair: checks the six
/// non-collinearity conditions at the first framework and compares dims.
pub fn surgery2_verify(f1: &Framework, f2: &Framework, site: &SurgerySite) -> Result<SurgeryVerdict> {
    require_planar(f1)?;
    require_planar(f2)?;
    site.validate(&SURGERY2_ROLES, f1.vertex_count())?;
    site.validate(&SURGERY2_ROLES, f2.vertex_count())
        .map_err(|e| Error::GraphMismatch(format!("bindings do not fit the second framework: {e}")))?;
    let checks = [["p", "q", "v1"], ["p", "v1", "v4"], ["r", "v1", "v4"], ["q", "v1", "v4"], ["s", "v1", "v4"], ["r", "s", "v4"]]
        .into_iter()
        .map(|t| triple_check(f1, t, site))
        .collect::<Result<Vec<_>>>()?;
    Ok(SurgeryVerdict::new(checks, stress_dim(f1), stress_dim(f2)))
}

/// Roles of the surgery in space: the triangle and, for each triangle
/// vertex, the far ends of its two external edges.
pub const SURGERY3D_ROLES: [&str; 9] = ["v2", "v3", "v4", "e1", "e2", "e3", "e4", "e5", "e6"];

fn sub3(a: &[Rational], b: &[Rational]) -> [Rational; 3] {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

fn dot3(a: &[Rational; 3], b: &[Rational]) -> Rational {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

/// Plane `n . x = c` through `base` spanned by the directions to `a`, `b`.
fn plane(base: &[Rational], a: &[Rational], b: &[Rational]) -> Option<([Rational; 3], Rational)> {
    let n = cross(&sub3(a, base), &sub3(b, base));
    if n.iter().all(Zero::is_zero) {
        return None;
    }
    let c = dot3(&n, base);
    Some((n, c))
}

/// Result of the surgery in space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surgery3d {
    pub after: Framework,
    pub verdict: SurgeryVerdict,
    /// The constructed point `π2 ∩ π3 ∩ π4`.
    pub v1: Vec<Rational>,
}

/// Surgery in space: the triangle `v2 v3 v4` is replaced by a new vertex
/// `v1 = π2 ∩ π3 ∩ π4` (last label) joined to the three triangle vertices.
pub fn surgery3d_verify(f: &Framework, site: &SurgerySite) -> Result<Surgery3d> {
    if f.dim() != 3 {
        return Err(Error::UnsupportedDimension(f.dim()));
    }
    site.validate(&SURGERY3D_ROLES[..3], f.vertex_count())?;
    let l = SURGERY3D_ROLES.map(|r| site.get(r));
    let l: Vec<usize> = l.into_iter().collect::<Result<_>>()?;
    let g = f.graph();
    let c = f.config();
    let tri = [l[0], l[1], l[2]];
    for (i, &a) in tri.iter().enumerate() {
        for &b in &tri[i + 1..] {
            if !g.contains(Edge::new(a, b)) {
                return Err(Error::Precondition(format!("triangle edge v{a}v{b} missing")));
            }
        }
        for &e in &l[3 + 2 * i..5 + 2 * i] {
            if e == 0 || e > f.vertex_count() || !g.contains(Edge::new(a, e)) || tri.contains(&e) {
                return Err(Error::Precondition(format!("v{a}v{e} is not an external edge")));
            }
        }
    }
    let pi1 = plane(c.point(tri[0]), c.point(tri[1]), c.point(tri[2]))
        .ok_or_else(|| Error::DegeneratePosition("triangle v2 v3 v4 is degenerate".into()))?;
    let mut planes = Vec::new();
    for (i, &a) in tri.iter().enumerate() {
        let name = format!("π{}", i + 2);
        let pl = plane(c.point(a), c.point(l[3 + 2 * i]), c.point(l[4 + 2 * i]))
            .ok_or_else(|| Error::DegeneratePosition(format!("{name} is not a plane")))?;
        if cross(&pl.0, &pi1.0).iter().all(Zero::is_zero) {
            return Err(Error::DegeneratePosition(format!("{name} coincides with π1")));
        }
        planes.push(pl);
    }
    let d = det3(&planes[0].0, &planes[1].0, &planes[2].0);
    if d.is_zero() {
        return Err(Error::DegenerateConstruction("π2, π3, π4 do not meet in one point".into()));
    }
    // Cramer's rule
    let v1: Vec<Rational> = (0..3)
        .map(|k| {
            let mut rows: Vec<[Rational; 3]> = planes.iter().map(|(n, _)| n.clone()).collect();
            for (r, (_, cst)) in rows.iter_mut().zip(&planes) {
                r[k] = cst.clone();
            }
            det3(&rows[0], &rows[1], &rows[2]) / &d
        })
        .collect();
    let on_pi1 = dot3(&pi1.0, &v1) == pi1.1;
    let checks = vec![Check { condition: "v1 lies on π1".into(), ok: on_pi1 }];
    let n = f.vertex_count();
    let mut h = Graph::empty(n + 1);
    for e in g.edges() {
        if !(tri.contains(&e.0) && tri.contains(&e.1)) {
            h.add_edge(e.0, e.1)?;
        }
    }
    for &t in &tri {
        h.add_edge(t, n + 1)?;
    }
    let mut points = c.points().to_vec();
    points.push(v1.clone());
    let after = Framework::new(h, Configuration::new(3, points)?)?;
    let verdict = SurgeryVerdict::new(checks, stress_dim(f), stress_dim(&after));
    Ok(Surgery3d { after, verdict, v1 })
}

/// Cancels the triangle stresses of `w` with the plane atom on
/// `v1, v2, v3, v4`. Returns the stress on the surgered framework and the
/// residual left on the three triangle edges.
pub fn cancel_triangle(before: &Framework, surgery: &Surgery3d, site: &SurgerySite, w: &StressAssignment) -> Result<(StressAssignment, Vec<Rational>)> {
    let tri = [site.get("v2")?, site.get("v3")?, site.get("v4")?];
    let c = before.config();
    let pts = vec![surgery.v1.clone(), c.point(tri[0]).to_vec(), c.point(tri[1]).to_vec(), c.point(tri[2]).to_vec()];
    let atom = plane_atom_3d(&pts)?;
    // atom labels: 1 = v1, 2..4 = triangle
    let a23 = atom.stress.weight(2, 3);
    if a23.is_zero() {
        return Err(Error::DegeneratePosition("plane atom vanishes on v2v3".into()));
    }
    let t = -w.weight(tri[0], tri[1]) / a23;
    let residual: Vec<Rational> =
        [(0, 1, 2, 3), (0, 2, 2, 4), (1, 2, 3, 4)].iter().map(|&(i, j, a, b)| w.weight(tri[i], tri[j]) + &t * atom.stress.weight(a, b)).collect();
    let new = before.vertex_count() + 1;
    let weights: Vec<Rational> = surgery
        .after
        .graph()
        .edges()
        .map(|e| {
            if e.1 == new {
                let k = tri.iter().position(|&x| x == e.0).expect("v1 is joined to the triangle only");
                &t * atom.stress.weight(1, k + 2)
            } else {
                w.weight(e.0, e.1)
            }
        })
        .collect();
    Ok((StressAssignment::new(surgery.after.graph(), weights)?, residual))
}

/// The seven-vertex graph of the Surgery I example: a triangular prism
/// (triangles `v2 v3 p`, `v1 v4 v5`, rungs `v1v2`, `v3v4`, `v5p`) whose
/// vertex `p` is split into `v6 ~ v2, v5` and `v7 ~ v3, v5` joined by an
/// edge.
pub fn worked_example_graph() -> Graph {
    Graph::from_edges(7, &[(1, 2), (1, 4), (1, 5), (2, 3), (3, 4), (4, 5), (2, 6), (5, 6), (6, 7), (3, 7), (5, 7)]).expect("valid edges")
}

/// Site contracting `v6`, `v7` of [`worked_example_graph`].
pub fn worked_example_site() -> SurgerySite {
    SurgerySite::new([("p", 6), ("q", 7), ("v2", 2), ("v3", 3), ("v4", 5)])
}

fn random_point(rng: &mut impl rand::Rng) -> Vec<Rational> {
    vec![crate::scalar::int(rng.gen_range(-30..=30)), crate::scalar::int(rng.gen_range(-30..=30))]
}

/// A configuration of [`worked_example_graph`]: with `on`, `v5` is placed so
/// that `v1v2`, `v3v4` and `v5p` are concurrent, `p = v2v6 ∩ v3v7`.
/// Returns `None` when the random draw is degenerate.
pub fn worked_example_configuration(rng: &mut impl rand::Rng, on: bool) -> Option<Configuration> {
    let mut pts: Vec<Vec<Rational>> = (0..7).map(|_| random_point(rng)).collect();
    let p = line_meet(&pts[1], &pts[5], &pts[2], &pts[6])?;
    if on {
        let x = line_meet(&pts[0], &pts[1], &pts[2], &pts[3])?;
        let t = crate::scalar::rat(rng.gen_range(-40..=40), rng.gen_range(1..=7));
        pts[4] = vec![&p[0] + &t * (&x[0] - &p[0]), &p[1] + &t * (&x[1] - &p[1])];
    }
    let cfg = Configuration::new(2, pts).ok()?;
    let f = Framework::new(worked_example_graph(), cfg.clone()).ok()?;
    // every triple distinct and non-collinear keeps the sample generic
    for t in crate::stress::combinations(7, 3) {
        if orient2(f.config().point(t[0] + 1), f.config().point(t[1] + 1), f.config().point(t[2] + 1)).is_zero() {
            return None;
        }
    }
    Some(cfg)
}
