//! Projective conditions on planar configurations: collinearity,
//! concurrency, conics, the universal set `U^m(P)`, the codimension-1
//! condition catalog for six and seven points, Pascal witnesses and the
//! witness-subgraph search.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{exact_rank, Matrix, ModularRankFilter};
use crate::model::{Configuration, Edge, Framework, Graph};
use crate::projective::{collinear, concurrent, intersection, line_through, orient2, to_projective, ProjectiveLine, ProjectivePoint};
use crate::scalar::{int, Rational};
use crate::stress::equilibrium_matrix;

/// Default cap on the universal-set level.
pub const UNIVERSAL_LEVEL_CAP: usize = 2;

/// True iff the six planar points lie on a common conic (possibly
/// degenerate): the rows `(x^2, xy, y^2, x, y, 1)` are dependent.
pub fn on_conic(points: &[[Rational; 2]]) -> bool {
    assert_eq!(points.len(), 6, "on_conic takes six points");
    let rows = points
        .iter()
        .map(|[x, y]| vec![x * x, x * y, y * y, x.clone(), y.clone(), Rational::one()])
        .collect();
    Matrix::from_rows(rows).rank() < 6
}

/// How a point of the universal set was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Vertex label of the input configuration.
    Original(usize),
    /// Intersection of the lines through two pairs of earlier points
    /// (indices into the set).
    Intersection { level: usize, first: (usize, usize), second: (usize, usize) },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalSet {
    pub level: usize,
    pub points: Vec<(ProjectivePoint, Provenance)>,
}

impl UniversalSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        self.points.iter().any(|(q, _)| q == p)
    }

    pub fn at_infinity(&self) -> usize {
        self.points.iter().filter(|(p, _)| p.is_at_infinity()).count()
    }

    /// One more round of pairwise line intersections.
    pub fn step(&self) -> UniversalSet {
        let pts: Vec<ProjectivePoint> = self.points.iter().map(|(p, _)| p.clone()).collect();
        let mut out = self.points.clone();
        let mut index: BTreeMap<ProjectivePoint, usize> = pts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut pairs = Vec::new();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                pairs.push((i, j));
            }
        }
        let lines: Vec<Option<ProjectiveLine>> = pairs.iter().map(|&(i, j)| line_through(&pts[i], &pts[j]).ok()).collect();
        for a in 0..pairs.len() {
            for b in a + 1..pairs.len() {
                let ((i, j), (k, l)) = (pairs[a], pairs[b]);
                if i == k || i == l || j == k || j == l {
                    continue;
                }
                let (Some(la), Some(lb)) = (&lines[a], &lines[b]) else { continue };
                let Ok(x) = intersection(la, lb) else { continue };
                if !index.contains_key(&x) {
                    index.insert(x.clone(), out.len());
                    out.push((x, Provenance::Intersection { level: self.level + 1, first: (i, j), second: (k, l) }));
                }
            }
        }
        UniversalSet { level: self.level + 1, points: out }
    }
}

pub fn universal_set(p: &Configuration, level: usize) -> Result<UniversalSet> {
    universal_set_capped(p, level, UNIVERSAL_LEVEL_CAP)
}

pub fn universal_set_capped(p: &Configuration, level: usize, cap: usize) -> Result<UniversalSet> {
    if level > cap {
        return Err(Error::CapExceeded { level, cap });
    }
    if p.dim() != 2 {
        return Err(Error::UnsupportedDimension(p.dim()));
    }
    let mut points: Vec<(ProjectivePoint, Provenance)> = Vec::new();
    for (i, q) in p.points().iter().enumerate() {
        let x = to_projective(q);
        if !points.iter().any(|(y, _)| *y == x) {
            points.push((x, Provenance::Original(i + 1)));
        }
    }
    let mut u = UniversalSet { level: 0, points };
    for _ in 0..level {
        u = u.step();
    }
    Ok(u)
}

/// Catalog of codimension-1 conditions for six and seven points, with the
/// vertex labels bound to each role.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConditionId {
    /// `a`, `b`, `c` on a line.
    Collinear3([usize; 3]),
    /// Lines `v1v2`, `v3v4`, `v5v6` meet in one point (or are all parallel).
    Concurrent3Lines([usize; 6]),
    /// Six points on a conic.
    Conic6([usize; 6]),
    /// Lines `v1v2`, `v3v4`, `v5p` concurrent, `p = v2v6 ∩ v3v7`.
    ConstructedConcurrency([usize; 7]),
    /// `v1..v5` and `p = v1v6 ∩ v3v7` on a conic.
    ConstructedConic([usize; 7]),
}

impl ConditionId {
    pub fn tag(&self) -> &'static str {
        match self {
            ConditionId::Collinear3(_) => "collinear3",
            ConditionId::Concurrent3Lines(_) => "concurrent3",
            ConditionId::Conic6(_) => "conic6",
            ConditionId::ConstructedConcurrency(_) => "k7-concurrency",
            ConditionId::ConstructedConic(_) => "k7-conic",
        }
    }

    pub fn roles(&self) -> &[usize] {
        match self {
            ConditionId::Collinear3(r) => r,
            ConditionId::Concurrent3Lines(r) | ConditionId::Conic6(r) => r,
            ConditionId::ConstructedConcurrency(r) | ConditionId::ConstructedConic(r) => r,
        }
    }

    pub fn role_count(tag: &str) -> Option<usize> {
        Some(match tag {
            "collinear3" => 3,
            "concurrent3" | "conic6" => 6,
            "k7-concurrency" | "k7-conic" => 7,
            _ => return None,
        })
    }

    /// Builds a condition from its tag and role labels.
    pub fn from_tag(tag: &str, roles: &[usize]) -> Result<Self> {
        let want = Self::role_count(tag).ok_or_else(|| Error::Parse(format!("unknown condition {tag:?}")))?;
        if roles.len() != want {
            return Err(Error::Parse(format!("{tag} binds {want} roles, got {}", roles.len())));
        }
        let id = match tag {
            "collinear3" => ConditionId::Collinear3([roles[0], roles[1], roles[2]]),
            "concurrent3" => ConditionId::Concurrent3Lines(roles.try_into().unwrap()),
            "conic6" => ConditionId::Conic6(roles.try_into().unwrap()),
            "k7-concurrency" => ConditionId::ConstructedConcurrency(roles.try_into().unwrap()),
            _ => ConditionId::ConstructedConic(roles.try_into().unwrap()),
        };
        id.validate(usize::MAX)?;
        Ok(id)
    }

    /// Default binding `1..=k`.
    pub fn standard(tag: &str) -> Result<Self> {
        let k = Self::role_count(tag).ok_or_else(|| Error::Parse(format!("unknown condition {tag:?}")))?;
        Self::from_tag(tag, &(1..=k).collect::<Vec<_>>())
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let r = self.roles();
        for (i, a) in r.iter().enumerate() {
            if *a == 0 || *a > n {
                return Err(Error::Precondition(format!("role label {a} outside 1..={n}")));
            }
            if r[..i].contains(a) {
                return Err(Error::Precondition(format!("label {a} bound to two roles")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r: Vec<String> = self.roles().iter().map(|x| x.to_string()).collect();
        write!(f, "{}[{}]", self.tag(), r.join(","))
    }
}

impl FromStr for ConditionId {
    type Err = Error;

    /// `"tag"` (standard binding) or `"tag:1,2,3"`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            None => ConditionId::standard(s.trim()),
            Some((tag, roles)) => {
                let roles: Vec<usize> = roles
                    .split(',')
                    .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad role label {x:?}"))))
                    .collect::<Result<_>>()?;
                ConditionId::from_tag(tag.trim(), &roles)
            }
        }
    }
}

/// Outcome of a condition check, with the points constructed on the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub holds: bool,
    pub constructed: Vec<(String, ProjectivePoint)>,
}

fn proj(p: &Configuration, label: usize) -> ProjectivePoint {
    to_projective(p.point(label))
}

fn line(p: &ProjectivePoint, q: &ProjectivePoint, what: &str) -> Result<ProjectiveLine> {
    line_through(p, q).map_err(|_| Error::DegenerateConstruction(format!("line {what} is undefined (coincident points)")))
}

fn meet(a: &ProjectiveLine, b: &ProjectiveLine, what: &str) -> Result<ProjectivePoint> {
    intersection(a, b).map_err(|_| Error::DegenerateConstruction(format!("{what}: construction lines coincide")))
}

fn concurrent_checked(l: [&ProjectiveLine; 3]) -> Result<bool> {
    concurrent(l[0], l[1], l[2]).map_err(|_| Error::DegenerateConstruction("two of the three lines coincide".into()))
}

/// Conic test on six projective points (the conic may pass through
/// infinity).
pub fn on_conic_projective(points: &[ProjectivePoint]) -> bool {
    let rows = points
        .iter()
        .map(|p| {
            let [x, y, z] = p.coords();
            vec![x * x, x * y, y * y, x * z, y * z, z * z]
        })
        .collect();
    Matrix::from_rows(rows).rank() < 6
}

pub fn check_condition_detailed(id: &ConditionId, p: &Configuration) -> Result<ConditionReport> {
    if p.dim() != 2 {
        return Err(Error::UnsupportedDimension(p.dim()));
    }
    id.validate(p.len())?;
    let v = |k: usize| proj(p, id.roles()[k]);
    let mut constructed = Vec::new();
    let holds = match id {
        ConditionId::Collinear3(_) => collinear(&v(0), &v(1), &v(2)),
        ConditionId::Concurrent3Lines(_) => {
            let l1 = line(&v(0), &v(1), "v1v2")?;
            let l2 = line(&v(2), &v(3), "v3v4")?;
            let l3 = line(&v(4), &v(5), "v5v6")?;
            let holds = concurrent_checked([&l1, &l2, &l3])?;
            if holds {
                constructed.push(("meet".to_string(), meet(&l1, &l2, "v1v2 ∩ v3v4")?));
            }
            holds
        }
        ConditionId::Conic6(_) => on_conic_projective(&(0..6).map(v).collect::<Vec<_>>()),
        ConditionId::ConstructedConcurrency(_) => {
            let pp = meet(&line(&v(1), &v(5), "v2v6")?, &line(&v(2), &v(6), "v3v7")?, "p = v2v6 ∩ v3v7")?;
            constructed.push(("p".to_string(), pp.clone()));
            let l1 = line(&v(0), &v(1), "v1v2")?;
            let l2 = line(&v(2), &v(3), "v3v4")?;
            let l3 = line(&v(4), &pp, "v5p")?;
            concurrent_checked([&l1, &l2, &l3])?
        }
        ConditionId::ConstructedConic(_) => {
            let pp = meet(&line(&v(0), &v(5), "v1v6")?, &line(&v(2), &v(6), "v3v7")?, "p = v1v6 ∩ v3v7")?;
            constructed.push(("p".to_string(), pp.clone()));
            let six = vec![v(0), v(1), v(2), v(3), v(4), pp];
            on_conic_projective(&six)
        }
    };
    Ok(ConditionReport { holds, constructed })
}

pub fn check_condition(id: &ConditionId, p: &Configuration) -> Result<bool> {
    Ok(check_condition_detailed(id, p)?.holds)
}

/// One Pascal instance: the hexagon order and its three opposite-side
/// intersections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PascalInstance {
    /// Hexagon vertex order, 1-based.
    pub order: [usize; 6],
    pub points: Result<[ProjectivePoint; 3]>,
}

impl PascalInstance {
    /// `None` for a degenerate hexagon.
    pub fn collinear(&self) -> Option<bool> {
        self.points.as_ref().ok().map(|[p, q, r]| collinear(p, q, r))
    }
}

/// The 60 hexagon orders: permutations of six labels modulo the dihedral
/// symmetry of the hexagon (first vertex 1, second label below the last).
pub fn hexagon_orders() -> Vec<[usize; 6]> {
    let mut out = Vec::new();
    let rest = [2usize, 3, 4, 5, 6];
    for perm in permutations(&rest) {
        if perm[0] < perm[4] {
            out.push([1, perm[0], perm[1], perm[2], perm[3], perm[4]]);
        }
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Opposite-side intersections `p, q, r` for each of the 60 hexagon orders.
pub fn pascal_witnesses(points: &[[Rational; 2]]) -> Vec<PascalInstance> {
    assert_eq!(points.len(), 6, "Pascal witnesses take six points");
    let pp: Vec<ProjectivePoint> = points.iter().map(|p| to_projective(p)).collect();
    hexagon_orders()
        .into_iter()
        .map(|order| {
            let s = |k: usize| &pp[order[k] - 1];
            let side = |a: usize, b: usize| line(s(a), s(b), "hexagon side");
            let build = || -> Result<[ProjectivePoint; 3]> {
                let p = meet(&side(0, 1)?, &side(3, 4)?, "p")?;
                let q = meet(&side(1, 2)?, &side(4, 5)?, "q")?;
                let r = meet(&side(2, 3)?, &side(5, 0)?, "r")?;
                Ok([p, q, r])
            };
            PascalInstance { order, points: build() }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Sample construction

fn rand_point<R: Rng + ?Sized>(rng: &mut R, range: i64) -> [Rational; 2] {
    [int(rng.gen_range(-range..=range)), int(rng.gen_range(-range..=range))]
}

fn rand_param<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    loop {
        let t = Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=7).into());
        if !t.is_zero() && !t.is_one() {
            return t;
        }
    }
}

fn lerp(a: &[Rational; 2], b: &[Rational; 2], t: &Rational) -> [Rational; 2] {
    [&a[0] + t * (&b[0] - &a[0]), &a[1] + t * (&b[1] - &a[1])]
}

fn affine_meet(a: &[Rational; 2], b: &[Rational; 2], c: &[Rational; 2], d: &[Rational; 2]) -> Option<[Rational; 2]> {
    let l1 = line_through(&to_projective(a), &to_projective(b)).ok()?;
    let l2 = line_through(&to_projective(c), &to_projective(d)).ok()?;
    intersection(&l1, &l2).ok()?.affine()
}

/// Rational points on a random non-degenerate conic: points of the unit
/// circle pushed through a random projective map.
pub fn random_conic_points<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<[Rational; 2]> {
    'retry: loop {
        let h: Vec<Vec<Rational>> = (0..3).map(|_| (0..3).map(|_| int(rng.gen_range(-4i64..=4))).collect()).collect();
        if Matrix::from_rows(h.clone()).rank() < 3 {
            continue;
        }
        let mut ts: Vec<Rational> = Vec::new();
        let mut out = Vec::new();
        while out.len() < count {
            let t = Rational::new(rng.gen_range(-12i64..=12).into(), rng.gen_range(1i64..=5).into());
            if ts.contains(&t) {
                continue;
            }
            let den = Rational::one() + &t * &t;
            let c = [(Rational::one() - &t * &t) / &den, (&t + &t) / &den, Rational::one()];
            let img: Vec<Rational> = h.iter().map(|r| r.iter().zip(&c).fold(Rational::zero(), |a, (x, y)| a + x * y)).collect();
            if img[2].is_zero() {
                continue 'retry;
            }
            ts.push(t);
            out.push([&img[0] / &img[2], &img[1] / &img[2]]);
        }
        return out;
    }
}

fn no_three_collinear(pts: &[[Rational; 2]], skip: &[[usize; 3]]) -> bool {
    let n = pts.len();
    for a in 0..n {
        for b in a + 1..n {
            if pts[a] == pts[b] {
                return false;
            }
            for c in b + 1..n {
                if skip.iter().any(|s| {
                    let mut t = *s;
                    t.sort();
                    t == [a, b, c]
                }) {
                    continue;
                }
                if orient2(&pts[a], &pts[b], &pts[c]).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

fn to_config(pts: Vec<[Rational; 2]>) -> Configuration {
    Configuration::planar(pts)
}

/// A configuration of `n` points on which `id` holds exactly and which is
/// otherwise free of collinear triples (except the one `Collinear3` asks
/// for).
pub fn sample_on<R: Rng + ?Sized>(id: &ConditionId, n: usize, rng: &mut R) -> Result<Configuration> {
    id.validate(n)?;
    let r: Vec<usize> = id.roles().iter().map(|x| x - 1).collect();
    for _ in 0..10_000 {
        let mut pts: Vec<[Rational; 2]> = (0..n).map(|_| rand_point(rng, 40)).collect();
        let mut skip = Vec::new();
        match id {
            ConditionId::Collinear3(_) => {
                pts[r[2]] = lerp(&pts[r[0]], &pts[r[1]], &rand_param(rng));
                skip.push([r[0], r[1], r[2]]);
            }
            ConditionId::Concurrent3Lines(_) => {
                let Some(x) = affine_meet(&pts[r[0]], &pts[r[1]], &pts[r[2]], &pts[r[3]]) else { continue };
                pts[r[5]] = lerp(&pts[r[4]], &x, &rand_param(rng));
            }
            ConditionId::Conic6(_) => {
                for (k, c) in random_conic_points(rng, 6).into_iter().enumerate() {
                    pts[r[k]] = c;
                }
            }
            ConditionId::ConstructedConcurrency(_) => {
                let Some(x) = affine_meet(&pts[r[0]], &pts[r[1]], &pts[r[2]], &pts[r[3]]) else { continue };
                let Some(p) = affine_meet(&pts[r[1]], &pts[r[5]], &pts[r[2]], &pts[r[6]]) else { continue };
                if p == x {
                    continue;
                }
                pts[r[4]] = lerp(&p, &x, &rand_param(rng));
            }
            ConditionId::ConstructedConic(_) => {
                let c = random_conic_points(rng, 6);
                for k in 0..5 {
                    pts[r[k]] = c[k].clone();
                }
                let p = c[5].clone();
                pts[r[5]] = lerp(&pts[r[0]], &p, &rand_param(rng));
                pts[r[6]] = lerp(&pts[r[2]], &p, &rand_param(rng));
            }
        }
        if !no_three_collinear(&pts, &skip) {
            continue;
        }
        let cfg = to_config(pts);
        if check_condition(id, &cfg).unwrap_or(false) {
            return Ok(cfg);
        }
    }
    Err(Error::DegenerateConstruction(format!("could not sample {id}")))
}

/// A configuration of `n` points without collinear triples on which `id`
/// fails.
pub fn sample_off<R: Rng + ?Sized>(id: &ConditionId, n: usize, rng: &mut R) -> Result<Configuration> {
    id.validate(n)?;
    for _ in 0..10_000 {
        let pts: Vec<[Rational; 2]> = (0..n).map(|_| rand_point(rng, 40)).collect();
        if !no_three_collinear(&pts, &[]) {
            continue;
        }
        let cfg = to_config(pts);
        if let Ok(false) = check_condition(id, &cfg) {
            return Ok(cfg);
        }
    }
    Err(Error::DegenerateConstruction(format!("could not sample off {id}")))
}

// ---------------------------------------------------------------------------
// Witness subgraphs

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    /// Only supersets of this graph are enumerated.
    pub seed: Option<Graph>,
    /// Seed for the modular filter's primes.
    pub prime_seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub witnesses: Vec<Graph>,
    pub candidates: usize,
    pub exact_checks: usize,
}

fn subgraph_matrix(full: &crate::linalg::RationalMatrix, cols: &[usize]) -> crate::linalg::RationalMatrix {
    full.select_columns(cols)
}

/// Subgraphs of `K_n` with a one-dimensional stress space on every
/// on-sample and none on every off-sample.
pub fn witness_subgraph_search(
    n: usize,
    target: &ConditionId,
    on_samples: &[Configuration],
    off_samples: &[Configuration],
    opts: &SearchOptions,
) -> Result<SearchReport> {
    target.validate(n)?;
    let on: Vec<&Configuration> = on_samples.iter().filter(|c| c.len() == n && check_condition(target, c).unwrap_or(false)).collect();
    let off: Vec<&Configuration> = off_samples.iter().filter(|c| c.len() == n && matches!(check_condition(target, c), Ok(false))).collect();
    if on.is_empty() || off.is_empty() {
        return Err(Error::EmptySamples(format!(
            "{} usable on-samples and {} usable off-samples for {target}",
            on.len(),
            off.len()
        )));
    }
    let kn = Graph::complete(n);
    let all_edges = kn.edge_list();
    let m = all_edges.len();
    let full = |c: &Configuration| equilibrium_matrix(&Framework::new(kn.clone(), c.clone()).expect("sample size checked"));
    let on_m: Vec<_> = on.iter().map(|c| full(c)).collect();
    let off_m: Vec<_> = off.iter().map(|c| full(c)).collect();
    let seed_mask: u64 = match &opts.seed {
        Some(g) => g.edges().map(|e| 1u64 << all_edges.iter().position(|&x| x == e).unwrap()).fold(0, |a, b| a | b),
        None => 0,
    };
    use rand::SeedableRng;
    let filter = ModularRankFilter::new(&mut rand_chacha::ChaCha8Rng::seed_from_u64(opts.prime_seed));
    let free: Vec<usize> = (0..m).filter(|i| seed_mask >> i & 1 == 0).collect();
    let total: u64 = 1u64 << free.len();

    let results: Vec<(Option<u64>, bool, bool)> = (0..total)
        .into_par_iter()
        .map(|bits| {
            let mut mask = seed_mask;
            for (k, &i) in free.iter().enumerate() {
                if bits >> k & 1 == 1 {
                    mask |= 1 << i;
                }
            }
            if mask == 0 {
                return (None, false, false);
            }
            let mut deg = vec![0usize; n + 1];
            for (i, e) in all_edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    deg[e.0] += 1;
                    deg[e.1] += 1;
                }
            }
            if deg.iter().any(|&d| d == 1) {
                return (None, false, false);
            }
            let cols: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
            let k = cols.len();
            // Planar rank is at most 2n - 3, so more edges force dim W >= 2.
            if k + 3 > 2 * n + 1 {
                return (None, false, false);
            }
            // A full modular rank certifies dim W = 0 exactly.
            for a in &on_m {
                if filter.rank_lower_bound(&subgraph_matrix(a, &cols)) == k {
                    return (None, true, false);
                }
            }
            let mut exact = false;
            for a in &off_m {
                let sub = subgraph_matrix(a, &cols);
                if filter.rank_lower_bound(&sub) < k {
                    exact = true;
                    if exact_rank(&sub) != k {
                        return (None, true, exact);
                    }
                }
            }
            for a in &on_m {
                exact = true;
                if exact_rank(&subgraph_matrix(a, &cols)) + 1 != k {
                    return (None, true, exact);
                }
            }
            (Some(mask), true, exact)
        })
        .collect();
    let candidates = results.iter().filter(|r| r.1).count();
    let exact_checks = results.iter().filter(|r| r.2).count();
    let mut masks: Vec<u64> = results.into_iter().filter_map(|r| r.0).collect();
    masks.sort_by_key(|&mk| (mk.count_ones(), edge_key(mk, m)));
    let witnesses = masks
        .into_iter()
        .map(|mk| {
            let mut g = Graph::empty(n);
            for (i, e) in all_edges.iter().enumerate() {
                if mk >> i & 1 == 1 {
                    g.add_edge(e.0, e.1).unwrap();
                }
            }
            g
        })
        .collect();
    Ok(SearchReport { witnesses, candidates, exact_checks })
}

fn edge_key(mask: u64, m: usize) -> Vec<usize> {
    (0..m).filter(|i| mask >> i & 1 == 1).collect()
}

/// Minimal witnesses: those with no proper witness subgraph in the list.
pub fn minimal_witnesses(found: &[Graph]) -> Vec<Graph> {
    found
        .iter()
        .filter(|g| !found.iter().any(|h| h != *g && h.is_subgraph_of(g)))
        .cloned()
        .collect()
}

pub fn edges_string(g: &Graph) -> String {
    g.edges().map(|Edge(a, b)| format!("{a}{b}")).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(x: i64, y: i64) -> [Rational; 2] {
        [int(x), int(y)]
    }

    fn circle(t: i64) -> [Rational; 2] {
        let t = int(t);
        let d = Rational::one() + &t * &t;
        [(Rational::one() - &t * &t) / &d, (&t + &t) / &d]
    }

    #[test]
    fn conic_predicate() {
        let six: Vec<_> = (0..6).map(circle).collect();
        assert!(on_conic(&six));
        let mut off = six.clone();
        off[5] = p(2, 2);
        assert!(!on_conic(&off));
        let rep = vec![p(0, 0), p(1, 0), p(0, 1), p(3, 5), p(-2, 7), p(1, 0)];
        assert!(on_conic(&rep));
    }

    #[test]
    fn universal_set_levels() {
        let generic = Configuration::planar_ints(&[(0, 0), (5, 1), (2, 7), (-3, 4)]);
        assert_eq!(universal_set(&generic, 0).unwrap().len(), 4);
        let u1 = universal_set(&generic, 1).unwrap();
        assert_eq!(u1.len(), 7);
        let sq = Configuration::planar_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let s1 = universal_set(&sq, 1).unwrap();
        assert_eq!(s1.len(), 7);
        assert!(s1.at_infinity() >= 1);
        assert!(s1.contains(&ProjectivePoint::new(int(1), int(0), int(0)).unwrap()));
        assert!(s1.contains(&to_projective(&[rat(1, 2), rat(1, 2)])));
        assert_eq!(universal_set(&generic, 3), Err(Error::CapExceeded { level: 3, cap: 2 }));
        let u2 = universal_set(&generic, 2).unwrap();
        assert!(u1.points.iter().all(|(q, _)| u2.contains(q)));
        let again = u1.step();
        assert_eq!(again.len(), u2.len());
    }

    #[test]
    fn catalog_checks() {
        let c = Configuration::planar_ints(&[(0, 0), (1, 1), (2, 2)]);
        assert!(check_condition(&ConditionId::standard("collinear3").unwrap(), &c).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for tag in ["concurrent3", "conic6"] {
            let id = ConditionId::standard(tag).unwrap();
            let on = sample_on(&id, 6, &mut rng).unwrap();
            assert!(check_condition(&id, &on).unwrap());
            let off = sample_off(&id, 6, &mut rng).unwrap();
            assert!(!check_condition(&id, &off).unwrap());
        }
        for tag in ["k7-concurrency", "k7-conic"] {
            let id = ConditionId::standard(tag).unwrap();
            let on = sample_on(&id, 7, &mut rng).unwrap();
            let rep = check_condition_detailed(&id, &on).unwrap();
            assert!(rep.holds);
            assert_eq!(rep.constructed[0].0, "p");
        }
    }

    #[test]
    fn condition_parsing_and_validation() {
        let id: ConditionId = "concurrent3:2,1,3,4,6,5".parse().unwrap();
        assert_eq!(id.roles(), &[2, 1, 3, 4, 6, 5]);
        assert!("conic6:1,1,2,3,4,5".parse::<ConditionId>().is_err());
        assert!("nonsense".parse::<ConditionId>().is_err());
        let c = Configuration::planar_ints(&[(0, 0), (1, 1), (2, 2)]);
        assert!(check_condition(&ConditionId::Collinear3([1, 2, 4]), &c).is_err());
    }

    #[test]
    fn sixty_hexagons() {
        let orders = hexagon_orders();
        assert_eq!(orders.len(), 60);
        let six: Vec<_> = (0..6).map(circle).collect();
        let w = pascal_witnesses(&six);
        assert_eq!(w.len(), 60);
        assert!(w.iter().all(|i| i.collinear() == Some(true)));
        assert_eq!(w[0].order, [1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn degenerate_concurrency_is_reported() {
        let c = Configuration::planar_ints(&[(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 2)]);
        let id = ConditionId::standard("concurrent3").unwrap();
        assert!(matches!(check_condition(&id, &c), Err(Error::DegenerateConstruction(_))));
    }
}
