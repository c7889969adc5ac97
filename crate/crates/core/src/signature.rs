//! Sign-vector (covector) sets of stress spaces and fiber equivalence.
//!
//! Each edge gives a linear functional on the coefficient space of the
//! canonical stress basis; the covectors are the sign vectors of all points
//! of that space, i.e. the faces of the central hyperplane arrangement cut
//! out by the functionals. Fiber equivalence is equality of dimension and
//! covector set.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, Matrix};
use crate::model::{Edge, Framework};
use crate::scalar::{sign, Rational};
use crate::stress::{self_stress_space, StressSpace};

/// Largest rank of a connected block of edge functionals we enumerate
/// (enough for every fiber of `K_5`, e.g. five collinear points give 6).
pub const MAX_BLOCK_RANK: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(pub Vec<i8>);

impl SignVector {
    pub fn zero(m: usize) -> Self {
        SignVector(vec![0; m])
    }

    pub fn negated(&self) -> Self {
        SignVector(self.0.iter().map(|s| -s).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn of(v: &[Rational]) -> Self {
        SignVector(v.iter().map(sign).collect())
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                1 => "+",
                -1 => "-",
                _ => "0",
            })?;
        }
        Ok(())
    }
}

/// Classification key of a fiber `W(G,P)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiberSignature {
    pub edges: Vec<Edge>,
    pub dim: usize,
    pub covectors: BTreeSet<SignVector>,
    pub zero_edges: Vec<Edge>,
}

impl FiberSignature {
    /// Covectors that are not below another covector (the topes of the
    /// support).
    pub fn maximal_covectors(&self) -> Vec<&SignVector> {
        self.covectors
            .iter()
            .filter(|c| {
                !self.covectors.iter().any(|d| d != *c && c.0.iter().zip(&d.0).all(|(a, b)| *a == 0 || a == b))
            })
            .collect()
    }
}

fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

type Faces = BTreeMap<Vec<i8>, Vec<BigInt>>;

fn idot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

fn isign(x: &BigInt) -> i8 {
    match x.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Divides out the content; a positive multiple, so every sign is kept.
fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

/// Positive integer multiple of a rational vector.
fn integral(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    primitive(v.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect())
}

fn insert_sign(t: &[i8], at: usize, s: i8) -> Vec<i8> {
    let mut sv = Vec::with_capacity(t.len() + 1);
    sv.extend_from_slice(&t[..at]);
    sv.push(s);
    sv.extend_from_slice(&t[at..]);
    sv
}

/// `2^k x + t d` with the least `k` such that every functional nonzero at
/// `x` keeps its sign: a point of the face of `x`, pushed along `d`.
fn nudge(fs: &[Vec<BigInt>], x: &[BigInt], t: i8, d: &[BigInt]) -> Vec<BigInt> {
    let mut k = 0u64;
    for f in fs {
        let fx = idot(f, x);
        if fx.is_zero() {
            continue;
        }
        let (fx, fd) = (fx.magnitude().clone(), idot(f, d).magnitude().clone());
        while (&fx << k) <= fd {
            k += 1;
        }
    }
    let out = x.iter().zip(d).map(|(a, b)| (a << k) + if t > 0 { b.clone() } else { -b }).collect();
    primitive(out)
}

/// Every face of the central arrangement `fs` on `Z^dim`, keyed by its sign
/// vector, with a relative-interior witness point. Deletion/restriction on
/// the first nonzero functional `f1`: each face `X` of the deletion either
/// misses `H1`, lies in `H1`, or is cut by it into three faces; it meets `H1`
/// exactly when `X` is a face of the restriction to `H1`.
fn faces(fs: &[Vec<BigInt>], dim: usize) -> Faces {
    let mut out = BTreeMap::new();
    let Some(i1) = fs.iter().position(|f| f.iter().any(|x| !x.is_zero())) else {
        out.insert(vec![0; fs.len()], vec![BigInt::zero(); dim]);
        return out;
    };
    let f1 = &fs[i1];
    let rest: Vec<Vec<BigInt>> = fs.iter().enumerate().filter(|(i, _)| *i != i1).map(|(_, f)| f.clone()).collect();
    let deleted = faces(&rest, dim);
    // H1 is spanned by f1[j] e_k - f1[k] e_j, k != j
    let j = f1.iter().position(|x| !x.is_zero()).expect("nonzero functional");
    let others: Vec<usize> = (0..dim).filter(|&k| k != j).collect();
    let restricted_fs: Vec<Vec<BigInt>> = rest.iter().map(|g| primitive(others.iter().map(|&k| &f1[j] * &g[k] - &f1[k] * &g[j]).collect())).collect();
    let restricted = faces(&restricted_fs, dim - 1);
    let lift = |yc: &[BigInt]| -> Vec<BigInt> {
        let mut y = vec![BigInt::zero(); dim];
        for (c, &k) in yc.iter().zip(&others) {
            y[k] = &f1[j] * c;
            y[j] -= &f1[k] * c;
        }
        primitive(y)
    };
    // directions of span(X) by zero set of X
    let mut spans: BTreeMap<Vec<usize>, Vec<Vec<BigInt>>> = BTreeMap::new();
    for (x, w) in deleted {
        let s = isign(&idot(f1, &w));
        let Some(yc) = restricted.get(&x) else {
            debug_assert_ne!(s, 0, "witness lies on an uncut hyperplane");
            out.insert(insert_sign(&x, i1, s), w);
            continue;
        };
        let y = lift(yc);
        if s != 0 {
            // y on H1, w off it, both in X
            let d: Vec<BigInt> = w.iter().zip(&y).map(|(a, b)| a - b).collect();
            out.insert(insert_sign(&x, i1, -s), nudge(&rest, &y, -1, &d));
            out.insert(insert_sign(&x, i1, 0), y);
            out.insert(insert_sign(&x, i1, s), w);
            continue;
        }
        let zero_set: Vec<usize> = (0..x.len()).filter(|&e| x[e] == 0).collect();
        let dirs = spans.entry(zero_set).or_insert_with_key(|z| {
            if z.is_empty() {
                (0..dim).map(|k| (0..dim).map(|i| BigInt::from(u8::from(i == k))).collect()).collect()
            } else {
                let rows = z.iter().map(|&e| rest[e].iter().map(|v| Rational::from_integer(v.clone())).collect()).collect();
                kernel_basis(&Matrix::from_rows(rows)).vectors.iter().map(|v| integral(v)).collect()
            }
        });
        match dirs.iter().find(|d| !idot(f1, d).is_zero()) {
            None => {
                out.insert(insert_sign(&x, i1, 0), w);
            }
            Some(d) => {
                let side = isign(&idot(f1, d));
                out.insert(insert_sign(&x, i1, side), nudge(&rest, &w, 1, d));
                out.insert(insert_sign(&x, i1, -side), nudge(&rest, &w, -1, d));
                out.insert(insert_sign(&x, i1, 0), w);
            }
        }
    }
    out
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Connected blocks of the linear matroid on the rows of `rows`, with every
/// row written in the coordinates of its block's basis rows.
struct Block {
    members: Vec<usize>,
    coords: Vec<Vec<Rational>>,
    rank: usize,
}

fn matroid_blocks(rows: &[Vec<Rational>]) -> Vec<Block> {
    let nz: Vec<usize> = (0..rows.len()).filter(|&i| !is_zero_vec(&rows[i])).collect();
    let mut basis: Vec<usize> = Vec::new();
    for &i in &nz {
        let mut trial: Vec<Vec<Rational>> = basis.iter().map(|&b| rows[b].clone()).collect();
        trial.push(rows[i].clone());
        if Matrix::from_rows(trial).rank() == basis.len() + 1 {
            basis.push(i);
        }
    }
    // Coordinates of each row in the basis rows: solve sum c_b r_b = r.
    let coord_of = |r: &Vec<Rational>| -> Vec<Rational> {
        let k = rows[0].len();
        let mut m = Vec::with_capacity(k);
        for t in 0..k {
            let mut row: Vec<Rational> = basis.iter().map(|&b| rows[b][t].clone()).collect();
            row.push(r[t].clone());
            m.push(row);
        }
        let kb = kernel_basis(&Matrix::from_rows(m));
        let v = kb.vectors.iter().find(|v| !v[basis.len()].is_zero()).expect("row lies in the row space");
        let s = -v[basis.len()].clone();
        v[..basis.len()].iter().map(|x| x / &s).collect()
    };
    let mut dsu = Dsu((0..rows.len()).collect());
    let mut full_coords: BTreeMap<usize, Vec<Rational>> = BTreeMap::new();
    for &i in &nz {
        let c = coord_of(&rows[i]);
        for (bi, cb) in c.iter().enumerate() {
            if !cb.is_zero() {
                dsu.union(i, basis[bi]);
            }
        }
        full_coords.insert(i, c);
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &i in &nz {
        let r = dsu.find(i);
        groups.entry(r).or_default().push(i);
    }
    groups
        .into_values()
        .map(|members| {
            let local: Vec<usize> = (0..basis.len()).filter(|&bi| members.contains(&basis[bi])).collect();
            let coords = members.iter().map(|i| local.iter().map(|&bi| full_coords[i][bi].clone()).collect()).collect();
            Block { rank: local.len(), members, coords }
        })
        .collect()
}

/// Exact covector set of a stress space.
///
/// The edge functionals are split into connected blocks of their linear
/// matroid; the covector set is the product of the blocks' sets, and each
/// block must have rank at most [`MAX_BLOCK_RANK`].
pub fn covectors(space: &StressSpace) -> Result<BTreeSet<SignVector>> {
    let m = space.edge_count();
    let k = space.dim();
    let rows: Vec<Vec<Rational>> = (0..m).map(|e| space.basis.iter().map(|b| b.weights()[e].clone()).collect()).collect();
    let mut acc: Vec<Vec<i8>> = vec![vec![0; m]];
    if k == 0 {
        return Ok(acc.into_iter().map(SignVector).collect());
    }
    let blocks = matroid_blocks(&rows);
    if blocks.iter().any(|b| b.rank > MAX_BLOCK_RANK) {
        return Err(Error::UnsupportedStressDimension(k));
    }
    for b in &blocks {
        let rows: Vec<Vec<BigInt>> = b.coords.iter().map(|r| integral(r)).collect();
        let local = faces(&rows, b.rank).into_keys().collect::<Vec<_>>();
        let mut next = Vec::with_capacity(acc.len() * local.len());
        for base in &acc {
            for l in &local {
                let mut v = base.clone();
                for (pos, &e) in b.members.iter().enumerate() {
                    v[e] = l[pos];
                }
                next.push(v);
            }
        }
        acc = next;
    }
    Ok(acc.into_iter().map(SignVector).collect())
}

pub fn signature_of_space(space: &StressSpace) -> Result<FiberSignature> {
    let covectors = covectors(space)?;
    let zero_edges = (0..space.edge_count())
        .filter(|&e| space.basis.iter().all(|b| b.weights()[e].is_zero()))
        .map(|e| space.edges[e])
        .collect();
    Ok(FiberSignature { edges: space.edges.clone(), dim: space.dim(), covectors, zero_edges })
}

pub fn fiber_signature(f: &Framework) -> Result<FiberSignature> {
    signature_of_space(&self_stress_space(f))
}

pub fn fibers_equivalent(a: &FiberSignature, b: &FiberSignature) -> Result<bool> {
    if a.edges != b.edges {
        return Err(Error::GraphMismatch("signatures belong to different edge sets".into()));
    }
    Ok(a.dim == b.dim && a.covectors == b.covectors)
}
