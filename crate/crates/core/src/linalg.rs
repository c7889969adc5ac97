//! Dense exact matrices: rank, canonical kernel bases and a modular rank
//! prefilter for bulk searches.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::{primitive_integer_vector, Rational, Scalar};

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RationalMatrix = Matrix<Rational>;

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        let n = rows.len();
        Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Matrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                m.set(r, k, self.get(r, c).clone());
            }
        }
        m
    }

    /// Rank by Gaussian elimination over the field `T`.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<T>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(rank, p);
            for i in rank + 1..self.rows {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].clone() / a[rank][c].clone();
                for j in c..self.cols {
                    let v = a[i][j].clone() - f.clone() * a[rank][j].clone();
                    a[i][j] = v;
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Exact null-space basis in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KernelBasis {
    pub ambient: usize,
    pub vectors: Vec<Vec<Rational>>,
}

impl KernelBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn rank(&self) -> usize {
        self.ambient - self.vectors.len()
    }
}

fn integer_rows(a: &RationalMatrix) -> Vec<Vec<BigInt>> {
    (0..a.rows())
        .map(|r| {
            let row = a.row(r);
            let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            row.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect()
}

/// Fraction-free Gauss-Jordan elimination. Returns the reduced rows and the
/// pivot columns; every pivot entry equals the last pivot value.
fn bareiss_gauss_jordan(mut a: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let pivot_row = a[r].clone();
        let pv = pivot_row[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[c].clone();
            for j in 0..cols {
                let num = &pv * &row[j] - &f * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "inexact fraction-free division");
                row[j] = num / &prev;
            }
        }
        prev = pv;
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Null space of `a` via fraction-free elimination. Basis vectors are
/// integral with content 1 and a positive first nonzero entry, ordered by
/// their free column.
pub fn kernel_basis(a: &RationalMatrix) -> KernelBasis {
    let cols = a.cols();
    let (red, pivots) = bareiss_gauss_jordan(integer_rows(a), cols);
    let d = pivots.first().map(|&c| red[0][c].clone()).unwrap_or_else(BigInt::one);
    let mut vectors = Vec::new();
    for f in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::from_integer(d.clone());
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = Rational::from_integer(-red[i][f].clone());
        }
        vectors.push(primitive_integer_vector(&v));
    }
    KernelBasis { ambient: cols, vectors }
}

/// Exact rank through the fraction-free route.
pub fn exact_rank(a: &RationalMatrix) -> usize {
    bareiss_gauss_jordan(integer_rows(a), a.cols()).1.len()
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

fn to_mod(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

/// Rank of `a` reduced modulo `prime`. Never exceeds the exact rank.
pub fn rank_mod_p(a: &RationalMatrix, prime: u64) -> Result<usize> {
    let mut m: Vec<Vec<u64>> = Vec::with_capacity(a.rows());
    for r in 0..a.rows() {
        let mut row = Vec::with_capacity(a.cols());
        for x in a.row(r) {
            let den = to_mod(x.denom(), prime);
            if den == 0 {
                return Err(Error::BadPrime(prime));
            }
            row.push(mul_mod(to_mod(x.numer(), prime), pow_mod(den, prime - 2, prime), prime));
        }
        m.push(row);
    }
    let cols = a.cols();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(rank, p);
        let inv = pow_mod(m[rank][c], prime - 2, prime);
        for i in rank + 1..m.len() {
            if m[i][c] == 0 {
                continue;
            }
            let f = mul_mod(m[i][c], inv, prime);
            for j in c..cols {
                let sub = mul_mod(f, m[rank][j], prime);
                m[i][j] = (m[i][j] + prime - sub) % prime;
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Uniformly drawn prime in `[2^61, 2^62)`.
pub fn random_prime_62<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    loop {
        let c = rng.gen_range((1u64 << 61)..(1u64 << 62)) | 1;
        if is_prime_u64(c) {
            return c;
        }
    }
}

/// Two independent random primes. `rank_lower_bound` is a certified lower
/// bound for the exact rank; it is a filter, never a final answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModularRankFilter {
    pub primes: [u64; 2],
}

impl ModularRankFilter {
    pub fn new<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let a = random_prime_62(rng);
        let mut b = random_prime_62(rng);
        while b == a {
            b = random_prime_62(rng);
        }
        ModularRankFilter { primes: [a, b] }
    }

    pub fn rank_lower_bound(&self, a: &RationalMatrix) -> usize {
        self.primes.iter().filter_map(|&p| rank_mod_p(a, p).ok()).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn kernel_of_single_row() {
        let k = kernel_basis(&m(&[&[1, -1]]));
        assert_eq!(k.vectors, vec![vec![int(1), int(1)]]);
        assert_eq!(k.rank(), 1);
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let k = kernel_basis(&Matrix::zeros(3, 3));
        assert_eq!(k.dim(), 3);
        assert_eq!(kernel_basis(&Matrix::zeros(0, 2)).dim(), 2);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = m(&[&[2, 4, -2, 6], &[1, 2, 1, 0], &[3, 6, -1, 6]]);
        let k = kernel_basis(&a);
        assert_eq!(k.dim(), 2);
        assert_eq!(exact_rank(&a), 2);
        assert_eq!(a.rank(), 2);
        for v in &k.vectors {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn modular_ranks() {
        assert_eq!(rank_mod_p(&m(&[&[1, -1]]), 7).unwrap(), 1);
        assert_eq!(rank_mod_p(&m(&[&[2, 4], &[1, 2]]), 5).unwrap(), 1);
        let p = 13;
        assert_eq!(rank_mod_p(&m(&[&[p, 0], &[0, 1]]), p as u64).unwrap(), 1);
        assert_eq!(exact_rank(&m(&[&[p, 0], &[0, 1]])), 2);
        let third = Matrix::from_rows(vec![vec![crate::scalar::rat(1, 7)]]);
        assert_eq!(rank_mod_p(&third, 7), Err(Error::BadPrime(7)));
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2_305_843_009_213_693_951)); // 2^61 - 1
        assert!(!is_prime_u64(2_305_843_009_213_693_953));
        assert!(is_prime_u64(97));
        assert!(!is_prime_u64(1));
    }
}
