//! Dense exact linear algebra over the rationals.
//!
//! Subspaces are kept in reduced row echelon form (pivot = first nonzero
//! column, pivot entry 1), which makes equality and inclusion canonical.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

pub type Vector = Vec<Scalar>;
pub type Matrix = Vec<Vec<Scalar>>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

pub fn add_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn scale_vec(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| unit_vec(n, i)).collect()
}

pub fn zero_mat(r: usize, c: usize) -> Matrix {
    vec![zero_vec(c); r]
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = zero_vec(n);
            for (k, x) in row.iter().enumerate() {
                add_scaled(&mut out, x, &b[k]);
            }
            out
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, v: &[Scalar]) -> Vector {
    a.iter().map(|row| dot(row, v)).collect()
}

pub fn mat_add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn mat_sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn mat_scale(c: &Scalar, a: &Matrix) -> Matrix {
    a.iter().map(|r| scale_vec(c, r)).collect()
}

pub fn transpose(a: &[Vector], ncols: usize) -> Matrix {
    (0..ncols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn trace(a: &Matrix) -> Scalar {
    a.iter().enumerate().fold(Scalar::zero(), |acc, (i, r)| acc + &r[i])
}

pub fn is_zero_mat(a: &Matrix) -> bool {
    a.iter().all(|r| is_zero_vec(r))
}

/// Kronecker product `a ⊗ b`; index of `(i, k)` is `i * dim(b) + k`.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (na, nb) = (a.len(), b.len());
    let mut out = zero_mat(na * nb, na * nb);
    for i in 0..na {
        for j in 0..na {
            if a[i][j].is_zero() {
                continue;
            }
            for k in 0..nb {
                for l in 0..nb {
                    out[i * nb + k][j * nb + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend(unit_vec(n, i));
            row
        })
        .collect();
    let pivots = rref_in_place(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Row reduces in place, dropping zero rows. Returns the pivot columns.
pub fn rref_in_place(rows: &mut Matrix) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Scalar::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = -row[c].clone();
                add_scaled(row, &f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &Matrix) -> usize {
    let mut m = rows.clone();
    rref_in_place(&mut m).len()
}

/// Basis of `{x : A x = 0}` for `A` given by rows with `ncols` columns.
pub fn nullspace(rows: &Matrix, ncols: usize) -> VecSpace {
    let mut m: Matrix = rows.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    let pivots = rref_in_place(&mut m);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = unit_vec(ncols, free);
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    VecSpace::span(ncols, basis)
}

/// Incremental row reducer keeping its rows fully reduced.
#[derive(Clone, Debug)]
pub struct RowReducer {
    ncols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(ncols: usize) -> Self {
        RowReducer {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Residual of `v` after eliminating all pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = -r[p].clone();
                add_scaled(&mut r, &f, row);
            }
        }
        r
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Scalar::one() / &r[p];
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = -row[p].clone();
                add_scaled(row, &f, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn into_space(self) -> VecSpace {
        VecSpace {
            dim: self.ncols,
            rows: self.rows,
            pivots: self.pivots,
        }
    }
}

/// Common nullspace of a stream of sparse rows. A row already in the span of
/// earlier rows is orthogonal to the current nullspace, so the common case is
/// a handful of sparse dot products. Arithmetic is fraction-free: rows are
/// cleared of denominators and the basis is kept primitive over `Z`.
#[derive(Clone, Debug)]
pub struct NullspaceTracker {
    dim: usize,
    basis: Vec<Vec<BigInt>>,
    seen: HashSet<Vec<(usize, BigInt)>>,
}

impl NullspaceTracker {
    pub fn new(dim: usize) -> Self {
        let basis = (0..dim)
            .map(|i| (0..dim).map(|j| BigInt::from(u8::from(i == j))).collect())
            .collect();
        NullspaceTracker {
            dim,
            basis,
            seen: HashSet::new(),
        }
    }

    pub fn nullity(&self) -> usize {
        self.basis.len()
    }

    /// Imposes `row · x = 0`; returns whether the nullspace shrank.
    pub fn insert_sparse(&mut self, row: &[(usize, Scalar)]) -> bool {
        let den = row.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut row: Vec<(usize, BigInt)> = row
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (*i, c.numer() * (&den / c.denom())))
            .collect();
        let Some(first) = row.first() else {
            return false;
        };
        let g = row.iter().fold(BigInt::zero(), |acc, (_, x)| acc.gcd(x));
        let g = if first.1.is_negative() { -g } else { g };
        for (_, x) in row.iter_mut() {
            *x /= &g;
        }
        row.sort_by_key(|e| e.0);
        if !self.seen.insert(row.clone()) {
            return false;
        }
        let pairings: Vec<BigInt> = self
            .basis
            .iter()
            .map(|k| row.iter().fold(BigInt::zero(), |acc, (i, c)| acc + c * &k[*i]))
            .collect();
        let Some(p) = pairings.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let pivot = self.basis.swap_remove(p);
        let pv = pairings[p].clone();
        let mut rest = pairings;
        rest.swap_remove(p);
        for (k, c) in self.basis.iter_mut().zip(&rest) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in k.iter_mut().zip(&pivot) {
                *x = &*x * &pv - c * y;
            }
            let g = k.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !g.is_one() && !g.is_zero() {
                for x in k.iter_mut() {
                    *x /= &g;
                }
            }
        }
        true
    }

    pub fn into_space(self) -> VecSpace {
        let vectors = self
            .basis
            .into_iter()
            .map(|k| k.into_iter().map(Scalar::from_integer).collect());
        VecSpace::span(self.dim, vectors)
    }
}

/// A subspace of `Q^dim` in canonical reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VecSpace {
    dim: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl VecSpace {
    pub fn zero(dim: usize) -> Self {
        VecSpace {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(dim: usize) -> Self {
        Self::span(dim, (0..dim).map(|i| unit_vec(dim, i)))
    }

    pub fn span<I: IntoIterator<Item = Vector>>(dim: usize, vectors: I) -> Self {
        let mut red = RowReducer::new(dim);
        for v in vectors {
            debug_assert_eq!(v.len(), dim);
            red.insert(&v);
        }
        red.into_space()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Column indices that are not pivots; their unit vectors span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.dim).filter(|c| !self.pivots.contains(c)).collect()
    }

    pub fn reducer(&self) -> RowReducer {
        RowReducer {
            ncols: self.dim,
            rows: self.rows.clone(),
            pivots: self.pivots.clone(),
        }
    }

    /// `v` modulo the subspace, with all pivot coordinates cleared.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        self.reducer().reduce(v)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn is_subspace_of(&self, other: &VecSpace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn combine(&self, coords: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (c, row) in coords.iter().zip(&self.rows) {
            add_scaled(&mut out, c, row);
        }
        out
    }

    pub fn sum(&self, other: &VecSpace) -> VecSpace {
        let mut red = self.reducer();
        for r in &other.rows {
            red.insert(r);
        }
        red.into_space()
    }

    /// `{x : <x, v> = 0 for all v in self}` under the standard pairing.
    pub fn annihilator(&self) -> VecSpace {
        nullspace(&self.rows, self.dim)
    }

    pub fn intersection(&self, other: &VecSpace) -> VecSpace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::scalar::{frac, int};

    #[test]
    fn tracker_matches_nullspace() {
        let rows: Matrix = vec![
            vec![int(1), int(2), int(0), int(-1)],
            vec![int(2), int(4), int(0), int(-2)],
            vec![int(0), int(1), int(3), int(0)],
        ];
        let mut t = NullspaceTracker::new(4);
        let grew: Vec<bool> = rows
            .iter()
            .map(|r| {
                let sparse: Vec<(usize, Scalar)> =
                    r.iter().cloned().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                t.insert_sparse(&sparse)
            })
            .collect();
        assert_eq!(grew, vec![true, false, true]);
        assert_eq!(t.nullity(), 2);
        assert_eq!(t.into_space(), nullspace(&rows, 4));
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn echelon_form_is_canonical() {
        let a = VecSpace::span(3, [v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = VecSpace::span(3, [v(&[1, 2, 1]), v(&[2, 0, -2])]);
        assert_eq!(a, b);
        assert_eq!(a.basis()[0], v(&[1, 0, -1]));
        assert_eq!(a.pivots(), &[0, 1]);
    }

    #[test]
    fn nullspace_and_intersection() {
        let n = nullspace(&vec![v(&[1, 1, 1])], 3);
        assert_eq!(n.dim(), 2);
        let plane = VecSpace::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let meet = n.intersection(&plane);
        assert_eq!(meet, VecSpace::span(3, [v(&[1, -1, 0])]));
        assert!(meet.is_subspace_of(&n));
        assert_eq!(VecSpace::zero(3).annihilator(), VecSpace::full(3));
    }

    #[test]
    fn inverse_and_kron() {
        let a = vec![v(&[2, 1]), v(&[1, 1])];
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(2));
        assert!(inverse(&vec![v(&[1, 2]), v(&[2, 4])]).is_none());
        let k = kron(&identity(2), &vec![vec![frac(1, 2)]]);
        assert_eq!(k, mat_scale(&frac(1, 2), &identity(2)));
    }

    #[test]
    fn reducer_tracks_rank() {
        let mut r = RowReducer::new(2);
        assert!(r.insert(&v(&[0, 3])));
        assert!(!r.insert(&v(&[0, -1])));
        assert!(r.insert(&v(&[1, 1])));
        assert_eq!(r.rank(), 2);
        assert!(is_zero_vec(&r.reduce(&v(&[5, 7]))));
    }
}
