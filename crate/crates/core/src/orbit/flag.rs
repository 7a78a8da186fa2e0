use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lie::solve_coords;
use crate::lie::{derived_algebra, is_nilpotent, is_solvable, series, LieAlgebra, SeriesKind};
use crate::linalg::{identity, mat_add, mat_mul, mat_scale, mat_vec, nullspace, trace, Matrix, VecSpace, Vector};
use crate::scalar::Scalar;

/// Order in which refinement vectors are tried when building an ideal flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FlagOrder {
    /// First basis vector first.
    Forward,
    /// Last basis vector first.
    #[default]
    Reverse,
}

/// A full flag `0 = g_0 ⊂ g_1 ⊂ ... ⊂ g_n = g` of ideals, `dim g_i = i`.
///
/// Refines the lower central series (nilpotent `g`) or the derived series
/// (solvable `g`), trying basis vectors greedily and falling back to a
/// rational common eigenvector of `ad g` on each layer.
pub fn ideal_flag(g: &LieAlgebra, order: FlagOrder) -> Result<Vec<VecSpace>> {
    if !is_solvable(g) {
        return Err(Error::NoIdealFlag);
    }
    let kind = if is_nilpotent(g) {
        SeriesKind::LowerCentral
    } else {
        SeriesKind::Derived
    };
    let mut coarse = series(g, kind);
    coarse.reverse(); // ascending: 0 ⊂ ... ⊂ g
    let n = g.dim();
    let mut flag = vec![VecSpace::zero(n)];
    for pair in coarse.windows(2) {
        let (lower, upper) = (&pair[0], &pair[1]);
        let mut cur = lower.clone();
        while cur.dim() < upper.dim() {
            let next = greedy_step(g, &cur, upper, order)
                .or_else(|| eigen_step(g, &cur, upper))
                .ok_or(Error::NoIdealFlag)?;
            flag.push(next.clone());
            cur = next;
        }
    }
    debug_assert!(flag.iter().enumerate().all(|(i, s)| s.dim() == i && g.is_ideal(s)));
    Ok(flag)
}

fn greedy_step(g: &LieAlgebra, cur: &VecSpace, upper: &VecSpace, order: FlagOrder) -> Option<VecSpace> {
    let n = g.dim();
    let mut candidates: Vec<Vector> = (0..n).map(|i| g.basis_vec(i)).filter(|v| upper.contains(v)).collect();
    candidates.extend(upper.basis().iter().cloned());
    if order == FlagOrder::Reverse {
        candidates.reverse();
    }
    candidates
        .into_iter()
        .filter(|v| !cur.contains(v))
        .map(|v| cur.sum(&VecSpace::span(n, vec![v])))
        .find(|s| g.is_ideal(s))
}

/// Extends `cur` by a common eigenvector of `ad g` on `upper / cur`.
fn eigen_step(g: &LieAlgebra, cur: &VecSpace, upper: &VecSpace) -> Option<VecSpace> {
    let n = g.dim();
    // lifts of a basis of upper/cur
    let mut red = cur.reducer();
    let lifts: Vec<Vector> = upper.basis().iter().filter(|v| red.insert(v)).cloned().collect();
    let m = lifts.len();
    let mut frame: Vec<Vector> = cur.basis().to_vec();
    frame.extend(lifts.iter().cloned());
    // coordinates in the lift basis of [x, q_j] modulo cur
    let op = |x: &[Scalar]| -> Matrix {
        let cols: Vec<Vector> = lifts
            .iter()
            .map(|q| {
                let c = solve_coords(&frame, &g.bracket(x, q)).expect("upper is an ideal");
                c[cur.dim()..].to_vec()
            })
            .collect();
        crate::linalg::transpose(&cols, m)
    };
    let mut v0 = VecSpace::full(m);
    for y in derived_algebra(g).basis() {
        let k = nullspace(&op(y), m);
        v0 = v0.intersection(&k);
    }
    let ops: Vec<Matrix> = (0..n).map(|i| op(&g.basis_vec(i))).collect();
    let w = common_eigenvector(&v0, &ops)?;
    let mut lift = crate::linalg::zero_vec(n);
    for (c, q) in w.iter().zip(&lifts) {
        crate::linalg::add_scaled(&mut lift, c, q);
    }
    Some(cur.sum(&VecSpace::span(n, vec![lift])))
}

/// Common eigenvector in `space` of operators that commute on it and leave it
/// invariant, with rational eigenvalues only.
fn common_eigenvector(space: &VecSpace, ops: &[Matrix]) -> Option<Vector> {
    if space.is_zero() {
        return None;
    }
    let Some((a, rest)) = ops.split_first() else {
        return Some(space.basis()[0].clone());
    };
    let basis = space.basis();
    let k = basis.len();
    // restriction of `a` to `space` in its echelon basis
    let cols: Vec<Vector> = basis
        .iter()
        .map(|b| space.coords(&mat_vec(a, b)).expect("invariant subspace"))
        .collect();
    let restricted = crate::linalg::transpose(&cols, k);
    for mu in rational_eigenvalues(&restricted) {
        let shifted = mat_add(&restricted, &mat_scale(&-mu, &identity(k)));
        let kernel = nullspace(&shifted, k);
        let sub = VecSpace::span(space.ambient_dim(), kernel.basis().iter().map(|c| space.combine(c)));
        if let Some(v) = common_eigenvector(&sub, rest) {
            return Some(v);
        }
    }
    None
}

/// Characteristic polynomial coefficients `c_0..c_k` (monic) by Faddeev–LeVerrier.
pub fn char_poly(a: &Matrix) -> Vec<Scalar> {
    let k = a.len();
    let mut c = vec![Scalar::zero(); k + 1];
    c[k] = Scalar::one();
    let mut m = vec![vec![Scalar::zero(); k]; k];
    for step in 1..=k {
        m = mat_add(&mat_mul(a, &m), &mat_scale(&c[k + 1 - step], &identity(k)));
        let am = mat_mul(a, &m);
        c[k - step] = -trace(&am) / Scalar::from_integer(BigInt::from(step));
    }
    c
}

fn eval(poly: &[Scalar], x: &Scalar) -> Scalar {
    poly.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let q = &n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out
}

/// Distinct rational roots of the characteristic polynomial, ascending.
pub fn rational_eigenvalues(a: &Matrix) -> Vec<Scalar> {
    let mut poly = char_poly(a);
    let mut roots = Vec::new();
    while poly.len() > 1 && poly[0].is_zero() {
        poly.remove(0);
        if !roots.contains(&Scalar::zero()) {
            roots.push(Scalar::zero());
        }
    }
    if poly.len() > 1 {
        let lcm = poly.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = poly
            .iter()
            .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
            .collect();
        let (a0, an) = (&ints[0], &ints[ints.len() - 1]);
        for p in divisors(a0) {
            for q in divisors(an) {
                for sign in [1, -1] {
                    let x = Scalar::new(&p * BigInt::from(sign), q.clone());
                    if !roots.contains(&x) && eval(&poly, &x).is_zero() {
                        roots.push(x);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog_algebra;
    use crate::scalar::int;

    #[test]
    fn flags_for_catalog_solvable_algebras() {
        for name in ["heisenberg3", "heisenberg5", "aff1", "oscillator", "abelian(3)"] {
            let g = catalog_algebra(name).unwrap();
            for order in [FlagOrder::Forward, FlagOrder::Reverse] {
                let flag = ideal_flag(&g, order).unwrap();
                assert_eq!(flag.len(), g.dim() + 1, "{name}");
                for (i, s) in flag.iter().enumerate() {
                    assert_eq!(s.dim(), i);
                    assert!(g.is_ideal(s));
                }
            }
        }
        assert!(matches!(
            ideal_flag(&catalog_algebra("sl2").unwrap(), FlagOrder::Forward),
            Err(Error::NoIdealFlag)
        ));
    }

    #[test]
    fn h3_reverse_flag_passes_through_yz() {
        let g = catalog_algebra("heisenberg3").unwrap();
        let flag = ideal_flag(&g, FlagOrder::Reverse).unwrap();
        assert_eq!(g.format_subspace(&flag[2]), "span{y, z}");
    }

    #[test]
    fn eigen_step_finds_invariant_line() {
        let g = catalog_algebra("oscillator").unwrap();
        let line = eigen_step(&g, &VecSpace::zero(4), &VecSpace::full(4)).unwrap();
        assert_eq!(line.dim(), 1);
        assert!(g.is_ideal(&line));
        let aff = catalog_algebra("aff1").unwrap();
        let line = eigen_step(&aff, &VecSpace::zero(2), &VecSpace::full(2)).unwrap();
        assert_eq!(aff.format_subspace(&line), "span{b}");
    }

    #[test]
    fn char_poly_and_roots() {
        let a = vec![vec![int(2), int(1)], vec![int(0), int(-3)]];
        assert_eq!(char_poly(&a), vec![int(-6), int(1), int(1)]);
        assert_eq!(rational_eigenvalues(&a), vec![int(-3), int(2)]);
        let rot = vec![vec![int(0), int(-1)], vec![int(1), int(0)]];
        assert!(rational_eigenvalues(&rot).is_empty());
    }
}
