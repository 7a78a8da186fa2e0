use num_traits::Zero;

use super::{Key, ModVec, UModule};
use crate::enveloping::UElement;
use crate::error::{Error, Result};
use crate::lie::{catalog_algebra, sl_matrices, LieAlgebra};
use crate::linalg::{
    identity, is_zero_mat, kron, mat_add, mat_mul, mat_scale, mat_sub, transpose, zero_mat, Matrix, VecSpace,
};
use crate::scalar::{int, Scalar};

/// Finite-dimensional representation: one square matrix per basis element.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep {
    g: LieAlgebra,
    n: usize,
    images: Vec<Matrix>,
}

impl MatrixRep {
    /// Validates shapes and the bracket relation on every basis pair.
    pub fn new(g: LieAlgebra, images: Vec<Matrix>) -> Result<Self> {
        if images.len() != g.dim() {
            return Err(Error::Invalid(format!(
                "expected {} matrices, got {}",
                g.dim(),
                images.len()
            )));
        }
        let n = images.first().map_or(0, Vec::len);
        if n == 0 {
            return Err(Error::Invalid("zero-dimensional representation".into()));
        }
        if images.iter().any(|m| m.len() != n || m.iter().any(|r| r.len() != n)) {
            return Err(Error::Invalid("matrices must all be square of the same size".into()));
        }
        let rep = MatrixRep { g, n, images };
        for i in 0..rep.g.dim() {
            for j in i + 1..rep.g.dim() {
                let lhs = rep.of_lie(rep.g.bracket_basis(i, j));
                let rhs = mat_sub(
                    &mat_mul(&rep.images[i], &rep.images[j]),
                    &mat_mul(&rep.images[j], &rep.images[i]),
                );
                if lhs != rhs {
                    let l = rep.g.labels();
                    return Err(Error::BracketViolation(l[i].clone(), l[j].clone()));
                }
            }
        }
        Ok(rep)
    }

    pub fn trivial(g: &LieAlgebra) -> Self {
        MatrixRep {
            g: g.clone(),
            n: 1,
            images: vec![zero_mat(1, 1); g.dim()],
        }
    }

    /// One-dimensional representation `b_i ↦ λ_i`; `λ` must kill `[g, g]`.
    pub fn character(g: &LieAlgebra, lambda: &[Scalar]) -> Result<Self> {
        if lambda.len() != g.dim() {
            return Err(Error::Invalid("functional has wrong length".into()));
        }
        let images = lambda.iter().map(|c| vec![vec![c.clone()]]).collect();
        MatrixRep::new(g.clone(), images).map_err(|e| match e {
            Error::BracketViolation(..) => Error::NotACharacter,
            other => other,
        })
    }

    pub fn adjoint(g: &LieAlgebra) -> Self {
        let images = (0..g.dim()).map(|i| g.ad_matrix(&g.basis_vec(i))).collect();
        MatrixRep {
            g: g.clone(),
            n: g.dim(),
            images,
        }
    }

    /// Defining representation of the catalog `sl2` or `sl3`.
    pub fn sl_defining(n: usize) -> Result<Self> {
        let (_, mats) = sl_matrices(n).ok_or_else(|| Error::UnsupportedType(format!("sl{n}")))?;
        let g = catalog_algebra(&format!("sl{n}"))?;
        MatrixRep::new(g, mats)
    }

    /// The `(k+1)`-dimensional simple module of the catalog `sl2` (basis `e, h, f`).
    pub fn sl2_irreducible(k: usize) -> Self {
        let g = catalog_algebra("sl2").expect("catalog sl2");
        let n = k + 1;
        let (mut e, mut h, mut f) = (zero_mat(n, n), zero_mat(n, n), zero_mat(n, n));
        for j in 0..n {
            h[j][j] = int(k as i64 - 2 * j as i64);
            if j + 1 < n {
                f[j + 1][j] = int(1);
            }
            if j > 0 {
                e[j - 1][j] = int((j * (k - j + 1)) as i64);
            }
        }
        MatrixRep::new(g, vec![e, h, f]).expect("standard sl2 module")
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[Matrix] {
        &self.images
    }

    /// Image of a Lie algebra element given in coordinates.
    pub fn of_lie(&self, x: &[Scalar]) -> Matrix {
        let mut acc = zero_mat(self.n, self.n);
        for (c, m) in x.iter().zip(&self.images) {
            if !c.is_zero() {
                acc = mat_add(&acc, &mat_scale(c, m));
            }
        }
        acc
    }

    /// Image of an element of `U(g)`.
    pub fn of_element(&self, u: &UElement) -> Matrix {
        let mut acc = zero_mat(self.n, self.n);
        for (m, c) in u.terms() {
            let mut p = identity(self.n);
            for i in m.word() {
                p = mat_mul(&p, &self.images[i]);
            }
            acc = mat_add(&acc, &mat_scale(c, &p));
        }
        acc
    }

    /// Contragredient: `b ↦ -ρ(b)ᵀ`.
    pub fn dual(&self) -> Self {
        let images = self
            .images
            .iter()
            .map(|m| mat_scale(&int(-1), &transpose(m, self.n)))
            .collect();
        MatrixRep {
            g: self.g.clone(),
            n: self.n,
            images,
        }
    }

    pub fn tensor(&self, other: &MatrixRep) -> Result<Self> {
        if self.g != other.g {
            return Err(Error::Invalid("tensor factors over different algebras".into()));
        }
        let (ia, ib) = (identity(self.n), identity(other.n));
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| mat_add(&kron(a, &ib), &kron(&ia, b)))
            .collect();
        Ok(MatrixRep {
            g: self.g.clone(),
            n: self.n * other.n,
            images,
        })
    }

    pub fn direct_sum(parts: &[MatrixRep]) -> Result<Self> {
        let first = parts.first().ok_or_else(|| Error::Invalid("empty direct sum".into()))?;
        if parts.iter().any(|p| p.g != first.g) {
            return Err(Error::Invalid("summands over different algebras".into()));
        }
        let n: usize = parts.iter().map(|p| p.n).sum();
        let images = (0..first.g.dim())
            .map(|i| {
                let mut m = zero_mat(n, n);
                let mut off = 0;
                for p in parts {
                    for r in 0..p.n {
                        for c in 0..p.n {
                            m[off + r][off + c] = p.images[i][r][c].clone();
                        }
                    }
                    off += p.n;
                }
                m
            })
            .collect();
        Ok(MatrixRep {
            g: first.g.clone(),
            n,
            images,
        })
    }

    /// Restriction to `h`, as a representation of `g.subalgebra(h)`.
    pub fn restrict(&self, h: &VecSpace) -> Result<Self> {
        let sub = self.g.subalgebra(h)?;
        let images = h.basis().iter().map(|r| self.of_lie(r)).collect();
        Ok(MatrixRep {
            g: sub,
            n: self.n,
            images,
        })
    }

    /// Whether every basis element acts by zero.
    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(is_zero_mat)
    }

    /// Values `λ(b_i)` for a one-dimensional representation.
    pub fn character_values(&self) -> Option<Vec<Scalar>> {
        (self.n == 1).then(|| self.images.iter().map(|m| m[0][0].clone()).collect())
    }

    /// `ρ(x) v` for `x ∈ g`.
    pub fn apply_lie(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.n];
        for (c, m) in x.iter().zip(&self.images) {
            if c.is_zero() {
                continue;
            }
            for (r, row) in m.iter().enumerate() {
                let mut s = Scalar::zero();
                for (a, b) in row.iter().zip(v) {
                    s += a * b;
                }
                out[r] += c * s;
            }
        }
        out
    }
}

impl UModule for MatrixRep {
    fn algebra(&self) -> &LieAlgebra {
        &self.g
    }

    fn act_basis(&self, i: usize, key: &Key) -> Result<ModVec> {
        let col = key[0] as usize;
        let mut out = ModVec::new();
        for r in 0..self.n {
            let c = &self.images[i][r][col];
            if !c.is_zero() {
                out.insert(vec![r as u32], c.clone());
            }
        }
        Ok(out)
    }

    fn basis_to_level(&self, _level: usize) -> Vec<Key> {
        (0..self.n as u32).map(|i| vec![i]).collect()
    }

    fn level_of(&self, _key: &Key) -> usize {
        0
    }

    fn level_cap(&self) -> Option<usize> {
        None
    }

    fn growth_dim(&self) -> usize {
        0
    }

    fn describe_key(&self, key: &Key) -> String {
        format!("v{}", key[0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog_algebra;
    use crate::scalar::frac;

    #[test]
    fn bracket_relation_enforced() {
        let g = catalog_algebra("heisenberg3").unwrap();
        let bad = vec![zero_mat(1, 1), zero_mat(1, 1), vec![vec![int(1)]]];
        assert!(matches!(
            MatrixRep::new(g.clone(), bad),
            Err(Error::BracketViolation(..))
        ));
        assert!(MatrixRep::new(g, vec![]).is_err());
    }

    #[test]
    fn characters_add_under_tensor() {
        let g = catalog_algebra("aff1").unwrap();
        let l = MatrixRep::character(&g, &[frac(1, 2), int(0)]).unwrap();
        let m = MatrixRep::character(&g, &[int(3), int(0)]).unwrap();
        let lm = l.tensor(&m).unwrap();
        assert_eq!(lm.character_values().unwrap(), vec![frac(7, 2), int(0)]);
        assert_eq!(l.dual().character_values().unwrap(), vec![frac(-1, 2), int(0)]);
        assert!(matches!(
            MatrixRep::character(&g, &[int(0), int(1)]),
            Err(Error::NotACharacter)
        ));
    }

    #[test]
    fn dual_is_involution_and_trivial_is_unit() {
        let r = MatrixRep::sl_defining(2).unwrap();
        assert_eq!(r.dual().dual(), r);
        let t = MatrixRep::trivial(r.algebra());
        assert_eq!(t.tensor(&r).unwrap(), r);
    }

    #[test]
    fn restrict_to_center() {
        let g = catalog_algebra("heisenberg3").unwrap();
        let mut x = zero_mat(3, 3);
        x[0][1] = int(1);
        let mut y = zero_mat(3, 3);
        y[1][2] = int(1);
        let mut z = zero_mat(3, 3);
        z[0][2] = int(1);
        let r = MatrixRep::new(g.clone(), vec![x, y, z]).unwrap();
        let zspan = VecSpace::span(3, vec![g.basis_vec(2)]);
        assert_eq!(r.restrict(&zspan).unwrap().dim(), 3);
        let xy = VecSpace::span(3, vec![g.basis_vec(0), g.basis_vec(1)]);
        assert!(matches!(r.restrict(&xy), Err(Error::NotASubalgebra)));
    }

    #[test]
    fn sl2_irreducibles_validate() {
        for k in 0..5 {
            assert_eq!(MatrixRep::sl2_irreducible(k).dim(), k + 1);
        }
    }
}
