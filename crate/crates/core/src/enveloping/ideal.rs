use std::collections::HashMap;

use num_traits::Zero;

use super::{filtration_basis, Enveloping, Monomial, UElement};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, unit_vec, zero_vec, VecSpace, Vector};
use crate::scalar::Scalar;

/// Coordinates on `U_{≤d}`, highest monomial first so that echelon pivots
/// land on leading monomials.
#[derive(Clone, Debug)]
pub struct FiltrationCoords {
    nvars: usize,
    degree: u32,
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl FiltrationCoords {
    pub fn new(nvars: usize, degree: u32) -> Self {
        let mut monos = filtration_basis(nvars, degree);
        monos.sort_by(|a, b| b.cmp(a));
        let index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        FiltrationCoords {
            nvars,
            degree,
            monos,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn to_vector(&self, u: &UElement) -> Result<Vector> {
        let mut v = zero_vec(self.len());
        for (m, c) in u.terms() {
            let i = self.index_of(m).ok_or(Error::DegreeTooSmall {
                requested: m.degree(),
                available: self.degree,
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn to_element(&self, v: &[Scalar]) -> UElement {
        let mut u = UElement::zero(self.nvars);
        for (m, c) in self.monos.iter().zip(v) {
            u.add_term(m.clone(), c.clone());
        }
        u
    }
}

/// `I ∩ U_{≤d}` for a two-sided ideal `I`, kept in canonical echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedIdeal {
    nvars: usize,
    degree: u32,
    space: VecSpace,
    /// Whether the truncation is known to equal the true `I ∩ U_{≤d}`.
    pub certified: bool,
    /// Module level used to compute the ideal, when it came from a kernel.
    pub probe_level: Option<usize>,
}

impl TruncatedIdeal {
    pub fn from_space(nvars: usize, degree: u32, space: VecSpace) -> Self {
        debug_assert_eq!(space.ambient_dim(), FiltrationCoords::new(nvars, degree).len());
        TruncatedIdeal {
            nvars,
            degree,
            space,
            certified: true,
            probe_level: None,
        }
    }

    pub fn from_elements(nvars: usize, degree: u32, elems: &[UElement]) -> Result<Self> {
        let coords = FiltrationCoords::new(nvars, degree);
        let vecs = elems.iter().map(|u| coords.to_vector(u)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_space(nvars, degree, VecSpace::span(coords.len(), vecs)))
    }

    pub fn zero(nvars: usize, degree: u32) -> Self {
        let n = FiltrationCoords::new(nvars, degree).len();
        Self::from_space(nvars, degree, VecSpace::zero(n))
    }

    pub fn full(nvars: usize, degree: u32) -> Self {
        let n = FiltrationCoords::new(nvars, degree).len();
        Self::from_space(nvars, degree, VecSpace::full(n))
    }

    /// Kernel of the counit.
    pub fn augmentation(nvars: usize, degree: u32) -> Self {
        let n = FiltrationCoords::new(nvars, degree).len();
        Self::from_space(nvars, degree, VecSpace::span(n, (0..n - 1).map(|i| unit_vec(n, i))))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn codim(&self) -> usize {
        self.space.ambient_dim() - self.space.dim()
    }

    pub fn space(&self) -> &VecSpace {
        &self.space
    }

    pub fn coords(&self) -> FiltrationCoords {
        FiltrationCoords::new(self.nvars, self.degree)
    }

    /// Echelon basis, each element led by a distinct monomial.
    pub fn basis(&self) -> Vec<UElement> {
        let c = self.coords();
        self.space.basis().iter().map(|v| c.to_element(v)).collect()
    }

    /// Membership; elements above the truncation degree are rejected.
    pub fn contains(&self, u: &UElement) -> bool {
        match self.coords().to_vector(u) {
            Ok(v) => self.space.contains(&v),
            Err(_) => false,
        }
    }

    /// `I ∩ U_{≤d'}` for `d' ≤ d`.
    pub fn truncate(&self, d: u32) -> Result<Self> {
        if d > self.degree {
            return Err(Error::DegreeTooSmall {
                requested: d,
                available: self.degree,
            });
        }
        let small = FiltrationCoords::new(self.nvars, d).len();
        let skip = self.space.ambient_dim() - small;
        let rows = self
            .space
            .basis()
            .iter()
            .zip(self.space.pivots())
            .filter(|(_, &p)| p >= skip)
            .map(|(r, _)| r[skip..].to_vec());
        Ok(TruncatedIdeal {
            nvars: self.nvars,
            degree: d,
            space: VecSpace::span(small, rows),
            certified: self.certified,
            probe_level: self.probe_level,
        })
    }

    /// Inclusion compared at the smaller of the two degrees.
    pub fn is_subset_of(&self, other: &TruncatedIdeal) -> bool {
        let d = self.degree.min(other.degree);
        let a = self.truncate(d).expect("d within range");
        let b = other.truncate(d).expect("d within range");
        a.space.is_subspace_of(&b.space)
    }

    /// Equality of the truncated spaces, ignoring certification metadata.
    pub fn same_space(&self, other: &TruncatedIdeal) -> bool {
        self.nvars == other.nvars && self.degree == other.degree && self.space == other.space
    }

    pub fn intersection(&self, other: &TruncatedIdeal) -> Result<Self> {
        let d = self.degree.min(other.degree);
        let a = self.truncate(d)?;
        let b = other.truncate(d)?;
        let mut r = Self::from_space(self.nvars, d, a.space.intersection(&b.space));
        r.certified = a.certified && b.certified;
        Ok(r)
    }

    /// Image of the basis under a filtration-preserving linear map.
    pub fn map<F: Fn(&UElement) -> UElement>(&self, f: F) -> Result<Self> {
        let imgs: Vec<UElement> = self.basis().iter().map(f).collect();
        let mut r = Self::from_elements(self.nvars, self.degree, &imgs)?;
        r.certified = self.certified;
        r.probe_level = self.probe_level;
        Ok(r)
    }

    pub fn format(&self, env: &Enveloping) -> Vec<String> {
        self.basis().iter().map(|u| env.format(u)).collect()
    }
}

/// `V ∧ W ∩ U_{≤d}`: kernel of `U_{≤d} → (U/V) ⊗ (U/W)` through the coproduct.
pub fn wedge_truncated(env: &Enveloping, v: &TruncatedIdeal, w: &TruncatedIdeal, d: u32) -> Result<TruncatedIdeal> {
    let n = env.dim();
    if v.nvars != n || w.nvars != n {
        return Err(Error::Invalid("ideals live in different enveloping algebras".into()));
    }
    let available = v.degree.min(w.degree);
    if d > available {
        return Err(Error::DegreeTooSmall {
            requested: d,
            available,
        });
    }
    let vt = v.truncate(d)?;
    let wt = w.truncate(d)?;
    let coords = FiltrationCoords::new(n, d);
    let big = coords.len();
    let quotient_map = |s: &VecSpace| -> Vec<Vector> {
        let keep = s.non_pivots();
        (0..big)
            .map(|i| {
                let r = s.reduce(&unit_vec(big, i));
                keep.iter().map(|&k| r[k].clone()).collect()
            })
            .collect()
    };
    let qv = quotient_map(&vt.space);
    let qw = quotient_map(&wt.space);
    let (nv, nw) = (big - vt.dim(), big - wt.dim());
    // columns indexed by monomials, rows by (U/V) ⊗ (U/W) coordinates
    let mut mat = vec![zero_vec(big); nv * nw];
    for (col, m) in coords.monomials().iter().enumerate() {
        let delta = env.coproduct(&UElement::monomial(m.clone(), Scalar::from_integer(1.into())));
        for ((a, b), c) in &delta {
            let ia = coords.index_of(a).expect("Δ preserves degree");
            let ib = coords.index_of(b).expect("Δ preserves degree");
            for (x, ax) in qv[ia].iter().enumerate() {
                if ax.is_zero() {
                    continue;
                }
                for (y, by) in qw[ib].iter().enumerate() {
                    if !by.is_zero() {
                        mat[x * nw + y][col] += c * ax * by;
                    }
                }
            }
        }
    }
    let mut out = TruncatedIdeal::from_space(n, d, nullspace(&mat, big));
    out.certified = v.certified && w.certified;
    out.probe_level = match (v.probe_level, w.probe_level) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog_algebra;

    #[test]
    fn coords_put_leading_monomial_first() {
        let c = FiltrationCoords::new(3, 1);
        assert_eq!(c.monomials()[0], Monomial::generator(3, 0));
        assert!(c.monomials()[3].is_one());
        let env = Enveloping::new(catalog_algebra("heisenberg3").unwrap());
        let i = TruncatedIdeal::from_elements(3, 1, &[env.parse("z - 1").unwrap()]).unwrap();
        assert_eq!(i.format(&env), vec!["1 * z^1 + -1"]);
    }

    #[test]
    fn augmentation_squared_abelian1() {
        let env = Enveloping::new(catalog_algebra("abelian(1)").unwrap());
        let aug = TruncatedIdeal::augmentation(1, 2);
        let w = wedge_truncated(&env, &aug, &aug, 2).unwrap();
        // the trivial module tensored with itself is trivial
        assert!(w.same_space(&aug));
    }

    #[test]
    fn wedge_with_zero_ideal() {
        let env = Enveloping::new(catalog_algebra("heisenberg3").unwrap());
        let aug = TruncatedIdeal::augmentation(3, 2);
        let z = TruncatedIdeal::zero(3, 2);
        assert_eq!(wedge_truncated(&env, &aug, &z, 2).unwrap().dim(), 0);
        assert!(matches!(
            wedge_truncated(&env, &aug, &z, 3),
            Err(Error::DegreeTooSmall { .. })
        ));
    }

    #[test]
    fn truncate_matches_direct_construction() {
        let env = Enveloping::new(catalog_algebra("heisenberg3").unwrap());
        let gens = [env.parse("z - 1").unwrap(), env.parse("x^2 + y").unwrap()];
        let big = TruncatedIdeal::from_elements(3, 3, &gens).unwrap();
        let small = big.truncate(1).unwrap();
        let direct = TruncatedIdeal::from_elements(3, 1, &gens[..1]).unwrap();
        assert!(small.same_space(&direct));
    }
}
