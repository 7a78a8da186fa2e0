//! Orbit-method pipeline for solvable algebras: stabilizers, Vergne
//! polarizations, Dixmier ideals `I(f)` and the relation checks that feed
//! the chain group.

mod flag;
mod relations;

pub use flag::{char_poly, ideal_flag, rational_eigenvalues, FlagOrder};
pub use relations::{
    check_relation, push_pull_check, twist_functional, PushPullReport, Relation, RelationReport, Truncation,
};

use num_traits::Zero;

use crate::enveloping::{Enveloping, TruncatedIdeal};
use crate::error::{Error, Result};
use crate::lie::{center, LieAlgebra};
use crate::linalg::{dot, nullspace, Matrix, VecSpace, Vector};
use crate::rep::{kernel_truncated, InducedModule, Inducing, MatrixRep, ModuleHandle};
use crate::scalar::{format_scalar, Scalar};

/// `{x ∈ s : f([x, y]) = 0 for all y ∈ s}`.
pub fn stabilizer_in(g: &LieAlgebra, s: &VecSpace, f: &[Scalar]) -> VecSpace {
    let b = s.basis();
    let gram: Matrix = b
        .iter()
        .map(|x| b.iter().map(|y| dot(f, &g.bracket(x, y))).collect())
        .collect();
    let ker = nullspace(&gram, b.len());
    VecSpace::span(g.dim(), ker.basis().iter().map(|c| s.combine(c)))
}

/// Radical `g^f` of the form `B_f(x, y) = f([x, y])`.
pub fn stabilizer(g: &LieAlgebra, f: &[Scalar]) -> VecSpace {
    stabilizer_in(g, &VecSpace::full(g.dim()), f)
}

/// Whether `f` kills `[h, h]`.
pub fn is_subordinate(g: &LieAlgebra, h: &VecSpace, f: &[Scalar]) -> bool {
    let b = h.basis();
    b.iter()
        .enumerate()
        .all(|(i, x)| b[i + 1..].iter().all(|y| dot(f, &g.bracket(x, y)).is_zero()))
}

/// A polarization `h` of `f` with the flag it was built from.
#[derive(Clone, Debug, PartialEq)]
pub struct Polarization {
    pub f: Vector,
    pub h: VecSpace,
    pub flag: Vec<VecSpace>,
}

impl Polarization {
    /// Re-checks subalgebra, subordinate and dimension conditions.
    pub fn verify(&self, g: &LieAlgebra) -> bool {
        let gf = stabilizer(g, &self.f);
        g.is_subalgebra(&self.h) && is_subordinate(g, &self.h, &self.f) && 2 * self.h.dim() == g.dim() + gf.dim()
    }
}

/// Vergne's polarization `Σ_i g_i^{f|g_i}` along an ideal flag.
pub fn vergne_polarization(g: &LieAlgebra, f: &[Scalar], order: FlagOrder) -> Result<Polarization> {
    if f.len() != g.dim() {
        return Err(Error::Invalid("functional has wrong length".into()));
    }
    let flag = ideal_flag(g, order)?;
    let mut h = VecSpace::zero(g.dim());
    for gi in &flag[1..] {
        h = h.sum(&stabilizer_in(g, gi, f));
    }
    let pol = Polarization { f: f.to_vec(), h, flag };
    if !pol.verify(g) {
        return Err(Error::CheckFailed(format!(
            "Vergne construction produced a non-polarization {}",
            g.format_subspace(&pol.h)
        )));
    }
    Ok(pol)
}

/// `I(f) ∩ U_{≤d}` with the polarization and module level used.
#[derive(Clone, Debug)]
pub struct DixmierIdeal {
    pub polarization: Polarization,
    pub ideal: TruncatedIdeal,
    pub level: usize,
}

/// The twisted induced module `Ind~_h^g(f)` from Vergne's polarization.
pub fn dixmier_module(
    g: &LieAlgebra,
    f: &[Scalar],
    level: usize,
    order: FlagOrder,
) -> Result<(Polarization, InducedModule)> {
    let pol = vergne_polarization(g, f, order)?;
    let m = InducedModule::from_functional(g, &pol.h, f, true, level)?;
    Ok((pol, m))
}

/// `I(f) = ker Ind~_h^g(f)` truncated at degree `d`, module level `level`.
pub fn dixmier_ideal(
    env: &Enveloping,
    f: &[Scalar],
    d: u32,
    level: usize,
    strict: bool,
    order: FlagOrder,
) -> Result<DixmierIdeal> {
    let (polarization, m) = dixmier_module(env.algebra(), f, level, order)?;
    let ideal = kernel_truncated(env, &m, d, strict)?;
    Ok(DixmierIdeal {
        polarization,
        ideal,
        level,
    })
}

/// Smallest level at which kernels of degree `d` of modules induced over `g`
/// are certified.
pub fn certified_level(g: &LieAlgebra, d: u32) -> usize {
    d as usize * (g.dim() + 1)
}

/// A module on which the center acts through `f0` (coordinates on the
/// echelon basis of the center).
pub fn can_surjectivity_witness(g: &LieAlgebra, f0: &[Scalar], level: usize) -> Result<ModuleHandle> {
    let z = center(g);
    if f0.len() != z.dim() {
        return Err(Error::Invalid(format!(
            "central functional needs {} values, got {}",
            z.dim(),
            f0.len()
        )));
    }
    if z.is_zero() {
        return Ok(MatrixRep::trivial(g).into());
    }
    if z.dim() == g.dim() {
        // coordinates on the echelon basis of the full space are plain coordinates
        return Ok(MatrixRep::character(g, f0)?.into());
    }
    Ok(InducedModule::new(g, &z, Inducing::Functional(f0.to_vec()), false, level)?.into())
}

/// `(c_1, ..., c_n)`.
pub fn format_functional(f: &[Scalar]) -> String {
    let parts: Vec<String> = f.iter().map(format_scalar).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog_algebra;
    use crate::rep::{central_character, UModule};
    use crate::scalar::int;

    fn ints(v: &[i64]) -> Vector {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn stabilizer_examples() {
        let h3 = catalog_algebra("heisenberg3").unwrap();
        assert_eq!(h3.format_subspace(&stabilizer(&h3, &ints(&[0, 0, 1]))), "span{z}");
        assert_eq!(stabilizer(&h3, &ints(&[0, 0, 0])).dim(), 3);
        let aff = catalog_algebra("aff1").unwrap();
        assert!(stabilizer(&aff, &ints(&[0, 1])).is_zero());
    }

    #[test]
    fn polarization_examples() {
        let h3 = catalog_algebra("heisenberg3").unwrap();
        let p = vergne_polarization(&h3, &ints(&[0, 0, 1]), FlagOrder::Reverse).unwrap();
        assert_eq!(h3.format_subspace(&p.h), "span{y, z}");
        assert_eq!(
            vergne_polarization(&h3, &ints(&[0, 0, 0]), FlagOrder::Reverse)
                .unwrap()
                .h
                .dim(),
            3
        );
        let ab = catalog_algebra("abelian(3)").unwrap();
        assert_eq!(
            vergne_polarization(&ab, &ints(&[1, 2, 3]), FlagOrder::Forward)
                .unwrap()
                .h
                .dim(),
            3
        );
        let sl2 = catalog_algebra("sl2").unwrap();
        assert!(matches!(
            vergne_polarization(&sl2, &ints(&[0, 1, 0]), FlagOrder::Forward),
            Err(Error::NoIdealFlag)
        ));
    }

    #[test]
    fn dixmier_examples() {
        let h3 = catalog_algebra("heisenberg3").unwrap();
        let env = Enveloping::new(h3.clone());
        let i = dixmier_ideal(&env, &ints(&[0, 0, 1]), 1, 6, true, FlagOrder::Reverse).unwrap();
        assert!(i.ideal.certified);
        assert_eq!(i.ideal.format(&env), vec!["1 * z^1 + -1"]);

        let i = dixmier_ideal(&env, &ints(&[0, 1, 0]), 1, 6, true, FlagOrder::Reverse).unwrap();
        // the character f on the abelianization: x, y - 1, z all annihilate
        let expected = TruncatedIdeal::from_elements(
            3,
            1,
            &[
                env.parse("x").unwrap(),
                env.parse("y - 1").unwrap(),
                env.parse("z").unwrap(),
            ],
        )
        .unwrap();
        assert!(i.ideal.same_space(&expected));

        let aff = catalog_algebra("aff1").unwrap();
        let env = Enveloping::new(aff.clone());
        let i = dixmier_ideal(&env, &ints(&[0, 1]), 2, 6, true, FlagOrder::Reverse).unwrap();
        assert_eq!(i.ideal.dim(), 0);
        assert!(i.ideal.certified);
    }

    #[test]
    fn surjectivity_witnesses() {
        let h3 = catalog_algebra("heisenberg3").unwrap();
        let m = can_surjectivity_witness(&h3, &ints(&[7]), 3).unwrap();
        assert_eq!(central_character(&m).unwrap(), ints(&[7]));
        let ab = catalog_algebra("abelian(2)").unwrap();
        let m = can_surjectivity_witness(&ab, &ints(&[1, -4]), 3).unwrap();
        assert_eq!(m.finite_dim(), Some(1));
        assert_eq!(central_character(&m).unwrap(), ints(&[1, -4]));
        let sl2 = catalog_algebra("sl2").unwrap();
        let m = can_surjectivity_witness(&sl2, &[], 3).unwrap();
        assert!(central_character(&m).unwrap().is_empty());
    }
}
