//! Highest-weight theory for types A1 and A2.
//!
//! Weights are written in fundamental-weight coordinates. `M(λ)` denotes the
//! Verma module whose generator has highest weight `λ - δ`, so the
//! Harish-Chandra character of `M(λ)` is invariant under the linear Weyl
//! action on `λ`. Casimirs use the trace form of the defining
//! representation: for `sl2` this is `Ω = ef + fe + ½h²`.

mod roots;

pub use roots::{root_system, RootSystem, RootType, Weight, WeylElement};

use num_traits::{ToPrimitive, Zero};

use crate::enveloping::{Enveloping, TruncatedIdeal, UElement};
use crate::error::{Error, Result};
use crate::lie::{sl_matrices, LieAlgebra};

use crate::linalg::{inverse, mat_mul, nullspace, trace, unit_vec, Matrix, VecSpace, Vector};
use crate::rep::{
    act_element, act_gen, basis_modvec, kernel_truncated, InducedModule, Inducing, Key, MatrixRep, ModVec,
    ModuleHandle, UModule,
};
use crate::scalar::{int, Scalar};

/// `M(λ)`, truncated at `level` negative root vectors.
#[derive(Clone, Debug)]
pub struct VermaModule {
    rs: RootSystem,
    lambda: Weight,
    inner: InducedModule,
}

fn check_weight(rs: &RootSystem, lambda: &[Scalar]) -> Result<()> {
    if lambda.len() != rs.rank() {
        return Err(Error::Invalid(format!(
            "weight for {} needs {} coordinates, got {}",
            rs.ty,
            rs.rank(),
            lambda.len()
        )));
    }
    Ok(())
}

/// The Borel subalgebra spanned by the positive root vectors and the Cartan.
pub fn borel(rs: &RootSystem) -> VecSpace {
    let n = rs.algebra().dim();
    VecSpace::span(n, rs.e_idx.iter().chain(&rs.h_idx).map(|&i| unit_vec(n, i)))
}

pub fn verma(rs: &RootSystem, lambda: &[Scalar], level: usize) -> Result<VermaModule> {
    check_weight(rs, lambda)?;
    let g = rs.algebra();
    let b = borel(rs);
    // the echelon basis of b is the unit vectors in index order
    let values: Vector = b
        .pivots()
        .iter()
        .map(|p| match rs.h_idx.iter().position(|h| h == p) {
            Some(i) => &lambda[i] - &rs.delta[i],
            None => int(0),
        })
        .collect();
    let inner = InducedModule::new(g, &b, Inducing::Functional(values), false, level)?;
    Ok(VermaModule {
        rs: rs.clone(),
        lambda: lambda.to_vec(),
        inner,
    })
}

impl VermaModule {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn lambda(&self) -> &[Scalar] {
        &self.lambda
    }

    pub fn level(&self) -> usize {
        self.inner.level()
    }

    pub fn induced(&self) -> &InducedModule {
        &self.inner
    }

    /// The highest-weight generator `1 ⊗ v`.
    pub fn top_key(&self) -> Key {
        self.inner.top_key(0)
    }

    /// `λ - δ`.
    pub fn highest_weight(&self) -> Weight {
        self.lambda.iter().zip(&self.rs.delta).map(|(l, d)| l - d).collect()
    }

    /// h-weight of a basis vector `f^α v`.
    pub fn weight_of(&self, key: &Key) -> Weight {
        let mut w = self.highest_weight();
        for (k, &a) in key[..self.rs.f_idx.len()].iter().enumerate() {
            for (x, r) in w.iter_mut().zip(self.rs.root_weight(&self.rs.positive_roots[k])) {
                *x -= r * int(a as i64);
            }
        }
        w
    }

    /// Height of `(λ - δ) - weight(key)` in simple roots.
    pub fn depth_of(&self, key: &Key) -> usize {
        key[..self.rs.f_idx.len()]
            .iter()
            .zip(&self.rs.positive_roots)
            .map(|(&a, r)| a as usize * r.iter().sum::<i64>() as usize)
            .sum()
    }
}

impl From<VermaModule> for ModuleHandle {
    fn from(m: VermaModule) -> Self {
        m.inner.into()
    }
}

impl UModule for VermaModule {
    fn algebra(&self) -> &LieAlgebra {
        self.inner.algebra()
    }

    fn act_basis(&self, i: usize, key: &Key) -> Result<ModVec> {
        self.inner.act_basis(i, key)
    }

    fn basis_to_level(&self, level: usize) -> Vec<Key> {
        self.inner.basis_to_level(level)
    }

    fn level_of(&self, key: &Key) -> usize {
        self.inner.level_of(key)
    }

    fn level_cap(&self) -> Option<usize> {
        self.inner.level_cap()
    }

    fn growth_dim(&self) -> usize {
        self.inner.growth_dim()
    }

    fn describe_key(&self, key: &Key) -> String {
        self.inner.describe_key(key)
    }
}

/// Casimir element for the trace form of the defining representation.
pub fn casimir(env: &Enveloping, rs: &RootSystem) -> Result<UElement> {
    let n = rs.algebra().dim();
    let (_, mats) = sl_matrices(rs.rank() + 1).expect("A1 and A2 have defining matrices");
    let gram: Matrix = (0..n)
        .map(|i| (0..n).map(|j| trace(&mat_mul(&mats[i], &mats[j]))).collect())
        .collect();
    let inv = inverse(&gram).ok_or_else(|| Error::Invalid("degenerate trace form".into()))?;
    let mut omega = env.zero();
    for i in 0..n {
        for j in 0..n {
            if !inv[i][j].is_zero() {
                omega.add_scaled(&inv[i][j], &env.normalize(&[i, j], int(1)));
            }
        }
    }
    Ok(omega)
}

/// Scalar by which the Casimir acts on `M(λ)`, read off the generator.
pub fn central_character_hc(rs: &RootSystem, lambda: &[Scalar]) -> Result<Scalar> {
    let m = verma(rs, lambda, 2)?;
    let env = Enveloping::new(rs.algebra().clone());
    let omega = casimir(&env, rs)?;
    let top = m.top_key();
    let image = act_element(&m, &omega, &basis_modvec(top.clone()))?;
    if image.keys().any(|k| *k != top) {
        return Err(Error::NotScalarAction("Casimir on the highest-weight vector".into()));
    }
    Ok(image.get(&top).cloned().unwrap_or_else(|| int(0)))
}

/// `δ`-shifted product relation `g_λ g_μ = g_{λ+μ-δ}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftedProduct {
    pub left: Weight,
    pub right: Weight,
    pub product: Weight,
}

#[derive(Clone, Debug)]
pub struct HwWitness {
    /// Key of `v_λ ⊗ v_μ` in the tensor module.
    pub key: Key,
    pub weight: Weight,
    pub expected: Weight,
    /// `e_i · (v_λ ⊗ v_μ) = 0` for every positive root vector.
    pub annihilated: bool,
    pub relation: ShiftedProduct,
}

impl HwWitness {
    pub fn holds(&self) -> bool {
        self.annihilated && self.weight == self.expected
    }
}

/// Checks that `v_λ ⊗ v_μ` is a highest-weight vector of weight `λ + μ - 2δ`.
pub fn tensor_hw_vector(rs: &RootSystem, lambda: &[Scalar], mu: &[Scalar], level: usize) -> Result<HwWitness> {
    let a = verma(rs, lambda, level.max(1))?;
    let b = verma(rs, mu, level.max(1))?;
    let (ta, tb) = (a.top_key(), b.top_key());
    let mut key = vec![ta.len() as u32];
    key.extend_from_slice(&ta);
    key.extend_from_slice(&tb);
    let t = ModuleHandle::tensor(a, b)?;
    let v = basis_modvec(key.clone());

    let mut weight = Vec::with_capacity(rs.rank());
    for &h in &rs.h_idx {
        let img = act_gen(&t, h, &v)?;
        let c = img.get(&key).cloned().unwrap_or_else(|| int(0));
        if img.len() > usize::from(!c.is_zero()) {
            return Err(Error::NotScalarAction(format!(
                "h{} on the tensor top vector",
                weight.len() + 1
            )));
        }
        weight.push(c);
    }
    let mut annihilated = true;
    for &e in &rs.e_idx {
        annihilated &= act_gen(&t, e, &v)?.is_empty();
    }
    let shifted = |x: &[Scalar], k: i64| -> Weight { x.iter().zip(&rs.delta).map(|(a, d)| a - d * int(k)).collect() };
    let sum: Weight = lambda.iter().zip(mu).map(|(a, b)| a + b).collect();
    Ok(HwWitness {
        key,
        weight,
        expected: shifted(&sum, 2),
        annihilated,
        relation: ShiftedProduct {
            left: lambda.to_vec(),
            right: mu.to_vec(),
            product: shifted(&sum, 1),
        },
    })
}

/// Level at which a degree-`d` Verma kernel is certified.
pub fn verma_certified_level(rs: &RootSystem, d: u32) -> usize {
    d as usize * (rs.algebra().dim() + 1)
}

/// `Ann M(λ) ∩ U_{≤d}`.
pub fn minimal_primitive_truncated(
    env: &Enveloping,
    rs: &RootSystem,
    lambda: &[Scalar],
    d: u32,
    level: usize,
    strict: bool,
) -> Result<TruncatedIdeal> {
    let m = verma(rs, lambda, level)?;
    kernel_truncated(env, &m, d, strict)
}

/// `(Ω - c(λ)) · U_{≤d-2}`, the degree-`d` slice of the ideal generated by
/// the shifted Casimir.
pub fn casimir_slice(env: &Enveloping, rs: &RootSystem, lambda: &[Scalar], d: u32) -> Result<TruncatedIdeal> {
    let c = central_character_hc(rs, lambda)?;
    let gen = casimir(env, rs)?.sub(&UElement::scalar(env.dim(), c));
    let elems: Vec<UElement> = if d < 2 {
        Vec::new()
    } else {
        env.filtration_basis(d - 2)
            .into_iter()
            .map(|m| env.mul(&gen, &UElement::monomial(m, int(1))))
            .collect()
    };
    TruncatedIdeal::from_elements(env.dim(), d, &elems)
}

/// Height of `ν - w₀ν`, the depth of the lowest weight of the simple module
/// of highest weight `ν`.
fn lowest_depth(rs: &RootSystem, nu: &[Scalar]) -> usize {
    let w0 = rs.longest_element();
    let low = rs.apply(w0, nu);
    let diff: Vector = nu.iter().zip(&low).map(|(a, b)| a - b).collect();
    let cartan: Matrix = rs.cartan.iter().map(|r| r.iter().map(|&c| int(c)).collect()).collect();
    let inv = inverse(&cartan).expect("Cartan matrix is invertible");
    // weight = Σ c_i α_i with α_i the i-th row of the Cartan matrix
    let height: Scalar = (0..rs.rank())
        .map(|i| (0..rs.rank()).map(|j| &diff[j] * &inv[j][i]).sum::<Scalar>())
        .sum();
    height
        .to_integer()
        .to_usize()
        .expect("dominant weights have non-negative height")
}

/// The finite-dimensional simple quotient of `M(λ)`, for `λ - δ` dominant integral.
///
/// Computed depth by depth from the top: a vector of depth `k` lies in the
/// maximal submodule exactly when every simple `e_i` sends it into the
/// maximal submodule at depth `k - 1`.
pub fn simple_quotient(rs: &RootSystem, lambda: &[Scalar]) -> Result<MatrixRep> {
    check_weight(rs, lambda)?;
    if !rs.is_dominant_integral_shifted(lambda) {
        return Err(Error::NotDominantIntegral);
    }
    let nu: Weight = lambda.iter().zip(&rs.delta).map(|(l, d)| l - d).collect();
    let top = lowest_depth(rs, &nu);
    let m = verma(rs, lambda, top + 2)?;

    let mut layers: Vec<Vec<Key>> = vec![Vec::new(); top + 3];
    for key in m.basis_to_level(top + 2) {
        let d = m.depth_of(&key);
        if d < layers.len() {
            layers[d].push(key);
        }
    }
    let index = |d: usize, k: &Key| layers[d].iter().position(|x| x == k);
    let simple = &rs.e_idx[..rs.rank()];

    let mut radical: Vec<VecSpace> = vec![VecSpace::zero(1)];
    for d in 1..=top + 1 {
        let below = &radical[d - 1];
        let width = layers[d - 1].len();
        let mut cols = Vec::with_capacity(layers[d].len());
        for key in &layers[d] {
            let mut col = Vec::with_capacity(width * simple.len());
            for &e in simple {
                let mut v = vec![int(0); width];
                for (k, c) in m.act_basis(e, key)? {
                    v[index(d - 1, &k).expect("e raises depth by one")] = c;
                }
                col.extend(below.reduce(&v));
            }
            cols.push(col);
        }
        let rows: Matrix = (0..width * simple.len())
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect();
        radical.push(nullspace(&rows, layers[d].len()));
    }
    if radical[top + 1].dim() != layers[top + 1].len() {
        return Err(Error::Invalid(
            "simple quotient does not terminate at the lowest weight".into(),
        ));
    }

    let mut qbasis: Vec<(usize, usize)> = Vec::new();
    for d in 0..=top {
        qbasis.extend(radical[d].non_pivots().into_iter().map(|i| (d, i)));
    }
    let dim = qbasis.len();
    let g = rs.algebra();
    let mut images = Vec::with_capacity(g.dim());
    for x in 0..g.dim() {
        let mut mat = vec![vec![int(0); dim]; dim];
        for (col, &(d, i)) in qbasis.iter().enumerate() {
            let img = m.act_basis(x, &layers[d][i])?;
            let mut by_depth: Vec<Option<Vector>> = vec![None; top + 1];
            for (k, c) in img {
                let kd = m.depth_of(&k);
                if kd > top {
                    continue;
                }
                let slot = by_depth[kd].get_or_insert_with(|| vec![int(0); layers[kd].len()]);
                slot[index(kd, &k).expect("key within layer")] = c;
            }
            for (kd, v) in by_depth.into_iter().enumerate() {
                let Some(v) = v else { continue };
                let r = radical[kd].reduce(&v);
                for (row, &(qd, qi)) in qbasis.iter().enumerate() {
                    if qd == kd {
                        mat[row][col] = r[qi].clone();
                    }
                }
            }
        }
        images.push(mat);
    }
    let rep = MatrixRep::new(g.clone(), images)?;
    if int(rep.dim() as i64) != rs.weyl_dimension(lambda) {
        return Err(Error::Invalid(format!(
            "quotient has dimension {}, Weyl dimension is {}",
            rep.dim(),
            rs.weyl_dimension(lambda)
        )));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    fn w(xs: &[i64]) -> Weight {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn a1_casimir_values() {
        let rs = root_system(RootType::A1).unwrap();
        assert_eq!(central_character_hc(&rs, &w(&[1])).unwrap(), int(0));
        assert_eq!(central_character_hc(&rs, &w(&[3])).unwrap(), int(4));
        assert_eq!(central_character_hc(&rs, &w(&[-3])).unwrap(), int(4));
        let half = vec![frac(1, 2)];
        assert_eq!(central_character_hc(&rs, &half).unwrap(), frac(-3, 8));
    }

    #[test]
    fn sl2_casimir_form() {
        let rs = root_system(RootType::A1).unwrap();
        let env = Enveloping::new(rs.algebra().clone());
        let omega = casimir(&env, &rs).unwrap();
        assert_eq!(
            env.format(&omega),
            env.format(&env.parse("2*f*e + h + 1/2*h*h").unwrap())
        );
    }

    #[test]
    fn a1_verma_weights() {
        let rs = root_system(RootType::A1).unwrap();
        let m = verma(&rs, &w(&[3]), 4).unwrap();
        for k in 0..=4u32 {
            assert_eq!(m.weight_of(&vec![k, 0]), w(&[2 - 2 * k as i64]));
        }
        // λ = 1: e f v = h v = 0, so f v is singular
        let m = verma(&rs, &w(&[1]), 2).unwrap();
        let fv = act_gen(&m, 2, &basis_modvec(m.top_key())).unwrap();
        assert!(act_gen(&m, 0, &fv).unwrap().is_empty());
    }

    #[test]
    fn tensor_top_vectors() {
        let rs = root_system(RootType::A1).unwrap();
        let wit = tensor_hw_vector(&rs, &w(&[2]), &w(&[3]), 1).unwrap();
        assert!(wit.holds());
        assert_eq!(wit.weight, w(&[3]));
        assert_eq!(wit.relation.product, w(&[4]));

        let rs = root_system(RootType::A2).unwrap();
        let wit = tensor_hw_vector(&rs, &rs.delta, &rs.delta, 1).unwrap();
        assert!(wit.holds());
        assert_eq!(wit.weight, w(&[0, 0]));
    }

    #[test]
    fn a1_primitive_ideal_is_casimir_slice() {
        let rs = root_system(RootType::A1).unwrap();
        let env = Enveloping::new(rs.algebra().clone());
        let level = verma_certified_level(&rs, 2);
        let j1 = minimal_primitive_truncated(&env, &rs, &w(&[1]), 2, level, true).unwrap();
        assert!(j1.certified);
        assert!(j1.same_space(&casimir_slice(&env, &rs, &w(&[1]), 2).unwrap()));
        let j3 = minimal_primitive_truncated(&env, &rs, &w(&[3]), 2, level, true).unwrap();
        let jm3 = minimal_primitive_truncated(&env, &rs, &w(&[-3]), 2, level, true).unwrap();
        assert!(j3.same_space(&jm3));
        assert!(!j1.is_subset_of(&j3) && !j3.is_subset_of(&j1));
    }

    #[test]
    fn simple_quotients() {
        let a1 = root_system(RootType::A1).unwrap();
        assert!(simple_quotient(&a1, &w(&[1])).unwrap().is_trivial());
        assert_eq!(simple_quotient(&a1, &w(&[3])).unwrap().dim(), 3);
        assert_eq!(simple_quotient(&a1, &w(&[0])), Err(Error::NotDominantIntegral));
        let a2 = root_system(RootType::A2).unwrap();
        assert_eq!(simple_quotient(&a2, &w(&[2, 1])).unwrap().dim(), 3);
        assert_eq!(simple_quotient(&a2, &w(&[2, 2])).unwrap().dim(), 8);
        assert_eq!(
            simple_quotient(&a2, &[frac(3, 2), int(1)]),
            Err(Error::NotDominantIntegral)
        );
    }
}
