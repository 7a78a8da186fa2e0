use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_traits::Zero;

use super::{modvec_add, Key, MatrixRep, ModVec, UModule};
use crate::enveloping::{filtration_basis, Enveloping, UElement};
use crate::error::{Error, Result};
use crate::lie::{solve_coords, theta, LieAlgebra};
use crate::linalg::{dot, identity, mat_add, mat_scale, unit_vec, Matrix, VecSpace, Vector};
use crate::scalar::Scalar;

/// The `h`-module being induced.
#[derive(Clone, Debug, PartialEq)]
pub enum Inducing {
    /// Values on the echelon basis of `h`; must kill `[h, h]`.
    Functional(Vector),
    /// Representation of `g.subalgebra(h)`.
    Rep(MatrixRep),
}

/// `U(g) ⊗_{U(h)} W`, truncated at complement-monomial degree `level`.
///
/// Basis keys are `α ++ [w]`: an exponent vector over the complement of `h`
/// (the non-pivot coordinate vectors) followed by a basis index of `W`.
pub struct InducedModule {
    g: LieAlgebra,
    h: VecSpace,
    inducing: Inducing,
    twist: bool,
    level: usize,
    adapted: Enveloping,
    ncomp: usize,
    to_adapted: Vec<Vector>,
    h_action: Vec<Matrix>,
    wdim: usize,
    cache: Mutex<HashMap<(usize, Vec<u32>), UElement>>,
    actions: Mutex<HashMap<(usize, Key), ModVec>>,
}

impl Clone for InducedModule {
    fn clone(&self) -> Self {
        InducedModule::new(&self.g, &self.h, self.inducing.clone(), self.twist, self.level).expect("already validated")
    }
}

impl fmt::Debug for InducedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InducedModule")
            .field("g", &self.g.name())
            .field("h", &self.g.format_subspace(&self.h))
            .field("inducing", &self.inducing)
            .field("twist", &self.twist)
            .field("level", &self.level)
            .finish()
    }
}

impl InducedModule {
    pub fn new(g: &LieAlgebra, h: &VecSpace, inducing: Inducing, twist: bool, level: usize) -> Result<Self> {
        let sub = g.subalgebra(h)?;
        let k = h.dim();
        let base: Vec<Matrix> = match &inducing {
            Inducing::Functional(f) => {
                if f.len() != k {
                    return Err(Error::Invalid(format!(
                        "functional on h needs {k} values, got {}",
                        f.len()
                    )));
                }
                for a in 0..k {
                    for b in a + 1..k {
                        let br = sub.bracket_basis(a, b);
                        if !dot(f, br).is_zero() {
                            return Err(Error::NotSubordinate);
                        }
                    }
                }
                f.iter().map(|c| vec![vec![c.clone()]]).collect()
            }
            Inducing::Rep(w) => {
                if w.algebra().clone().with_name("") != sub.clone().with_name("") {
                    return Err(Error::Invalid(
                        "inducing representation is not over the given subalgebra".into(),
                    ));
                }
                w.images().to_vec()
            }
        };
        let wdim = base.first().map_or(1, Vec::len);
        let h_action = if twist {
            let th = theta(g, h)?;
            base.iter()
                .zip(&th)
                .map(|(m, t)| mat_add(m, &mat_scale(t, &identity(wdim))))
                .collect()
        } else {
            base
        };

        let n = g.dim();
        let comp = h.non_pivots();
        let mut vectors: Vec<Vector> = comp.iter().map(|&c| unit_vec(n, c)).collect();
        vectors.extend(h.basis().iter().cloned());
        let mut labels: Vec<String> = comp.iter().map(|&c| g.labels()[c].clone()).collect();
        labels.extend(sub.labels().iter().cloned());
        let gp = g.change_basis(&format!("{}-adapted", g.name()), &vectors, labels)?;
        let to_adapted = (0..n)
            .map(|i| solve_coords(&vectors, &unit_vec(n, i)).expect("adapted basis spans g"))
            .collect();
        Ok(InducedModule {
            g: g.clone(),
            h: h.clone(),
            inducing,
            twist,
            level,
            adapted: Enveloping::new(gp),
            ncomp: comp.len(),
            to_adapted,
            h_action,
            wdim,
            cache: Mutex::new(HashMap::new()),
            actions: Mutex::new(HashMap::new()),
        })
    }

    /// Induces the restriction `f|_h` of a functional given on `g`.
    pub fn from_functional(g: &LieAlgebra, h: &VecSpace, f: &[Scalar], twist: bool, level: usize) -> Result<Self> {
        if f.len() != g.dim() {
            return Err(Error::Invalid("functional has wrong length".into()));
        }
        let fh = h.basis().iter().map(|r| dot(f, r)).collect();
        Self::new(g, h, Inducing::Functional(fh), twist, level)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn subalgebra(&self) -> &VecSpace {
        &self.h
    }

    pub fn inducing(&self) -> &Inducing {
        &self.inducing
    }

    pub fn twisted(&self) -> bool {
        self.twist
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn complement_dim(&self) -> usize {
        self.ncomp
    }

    pub fn w_dim(&self) -> usize {
        self.wdim
    }

    /// Same module at a different truncation level.
    pub fn with_level(&self, level: usize) -> Self {
        InducedModule::new(&self.g, &self.h, self.inducing.clone(), self.twist, level).expect("already validated")
    }

    /// Key of the generating vector `1 ⊗ w_j`.
    pub fn top_key(&self, j: usize) -> Key {
        let mut k = vec![0; self.ncomp];
        k.push(j as u32);
        k
    }

    /// `b'_j · x^α` in the adapted basis, normal ordered with complement first.
    fn left_mul(&self, j: usize, alpha: &[u32]) -> UElement {
        let key = (j, alpha.to_vec());
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let mut word = vec![j];
        for (i, &e) in alpha.iter().enumerate() {
            word.extend(std::iter::repeat_n(i, e as usize));
        }
        let out = self.adapted.normalize(&word, Scalar::from_integer(1.into()));
        self.cache.lock().unwrap().insert(key, out.clone());
        out
    }

    /// `h^γ · w_j` through the (possibly twisted) inducing action.
    fn h_apply(&self, gamma: &[u32], j: usize) -> Vector {
        let mut v = unit_vec(self.wdim, j);
        for (l, &e) in gamma.iter().enumerate().rev() {
            for _ in 0..e {
                let m = &self.h_action[l];
                v = (0..self.wdim).map(|r| dot(&m[r], &v)).collect();
            }
        }
        v
    }

    fn act_uncached(&self, i: usize, key: &Key) -> Result<ModVec> {
        let (alpha, w) = key.split_at(self.ncomp);
        let wj = w[0] as usize;
        let mut out = ModVec::new();
        for (j, c) in self.to_adapted[i].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (m, coef) in self.left_mul(j, alpha).terms() {
                let (beta, gamma) = m.exponents().split_at(self.ncomp);
                if beta.iter().sum::<u32>() as usize > self.level {
                    return Err(Error::LevelExceeded(self.level));
                }
                let hw = self.h_apply(gamma, wj);
                for (r, x) in hw.iter().enumerate() {
                    if !x.is_zero() {
                        let mut k = beta.to_vec();
                        k.push(r as u32);
                        modvec_add(&mut out, k, c * coef * x);
                    }
                }
            }
        }
        Ok(out)
    }
}

impl UModule for InducedModule {
    fn algebra(&self) -> &LieAlgebra {
        &self.g
    }

    fn act_basis(&self, i: usize, key: &Key) -> Result<ModVec> {
        let memo = (i, key.clone());
        if let Some(hit) = self.actions.lock().unwrap().get(&memo) {
            return Ok(hit.clone());
        }
        let out = self.act_uncached(i, key)?;
        self.actions.lock().unwrap().insert(memo, out.clone());
        Ok(out)
    }

    fn basis_to_level(&self, level: usize) -> Vec<Key> {
        let level = level.min(self.level);
        let mut out = Vec::new();
        for m in filtration_basis(self.ncomp, level as u32) {
            for j in 0..self.wdim {
                let mut k = m.exponents().to_vec();
                k.push(j as u32);
                out.push(k);
            }
        }
        out
    }

    fn level_of(&self, key: &Key) -> usize {
        key[..self.ncomp].iter().sum::<u32>() as usize
    }

    fn level_cap(&self) -> Option<usize> {
        if self.ncomp == 0 {
            None
        } else {
            Some(self.level)
        }
    }

    fn growth_dim(&self) -> usize {
        if self.ncomp == 0 {
            0
        } else {
            self.g.dim()
        }
    }

    fn describe_key(&self, key: &Key) -> String {
        let labels = self.adapted.algebra().labels();
        let mono: String = key[..self.ncomp]
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, e)| format!("{}^{}", labels[i], e))
            .collect();
        let mono = if mono.is_empty() { "1".to_string() } else { mono };
        format!("{mono} ⊗ w{}", key[self.ncomp])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog_algebra;
    use crate::rep::{act_gen, basis_modvec};
    use crate::scalar::int;

    fn h3() -> LieAlgebra {
        catalog_algebra("heisenberg3").unwrap()
    }

    fn span(g: &LieAlgebra, labels: &[&str]) -> VecSpace {
        VecSpace::span(g.dim(), labels.iter().map(|l| g.basis_vec(g.index_of(l).unwrap())))
    }

    #[test]
    fn h3_straightening() {
        let g = h3();
        let h = span(&g, &["y", "z"]);
        let m = InducedModule::from_functional(&g, &h, &[int(0), int(0), int(1)], false, 6).unwrap();
        // y · x^n = x^n y - n x^{n-1} z  ⇒  y acts as -n on x^{n-1}
        for n in 1..=5u32 {
            let v = basis_modvec(vec![n, 0]);
            let yv = act_gen(&m, 1, &v).unwrap();
            assert_eq!(
                yv,
                basis_modvec(vec![n - 1, 0])
                    .into_keys()
                    .map(|k| (k, int(-(n as i64))))
                    .collect()
            );
            let zv = act_gen(&m, 2, &v).unwrap();
            assert_eq!(zv, v);
        }
        assert!(matches!(
            act_gen(&m, 0, &basis_modvec(vec![6, 0])),
            Err(Error::LevelExceeded(6))
        ));
    }

    #[test]
    fn central_induction() {
        let g = h3();
        let h = span(&g, &["z"]);
        let m = InducedModule::from_functional(&g, &h, &[int(0), int(0), int(5)], false, 3).unwrap();
        for k in m.basis_to_level(2) {
            let v = basis_modvec(k.clone());
            let zv = act_gen(&m, 2, &v).unwrap();
            assert_eq!(zv, basis_modvec(k).into_keys().map(|k| (k, int(5))).collect());
        }
    }

    #[test]
    fn subordinate_and_subalgebra_checks() {
        let g = h3();
        let xy = span(&g, &["x", "y"]);
        assert!(matches!(
            InducedModule::from_functional(&g, &xy, &[int(0), int(0), int(1)], false, 2),
            Err(Error::NotASubalgebra)
        ));
        let all = VecSpace::full(3);
        assert!(matches!(
            InducedModule::from_functional(&g, &all, &[int(0), int(0), int(1)], false, 2),
            Err(Error::NotSubordinate)
        ));
    }

    #[test]
    fn twist_is_invisible_for_nilpotent() {
        let g = h3();
        let h = span(&g, &["y", "z"]);
        let f = [int(2), int(-1), int(3)];
        let a = InducedModule::from_functional(&g, &h, &f, false, 4).unwrap();
        let b = InducedModule::from_functional(&g, &h, &f, true, 4).unwrap();
        for k in a.basis_to_level(3) {
            for i in 0..3 {
                assert_eq!(a.act_basis(i, &k).unwrap(), b.act_basis(i, &k).unwrap());
            }
        }
    }

    #[test]
    fn twist_shifts_aff1() {
        let g = catalog_algebra("aff1").unwrap();
        let h = span(&g, &["a"]);
        let plain = InducedModule::from_functional(&g, &h, &[int(0), int(0)], false, 3).unwrap();
        let tw = InducedModule::from_functional(&g, &h, &[int(0), int(0)], true, 3).unwrap();
        let top = plain.top_key(0);
        // θ(a) = ½ tr ad a on g/h = ½
        let d = tw.act_basis(0, &top).unwrap()[&top].clone()
            - plain
                .act_basis(0, &top)
                .unwrap()
                .get(&top)
                .cloned()
                .unwrap_or_else(Scalar::zero);
        assert_eq!(d, crate::scalar::frac(1, 2));
    }
}
