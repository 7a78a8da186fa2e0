use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::Serialize;

use super::{act_gen, basis_modvec, Key, MatrixRep, ModVec, UModule};
use crate::enveloping::{filtration_basis, Enveloping, FiltrationCoords, Monomial, TruncatedIdeal, UElement};
use crate::error::{Error, Result};
use crate::lie::center;
use crate::linalg::{identity, mat_mul, nullspace, zero_vec, NullspaceTracker};
use crate::scalar::{format_scalar, Scalar};

/// `ker M ∩ U_{≤d}`, probed on basis vectors of bounded level.
///
/// Finite-dimensional modules are probed on every basis vector. A truncated
/// module of level `L` is probed up to level `P = d · growth`, which needs
/// `L ≥ P + d`; with less room the kernel is computed from level `L - d`
/// and only certified when it comes out zero (a probe kernel always contains
/// the true kernel). `strict` turns the uncertified case into an error.
pub fn kernel_truncated(env: &Enveloping, m: &dyn UModule, d: u32, strict: bool) -> Result<TruncatedIdeal> {
    if env.algebra() != m.algebra() {
        return Err(Error::Invalid("module and enveloping algebra differ".into()));
    }
    let n = env.dim();
    let (probe, bound_ok) = match m.level_cap() {
        None => (0, true),
        Some(cap) => {
            let bound = d as usize * m.growth_dim();
            let needed = bound + d as usize;
            if cap >= needed {
                (bound, true)
            } else if strict || cap < d as usize {
                return Err(Error::InsufficientLevel { needed, have: cap });
            } else {
                (cap - d as usize, false)
            }
        }
    };

    let coords = FiltrationCoords::new(n, d);
    let big = coords.len();
    let asc = filtration_basis(n, d);
    let mut tracker = NullspaceTracker::new(big);
    'probe: for key in m.basis_to_level(probe) {
        let images = monomial_images(m, &asc, key)?;
        let mut rows: BTreeMap<Key, Vec<(usize, Scalar)>> = BTreeMap::new();
        for (mono, img) in &images {
            let col = coords.index_of(mono).expect("monomial within degree");
            for (k, c) in img {
                rows.entry(k.clone()).or_default().push((col, c.clone()));
            }
        }
        for row in rows.values() {
            tracker.insert_sparse(row);
            if tracker.nullity() == 0 {
                break 'probe;
            }
        }
    }
    let kernel = tracker.into_space();
    let mut ideal = TruncatedIdeal::from_space(n, d, kernel);
    ideal.certified = m.level_cap().is_none() || bound_ok || ideal.dim() == 0;
    ideal.probe_level = m.level_cap();
    Ok(ideal)
}

/// `m · v_key` for every monomial in ascending order, reusing shorter words:
/// an ordered monomial is `b_i · m'` with `i` its smallest index.
fn monomial_images(m: &dyn UModule, asc: &[Monomial], key: Key) -> Result<HashMap<Monomial, ModVec>> {
    let mut out: HashMap<Monomial, ModVec> = HashMap::with_capacity(asc.len());
    for mono in asc {
        let img = match mono.exponents().iter().position(|&e| e > 0) {
            None => basis_modvec(key.clone()),
            Some(i) => {
                let mut e = mono.exponents().to_vec();
                e[i] -= 1;
                let prev = &out[&Monomial::from_exponents(e)];
                act_gen(m, i, prev)?
            }
        };
        out.insert(mono.clone(), img);
    }
    Ok(out)
}

/// Outcome of a weak containment test `π ⪯ ρ` (`ker ρ ⊆ ker π`).
#[derive(Clone, Debug)]
pub struct WeakContainment {
    pub holds: bool,
    pub certified: bool,
    pub degree: u32,
    /// Elements of `ker ρ` that act nontrivially on `π`.
    pub witnesses: Vec<UElement>,
}

pub fn weakly_contains(
    env: &Enveloping,
    pi: &dyn UModule,
    rho: &dyn UModule,
    d: u32,
    strict: bool,
) -> Result<WeakContainment> {
    let k_rho = kernel_truncated(env, rho, d, strict)?;
    let k_pi = kernel_truncated(env, pi, d, strict)?;
    let witnesses: Vec<UElement> = k_rho.basis().into_iter().filter(|u| !k_pi.contains(u)).collect();
    let holds = witnesses.is_empty();
    Ok(WeakContainment {
        holds,
        certified: k_rho.certified && (!holds || k_pi.certified),
        degree: d,
        witnesses,
    })
}

/// Scalars by which the echelon basis of the center of `g` acts.
pub fn central_character(m: &dyn UModule) -> Result<Vec<Scalar>> {
    let g = m.algebra();
    let z = center(g);
    let level = m.level_cap().map_or(0, |cap| cap.min(g.dim()));
    let probes = m.basis_to_level(level);
    let mut out = Vec::with_capacity(z.dim());
    for zc in z.basis() {
        let mut value: Option<Scalar> = None;
        for key in &probes {
            let v = basis_modvec(key.clone());
            let mut img = ModVec::new();
            for (i, c) in zc.iter().enumerate() {
                if !c.is_zero() {
                    super::modvec_add_scaled(&mut img, c, &act_gen(m, i, &v)?);
                }
            }
            let s = img.get(key).cloned().unwrap_or_else(Scalar::zero);
            let scalar_here = img.len() <= 1 && (img.len() == 1) == !s.is_zero();
            let consistent = value.as_ref().is_none_or(|v| *v == s);
            if !scalar_here || !consistent {
                return Err(Error::NotScalarAction(format!(
                    "{} on {}",
                    g.format_vector(zc),
                    m.describe_key(key)
                )));
            }
            value = Some(s);
        }
        out.push(value.unwrap_or_else(Scalar::zero));
    }
    Ok(out)
}

/// `MC(ρ)^⊥ ∩ U_{≤d}`: elements pairing to zero with every matrix coefficient.
pub fn matrix_coefficients_perp(env: &Enveloping, rho: &MatrixRep, d: u32) -> TruncatedIdeal {
    let n = env.dim();
    let coords = FiltrationCoords::new(n, d);
    let dim = rho.dim();
    let mut rows = vec![zero_vec(coords.len()); dim * dim];
    for (col, mono) in coords.monomials().iter().enumerate() {
        let mut p = identity(dim);
        for i in mono.word() {
            p = mat_mul(&p, &rho.images()[i]);
        }
        for r in 0..dim {
            for c in 0..dim {
                rows[r * dim + c][col] = p[r][c].clone();
            }
        }
    }
    TruncatedIdeal::from_space(n, d, nullspace(&rows, coords.len()))
}

/// Serializable summary of a truncated kernel.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct KernelReport {
    pub algebra: String,
    pub degree: u32,
    pub level: Option<usize>,
    pub certified: bool,
    pub dim: usize,
    pub codim: usize,
    pub basis: Vec<String>,
}

impl KernelReport {
    pub fn new(env: &Enveloping, ideal: &TruncatedIdeal) -> Self {
        KernelReport {
            algebra: env.algebra().name().to_string(),
            degree: ideal.degree(),
            level: ideal.probe_level,
            certified: ideal.certified,
            dim: ideal.dim(),
            codim: ideal.codim(),
            basis: ideal.format(env),
        }
    }
}

/// Text form of a central character, `label = value` per central basis vector.
pub fn format_central_character(m: &dyn UModule, values: &[Scalar]) -> Vec<String> {
    let g = m.algebra();
    center(g)
        .basis()
        .iter()
        .zip(values)
        .map(|(z, v)| format!("{} ↦ {}", g.format_vector(z), format_scalar(v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{catalog_algebra, LieAlgebra};
    use crate::linalg::VecSpace;
    use crate::rep::{InducedModule, ModuleHandle, ShiftModule};
    use crate::scalar::int;

    fn span(g: &LieAlgebra, labels: &[&str]) -> VecSpace {
        VecSpace::span(g.dim(), labels.iter().map(|l| g.basis_vec(g.index_of(l).unwrap())))
    }

    fn h3_induced(c: i64, level: usize) -> InducedModule {
        let g = catalog_algebra("heisenberg3").unwrap();
        let h = span(&g, &["y", "z"]);
        InducedModule::from_functional(&g, &h, &[int(0), int(0), int(c)], false, level).unwrap()
    }

    #[test]
    fn character_kernel_degree_one() {
        let g = catalog_algebra("aff1").unwrap();
        let env = Enveloping::new(g.clone());
        let lam = MatrixRep::character(&g, &[int(2), int(0)]).unwrap();
        let k = kernel_truncated(&env, &lam, 1, true).unwrap();
        let expected =
            TruncatedIdeal::from_elements(2, 1, &[env.parse("a - 2").unwrap(), env.parse("b").unwrap()]).unwrap();
        assert!(k.same_space(&expected));
        assert!(k.certified);
    }

    #[test]
    fn h3_induced_kernel() {
        let m = h3_induced(1, 6);
        let env = Enveloping::new(m.algebra().clone());
        let k = kernel_truncated(&env, &m, 1, true).unwrap();
        assert!(k.certified);
        assert_eq!(k.format(&env), vec!["1 * z^1 + -1"]);
        assert!(kernel_truncated(&env, &h3_induced(1, 4), 1, true).unwrap().certified);
    }

    #[test]
    fn strict_mode_rejects_short_levels() {
        let m = h3_induced(1, 3);
        let env = Enveloping::new(m.algebra().clone());
        assert!(matches!(
            kernel_truncated(&env, &m, 1, true),
            Err(Error::InsufficientLevel { needed: 4, have: 3 })
        ));
        let lax = kernel_truncated(&env, &m, 1, false).unwrap();
        assert!(!lax.certified);
    }

    #[test]
    fn shift_module_faithful_to_degree_two() {
        let m = ShiftModule::new(8);
        let env = Enveloping::new(m.algebra().clone());
        let k = kernel_truncated(&env, &m, 2, true).unwrap();
        assert_eq!(k.dim(), 0);
        assert!(k.certified);
    }

    #[test]
    fn incomparable_central_characters() {
        let (a, b) = (h3_induced(1, 6), h3_induced(2, 6));
        let env = Enveloping::new(a.algebra().clone());
        let ab = weakly_contains(&env, &a, &b, 1, true).unwrap();
        let ba = weakly_contains(&env, &b, &a, 1, true).unwrap();
        assert!(!ab.holds && !ba.holds);
        assert!(ab.certified && ba.certified);
        assert!(weakly_contains(&env, &a, &a, 1, true).unwrap().holds);
    }

    #[test]
    fn central_characters() {
        let m = h3_induced(7, 4);
        assert_eq!(central_character(&m).unwrap(), vec![int(7)]);
        let sum = ModuleHandle::direct_sum(vec![h3_induced(1, 4).into(), h3_induced(2, 4).into()]).unwrap();
        assert!(matches!(central_character(&sum), Err(Error::NotScalarAction(_))));
        let sl2 = MatrixRep::sl_defining(2).unwrap();
        assert!(central_character(&sl2).unwrap().is_empty());
    }

    #[test]
    fn mc_perp_matches_kernel_for_sl2_defining() {
        let r = MatrixRep::sl_defining(2).unwrap();
        let env = Enveloping::new(r.algebra().clone());
        let a = matrix_coefficients_perp(&env, &r, 2);
        let b = kernel_truncated(&env, &r, 2, true).unwrap();
        assert!(a.same_space(&b));
    }
}
