//! Concrete `U(g)`-modules: matrix representations, truncated induced and
//! Verma modules, the shift module of `aff1`, and their tensors and sums.
//! Kernels in `U(g)` are computed degree by degree on probe vectors.

mod induced;
mod kernel;
mod matrix;
mod shift;
mod spec;

pub use induced::{InducedModule, Inducing};
pub use kernel::{
    central_character, format_central_character, kernel_truncated, matrix_coefficients_perp, weakly_contains,
    KernelReport, WeakContainment,
};
pub use matrix::MatrixRep;
pub use shift::ShiftModule;
pub use spec::{parse_module_spec, subspace_from_specs, vector_from_map, ModuleSpec, VectorSpec};

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;

use crate::enveloping::UElement;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::scalar::Scalar;

/// Index of a basis vector of a module.
pub type Key = Vec<u32>;

/// Finitely supported vector in a module, keyed by basis index.
pub type ModVec = BTreeMap<Key, Scalar>;

pub fn modvec_add(acc: &mut ModVec, key: Key, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub fn modvec_add_scaled(acc: &mut ModVec, c: &Scalar, v: &ModVec) {
    for (k, x) in v {
        modvec_add(acc, k.clone(), c * x);
    }
}

pub fn basis_modvec(key: Key) -> ModVec {
    let mut v = ModVec::new();
    v.insert(key, Scalar::from_integer(1.into()));
    v
}

/// A module over `U(g)` presented by the action of basis elements of `g`
/// on module basis vectors, possibly truncated at a level.
pub trait UModule {
    fn algebra(&self) -> &LieAlgebra;

    /// `b_i · v_key`.
    fn act_basis(&self, i: usize, key: &Key) -> Result<ModVec>;

    /// Basis vectors of level at most `level`.
    fn basis_to_level(&self, level: usize) -> Vec<Key>;

    /// Highest level the action is exact on; `None` for finite-dimensional modules.
    fn level_of(&self, key: &Key) -> usize;

    fn level_cap(&self) -> Option<usize>;

    /// Number of parameters the action coefficients depend on polynomially;
    /// `0` for finite-dimensional modules.
    fn growth_dim(&self) -> usize;

    fn finite_dim(&self) -> Option<usize> {
        if self.level_cap().is_none() {
            Some(self.basis_to_level(0).len())
        } else {
            None
        }
    }

    fn describe_key(&self, key: &Key) -> String {
        format!("{key:?}")
    }
}

pub fn act_gen(m: &dyn UModule, i: usize, v: &ModVec) -> Result<ModVec> {
    let mut out = ModVec::new();
    for (k, c) in v {
        modvec_add_scaled(&mut out, c, &m.act_basis(i, k)?);
    }
    Ok(out)
}

/// `u · v` for an element of `U(g)`; words act right to left.
pub fn act_element(m: &dyn UModule, u: &UElement, v: &ModVec) -> Result<ModVec> {
    let mut out = ModVec::new();
    for (mono, c) in u.terms() {
        let mut w = v.clone();
        for &i in mono.word().iter().rev() {
            w = act_gen(m, i, &w)?;
        }
        modvec_add_scaled(&mut out, c, &w);
    }
    Ok(out)
}

/// Any of the concrete module kinds.
#[derive(Clone, Debug)]
pub enum ModuleHandle {
    Matrix(MatrixRep),
    Induced(Box<InducedModule>),
    Shift(ShiftModule),
    Tensor(Box<ModuleHandle>, Box<ModuleHandle>),
    Sum(Vec<ModuleHandle>),
}

impl From<MatrixRep> for ModuleHandle {
    fn from(m: MatrixRep) -> Self {
        ModuleHandle::Matrix(m)
    }
}

impl From<InducedModule> for ModuleHandle {
    fn from(m: InducedModule) -> Self {
        ModuleHandle::Induced(Box::new(m))
    }
}

impl From<ShiftModule> for ModuleHandle {
    fn from(m: ShiftModule) -> Self {
        ModuleHandle::Shift(m)
    }
}

fn min_cap(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

impl ModuleHandle {
    pub fn tensor(a: impl Into<ModuleHandle>, b: impl Into<ModuleHandle>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if a.algebra() != b.algebra() {
            return Err(Error::Invalid("tensor factors over different algebras".into()));
        }
        Ok(ModuleHandle::Tensor(Box::new(a), Box::new(b)))
    }

    /// Block direct sum; the empty sum is rejected.
    pub fn direct_sum(parts: Vec<ModuleHandle>) -> Result<Self> {
        let Some(first) = parts.first() else {
            return Err(Error::Invalid("empty direct sum".into()));
        };
        if parts.iter().any(|p| p.algebra() != first.algebra()) {
            return Err(Error::Invalid("summands over different algebras".into()));
        }
        Ok(ModuleHandle::Sum(parts))
    }

    fn inner(&self) -> &dyn UModule {
        match self {
            ModuleHandle::Matrix(m) => m,
            ModuleHandle::Induced(m) => m.as_ref(),
            ModuleHandle::Shift(m) => m,
            _ => unreachable!("composite handles dispatch directly"),
        }
    }
}

impl UModule for ModuleHandle {
    fn algebra(&self) -> &LieAlgebra {
        match self {
            ModuleHandle::Tensor(a, _) => a.algebra(),
            ModuleHandle::Sum(parts) => parts[0].algebra(),
            other => other.inner().algebra(),
        }
    }

    fn act_basis(&self, i: usize, key: &Key) -> Result<ModVec> {
        match self {
            ModuleHandle::Tensor(a, b) => {
                let la = key[0] as usize;
                let (ka, kb) = (key[1..1 + la].to_vec(), key[1 + la..].to_vec());
                let mut out = ModVec::new();
                for (k, c) in a.act_basis(i, &ka)? {
                    modvec_add(&mut out, tensor_key(&k, &kb), c);
                }
                for (k, c) in b.act_basis(i, &kb)? {
                    modvec_add(&mut out, tensor_key(&ka, &k), c);
                }
                Ok(out)
            }
            ModuleHandle::Sum(parts) => {
                let idx = key[0];
                let inner = parts[idx as usize].act_basis(i, &key[1..].to_vec())?;
                Ok(inner.into_iter().map(|(k, c)| (sum_key(idx, &k), c)).collect())
            }
            other => other.inner().act_basis(i, key),
        }
    }

    fn basis_to_level(&self, level: usize) -> Vec<Key> {
        match self {
            ModuleHandle::Tensor(a, b) => {
                let mut out = Vec::new();
                for ka in a.basis_to_level(level) {
                    for kb in b.basis_to_level(level - a.level_of(&ka)) {
                        out.push(tensor_key(&ka, &kb));
                    }
                }
                out
            }
            ModuleHandle::Sum(parts) => parts
                .iter()
                .enumerate()
                .flat_map(|(i, p)| p.basis_to_level(level).into_iter().map(move |k| sum_key(i as u32, &k)))
                .collect(),
            other => other.inner().basis_to_level(level),
        }
    }

    fn level_of(&self, key: &Key) -> usize {
        match self {
            ModuleHandle::Tensor(a, b) => {
                let la = key[0] as usize;
                a.level_of(&key[1..1 + la].to_vec()) + b.level_of(&key[1 + la..].to_vec())
            }
            ModuleHandle::Sum(parts) => parts[key[0] as usize].level_of(&key[1..].to_vec()),
            other => other.inner().level_of(key),
        }
    }

    fn level_cap(&self) -> Option<usize> {
        match self {
            ModuleHandle::Tensor(a, b) => min_cap(a.level_cap(), b.level_cap()),
            ModuleHandle::Sum(parts) => parts.iter().map(|p| p.level_cap()).fold(None, min_cap),
            other => other.inner().level_cap(),
        }
    }

    fn growth_dim(&self) -> usize {
        match self {
            ModuleHandle::Tensor(a, b) => a.growth_dim() + b.growth_dim(),
            ModuleHandle::Sum(parts) => parts.iter().map(|p| p.growth_dim()).max().unwrap_or(0),
            other => other.inner().growth_dim(),
        }
    }

    fn describe_key(&self, key: &Key) -> String {
        match self {
            ModuleHandle::Tensor(a, b) => {
                let la = key[0] as usize;
                format!(
                    "{} ⊗ {}",
                    a.describe_key(&key[1..1 + la].to_vec()),
                    b.describe_key(&key[1 + la..].to_vec())
                )
            }
            ModuleHandle::Sum(parts) => {
                format!(
                    "#{}:{}",
                    key[0],
                    parts[key[0] as usize].describe_key(&key[1..].to_vec())
                )
            }
            other => other.inner().describe_key(key),
        }
    }
}

fn tensor_key(a: &[u32], b: &[u32]) -> Key {
    let mut k = Vec::with_capacity(1 + a.len() + b.len());
    k.push(a.len() as u32);
    k.extend_from_slice(a);
    k.extend_from_slice(b);
    k
}

fn sum_key(idx: u32, k: &[u32]) -> Key {
    let mut out = Vec::with_capacity(1 + k.len());
    out.push(idx);
    out.extend_from_slice(k);
    out
}
