use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::{InducedModule, MatrixRep, ModuleHandle, ShiftModule};
use crate::error::{Error, Result};
use crate::lie::{catalog_algebra, LieAlgebra};
use crate::linalg::{zero_mat, zero_vec, Matrix, VecSpace, Vector};
use crate::scalar::parse_scalar;

/// A vector of `g`, either a basis label or a sparse `{label: "p/q"}` map.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VectorSpec {
    Label(String),
    Coords(IndexMap<String, String>),
}

/// JSON description of a module over a given algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ModuleSpec {
    /// Row-major matrices per basis label; omitted labels act by zero.
    Matrix {
        matrices: IndexMap<String, Vec<Vec<String>>>,
    },
    /// One-dimensional character; omitted labels are zero.
    Functional {
        values: IndexMap<String, String>,
    },
    Induced {
        subalgebra: Vec<VectorSpec>,
        functional: IndexMap<String, String>,
        #[serde(default)]
        twist: bool,
        level: usize,
    },
    Shift {
        level: usize,
    },
    Tensor {
        factors: Vec<ModuleSpec>,
    },
    Sum {
        summands: Vec<ModuleSpec>,
    },
}

pub(crate) fn label_index(g: &LieAlgebra, label: &str) -> Result<usize> {
    g.index_of(label)
        .ok_or_else(|| Error::UnknownGenerator(label.to_string()))
}

/// Dense coordinates from a sparse label map.
pub fn vector_from_map(g: &LieAlgebra, map: &IndexMap<String, String>) -> Result<Vector> {
    let mut v = zero_vec(g.dim());
    for (label, val) in map {
        v[label_index(g, label)?] = parse_scalar(val)?;
    }
    Ok(v)
}

impl VectorSpec {
    pub fn to_vector(&self, g: &LieAlgebra) -> Result<Vector> {
        match self {
            VectorSpec::Label(l) => Ok(g.basis_vec(label_index(g, l)?)),
            VectorSpec::Coords(m) => vector_from_map(g, m),
        }
    }
}

pub fn subspace_from_specs(g: &LieAlgebra, specs: &[VectorSpec]) -> Result<VecSpace> {
    let vecs = specs.iter().map(|s| s.to_vector(g)).collect::<Result<Vec<_>>>()?;
    Ok(VecSpace::span(g.dim(), vecs))
}

fn matrix_from_strings(rows: &[Vec<String>], n: usize) -> Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Invalid(format!("expected a {n}×{n} matrix")));
    }
    rows.iter()
        .map(|r| r.iter().map(|s| parse_scalar(s)).collect())
        .collect()
}

impl ModuleSpec {
    pub fn build(&self, g: &LieAlgebra) -> Result<ModuleHandle> {
        match self {
            ModuleSpec::Matrix { matrices } => {
                let n = matrices
                    .values()
                    .next()
                    .map(Vec::len)
                    .ok_or_else(|| Error::Invalid("matrix module needs at least one matrix".into()))?;
                let mut images = vec![zero_mat(n, n); g.dim()];
                for (label, rows) in matrices {
                    images[label_index(g, label)?] = matrix_from_strings(rows, n)?;
                }
                Ok(MatrixRep::new(g.clone(), images)?.into())
            }
            ModuleSpec::Functional { values } => Ok(MatrixRep::character(g, &vector_from_map(g, values)?)?.into()),
            ModuleSpec::Induced {
                subalgebra,
                functional,
                twist,
                level,
            } => {
                let h = subspace_from_specs(g, subalgebra)?;
                let f = vector_from_map(g, functional)?;
                Ok(InducedModule::from_functional(g, &h, &f, *twist, *level)?.into())
            }
            ModuleSpec::Shift { level } => {
                let aff = catalog_algebra("aff1")?;
                if aff.with_name("") != g.clone().with_name("") {
                    return Err(Error::UnsupportedType("shift modules exist for aff1 only".into()));
                }
                Ok(ShiftModule::new(*level).into())
            }
            ModuleSpec::Tensor { factors } => {
                let mut it = factors.iter();
                let first = it.next().ok_or_else(|| Error::Invalid("empty tensor product".into()))?;
                let mut acc = first.build(g)?;
                for f in it {
                    acc = ModuleHandle::tensor(acc, f.build(g)?)?;
                }
                Ok(acc)
            }
            ModuleSpec::Sum { summands } => {
                let parts = summands.iter().map(|s| s.build(g)).collect::<Result<Vec<_>>>()?;
                ModuleHandle::direct_sum(parts)
            }
        }
    }
}

pub fn parse_module_spec(json: &str, g: &LieAlgebra) -> Result<ModuleHandle> {
    serde_json::from_str::<ModuleSpec>(json)?.build(g)
}
