use indexmap::IndexMap;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{validate, BracketTable, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::zero_vec;
use crate::scalar::{format_scalar, parse_scalar};

/// Structure-constant file format. Omitted pairs are zero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub name: String,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketJson {
    pub i: String,
    pub j: String,
    pub value: IndexMap<String, String>,
}

impl AlgebraJson {
    pub fn into_algebra(self) -> Result<LieAlgebra> {
        let n = self.basis.len();
        let idx = |l: &str| {
            self.basis
                .iter()
                .position(|b| b == l)
                .ok_or_else(|| Error::Invalid(format!("unknown basis label {l:?}")))
        };
        let mut entries = Vec::new();
        for br in &self.brackets {
            let mut v = zero_vec(n);
            for (label, val) in &br.value {
                v[idx(label)?] = parse_scalar(val)?;
            }
            entries.push((idx(&br.i)?, idx(&br.j)?, v));
        }
        validate(BracketTable {
            name: self.name.clone(),
            labels: self.basis.clone(),
            entries,
        })
    }
}

impl LieAlgebra {
    pub fn to_json(&self) -> AlgebraJson {
        let n = self.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket_basis(i, j);
                let value: IndexMap<String, String> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (self.labels()[k].clone(), format_scalar(c)))
                    .collect();
                if !value.is_empty() {
                    brackets.push(BracketJson {
                        i: self.labels()[i].clone(),
                        j: self.labels()[j].clone(),
                        value,
                    });
                }
            }
        }
        AlgebraJson {
            name: self.name().to_string(),
            basis: self.labels().to_vec(),
            brackets,
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<LieAlgebra> {
        serde_json::from_str::<AlgebraJson>(s)?.into_algebra()
    }
}
