use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lie::{catalog_algebra, LieAlgebra};
use crate::scalar::{frac, int, Scalar};

/// Supported Cartan types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootType {
    A1,
    A2,
}

impl FromStr for RootType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A1" => Ok(RootType::A1),
            "A2" => Ok(RootType::A2),
            other => Err(Error::UnsupportedType(other.to_string())),
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootType::A1 => "A1",
            RootType::A2 => "A2",
        })
    }
}

/// Weight in fundamental-weight coordinates.
pub type Weight = Vec<Scalar>;

/// Integer matrix acting on fundamental-weight coordinates.
pub type WeylElement = Vec<Vec<i64>>;

/// Root datum together with the matching catalog algebra `sl2` / `sl3`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub ty: RootType,
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates.
    pub positive_roots: Vec<Vec<i64>>,
    pub weyl: Vec<WeylElement>,
    pub delta: Weight,
    algebra: LieAlgebra,
    /// Basis indices of the positive root vectors, in `positive_roots` order.
    pub e_idx: Vec<usize>,
    /// Basis indices of the Cartan elements `h_i` (simple coroots).
    pub h_idx: Vec<usize>,
    /// Basis indices of the negative root vectors, in `positive_roots` order.
    pub f_idx: Vec<usize>,
}

fn mat_mul_i(a: &WeylElement, b: &WeylElement) -> WeylElement {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// Simple reflection `(s_i λ)_j = λ_j - λ_i A_ij` as a matrix.
fn simple_reflection(cartan: &[Vec<i64>], i: usize) -> WeylElement {
    let r = cartan.len();
    (0..r)
        .map(|j| {
            (0..r)
                .map(|k| i64::from(j == k) - if k == i { cartan[i][j] } else { 0 })
                .collect()
        })
        .collect()
}

/// Closure of the simple reflections under products, breadth first from the identity.
fn weyl_group(cartan: &[Vec<i64>]) -> Vec<WeylElement> {
    let r = cartan.len();
    let id: WeylElement = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
    let gens: Vec<WeylElement> = (0..r).map(|i| simple_reflection(cartan, i)).collect();
    let mut seen = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for s in &gens {
            let ws = mat_mul_i(s, &w);
            if !seen.contains(&ws) {
                seen.push(ws.clone());
                queue.push_back(ws);
            }
        }
    }
    seen
}

pub fn root_system(ty: RootType) -> Result<RootSystem> {
    let (cartan, positive_roots, algebra, e_idx, h_idx, f_idx) = match ty {
        RootType::A1 => (
            vec![vec![2]],
            vec![vec![1]],
            catalog_algebra("sl2")?,
            vec![0],
            vec![1],
            vec![2],
        ),
        RootType::A2 => (
            vec![vec![2, -1], vec![-1, 2]],
            vec![vec![1, 0], vec![0, 1], vec![1, 1]],
            catalog_algebra("sl3")?,
            vec![0, 1, 2],
            vec![3, 4],
            vec![5, 6, 7],
        ),
    };
    let rank = cartan.len();
    let weyl = weyl_group(&cartan);
    Ok(RootSystem {
        ty,
        positive_roots,
        weyl,
        delta: vec![int(1); rank],
        algebra,
        e_idx,
        h_idx,
        f_idx,
        cartan,
    })
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    /// A positive root (simple-root coordinates) in fundamental-weight coordinates.
    pub fn root_weight(&self, root: &[i64]) -> Weight {
        (0..self.rank())
            .map(|j| int(root.iter().enumerate().map(|(i, c)| c * self.cartan[i][j]).sum()))
            .collect()
    }

    /// Half the sum of the positive roots, computed from the roots.
    pub fn half_sum_positive(&self) -> Weight {
        let mut acc = vec![int(0); self.rank()];
        for r in &self.positive_roots {
            for (a, b) in acc.iter_mut().zip(self.root_weight(r)) {
                *a += b * frac(1, 2);
            }
        }
        acc
    }

    pub fn apply(&self, w: &WeylElement, lambda: &[Scalar]) -> Weight {
        w.iter()
            .map(|row| row.iter().zip(lambda).map(|(c, l)| int(*c) * l).sum())
            .collect()
    }

    /// The element sending `δ` to `-δ`.
    pub fn longest_element(&self) -> &WeylElement {
        let neg: Weight = self.delta.iter().map(|c| -c.clone()).collect();
        self.weyl
            .iter()
            .find(|w| self.apply(w, &self.delta) == neg)
            .expect("finite Weyl group has a longest element")
    }

    /// Whether `λ - δ` has non-negative integer coordinates.
    pub fn is_dominant_integral_shifted(&self, lambda: &[Scalar]) -> bool {
        lambda.iter().zip(&self.delta).all(|(l, d)| {
            let c = l - d;
            c.is_integer() && c >= int(0)
        })
    }

    /// Weyl dimension formula for the simple module of highest weight `λ - δ`.
    pub fn weyl_dimension(&self, lambda: &[Scalar]) -> Scalar {
        match self.ty {
            RootType::A1 => lambda[0].clone(),
            RootType::A2 => &lambda[0] * &lambda[1] * (&lambda[0] + &lambda[1]) * frac(1, 2),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_data() {
        let rs = root_system(RootType::A1).unwrap();
        assert_eq!(rs.positive_roots.len(), 1);
        assert_eq!(rs.weyl.len(), 2);
        assert_eq!(rs.delta, rs.half_sum_positive());
    }

    #[test]
    fn a2_data() {
        let rs = root_system(RootType::A2).unwrap();
        assert_eq!(rs.positive_roots.len(), 3);
        assert_eq!(rs.weyl.len(), 6);
        assert_eq!(rs.delta, rs.half_sum_positive());
        let w0 = rs.longest_element();
        let lam = vec![int(2), int(5)];
        // w0 λ = -(λ2, λ1) in type A2
        assert_eq!(rs.apply(w0, &lam), vec![int(-5), int(-2)]);
    }

    #[test]
    fn unsupported_type() {
        assert!(matches!("B2".parse::<RootType>(), Err(Error::UnsupportedType(_))));
        assert_eq!("a2".parse::<RootType>().unwrap(), RootType::A2);
    }
}
