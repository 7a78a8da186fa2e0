use num_traits::{One, Zero};

use super::{modvec_add, Key, ModVec, UModule};
use crate::error::{Error, Result};
use crate::lie::{catalog_algebra, LieAlgebra};
use crate::scalar::{binomial, Scalar};

/// Polynomials in `t` of degree at most `level` with `a` acting as
/// multiplication by `t` and `b` as the shift `p(t) ↦ p(t - 1)`.
/// This is `U(aff1) / U(aff1)(b - 1)`, a faithful simple module.
#[derive(Clone, Debug)]
pub struct ShiftModule {
    g: LieAlgebra,
    level: usize,
}

impl ShiftModule {
    pub fn new(level: usize) -> Self {
        ShiftModule {
            g: catalog_algebra("aff1").expect("catalog aff1"),
            level,
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Coefficient vector of `p(t - 1)`.
    pub fn shift(p: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); p.len()];
        for (k, c) in p.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..=k {
                let sign = if (k - j) % 2 == 0 {
                    Scalar::one()
                } else {
                    -Scalar::one()
                };
                out[j] += c * binomial(k as u32, j as u32) * sign;
            }
        }
        out
    }

    /// Applies `b - 1` to `p` exactly `deg p` times and checks that a nonzero
    /// constant remains, so `1` (hence every `t^k = a^k · 1`) lies in the
    /// submodule generated by `p`.
    pub fn simplicity_probe(p: &[Scalar]) -> bool {
        let Some(deg) = p.iter().rposition(|c| !c.is_zero()) else {
            return false;
        };
        let mut q = p[..=deg].to_vec();
        for _ in 0..deg {
            let s = Self::shift(&q);
            q = s.iter().zip(&q).map(|(a, b)| a - b).collect();
        }
        !q[0].is_zero() && q[1..].iter().all(Zero::is_zero)
    }
}

impl UModule for ShiftModule {
    fn algebra(&self) -> &LieAlgebra {
        &self.g
    }

    fn act_basis(&self, i: usize, key: &Key) -> Result<ModVec> {
        let k = key[0] as usize;
        let mut out = ModVec::new();
        match i {
            0 => {
                if k + 1 > self.level {
                    return Err(Error::LevelExceeded(self.level));
                }
                out.insert(vec![k as u32 + 1], Scalar::one());
            }
            1 => {
                let mut p = vec![Scalar::zero(); k + 1];
                p[k] = Scalar::one();
                for (j, c) in Self::shift(&p).into_iter().enumerate() {
                    modvec_add(&mut out, vec![j as u32], c);
                }
            }
            _ => return Err(Error::Invalid(format!("aff1 has no basis element {i}"))),
        }
        Ok(out)
    }

    fn basis_to_level(&self, level: usize) -> Vec<Key> {
        (0..=level.min(self.level) as u32).map(|k| vec![k]).collect()
    }

    fn level_of(&self, key: &Key) -> usize {
        key[0] as usize
    }

    fn level_cap(&self) -> Option<usize> {
        Some(self.level)
    }

    fn growth_dim(&self) -> usize {
        self.g.dim()
    }

    fn describe_key(&self, key: &Key) -> String {
        format!("t^{}", key[0])
    }
}
