use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Finitely generated abelian group `Z^r ⊕ Z/d1 ⊕ … ⊕ Z/dk` with `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    #[serde(serialize_with = "as_strings")]
    pub torsion: Vec<BigInt>,
}

fn as_strings<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|d| d.to_string()))
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Cokernel of the integer relation matrix `rows` on `ngens` generators.
    pub fn presented(rows: &[Vec<BigInt>], ngens: usize) -> Self {
        let diag = smith_diagonal(rows, ngens);
        let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
        AbelianGroup {
            free_rank: ngens - nonzero,
            torsion: diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect(),
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("trivial group");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// Invariant factors of an integer matrix (non-negative, divisibility chain,
/// zeros last), one per pivot position.
pub fn smith_diagonal(rows: &[Vec<BigInt>], ncols: usize) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let m = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(ncols) {
        // smallest non-zero entry in the remaining block
        let Some((pi, pj)) = (t..m)
            .flat_map(|i| (t..ncols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            let mut done = true;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&p);
                for j in t..ncols {
                    let s = &q * &a[t][j];
                    a[i][j] -= s;
                }
                if !a[i][t].is_zero() {
                    done = false;
                }
            }
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&p);
                for row in a.iter_mut().skip(t) {
                    let s = &q * &row[t];
                    row[j] -= s;
                }
                if !a[t][j].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
            // move a smaller remainder into the pivot position
            let (bi, bj) = (t..m)
                .map(|i| (i, t))
                .chain((t..ncols).map(|j| (t, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
                .expect("pivot row or column is non-zero");
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    // restore the divisibility chain
    let k = diag.len();
    for i in 0..k {
        for j in i + 1..k {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn known_forms() {
        let d = smith_diagonal(&m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), 3);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let d = smith_diagonal(&m(&[&[2, 0], &[0, 3]]), 2);
        assert_eq!(d, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn display() {
        assert_eq!(AbelianGroup::trivial().to_string(), "trivial group");
        assert_eq!(AbelianGroup::free(3).to_string(), "Z^3");
        let g = AbelianGroup::presented(&m(&[&[2, 0, 0], &[0, 0, 0]]), 3);
        assert_eq!(g.to_string(), "Z^2 ⊕ Z/2");
        assert_eq!(AbelianGroup::presented(&[], 1).to_string(), "Z");
    }
}
