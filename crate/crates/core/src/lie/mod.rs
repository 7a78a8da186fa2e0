//! Finite-dimensional Lie algebras given by structure constants over the
//! rationals, and the structural queries the rest of the crate relies on.

mod catalog;
mod json;
mod structure;

pub use catalog::{catalog_algebra, catalog_names, sl_matrices, CatalogEntry, CATALOG};
pub use json::{AlgebraJson, BracketJson};
pub use structure::{
    center, derived_algebra, diagonal_embedding, direct_sum, is_nilpotent, is_solvable, nilradical, quotient, series,
    theta, Quotient, SeriesKind,
};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, add_scaled, is_zero_vec, zero_vec, Matrix, VecSpace, Vector};
use crate::scalar::{format_scalar, Scalar};

/// Unvalidated bracket table: `entries` lists `[b_i, b_j] = value`.
#[derive(Clone, Debug, Default)]
pub struct BracketTable {
    pub name: String,
    pub labels: Vec<String>,
    pub entries: Vec<(usize, usize, Vector)>,
}

/// A validated Lie algebra with a fixed ordered basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<Vector>>,
}

pub(crate) fn check_label(label: &str) -> Result<()> {
    let mut chars = label.chars();
    let ok_first = chars.next().is_some_and(|c| c.is_alphabetic() || c == '_');
    let ok_rest = label
        .chars()
        .all(|c| c.is_alphanumeric() || c == '_' || c == '\'' || c == '.');
    if ok_first && ok_rest {
        Ok(())
    } else {
        Err(Error::Invalid(format!("bad basis label {label:?}")))
    }
}

pub(crate) fn fresh_label(base: &str, taken: &[String]) -> String {
    let mut l = base.to_string();
    while taken.contains(&l) {
        l.push('\'');
    }
    l
}

/// Checks antisymmetry and the Jacobi identity on every basis triple.
pub fn validate(raw: BracketTable) -> Result<LieAlgebra> {
    let n = raw.labels.len();
    if n == 0 {
        return Err(Error::Invalid("empty basis".into()));
    }
    for (k, l) in raw.labels.iter().enumerate() {
        check_label(l)?;
        if raw.labels[..k].contains(l) {
            return Err(Error::Invalid(format!("duplicate basis label {l:?}")));
        }
    }
    let mut table = vec![vec![zero_vec(n); n]; n];
    let mut given = vec![vec![false; n]; n];
    for (i, j, v) in raw.entries {
        if i >= n || j >= n || v.len() != n {
            return Err(Error::Invalid("bracket entry out of range".into()));
        }
        let (li, lj) = (raw.labels[i].clone(), raw.labels[j].clone());
        if i == j {
            if !is_zero_vec(&v) {
                return Err(Error::AntisymmetryViolation(li, lj));
            }
            continue;
        }
        if given[i][j] && table[i][j] != v {
            return Err(Error::Invalid(format!("conflicting entries for [{li}, {lj}]")));
        }
        let neg: Vector = v.iter().map(|x| -x).collect();
        if given[j][i] && table[j][i] != neg {
            return Err(Error::AntisymmetryViolation(li, lj));
        }
        table[i][j] = v;
        table[j][i] = neg;
        given[i][j] = true;
    }
    let g = LieAlgebra {
        name: raw.name,
        labels: raw.labels,
        table,
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (x, y, z) = (g.basis_vec(i), g.basis_vec(j), g.basis_vec(k));
                let mut d = g.bracket(&x, &g.bracket(&y, &z));
                let t2 = g.bracket(&y, &g.bracket(&z, &x));
                let t3 = g.bracket(&z, &g.bracket(&x, &y));
                add_scaled(&mut d, &Scalar::one(), &t2);
                add_scaled(&mut d, &Scalar::one(), &t3);
                if !is_zero_vec(&d) {
                    return Err(Error::JacobiViolation {
                        i: g.labels[i].clone(),
                        j: g.labels[j].clone(),
                        k: g.labels[k].clone(),
                        defect: g.format_vector(&d),
                    });
                }
            }
        }
    }
    Ok(g)
}

impl LieAlgebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn basis_vec(&self, i: usize) -> Vector {
        linalg::unit_vec(self.dim(), i)
    }

    /// `[b_i, b_j]` in basis coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                add_scaled(&mut out, &(xi * yj), &self.table[i][j]);
            }
        }
        out
    }

    /// Matrix of `ad x`; column `c` holds `[x, b_c]`.
    pub fn ad_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|c| self.bracket(x, &self.basis_vec(c))).collect();
        linalg::transpose(&cols, n)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().flatten().all(|v| is_zero_vec(v))
    }

    /// Span of all `[a, b]` with `a` in `lhs`, `b` in `rhs`.
    pub fn bracket_space(&self, lhs: &VecSpace, rhs: &VecSpace) -> VecSpace {
        let mut vs = Vec::new();
        for a in lhs.basis() {
            for b in rhs.basis() {
                vs.push(self.bracket(a, b));
            }
        }
        VecSpace::span(self.dim(), vs)
    }

    pub fn is_subalgebra(&self, h: &VecSpace) -> bool {
        self.bracket_space(h, h).is_subspace_of(h)
    }

    pub fn is_ideal(&self, k: &VecSpace) -> bool {
        self.bracket_space(&VecSpace::full(self.dim()), k).is_subspace_of(k)
    }

    pub fn format_vector(&self, v: &[Scalar]) -> String {
        let terms: Vec<String> = v
            .iter()
            .zip(&self.labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| {
                if c.is_one() {
                    l.clone()
                } else {
                    format!("{} * {}", format_scalar(c), l)
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// `span{...}` rendering of a subspace's echelon basis.
    pub fn format_subspace(&self, s: &VecSpace) -> String {
        let parts: Vec<String> = s.basis().iter().map(|v| self.format_vector(v)).collect();
        format!("span{{{}}}", parts.join(", "))
    }

    /// The same algebra expressed in a new basis (given in old coordinates).
    pub fn change_basis(&self, name: &str, vectors: &[Vector], labels: Vec<String>) -> Result<LieAlgebra> {
        let n = self.dim();
        if vectors.len() != n || labels.len() != n {
            return Err(Error::Invalid("change of basis needs a full basis".into()));
        }
        let p = linalg::transpose(vectors, n);
        let pinv = linalg::inverse(&p).ok_or_else(|| Error::Invalid("basis vectors are dependent".into()))?;
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let br = self.bracket(&vectors[i], &vectors[j]);
                let c = linalg::mat_vec(&pinv, &br);
                if !is_zero_vec(&c) {
                    entries.push((i, j, c));
                }
            }
        }
        validate(BracketTable {
            name: name.into(),
            labels,
            entries,
        })
    }

    /// Labels for the echelon basis of a subspace: the original label when a
    /// basis vector is a coordinate vector, a fresh symbol otherwise.
    pub fn subspace_labels(&self, h: &VecSpace, prefix: &str) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for (k, row) in h.basis().iter().enumerate() {
            let nz: Vec<usize> = (0..row.len()).filter(|&i| !row[i].is_zero()).collect();
            let base = if nz.len() == 1 {
                self.labels[nz[0]].clone()
            } else {
                format!("{prefix}{}", k + 1)
            };
            let mut taken = out.clone();
            if nz.len() != 1 {
                taken.extend(self.labels.iter().cloned());
            }
            out.push(fresh_label(&base, &taken));
        }
        out
    }

    /// The subalgebra `h` as a Lie algebra in its echelon basis.
    pub fn subalgebra(&self, h: &VecSpace) -> Result<LieAlgebra> {
        if !self.is_subalgebra(h) {
            return Err(Error::NotASubalgebra);
        }
        let k = h.dim();
        let labels = self.subspace_labels(h, "u");
        let mut entries = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let br = self.bracket(&h.basis()[i], &h.basis()[j]);
                let c = h.coords(&br).expect("closed under bracket");
                if !is_zero_vec(&c) {
                    entries.push((i, j, c));
                }
            }
        }
        if k == 0 {
            return Ok(LieAlgebra {
                name: format!("{}-zero", self.name),
                labels: Vec::new(),
                table: Vec::new(),
            });
        }
        validate(BracketTable {
            name: format!("{}-sub", self.name),
            labels,
            entries,
        })
    }

    /// Structure constants of the matrix Lie algebra spanned by `mats`
    /// (which must be linearly independent and closed under commutator).
    pub fn from_matrices(name: &str, labels: &[&str], mats: &[Matrix]) -> Result<LieAlgebra> {
        let flat: Vec<Vector> = mats.iter().map(|m| m.iter().flatten().cloned().collect()).collect();
        let dim_flat = flat.first().map_or(0, Vec::len);
        let cols = linalg::transpose(&flat, dim_flat);
        let mut entries = Vec::new();
        for i in 0..mats.len() {
            for j in i + 1..mats.len() {
                let comm = linalg::mat_sub(
                    &linalg::mat_mul(&mats[i], &mats[j]),
                    &linalg::mat_mul(&mats[j], &mats[i]),
                );
                let target: Vector = comm.into_iter().flatten().collect();
                let c = solve(&cols, &target, dim_flat)
                    .ok_or_else(|| Error::Invalid("matrices not closed under commutator".into()))?;
                if !is_zero_vec(&c) {
                    entries.push((i, j, c));
                }
            }
        }
        validate(BracketTable {
            name: name.into(),
            labels: labels.iter().map(|s| s.to_string()).collect(),
            entries,
        })
    }
}

/// Coordinates of `target` in terms of `vectors`, if it lies in their span.
pub(crate) fn solve_coords(vectors: &[Vector], target: &[Scalar]) -> Option<Vector> {
    let n = target.len();
    solve(&linalg::transpose(vectors, n), target, n)
}

/// Solves `A x = b` for `A` given by rows; `None` when inconsistent.
pub(crate) fn solve(rows: &Matrix, b: &[Scalar], nrows: usize) -> Option<Vector> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut aug: Matrix = (0..nrows)
        .map(|r| {
            let mut row = rows[r].clone();
            row.push(b[r].clone());
            row
        })
        .collect();
    let pivots = linalg::rref_in_place(&mut aug);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = zero_vec(ncols);
    for (row, &p) in aug.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn h3_raw() -> BracketTable {
        BracketTable {
            name: "h3".into(),
            labels: vec!["x".into(), "y".into(), "z".into()],
            entries: vec![(0, 1, vec![int(0), int(0), int(1)])],
        }
    }

    #[test]
    fn heisenberg_validates() {
        let g = validate(h3_raw()).unwrap();
        assert_eq!(g.dim(), 3);
        assert_eq!(g.bracket_basis(1, 0), &vec![int(0), int(0), int(-1)]);
    }

    #[test]
    fn antisymmetry_violation_detected() {
        let mut raw = h3_raw();
        raw.entries.push((1, 0, vec![int(0), int(0), int(1)]));
        assert_eq!(validate(raw), Err(Error::AntisymmetryViolation("y".into(), "x".into())));
    }

    #[test]
    fn jacobi_violation_detected() {
        // [x,y]=y, [y,z]=x, [x,z]=0 fails Jacobi
        let raw = BracketTable {
            name: "bad".into(),
            labels: vec!["x".into(), "y".into(), "z".into()],
            entries: vec![
                (0, 1, vec![int(0), int(1), int(0)]),
                (1, 2, vec![int(1), int(0), int(0)]),
            ],
        };
        assert!(matches!(validate(raw), Err(Error::JacobiViolation { .. })));
    }

    #[test]
    fn bad_labels_rejected() {
        let mut raw = h3_raw();
        raw.labels[0] = "x^2".into();
        assert!(validate(raw).is_err());
        let mut raw = h3_raw();
        raw.labels[1] = "x".into();
        assert!(validate(raw).is_err());
    }

    #[test]
    fn change_basis_preserves_brackets() {
        let g = validate(h3_raw()).unwrap();
        let vs = vec![
            vec![int(1), int(1), int(0)],
            vec![int(0), int(1), int(0)],
            vec![int(0), int(0), int(2)],
        ];
        let g2 = g
            .change_basis("h3b", &vs, vec!["p".into(), "q".into(), "r".into()])
            .unwrap();
        // [x+y, y] = z = r/2
        assert_eq!(g2.bracket_basis(0, 1), &vec![int(0), int(0), crate::scalar::frac(1, 2)]);
    }
}
