use num_traits::Zero;

use super::{fresh_label, validate, BracketTable, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{self, is_zero_vec, nullspace, Matrix, RowReducer, VecSpace, Vector};
use crate::scalar::{frac, Scalar};

/// `{x : [x, b_i] = 0 for all i}`.
pub fn center(g: &LieAlgebra) -> VecSpace {
    let n = g.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for m in 0..n {
            rows.push((0..n).map(|k| g.bracket_basis(k, i)[m].clone()).collect());
        }
    }
    nullspace(&rows, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

/// Terms of the series starting at `g`, stopping once it stabilizes.
pub fn series(g: &LieAlgebra, kind: SeriesKind) -> Vec<VecSpace> {
    let full = VecSpace::full(g.dim());
    let mut out = vec![full.clone()];
    loop {
        let cur = out.last().unwrap();
        let next = match kind {
            SeriesKind::Derived => g.bracket_space(cur, cur),
            SeriesKind::LowerCentral => g.bracket_space(&full, cur),
        };
        if &next == cur {
            break;
        }
        let done = next.is_zero();
        out.push(next);
        if done {
            break;
        }
    }
    out
}

pub fn derived_algebra(g: &LieAlgebra) -> VecSpace {
    let full = VecSpace::full(g.dim());
    g.bracket_space(&full, &full)
}

pub fn is_solvable(g: &LieAlgebra) -> bool {
    series(g, SeriesKind::Derived).last().unwrap().is_zero()
}

pub fn is_nilpotent(g: &LieAlgebra) -> bool {
    series(g, SeriesKind::LowerCentral).last().unwrap().is_zero()
}

/// The ad-nilpotent locus of a solvable algebra.
///
/// `ad g` is simultaneously triangularizable, so `ad x` is nilpotent exactly
/// when `tr(ad x · A) = 0` for every `A` in the unital associative algebra
/// generated by `ad g`. That condition is linear in `x`.
pub fn nilradical(g: &LieAlgebra) -> Result<VecSpace> {
    if !is_solvable(g) {
        return Err(Error::NotSolvable);
    }
    let n = g.dim();
    let ads: Vec<Matrix> = (0..n).map(|i| g.ad_matrix(&g.basis_vec(i))).collect();
    let flatten = |m: &Matrix| -> Vector { m.iter().flatten().cloned().collect() };
    let mut red = RowReducer::new(n * n);
    let mut algebra = vec![linalg::identity(n)];
    red.insert(&flatten(&algebra[0]));
    let mut frontier = algebra.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for ad in &ads {
                let p = linalg::mat_mul(ad, a);
                if red.insert(&flatten(&p)) {
                    next.push(p);
                }
            }
        }
        algebra.extend(next.iter().cloned());
        frontier = next;
    }
    let rows: Vec<Vector> = algebra
        .iter()
        .map(|a| ads.iter().map(|ad| linalg::trace(&linalg::mat_mul(ad, a))).collect())
        .collect();
    let nr = nullspace(&rows, n);
    debug_assert!(g.is_ideal(&nr));
    debug_assert!(derived_algebra(g).is_subspace_of(&nr));
    Ok(nr)
}

/// `g / k` on the complement spanned by the non-pivot coordinates of `k`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    pub kernel: VecSpace,
    pub complement: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, v: &[Scalar]) -> Vector {
        let r = self.kernel.reduce(v);
        self.complement.iter().map(|&c| r[c].clone()).collect()
    }

    pub fn project_space(&self, s: &VecSpace) -> VecSpace {
        VecSpace::span(self.complement.len(), s.basis().iter().map(|v| self.project(v)))
    }
}

pub fn quotient(g: &LieAlgebra, k: &VecSpace) -> Result<Quotient> {
    if !g.is_ideal(k) {
        return Err(Error::NotAnIdeal);
    }
    let complement = k.non_pivots();
    let labels: Vec<String> = complement.iter().map(|&c| g.labels()[c].clone()).collect();
    let mut q = Quotient {
        algebra: g.clone(),
        kernel: k.clone(),
        complement: complement.clone(),
    };
    let mut entries = Vec::new();
    for (a, &ca) in complement.iter().enumerate() {
        for (b, &cb) in complement.iter().enumerate().skip(a + 1) {
            let v = q.project(g.bracket_basis(ca, cb));
            if !is_zero_vec(&v) {
                entries.push((a, b, v));
            }
        }
    }
    if labels.is_empty() {
        return Err(Error::Invalid("quotient by the whole algebra".into()));
    }
    q.algebra = validate(BracketTable {
        name: format!("{}/k", g.name()),
        labels,
        entries,
    })?;
    Ok(q)
}

/// Block direct sum; labels get `.1`/`.2` suffixes only when they clash.
pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
    let (na, nb) = (a.dim(), b.dim());
    let clash = a.labels().iter().any(|l| b.labels().contains(l));
    let mut labels: Vec<String> = Vec::new();
    for (side, alg) in [(1, a), (2, b)] {
        for l in alg.labels() {
            let base = if clash { format!("{l}.{side}") } else { l.clone() };
            let fresh = fresh_label(&base, &labels);
            labels.push(fresh);
        }
    }
    let n = na + nb;
    let mut entries = Vec::new();
    for i in 0..na {
        for j in i + 1..na {
            let v = a.bracket_basis(i, j);
            if !is_zero_vec(v) {
                let mut w = linalg::zero_vec(n);
                w[..na].clone_from_slice(v);
                entries.push((i, j, w));
            }
        }
    }
    for i in 0..nb {
        for j in i + 1..nb {
            let v = b.bracket_basis(i, j);
            if !is_zero_vec(v) {
                let mut w = linalg::zero_vec(n);
                w[na..].clone_from_slice(v);
                entries.push((na + i, na + j, w));
            }
        }
    }
    validate(BracketTable {
        name: format!("{}+{}", a.name(), b.name()),
        labels,
        entries,
    })
    .expect("direct sum of valid algebras is valid")
}

/// Coordinate matrix of `x ↦ (x, x)` from `g` into `g ⊕ g` (rows = targets).
pub fn diagonal_embedding(g: &LieAlgebra) -> Matrix {
    let n = g.dim();
    let mut m = linalg::zero_mat(2 * n, n);
    for i in 0..n {
        m[i][i] = Scalar::from_integer(1.into());
        m[n + i][i] = Scalar::from_integer(1.into());
    }
    m
}

/// Half-trace character `x ↦ ½ tr_{g/h} ad x` on the echelon basis of `h`.
pub fn theta(g: &LieAlgebra, h: &VecSpace) -> Result<Vector> {
    if !g.is_subalgebra(h) {
        return Err(Error::NotASubalgebra);
    }
    let comp = h.non_pivots();
    let half = frac(1, 2);
    Ok(h.basis()
        .iter()
        .map(|x| {
            let tr = comp.iter().fold(Scalar::zero(), |acc, &c| {
                let img = h.reduce(&g.bracket(x, &g.basis_vec(c)));
                acc + &img[c]
            });
            tr * &half
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog_algebra;
    use crate::scalar::int;

    fn span(g: &LieAlgebra, labels: &[&str]) -> VecSpace {
        VecSpace::span(g.dim(), labels.iter().map(|l| g.basis_vec(g.index_of(l).unwrap())))
    }

    #[test]
    fn centers() {
        let h3 = catalog_algebra("heisenberg3").unwrap();
        assert_eq!(center(&h3), span(&h3, &["z"]));
        let sl2 = catalog_algebra("sl2").unwrap();
        assert!(center(&sl2).is_zero());
        let ab = catalog_algebra("abelian(2)").unwrap();
        assert_eq!(center(&ab), VecSpace::full(2));
    }

    #[test]
    fn series_examples() {
        let h3 = catalog_algebra("heisenberg3").unwrap();
        let lc = series(&h3, SeriesKind::LowerCentral);
        assert_eq!(lc, vec![VecSpace::full(3), span(&h3, &["z"]), VecSpace::zero(3)]);
        assert!(is_nilpotent(&h3));

        let aff = catalog_algebra("aff1").unwrap();
        let d = series(&aff, SeriesKind::Derived);
        assert_eq!(d, vec![VecSpace::full(2), span(&aff, &["b"]), VecSpace::zero(2)]);
        assert!(is_solvable(&aff) && !is_nilpotent(&aff));

        let sl2 = catalog_algebra("sl2").unwrap();
        assert_eq!(series(&sl2, SeriesKind::Derived), vec![VecSpace::full(3)]);
        assert!(!is_solvable(&sl2));
    }

    #[test]
    fn nilradicals() {
        let h3 = catalog_algebra("heisenberg3").unwrap();
        assert_eq!(nilradical(&h3).unwrap(), VecSpace::full(3));
        let aff = catalog_algebra("aff1").unwrap();
        assert_eq!(nilradical(&aff).unwrap(), span(&aff, &["b"]));
        let sum = direct_sum(&catalog_algebra("abelian(1)").unwrap(), &aff);
        assert_eq!(nilradical(&sum).unwrap(), span(&sum, &["t1", "b"]));
        assert_eq!(nilradical(&catalog_algebra("sl2").unwrap()), Err(Error::NotSolvable));
        let osc = catalog_algebra("oscillator").unwrap();
        assert_eq!(nilradical(&osc).unwrap(), span(&osc, &["p", "q", "z"]));
    }

    #[test]
    fn nilradical_with_irrational_eigenvalues() {
        // ad t rotates (p, q) by a companion matrix with eigenvalues ±i: the
        // trace-form test must still exclude t.
        let raw = BracketTable {
            name: "rot".into(),
            labels: vec!["t".into(), "p".into(), "q".into()],
            entries: vec![
                (0, 1, vec![int(0), int(0), int(1)]),
                (0, 2, vec![int(0), int(-1), int(0)]),
            ],
        };
        let g = validate(raw).unwrap();
        assert_eq!(nilradical(&g).unwrap(), span(&g, &["p", "q"]));
    }

    #[test]
    fn quotients_and_sums() {
        let h3 = catalog_algebra("heisenberg3").unwrap();
        let q = quotient(&h3, &span(&h3, &["z"])).unwrap();
        assert!(q.algebra.is_abelian());
        assert_eq!(q.algebra.dim(), 2);
        assert_eq!(quotient(&h3, &span(&h3, &["x"])).unwrap_err(), Error::NotAnIdeal);

        let aff = catalog_algebra("aff1").unwrap();
        let s = direct_sum(&aff, &aff);
        assert_eq!(s.dim(), 4);
        assert_eq!(s.labels(), &["a.1", "b.1", "a.2", "b.2"]);
        assert!(is_zero_vec(s.bracket_basis(0, 3)));
        assert_eq!(s.bracket_basis(2, 3), &vec![int(0), int(0), int(0), int(1)]);
        let diag = diagonal_embedding(&aff);
        // the diagonal image is a subalgebra
        let img = VecSpace::span(4, linalg::transpose(&diag, 2));
        assert!(s.is_subalgebra(&img));
    }

    #[test]
    fn theta_examples() {
        let aff = catalog_algebra("aff1").unwrap();
        assert_eq!(theta(&aff, &span(&aff, &["b"])).unwrap(), vec![int(0)]);
        assert_eq!(theta(&aff, &span(&aff, &["a"])).unwrap(), vec![frac(1, 2)]);
        let h3 = catalog_algebra("heisenberg3").unwrap();
        assert_eq!(theta(&h3, &span(&h3, &["x"])).unwrap(), vec![int(0)]);
        let not_sub = VecSpace::span(2, [vec![int(1), int(1)]]).sum(&VecSpace::zero(2));
        assert!(theta(&aff, &not_sub).is_ok());
        let osc = catalog_algebra("oscillator").unwrap();
        assert_eq!(
            theta(&osc, &span(&osc, &["p", "q"])).unwrap_err(),
            Error::NotASubalgebra
        );
        assert_eq!(theta(&h3, &span(&h3, &["y", "z"])).unwrap(), vec![int(0), int(0)]);
    }
}
