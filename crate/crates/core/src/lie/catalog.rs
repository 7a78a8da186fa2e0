//! Built-in algebras. Every eigenvalue and character the checks need is
//! rational for these, so nothing requires an algebraic closure.

use super::{validate, BracketTable, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{zero_mat, Matrix, Vector};
use crate::scalar::{int, zero};

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub note: &'static str,
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "abelian(n)",
        note: "abelian algebra on t1..tn; center is everything",
    },
    CatalogEntry {
        name: "heisenberg3",
        note: "[x,y]=z; nilpotent, one-dimensional center",
    },
    CatalogEntry {
        name: "heisenberg5",
        note: "[x1,y1]=[x2,y2]=z; nilpotent, one-dimensional center",
    },
    CatalogEntry {
        name: "aff1",
        note: "[a,b]=b; faithful simple shift module, trivial chain group",
    },
    CatalogEntry {
        name: "oscillator",
        note: "split form [t,p]=p, [t,q]=-q, [p,q]=z; solvable, nilradical span{p,q,z}",
    },
    CatalogEntry {
        name: "sl2",
        note: "Chevalley basis e<h<f; semisimple, type A1",
    },
    CatalogEntry {
        name: "sl3",
        note: "Chevalley basis e1,e2,e3,h1,h2,f1,f2,f3; semisimple, type A2",
    },
];

pub fn catalog_names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name).collect()
}

/// `([a, b], [(c, k), ...])` meaning `[a, b] = Σ k c`.
type Bracket<'a> = (&'a str, &'a str, &'a [(&'a str, i64)]);

fn table(name: &str, labels: &[&str], brackets: &[Bracket]) -> LieAlgebra {
    let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    let idx = |l: &str| labels.iter().position(|x| x == l).unwrap();
    let entries = brackets
        .iter()
        .map(|(i, j, val)| {
            let mut v: Vector = vec![zero(); labels.len()];
            for (l, c) in val.iter() {
                v[idx(l)] = int(*c);
            }
            (idx(i), idx(j), v)
        })
        .collect();
    validate(BracketTable {
        name: name.into(),
        labels: labels.clone(),
        entries,
    })
    .expect("catalog algebra is valid")
}

fn elementary(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = zero_mat(n, n);
    m[i][j] = int(1);
    m
}

fn diag(entries: &[i64]) -> Matrix {
    let n = entries.len();
    let mut m = zero_mat(n, n);
    for (i, &e) in entries.iter().enumerate() {
        m[i][i] = int(e);
    }
    m
}

/// Chevalley basis of `sl(n)` for `n = 2, 3` as defining-representation
/// matrices, in catalog basis order.
pub fn sl_matrices(n: usize) -> Option<(Vec<&'static str>, Vec<Matrix>)> {
    match n {
        2 => Some((
            vec!["e", "h", "f"],
            vec![elementary(2, 0, 1), diag(&[1, -1]), elementary(2, 1, 0)],
        )),
        3 => Some((
            vec!["e1", "e2", "e3", "h1", "h2", "f1", "f2", "f3"],
            vec![
                elementary(3, 0, 1),
                elementary(3, 1, 2),
                elementary(3, 0, 2),
                diag(&[1, -1, 0]),
                diag(&[0, 1, -1]),
                elementary(3, 1, 0),
                elementary(3, 2, 1),
                elementary(3, 2, 0),
            ],
        )),
        _ => None,
    }
}

fn abelian(n: usize) -> Result<LieAlgebra> {
    if n == 0 {
        return Err(Error::Invalid("abelian(0) has no basis".into()));
    }
    validate(BracketTable {
        name: format!("abelian({n})"),
        labels: (1..=n).map(|i| format!("t{i}")).collect(),
        entries: Vec::new(),
    })
}

pub fn catalog_algebra(name: &str) -> Result<LieAlgebra> {
    let n = name.trim();
    if let Some(rest) = n.strip_prefix("abelian") {
        let digits = rest.trim_start_matches('(').trim_end_matches(')');
        let k: usize = digits.parse().map_err(|_| Error::UnknownCatalogEntry(name.into()))?;
        return abelian(k);
    }
    Ok(match n {
        "heisenberg3" | "h3" => table("heisenberg3", &["x", "y", "z"], &[("x", "y", &[("z", 1)])]),
        "heisenberg5" | "h5" => table(
            "heisenberg5",
            &["x1", "x2", "y1", "y2", "z"],
            &[("x1", "y1", &[("z", 1)]), ("x2", "y2", &[("z", 1)])],
        ),
        "aff1" => table("aff1", &["a", "b"], &[("a", "b", &[("b", 1)])]),
        "oscillator" => table(
            "oscillator",
            &["t", "p", "q", "z"],
            &[
                ("t", "p", &[("p", 1)]),
                ("t", "q", &[("q", -1)]),
                ("p", "q", &[("z", 1)]),
            ],
        ),
        "sl2" | "sl3" => {
            let k = if n == "sl2" { 2 } else { 3 };
            let (labels, mats) = sl_matrices(k).unwrap();
            LieAlgebra::from_matrices(n, &labels, &mats)?
        }
        _ => return Err(Error::UnknownCatalogEntry(name.into())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_catalog_entry_builds() {
        for e in CATALOG {
            let name = e.name.replace("(n)", "(3)");
            let g = catalog_algebra(&name).unwrap();
            assert!(g.dim() > 0);
        }
        assert!(catalog_algebra("nope").is_err());
        assert_eq!(catalog_algebra("abelian2").unwrap().dim(), 2);
    }

    #[test]
    fn sl2_brackets() {
        let g = catalog_algebra("sl2").unwrap();
        // [h,e]=2e, [h,f]=-2f, [e,f]=h
        assert_eq!(g.bracket_basis(1, 0), &vec![int(2), int(0), int(0)]);
        assert_eq!(g.bracket_basis(1, 2), &vec![int(0), int(0), int(-2)]);
        assert_eq!(g.bracket_basis(0, 2), &vec![int(0), int(1), int(0)]);
    }

    #[test]
    fn sl3_dimension() {
        let g = catalog_algebra("sl3").unwrap();
        assert_eq!(g.dim(), 8);
        assert!(crate::lie::center(&g).is_zero());
    }
}
