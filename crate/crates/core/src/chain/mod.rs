//! Chain presentations: one generator per ideal handle, relations from
//! weak containments in tensor products, duals and the trivial module.
//!
//! Only the abelianization of the presented group is computed.

pub mod fixtures;
mod snf;

pub use fixtures::{build_fixture, FixtureEntry, FIXTURES};
pub use snf::{smith_diagonal, AbelianGroup};

use std::collections::BTreeMap;
use std::fmt;

use indexmap::IndexMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::highest_weight::RootSystem;
use crate::linalg::{rank, Matrix};
use crate::scalar::{format_scalar, parse_scalar, Scalar};

/// `Product(a, b, c)` is `g_a = g_b · g_c`; `Inverse(a, b)` is `g_b = g_a⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChainRelation {
    Product(String, String, String),
    Unit(String),
    Inverse(String, String),
}

impl ChainRelation {
    pub fn args(&self) -> Vec<&str> {
        match self {
            ChainRelation::Product(a, b, c) => vec![a, b, c],
            ChainRelation::Unit(a) => vec![a],
            ChainRelation::Inverse(a, b) => vec![a, b],
        }
    }

    fn map(&self, f: impl Fn(&str) -> String) -> Self {
        match self {
            ChainRelation::Product(a, b, c) => ChainRelation::Product(f(a), f(b), f(c)),
            ChainRelation::Unit(a) => ChainRelation::Unit(f(a)),
            ChainRelation::Inverse(a, b) => ChainRelation::Inverse(f(a), f(b)),
        }
    }

    /// Integer coefficients of the relation as a vector `a - b - c`, `a`, `a + b`.
    fn coefficients(&self) -> Vec<(&str, i64)> {
        match self {
            ChainRelation::Product(a, b, c) => vec![(a, 1), (b, -1), (c, -1)],
            ChainRelation::Unit(a) => vec![(a, 1)],
            ChainRelation::Inverse(a, b) => vec![(a, 1), (b, 1)],
        }
    }
}

impl fmt::Display for ChainRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainRelation::Product(a, b, c) => write!(f, "g[{a}] = g[{b}] g[{c}]"),
            ChainRelation::Unit(a) => write!(f, "g[{a}] = 1"),
            ChainRelation::Inverse(a, b) => write!(f, "g[{b}] = g[{a}]^-1"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ChainPresentation {
    generators: IndexMap<String, Option<Vec<Scalar>>>,
    relations: Vec<ChainRelation>,
}

#[derive(Serialize, Deserialize)]
struct GeneratorJson {
    id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    character: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct RelationJson {
    #[serde(rename = "type")]
    kind: String,
    args: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    generators: Vec<GeneratorJson>,
    relations: Vec<RelationJson>,
}

impl ChainPresentation {
    pub fn new() -> Self {
        Self::default()
    }

    /// Generators are keyed by ideal handle; re-adding a handle keeps the
    /// first entry and fills in a missing character.
    pub fn add_generator(&mut self, id: impl Into<String>, character: Option<Vec<Scalar>>) {
        let slot = self.generators.entry(id.into()).or_insert(None);
        if slot.is_none() {
            *slot = character;
        }
    }

    pub fn add_relation(&mut self, rel: ChainRelation) -> Result<()> {
        if let Some(bad) = rel.args().into_iter().find(|a| !self.generators.contains_key(*a)) {
            return Err(Error::UnknownGenerator(bad.to_string()));
        }
        self.relations.push(rel);
        Ok(())
    }

    /// One generator per distinct handle and one relation per instance.
    pub fn build<G, R>(generators: G, relations: R) -> Result<Self>
    where
        G: IntoIterator<Item = (String, Option<Vec<Scalar>>)>,
        R: IntoIterator<Item = ChainRelation>,
    {
        let mut p = Self::new();
        for (id, ch) in generators {
            p.add_generator(id, ch);
        }
        for r in relations {
            p.add_relation(r)?;
        }
        Ok(p)
    }

    pub fn generators(&self) -> impl Iterator<Item = &str> {
        self.generators.keys().map(String::as_str)
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn character(&self, id: &str) -> Option<&[Scalar]> {
        self.generators.get(id).and_then(|c| c.as_deref())
    }

    pub fn relations(&self) -> &[ChainRelation] {
        &self.relations
    }

    /// Identifies `J` with `J'` for every pair. Each class is represented by
    /// its first generator in declaration order, so the result does not
    /// depend on the order of the pairs.
    pub fn merge_by_inclusion(&self, pairs: &[(String, String)]) -> Result<Self> {
        let n = self.generators.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let idx = |id: &str| {
            self.generators
                .get_index_of(id)
                .ok_or_else(|| Error::UnknownGenerator(id.to_string()))
        };
        for (a, b) in pairs {
            let (ra, rb) = (find(&mut parent, idx(a)?), find(&mut parent, idx(b)?));
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            parent[hi] = lo;
        }
        let rep: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
        let mut out = Self::new();
        for (i, (id, ch)) in self.generators.iter().enumerate() {
            if rep[i] == i {
                out.add_generator(id.clone(), ch.clone());
            }
        }
        let name = |id: &str| {
            let i = self.generators.get_index_of(id).expect("validated on insert");
            self.generators.get_index(rep[i]).expect("in range").0.clone()
        };
        out.relations = self.relations.iter().map(|r| r.map(name)).collect();
        Ok(out)
    }

    /// Integer relation matrix, one row per relation.
    pub fn relation_matrix(&self) -> Vec<Vec<BigInt>> {
        self.relations
            .iter()
            .map(|r| {
                let mut row = vec![BigInt::zero(); self.generators.len()];
                for (id, c) in r.coefficients() {
                    row[self.generators.get_index_of(id).expect("validated on insert")] += c;
                }
                row
            })
            .collect()
    }

    pub fn abelian_invariants(&self) -> AbelianGroup {
        AbelianGroup::presented(&self.relation_matrix(), self.generators.len())
    }

    pub fn to_json_string(&self) -> String {
        let doc = PresentationJson {
            generators: self
                .generators
                .iter()
                .map(|(id, ch)| GeneratorJson {
                    id: id.clone(),
                    character: ch.as_ref().map(|c| c.iter().map(format_scalar).collect()),
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| RelationJson {
                    kind: match r {
                        ChainRelation::Product(..) => "product",
                        ChainRelation::Unit(_) => "unit",
                        ChainRelation::Inverse(..) => "inverse",
                    }
                    .into(),
                    args: r.args().into_iter().map(String::from).collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: PresentationJson = serde_json::from_str(s)?;
        let mut p = Self::new();
        for g in doc.generators {
            let ch = g
                .character
                .map(|c| c.iter().map(|x| parse_scalar(x)).collect::<Result<Vec<_>>>())
                .transpose()?;
            p.add_generator(g.id, ch);
        }
        for r in doc.relations {
            let arity = match r.kind.as_str() {
                "product" => 3,
                "unit" => 1,
                "inverse" => 2,
                other => return Err(Error::Parse(format!("unknown relation type {other}"))),
            };
            if r.args.len() != arity {
                return Err(Error::Parse(format!("{} relation takes {arity} arguments", r.kind)));
            }
            let a = r.args;
            p.add_relation(match arity {
                3 => ChainRelation::Product(a[0].clone(), a[1].clone(), a[2].clone()),
                1 => ChainRelation::Unit(a[0].clone()),
                _ => ChainRelation::Inverse(a[0].clone(), a[1].clone()),
            })?;
        }
        Ok(p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Lattice,
    Rational,
}

/// `Λ / span{wλ - λ}` for `Λ` the weight lattice or the rational weight space.
pub fn weyl_coinvariants(coeffs: Coefficients, rs: &RootSystem) -> AbelianGroup {
    let r = rs.rank();
    // columns of w - id span the relations
    let rows: Vec<Vec<i64>> = rs
        .weyl
        .iter()
        .flat_map(|w| (0..r).map(move |j| (0..r).map(|i| w[i][j] - i64::from(i == j)).collect::<Vec<_>>()))
        .collect();
    match coeffs {
        Coefficients::Lattice => {
            let big: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            AbelianGroup::presented(&big, r)
        }
        Coefficients::Rational => {
            let q: Matrix = rows
                .iter()
                .map(|r| r.iter().map(|&x| Scalar::from_integer(x.into())).collect())
                .collect();
            AbelianGroup::free(r - rank(&q))
        }
    }
}

/// Outcome of comparing the abelianized chain group with the lattice of
/// central characters it maps onto.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CanReport {
    pub generators: usize,
    pub relations: usize,
    pub well_defined: bool,
    pub abelianization: String,
    pub image: String,
    pub isomorphic: bool,
}

impl CanReport {
    pub fn passed(&self) -> bool {
        self.well_defined && self.isomorphic
    }
}

/// Checks that every relation is respected by the central characters and
/// that the abelianization maps isomorphically onto their image lattice.
pub fn can_check(p: &ChainPresentation) -> Result<CanReport> {
    let chars: BTreeMap<&str, &[Scalar]> = p
        .generators
        .iter()
        .map(|(id, c)| {
            c.as_deref()
                .map(|c| (id.as_str(), c))
                .ok_or_else(|| Error::MissingCharacter(id.clone()))
        })
        .collect::<Result<_>>()?;
    let width = chars.values().next().map_or(0, |c| c.len());
    if chars.values().any(|c| c.len() != width) {
        return Err(Error::Invalid("central characters have different lengths".into()));
    }
    for r in &p.relations {
        // defect = (b + c) - a, a, a + b
        let mut defect = vec![Scalar::zero(); width];
        for (id, c) in r.coefficients() {
            for (d, x) in defect.iter_mut().zip(chars[id]) {
                *d -= x * Scalar::from_integer(c.into());
            }
        }
        if matches!(r, ChainRelation::Unit(_) | ChainRelation::Inverse(..)) {
            defect.iter_mut().for_each(|d| *d = -d.clone());
        }
        if defect.iter().any(|d| !d.is_zero()) {
            let text: Vec<String> = defect.iter().map(format_scalar).collect();
            return Err(Error::RelationNotRespected {
                relation: r.to_string(),
                defect: text.join(", "),
            });
        }
    }
    let abel = p.abelian_invariants();
    let image = image_lattice(chars.values().copied(), width);
    Ok(CanReport {
        generators: p.num_generators(),
        relations: p.relations.len(),
        well_defined: true,
        isomorphic: abel == image,
        abelianization: abel.to_string(),
        image: image.to_string(),
    })
}

/// Subgroup of `Q^k` generated by the given vectors: free of rank equal to
/// the rational rank of the span.
fn image_lattice<'a>(vectors: impl Iterator<Item = &'a [Scalar]>, width: usize) -> AbelianGroup {
    let rows: Vec<Vec<Scalar>> = vectors.map(|v| v.to_vec()).collect();
    let den = rows.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| (x * Scalar::from_integer(den.clone())).to_integer())
                .collect()
        })
        .collect();
    let diag = smith_diagonal(&ints, width);
    AbelianGroup::free(diag.iter().filter(|d| !d.is_zero()).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::highest_weight::{root_system, RootType};
    use crate::scalar::int;

    fn ids(xs: &[&str]) -> Vec<(String, Option<Vec<Scalar>>)> {
        xs.iter().map(|x| (x.to_string(), None)).collect()
    }

    #[test]
    fn free_without_relations() {
        let p = ChainPresentation::build(ids(&["a", "b", "c"]), []).unwrap();
        assert_eq!(p.abelian_invariants().to_string(), "Z^3");
    }

    #[test]
    fn unknown_generator() {
        let r = ChainPresentation::build(ids(&["a"]), [ChainRelation::Unit("b".into())]);
        assert_eq!(r, Err(Error::UnknownGenerator("b".into())));
    }

    #[test]
    fn merge_is_transitive_and_idempotent() {
        let p = ChainPresentation::build(ids(&["j", "k", "l"]), []).unwrap();
        let pairs = vec![("k".to_string(), "l".to_string()), ("j".to_string(), "k".to_string())];
        let m = p.merge_by_inclusion(&pairs).unwrap();
        assert_eq!(m.num_generators(), 1);
        let mut rev = pairs.clone();
        rev.reverse();
        assert_eq!(p.merge_by_inclusion(&rev).unwrap(), m);
        assert_eq!(p.merge_by_inclusion(&[]).unwrap(), p);
    }

    #[test]
    fn coinvariants() {
        let a1 = root_system(RootType::A1).unwrap();
        let a2 = root_system(RootType::A2).unwrap();
        assert_eq!(weyl_coinvariants(Coefficients::Lattice, &a1).to_string(), "Z/2");
        assert_eq!(weyl_coinvariants(Coefficients::Lattice, &a2).to_string(), "Z/3");
        assert!(weyl_coinvariants(Coefficients::Rational, &a1).is_trivial());
        assert!(weyl_coinvariants(Coefficients::Rational, &a2).is_trivial());
    }

    #[test]
    fn corrupted_relation_is_rejected() {
        let gens = [("1", 1), ("3", 3)].map(|(id, c)| (id.to_string(), Some(vec![int(c)])));
        let rel = ChainRelation::Product("3".into(), "1".into(), "1".into());
        let p = ChainPresentation::build(gens, [rel]).unwrap();
        match can_check(&p) {
            Err(Error::RelationNotRespected { defect, .. }) => assert_eq!(defect, "-1"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn json_round_trip() {
        let gens = [("a", 1), ("b", 2)].map(|(id, c)| (id.to_string(), Some(vec![int(c)])));
        let p = ChainPresentation::build(
            gens,
            [
                ChainRelation::Product("b".into(), "a".into(), "a".into()),
                ChainRelation::Inverse("a".into(), "a".into()),
            ],
        )
        .unwrap();
        let back = ChainPresentation::from_json_str(&p.to_json_string()).unwrap();
        assert_eq!(back, p);
        assert!(ChainPresentation::from_json_str(r#"{"generators":[],"relations":[{"type":"x","args":[]}]}"#).is_err());
    }
}
