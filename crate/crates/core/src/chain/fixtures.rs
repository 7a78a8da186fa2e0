//! Shipped chain presentations. Every relation and identification in a
//! fixture is checked when the fixture is built, except in the additive
//! contrast fixture, which is pure weight arithmetic.

use super::{ChainPresentation, ChainRelation};
use crate::enveloping::Enveloping;
use crate::error::{Error, Result};
use crate::highest_weight::{
    central_character_hc, minimal_primitive_truncated, root_system, tensor_hw_vector, verma_certified_level,
    RootSystem, RootType, Weight,
};
use crate::lie::catalog_algebra;
use crate::orbit::{check_relation, FlagOrder, Relation, Truncation};
use crate::rep::{kernel_truncated, weakly_contains, MatrixRep, ShiftModule};
use crate::scalar::{format_scalar, int, Scalar};

#[derive(Clone, Copy, Debug)]
pub struct FixtureEntry {
    pub name: &'static str,
    pub note: &'static str,
}

pub const FIXTURES: &[FixtureEntry] = &[
    FixtureEntry {
        name: "h3-tensnil",
        note: "heisenberg3, f(z) in {±1, ±2, 3}; tensor and antipode relations; abelianizes to Z",
    },
    FixtureEntry {
        name: "a1-delta-grid",
        note: "sl2 weights -2..3; delta-shifted tensor relations and Weyl identifications",
    },
    FixtureEntry {
        name: "a2-delta-grid",
        note: "sl3 weights {-1..2}^2; delta-shifted tensor relations and Weyl identifications",
    },
    FixtureEntry {
        name: "a1-lattice-additive",
        note: "contrast: unshifted additivity with Weyl identifications on the A1 lattice; Z/2",
    },
    FixtureEntry {
        name: "aff1-shift",
        note: "aff1 characters plus the faithful simple shift module; collapses to the trivial group",
    },
];

/// Truncation degree used when verifying fixture relations.
pub const FIXTURE_DEGREE: u32 = 2;

pub fn build_fixture(name: &str) -> Result<ChainPresentation> {
    match name {
        "h3-tensnil" => h3_tensnil(&[-2, -1, 1, 2, 3]),
        "a1-delta-grid" => delta_grid(RootType::A1, &grid(1, -2, 3)),
        "a2-delta-grid" => delta_grid(RootType::A2, &grid(2, -1, 2)),
        "a1-lattice-additive" => lattice_additive(&grid(1, -2, 3)),
        "aff1-shift" => aff1_shift(&[-2, -1, 0, 1, 2]),
        _ => Err(Error::UnknownCatalogEntry(name.into())),
    }
}

/// All integer weights of the given rank with coordinates in `lo..=hi`.
pub fn grid(rank: usize, lo: i64, hi: i64) -> Vec<Weight> {
    let mut out: Vec<Weight> = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|w| {
                (lo..=hi).map(move |c| {
                    let mut w = w.clone();
                    w.push(int(c));
                    w
                })
            })
            .collect();
    }
    out
}

pub fn weight_id(w: &[Scalar]) -> String {
    let parts: Vec<String> = w.iter().map(format_scalar).collect();
    format!("lambda=({})", parts.join(","))
}

fn verified(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::CheckFailed(what()))
    }
}

/// Generators `f(z) = c`; `g_{a+b} = g_a g_b` from the tensor relation and
/// `g_{-c} = g_c⁻¹` from antipode duality.
pub fn h3_tensnil(samples: &[i64]) -> Result<ChainPresentation> {
    let g = catalog_algebra("heisenberg3")?;
    let env = Enveloping::new(g.clone());
    let id = |c: i64| format!("z={c}");
    let f = |c: i64| vec![int(0), int(0), int(c)];
    let d = FIXTURE_DEGREE;
    let mut p = ChainPresentation::new();
    for &c in samples {
        p.add_generator(id(c), Some(vec![int(c)]));
    }
    for (i, &a) in samples.iter().enumerate() {
        for &b in &samples[i..] {
            if !samples.contains(&(a + b)) {
                continue;
            }
            let rel = Relation::TensNil { f: f(a), f2: f(b) };
            let trunc = Truncation {
                d,
                level: rel.required_level(&g, d),
            };
            let rep = check_relation(&env, &rel, trunc, true, FlagOrder::default())?;
            verified(rep.holds && rep.certified, || format!("tensnil {a} {b}"))?;
            p.add_relation(ChainRelation::Product(id(a + b), id(a), id(b)))?;
        }
    }
    for &c in samples {
        if c > 0 && samples.contains(&-c) {
            let rel = Relation::Antipode { f: f(c) };
            let trunc = Truncation {
                d,
                level: rel.required_level(&g, d),
            };
            let rep = check_relation(&env, &rel, trunc, true, FlagOrder::default())?;
            verified(rep.holds && rep.certified, || format!("antipode {c}"))?;
            p.add_relation(ChainRelation::Inverse(id(c), id(-c)))?;
        }
    }
    Ok(p)
}

/// Whether `J_λ = J_μ` is established: equal certified degree-2 Verma
/// kernels for A1, equal Casimir values for A2.
fn same_primitive(rs: &RootSystem, env: &Enveloping, lambda: &[Scalar], mu: &[Scalar]) -> Result<bool> {
    match rs.ty {
        RootType::A1 => {
            let level = verma_certified_level(rs, FIXTURE_DEGREE);
            let a = minimal_primitive_truncated(env, rs, lambda, FIXTURE_DEGREE, level, true)?;
            let b = minimal_primitive_truncated(env, rs, mu, FIXTURE_DEGREE, level, true)?;
            Ok(a.same_space(&b))
        }
        RootType::A2 => Ok(central_character_hc(rs, lambda)? == central_character_hc(rs, mu)?),
    }
}

/// Identifications `J_λ = J_{wλ}` between grid weights, each one checked.
pub fn weyl_pairs(rs: &RootSystem, weights: &[Weight]) -> Result<Vec<(String, String)>> {
    let env = Enveloping::new(rs.algebra().clone());
    let mut pairs = Vec::new();
    for lambda in weights {
        for w in &rs.weyl {
            let image = rs.apply(w, lambda);
            if image != *lambda && weights.contains(&image) {
                verified(same_primitive(rs, &env, lambda, &image)?, || {
                    format!("J{} = J{}", weight_id(lambda), weight_id(&image))
                })?;
                pairs.push((weight_id(lambda), weight_id(&image)));
            }
        }
    }
    Ok(pairs)
}

/// `g_λ g_μ = g_{λ+μ-δ}` from highest-weight vectors in tensor products,
/// before any identification.
pub fn delta_relations(rs: &RootSystem, weights: &[Weight]) -> Result<ChainPresentation> {
    let mut p = ChainPresentation::new();
    for w in weights {
        p.add_generator(weight_id(w), Some(Vec::new()));
    }
    for (i, lambda) in weights.iter().enumerate() {
        for mu in &weights[i..] {
            let product: Weight = lambda
                .iter()
                .zip(mu)
                .zip(&rs.delta)
                .map(|((a, b), d)| a + b - d)
                .collect();
            if !weights.contains(&product) {
                continue;
            }
            let wit = tensor_hw_vector(rs, lambda, mu, 1)?;
            verified(wit.holds(), || {
                format!("top vector {} {}", weight_id(lambda), weight_id(mu))
            })?;
            let r = wit.relation;
            p.add_relation(ChainRelation::Product(
                weight_id(&r.product),
                weight_id(&r.left),
                weight_id(&r.right),
            ))?;
        }
    }
    Ok(p)
}

/// [`delta_relations`] merged along the Weyl identifications.
pub fn delta_grid(ty: RootType, weights: &[Weight]) -> Result<ChainPresentation> {
    let rs = root_system(ty)?;
    delta_relations(&rs, weights)?.merge_by_inclusion(&weyl_pairs(&rs, weights)?)
}

/// `a_λ + a_μ = a_{λ+μ}` with `a_λ = a_{-λ}`.
pub fn lattice_additive(weights: &[Weight]) -> Result<ChainPresentation> {
    let mut p = ChainPresentation::new();
    for w in weights {
        p.add_generator(weight_id(w), Some(Vec::new()));
    }
    let mut pairs = Vec::new();
    for (i, lambda) in weights.iter().enumerate() {
        for mu in &weights[i..] {
            let sum: Weight = lambda.iter().zip(mu).map(|(a, b)| a + b).collect();
            if weights.contains(&sum) {
                p.add_relation(ChainRelation::Product(
                    weight_id(&sum),
                    weight_id(lambda),
                    weight_id(mu),
                ))?;
            }
        }
        let neg: Weight = lambda.iter().map(|c| -c.clone()).collect();
        if neg != *lambda && weights.contains(&neg) {
            pairs.push((weight_id(lambda), weight_id(&neg)));
        }
    }
    p.merge_by_inclusion(&pairs)
}

/// Characters `a ↦ t` of aff1 and the shift module, whose zero kernel lies
/// in every other kernel.
pub fn aff1_shift(ts: &[i64]) -> Result<ChainPresentation> {
    let g = catalog_algebra("aff1")?;
    let env = Enveloping::new(g.clone());
    let d = FIXTURE_DEGREE;
    let chi = |t: i64| MatrixRep::character(&g, &[int(t), int(0)]);
    let id = |t: i64| format!("chi(a={t})");

    let shift = ShiftModule::new(d as usize * (g.dim() + 1));
    let faithful = kernel_truncated(&env, &shift, d, true)?;
    verified(faithful.dim() == 0 && faithful.certified, || {
        "shift module faithful".into()
    })?;
    verified(ShiftModule::simplicity_probe(&[int(1), int(2), int(3)]), || {
        "shift module simple".into()
    })?;

    let mut p = ChainPresentation::new();
    p.add_generator("shift", Some(Vec::new()));
    for &t in ts {
        p.add_generator(id(t), Some(Vec::new()));
    }
    for (i, &s) in ts.iter().enumerate() {
        for &t in &ts[i..] {
            if !ts.contains(&(s + t)) {
                continue;
            }
            let tensor = chi(s)?.tensor(&chi(t)?)?;
            let wc = weakly_contains(&env, &chi(s + t)?, &tensor, d, true)?;
            verified(wc.holds && wc.certified, || format!("characters {s} + {t}"))?;
            p.add_relation(ChainRelation::Product(id(s + t), id(s), id(t)))?;
        }
        if ts.contains(&-s) && s >= 0 {
            verified(chi(s)?.dual() == chi(-s)?, || format!("dual of character {s}"))?;
            p.add_relation(ChainRelation::Inverse(id(s), id(-s)))?;
        }
    }
    if ts.contains(&0) {
        verified(chi(0)?.is_trivial(), || "trivial character".into())?;
        p.add_relation(ChainRelation::Unit(id(0)))?;
    }
    let pairs: Vec<(String, String)> = ts.iter().map(|&t| ("shift".to_string(), id(t))).collect();
    p.merge_by_inclusion(&pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::can_check;

    #[test]
    fn h3_fixture_is_z() {
        let p = build_fixture("h3-tensnil").unwrap();
        assert_eq!(p.abelian_invariants().to_string(), "Z");
        assert!(can_check(&p).unwrap().passed());
    }

    #[test]
    fn a1_delta_grid_is_z2() {
        // a_λ ↦ (λ - 1) mod 2 is well defined on every relation
        let p = build_fixture("a1-delta-grid").unwrap();
        assert_eq!(p.num_generators(), 4);
        assert_eq!(p.abelian_invariants().to_string(), "Z/2");
    }

    #[test]
    fn a2_delta_grid_is_z3() {
        let p = build_fixture("a2-delta-grid").unwrap();
        assert_eq!(p.abelian_invariants().to_string(), "Z/3");
    }

    #[test]
    fn contrast_and_aff1() {
        assert_eq!(
            build_fixture("a1-lattice-additive")
                .unwrap()
                .abelian_invariants()
                .to_string(),
            "Z/2"
        );
        let p = build_fixture("aff1-shift").unwrap();
        assert_eq!(p.num_generators(), 1);
        assert!(p.abelian_invariants().is_trivial());
        assert!(can_check(&p).unwrap().passed());
        assert!(matches!(build_fixture("nope"), Err(Error::UnknownCatalogEntry(_))));
    }
}
