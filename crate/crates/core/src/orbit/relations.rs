use num_traits::Zero;
use serde::Serialize;

use super::{dixmier_ideal, dixmier_module, format_functional, DixmierIdeal, FlagOrder};
use crate::enveloping::{Enveloping, FiltrationCoords, TruncatedIdeal, UElement};
use crate::error::{Error, Result};
use crate::lie::{derived_algebra, nilradical, solve_coords, theta, LieAlgebra};
use crate::linalg::{dot, VecSpace, Vector};
use crate::rep::{
    act_gen, basis_modvec, kernel_truncated, modvec_add, InducedModule, Inducing, Key, MatrixRep, ModVec, ModuleHandle,
    UModule,
};
use crate::scalar::{binomial, Scalar};

/// Relation instances checked at truncation.
#[derive(Clone, Debug, PartialEq)]
pub enum Relation {
    /// `I(f) ∩ U(g') ⊆ I(f|_{g'})` for a subalgebra `g'`.
    ResNil { sub: VecSpace, f: Vector },
    /// `ker(M_f ⊗ M_{f'}) ⊆ I(f + f')`.
    TensNil { f: Vector, f2: Vector },
    /// `ker(M_f ⊗ λ) ⊆ I(f + λ)` for a character `λ`.
    Shift { f: Vector, lambda: Vector },
    /// `S(I(f)) = I(-f)`.
    Antipode { f: Vector },
    /// `ker(M_f ⊗ M_{f'}) ⊆ ker(M_{f+f'} ⊗ λ)` for a twist `λ` vanishing on the nilradical.
    IndResTw { f: Vector, f2: Vector },
}

impl Relation {
    pub fn kind(&self) -> &'static str {
        match self {
            Relation::ResNil { .. } => "resnil",
            Relation::TensNil { .. } => "tensnil",
            Relation::Shift { .. } => "shift",
            Relation::Antipode { .. } => "antipode",
            Relation::IndResTw { .. } => "indrestw",
        }
    }

    /// Module level at which every kernel the check computes is certified.
    pub fn required_level(&self, g: &LieAlgebra, d: u32) -> usize {
        let n = g.dim();
        match self {
            Relation::TensNil { .. } | Relation::IndResTw { .. } => d as usize * (2 * n + 1),
            _ => d as usize * (n + 1),
        }
    }

    fn instance(&self, g: &LieAlgebra) -> String {
        let name = g.name();
        match self {
            Relation::ResNil { sub, f } => {
                format!("{name} f={} g'={}", format_functional(f), g.format_subspace(sub))
            }
            Relation::TensNil { f, f2 } | Relation::IndResTw { f, f2 } => {
                format!("{name} f={} f'={}", format_functional(f), format_functional(f2))
            }
            Relation::Shift { f, lambda } => {
                format!("{name} f={} lambda={}", format_functional(f), format_functional(lambda))
            }
            Relation::Antipode { f } => format!("{name} f={}", format_functional(f)),
        }
    }
}

/// Truncation parameters: PBW degree `d` and module level `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Truncation {
    pub d: u32,
    #[serde(rename = "L")]
    pub level: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationReport {
    pub kind: String,
    pub instance: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub truncation: Truncation,
    pub certified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
}

impl RelationReport {
    /// `CheckFailed` carrying the witness when the relation does not hold.
    pub fn into_result(self) -> Result<Self> {
        if self.holds {
            Ok(self)
        } else {
            Err(Error::CheckFailed(format!(
                "{} on {}: witness {}",
                self.kind,
                self.instance,
                self.witness.as_deref().unwrap_or("-")
            )))
        }
    }
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn check_len(g: &LieAlgebra, f: &[Scalar]) -> Result<()> {
    if f.len() == g.dim() {
        Ok(())
    } else {
        Err(Error::Invalid(format!("functional needs {} values", g.dim())))
    }
}

/// First basis element of `a` outside `b`.
fn first_outside(a: &TruncatedIdeal, b: &TruncatedIdeal) -> Option<UElement> {
    a.basis().into_iter().find(|u| !b.contains(u))
}

/// Runs a relation check. A failed check is reported with a witness rather
/// than as an error; see [`RelationReport::into_result`].
pub fn check_relation(
    env: &Enveloping,
    rel: &Relation,
    trunc: Truncation,
    strict: bool,
    order: FlagOrder,
) -> Result<RelationReport> {
    let g = env.algebra();
    let Truncation { d, level } = trunc;
    let dix = |f: &[Scalar]| -> Result<DixmierIdeal> { dixmier_ideal(env, f, d, level, strict, order) };
    let module = |f: &[Scalar]| -> Result<InducedModule> { Ok(dixmier_module(g, f, level, order)?.1) };
    let mut lambda_text = None;
    let (witness, certified) = match rel {
        Relation::ResNil { sub, f } => {
            check_len(g, f)?;
            let gsub = g.subalgebra(sub)?;
            let env_sub = Enveloping::new(gsub);
            let i = dix(f)?.ideal;
            let fsub: Vector = sub.basis().iter().map(|r| dot(f, r)).collect();
            let i_sub = dixmier_ideal(&env_sub, &fsub, d, level, strict, order)?.ideal;
            // U_{≤d}(g') inside U_{≤d}(g)
            let coords = FiltrationCoords::new(g.dim(), d);
            let sub_coords = FiltrationCoords::new(sub.dim(), d);
            let images: Vec<Vector> = sub_coords
                .monomials()
                .iter()
                .map(|m| {
                    let u = UElement::monomial(m.clone(), Scalar::from_integer(1.into()));
                    coords
                        .to_vector(&env.push_forward(&env_sub, sub.basis(), &u))
                        .expect("degree preserved")
                })
                .collect();
            let embedded = VecSpace::span(coords.len(), images.iter().cloned());
            let meet = i.space().intersection(&embedded);
            let witness = meet
                .basis()
                .iter()
                .map(|v| {
                    let c = solve_coords(&images, v).expect("inside the image");
                    sub_coords.to_element(&c)
                })
                .find(|u| !i_sub.contains(u))
                .map(|u| env_sub.format(&u));
            let cert = if witness.is_none() {
                i_sub.certified
            } else {
                i.certified
            };
            (witness, cert)
        }
        Relation::TensNil { f, f2 } => {
            check_len(g, f)?;
            check_len(g, f2)?;
            let t = ModuleHandle::tensor(module(f)?, module(f2)?)?;
            let k = kernel_truncated(env, &t, d, strict)?;
            let i = dix(&add(f, f2))?.ideal;
            let w = first_outside(&k, &i);
            let cert = if w.is_none() { i.certified } else { k.certified };
            (w.map(|u| env.format(&u)), cert)
        }
        Relation::Shift { f, lambda } => {
            check_len(g, f)?;
            let chi = MatrixRep::character(g, lambda)?;
            let t = ModuleHandle::tensor(module(f)?, chi)?;
            let k = kernel_truncated(env, &t, d, strict)?;
            let i = dix(&add(f, lambda))?.ideal;
            let w = first_outside(&k, &i);
            let cert = if w.is_none() { i.certified } else { k.certified };
            (w.map(|u| env.format(&u)), cert)
        }
        Relation::Antipode { f } => {
            check_len(g, f)?;
            let i = dix(f)?.ideal;
            let neg: Vector = f.iter().map(|c| -c.clone()).collect();
            let j = dix(&neg)?.ideal;
            let s = i.map(|u| env.antipode(u))?;
            let w = first_outside(&s, &j).or_else(|| first_outside(&j, &s));
            (w.map(|u| env.format(&u)), i.certified && j.certified)
        }
        Relation::IndResTw { f, f2 } => {
            check_len(g, f)?;
            check_len(g, f2)?;
            let (p1, m1) = dixmier_module(g, f, level, order)?;
            let (p2, m2) = dixmier_module(g, f2, level, order)?;
            let lambda = twist_functional(g, &p1.h, &p2.h)?;
            lambda_text = Some(format_functional(&lambda));
            let k = kernel_truncated(env, &ModuleHandle::tensor(m1, m2)?, d, strict)?;
            let chi = MatrixRep::character(g, &lambda)?;
            let r = kernel_truncated(env, &ModuleHandle::tensor(module(&add(f, f2))?, chi)?, d, strict)?;
            let w = first_outside(&k, &r);
            let cert = if w.is_none() { r.certified } else { k.certified };
            (w.map(|u| env.format(&u)), cert)
        }
    };
    Ok(RelationReport {
        kind: rel.kind().to_string(),
        instance: rel.instance(g),
        holds: witness.is_none(),
        witness,
        truncation: trunc,
        certified,
        lambda: lambda_text,
    })
}

/// A character `λ` of `g` vanishing on `n + [g, g]` whose restriction to
/// `k = h ∩ h'` is `θ_{g,h} + θ_{g,h'} - θ_{g,k}`.
pub fn twist_functional(g: &LieAlgebra, h: &VecSpace, h2: &VecSpace) -> Result<Vector> {
    let k = h.intersection(h2);
    let on = |sub: &VecSpace, th: &Vector, v: &Vector| -> Scalar {
        dot(th, &sub.coords(v).expect("v lies in the subspace"))
    };
    let (t1, t2, tk) = (theta(g, h)?, theta(g, h2)?, theta(g, &k)?);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (i, v) in k.basis().iter().enumerate() {
        rows.push(v.clone());
        rhs.push(on(h, &t1, v) + on(h2, &t2, v) - tk[i].clone());
    }
    let kill = nilradical(g)?.sum(&derived_algebra(g));
    for w in kill.basis() {
        rows.push(w.clone());
        rhs.push(Scalar::zero());
    }
    let nrows = rows.len();
    if nrows == 0 {
        return Ok(vec![Scalar::zero(); g.dim()]);
    }
    crate::lie::solve(&rows, &rhs, nrows).ok_or(Error::NoWitness)
}

/// Outcome of the push-pull isomorphism check
/// `Ind_h(W ⊗ λ|_h) ≅ Ind_h(W) ⊗ λ` on probe vectors.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PushPullReport {
    pub intertwines: bool,
    pub mutually_inverse: bool,
    pub vectors_checked: usize,
}

/// Checks that `x^α ⊗ w ↦ Σ_β C(α, β) λ^{α-β} x^β ⊗ w ⊗ 1` intertwines the
/// two modules and is inverted by the same formula with `-λ`.
pub fn push_pull_check(
    g: &LieAlgebra,
    h: &VecSpace,
    w: &[Scalar],
    lambda: &[Scalar],
    level: usize,
) -> Result<PushPullReport> {
    let chi = MatrixRep::character(g, lambda)?;
    let lam_h: Vector = h.basis().iter().map(|r| dot(lambda, r)).collect();
    let a = InducedModule::new(g, h, Inducing::Functional(add(w, &lam_h)), false, level)?;
    let base = InducedModule::new(g, h, Inducing::Functional(w.to_vec()), false, level)?;
    let b = ModuleHandle::tensor(base, chi)?;
    let comp = h.non_pivots();
    let nc = comp.len();
    let lam_c: Vec<Scalar> = comp.iter().map(|&q| lambda[q].clone()).collect();

    let expand = |alpha: &[u32], sign: i64| -> Vec<(Vec<u32>, Scalar)> {
        let mut out = Vec::new();
        let mut beta = vec![0u32; nc];
        loop {
            let mut c = Scalar::from_integer(1.into());
            for i in 0..nc {
                c *= binomial(alpha[i], beta[i]);
                for _ in beta[i]..alpha[i] {
                    c *= &lam_c[i] * Scalar::from_integer(sign.into());
                }
            }
            out.push((beta.clone(), c));
            let mut i = 0;
            while i < nc && beta[i] == alpha[i] {
                beta[i] = 0;
                i += 1;
            }
            if i == nc {
                return out;
            }
            beta[i] += 1;
        }
    };
    let to_b = |alpha: &[u32]| -> Key {
        let mut k = vec![nc as u32 + 1];
        k.extend_from_slice(alpha);
        k.push(0);
        k.push(0);
        k
    };
    let phi = |v: &ModVec| -> ModVec {
        let mut out = ModVec::new();
        for (k, c) in v {
            for (beta, e) in expand(&k[..nc], 1) {
                modvec_add(&mut out, to_b(&beta), c * e);
            }
        }
        out
    };
    let psi = |v: &ModVec| -> ModVec {
        let mut out = ModVec::new();
        for (k, c) in v {
            let alpha = &k[1..1 + nc];
            for (mut beta, e) in expand(alpha, -1) {
                beta.push(0);
                modvec_add(&mut out, beta, c * e);
            }
        }
        out
    };
    let probes = a.basis_to_level(level.saturating_sub(1));
    let mut intertwines = true;
    let mut inverse = true;
    for key in &probes {
        let v = basis_modvec(key.clone());
        let pv = phi(&v);
        inverse &= psi(&pv) == v;
        for i in 0..g.dim() {
            intertwines &= phi(&act_gen(&a, i, &v)?) == act_gen(&b, i, &pv)?;
        }
    }
    Ok(PushPullReport {
        intertwines,
        mutually_inverse: inverse,
        vectors_checked: probes.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog_algebra;
    use crate::scalar::{frac, int};

    fn ints(v: &[i64]) -> Vector {
        v.iter().map(|&x| int(x)).collect()
    }

    fn run(name: &str, rel: Relation, d: u32) -> RelationReport {
        let g = catalog_algebra(name).unwrap();
        let level = rel.required_level(&g, d);
        let env = Enveloping::new(g);
        check_relation(&env, &rel, Truncation { d, level }, true, FlagOrder::Reverse).unwrap()
    }

    #[test]
    fn tensnil_h3() {
        let r = run(
            "heisenberg3",
            Relation::TensNil {
                f: ints(&[0, 0, 1]),
                f2: ints(&[0, 0, 2]),
            },
            1,
        );
        assert!(r.holds && r.certified, "{r:?}");
    }

    #[test]
    fn antipode_h3() {
        let r = run("heisenberg3", Relation::Antipode { f: ints(&[1, 0, 1]) }, 2);
        assert!(r.holds && r.certified, "{r:?}");
    }

    #[test]
    fn resnil_h3_center() {
        let g = catalog_algebra("heisenberg3").unwrap();
        let sub = VecSpace::span(3, vec![g.basis_vec(1), g.basis_vec(2)]);
        let r = run(
            "heisenberg3",
            Relation::ResNil {
                sub,
                f: ints(&[2, 1, 3]),
            },
            1,
        );
        assert!(r.holds && r.certified, "{r:?}");
    }

    #[test]
    fn shift_oscillator() {
        let r = run(
            "oscillator",
            Relation::Shift {
                f: vec![int(0), int(0), int(0), int(1)],
                lambda: vec![frac(1, 2), int(0), int(0), int(0)],
            },
            1,
        );
        assert!(r.holds && r.certified, "{r:?}");
    }

    #[test]
    fn indrestw_aff1() {
        let r = run(
            "aff1",
            Relation::IndResTw {
                f: ints(&[0, 1]),
                f2: ints(&[1, 2]),
            },
            1,
        );
        assert!(r.holds && r.certified, "{r:?}");
        assert!(r.lambda.is_some());
    }

    #[test]
    fn report_json_shape() {
        let g = catalog_algebra("heisenberg3").unwrap();
        let env = Enveloping::new(g.clone());
        let tr = Truncation { d: 1, level: 7 };
        let rel = Relation::TensNil {
            f: ints(&[0, 0, 1]),
            f2: ints(&[0, 0, 1]),
        };
        let ok = check_relation(&env, &rel, tr, true, FlagOrder::Reverse).unwrap();
        assert!(ok.holds);
        let json = serde_json::to_string(&ok).unwrap();
        assert!(json.contains("\"truncation\":{\"d\":1,\"L\":7}"));
        assert!(!json.contains("witness"));
        assert!(ok.clone().into_result().is_ok());
    }

    #[test]
    fn push_pull_on_aff1_and_h3() {
        let aff = catalog_algebra("aff1").unwrap();
        let h = VecSpace::span(2, vec![aff.basis_vec(1)]);
        let r = push_pull_check(&aff, &h, &ints(&[1]), &ints(&[3, 0]), 5).unwrap();
        assert!(r.intertwines && r.mutually_inverse);
        let h3 = catalog_algebra("heisenberg3").unwrap();
        let h = VecSpace::span(3, vec![h3.basis_vec(1), h3.basis_vec(2)]);
        let r = push_pull_check(&h3, &h, &ints(&[0, 1]), &ints(&[2, -1, 0]), 5).unwrap();
        assert!(r.intertwines && r.mutually_inverse);
    }
}
