#![allow(dead_code)]

use std::collections::BTreeMap;

use liechain::enveloping::{filtration_basis, Enveloping, Monomial, Tensor2, UElement};
use liechain::Scalar;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn small_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let n: i64 = rng.gen_range(-3..=3);
        if n != 0 {
            return Scalar::new(n.into(), rng.gen_range(1i64..=2).into());
        }
    }
}

/// Up to `terms` random PBW monomials of degree at most `deg`.
pub fn random_element(env: &Enveloping, rng: &mut ChaCha8Rng, deg: u32, terms: usize) -> UElement {
    let basis = filtration_basis(env.dim(), deg);
    let mut u = env.zero();
    for _ in 0..rng.gen_range(1..=terms) {
        let m = basis[rng.gen_range(0..basis.len())].clone();
        u.add_term(m, small_scalar(rng));
    }
    u
}

fn mono(m: &Monomial) -> UElement {
    UElement::monomial(m.clone(), Scalar::one())
}

fn eps(m: &Monomial) -> Scalar {
    if m.is_one() {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

type Tensor3 = BTreeMap<(Monomial, Monomial, Monomial), Scalar>;

fn add3(t: &mut Tensor3, k: (Monomial, Monomial, Monomial), c: Scalar) {
    let e = t.entry(k).or_insert_with(Scalar::zero);
    *e += c;
}

fn clean3(t: Tensor3) -> Tensor3 {
    t.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Each Hopf axiom on a single element, written directly from the
/// definitions on tensors of monomials.
pub fn hopf_axioms(env: &Enveloping, a: &UElement, b: &UElement, c: &UElement) -> Vec<(&'static str, bool)> {
    let delta = env.coproduct(a);
    let one_eps = env.one().scale(&env.counit(a));

    let mut left = Tensor3::new();
    let mut right = Tensor3::new();
    for ((m1, m2), k) in &delta {
        for ((p, q), k2) in env.coproduct(&mono(m1)) {
            add3(&mut left, (p, q, m2.clone()), k * k2);
        }
        for ((p, q), k2) in env.coproduct(&mono(m2)) {
            add3(&mut right, (m1.clone(), p, q), k * k2);
        }
    }

    let mut eps_left = env.zero();
    let mut eps_right = env.zero();
    let mut s_left = env.zero();
    let mut s_right = env.zero();
    let mut swapped = Tensor2::new();
    for ((m1, m2), k) in &delta {
        eps_left.add_scaled(&(k * eps(m1)), &mono(m2));
        eps_right.add_scaled(&(k * eps(m2)), &mono(m1));
        s_left.add_scaled(k, &env.mul(&env.antipode(&mono(m1)), &mono(m2)));
        s_right.add_scaled(k, &env.mul(&mono(m1), &env.antipode(&mono(m2))));
        swapped.insert((m2.clone(), m1.clone()), k.clone());
    }

    vec![
        (
            "associativity",
            env.mul(&env.mul(a, b), c) == env.mul(a, &env.mul(b, c)),
        ),
        ("coassociativity", clean3(left) == clean3(right)),
        ("counit", eps_left == *a && eps_right == *a),
        ("antipode", s_left == one_eps && s_right == one_eps),
        ("cocommutativity", swapped == delta),
        ("antipode squared", env.antipode(&env.antipode(a)) == *a),
        (
            "antipode anti-multiplicative",
            env.antipode(&env.mul(a, b)) == env.mul(&env.antipode(b), &env.antipode(a)),
        ),
    ]
}

/// `C(n + d, d)`, the number of monomials of degree at most `d` in `n` variables.
pub fn pbw_count(n: usize, d: u32) -> usize {
    let mut c: u128 = 1;
    for i in 1..=d as u128 {
        c = c * (n as u128 + i) / i;
    }
    c as usize
}
