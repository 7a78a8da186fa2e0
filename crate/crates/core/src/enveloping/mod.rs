//! PBW normal forms in the universal enveloping algebra `U(g)` with its Hopf
//! structure, plus degree-truncated two-sided ideals.

mod ideal;
mod text;

pub use ideal::{wedge_truncated, FiltrationCoords, TruncatedIdeal};

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_traits::{One, Zero};

use crate::lie::LieAlgebra;
use crate::scalar::{binomial, Scalar};

/// Exponent vector over the ordered basis of `g`.
///
/// Ordered by degree, then lexicographically on the exponents, so with basis
/// `x, y, z` the degree-one monomials compare `x > y > z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// The ordered word `b_0^{e_0} b_1^{e_1} ...` as a list of indices.
    pub fn word(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect()
    }

    fn last_index(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    fn bumped(&self, i: usize, by: i64) -> Monomial {
        let mut e = self.0.clone();
        e[i] = (e[i] as i64 + by) as u32;
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of degree at most `d` in `n` variables, by ascending degree
/// and descending within a degree: `[1, x, y, z, x^2, ...]`.
pub fn filtration_basis(n: usize, d: u32) -> Vec<Monomial> {
    fn fill(n: usize, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == n {
            cur.push(left);
            out.push(Monomial(cur.clone()));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            fill(n, pos + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for deg in 0..=d {
        if n == 0 {
            if deg == 0 {
                out.push(Monomial(Vec::new()));
            }
            continue;
        }
        fill(n, 0, deg, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// Finitely supported combination of PBW monomials; zero terms never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UElement {
    n: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl UElement {
    pub fn zero(n: usize) -> Self {
        UElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(n: usize, c: Scalar) -> Self {
        Self::monomial(Monomial::one(n), c)
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, Scalar::one())
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let mut u = UElement::zero(m.nvars());
        u.add_term(m, c);
        u
    }

    pub fn generator(n: usize, i: usize) -> Self {
        Self::monomial(Monomial::generator(n, i), Scalar::one())
    }

    /// Degree-one element with the given coordinates.
    pub fn from_lie(v: &[Scalar]) -> Self {
        let n = v.len();
        let mut u = UElement::zero(n);
        for (i, c) in v.iter().enumerate() {
            u.add_term(Monomial::generator(n, i), c.clone());
        }
        u
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest degree present; `0` for the zero element.
    pub fn degree(&self) -> u32 {
        self.terms.keys().next_back().map_or(0, Monomial::degree)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        assert_eq!(m.nvars(), self.n, "monomial arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &UElement) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), c * v);
        }
    }

    pub fn add(&self, other: &UElement) -> UElement {
        let mut r = self.clone();
        r.add_scaled(&Scalar::one(), other);
        r
    }

    pub fn sub(&self, other: &UElement) -> UElement {
        let mut r = self.clone();
        r.add_scaled(&-Scalar::one(), other);
        r
    }

    pub fn scale(&self, c: &Scalar) -> UElement {
        let mut r = UElement::zero(self.n);
        r.add_scaled(c, self);
        r
    }

    pub fn neg(&self) -> UElement {
        self.scale(&-Scalar::one())
    }

    /// Constant term.
    pub fn counit(&self) -> Scalar {
        self.coeff(&Monomial::one(self.n))
    }
}

/// Element of `U(g) ⊗ U(g)` in the monomial tensor basis.
pub type Tensor2 = BTreeMap<(Monomial, Monomial), Scalar>;

fn add_tensor(t: &mut Tensor2, key: (Monomial, Monomial), c: Scalar) {
    if c.is_zero() {
        return;
    }
    match t.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Arithmetic context for `U(g)`; memoizes right multiplication by generators.
pub struct Enveloping {
    g: LieAlgebra,
    memo: Mutex<HashMap<(Monomial, usize), UElement>>,
}

impl Clone for Enveloping {
    fn clone(&self) -> Self {
        Enveloping::new(self.g.clone())
    }
}

impl fmt::Debug for Enveloping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Enveloping({})", self.g.name())
    }
}

impl Enveloping {
    pub fn new(g: LieAlgebra) -> Self {
        Enveloping {
            g,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    pub fn zero(&self) -> UElement {
        UElement::zero(self.dim())
    }

    pub fn one(&self) -> UElement {
        UElement::one(self.dim())
    }

    pub fn generator(&self, i: usize) -> UElement {
        UElement::generator(self.dim(), i)
    }

    pub fn filtration_basis(&self, d: u32) -> Vec<Monomial> {
        filtration_basis(self.dim(), d)
    }

    /// `m · b_j` in normal order.
    fn mono_times_gen(&self, m: &Monomial, j: usize) -> UElement {
        let n = self.dim();
        match m.last_index() {
            None => return UElement::generator(n, j),
            Some(k) if k <= j => return UElement::monomial(m.bumped(j, 1), Scalar::one()),
            _ => {}
        }
        let key = (m.clone(), j);
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return hit.clone();
        }
        // m = m' b_k with k > j:  m' b_k b_j = (m' b_j) b_k + m' [b_k, b_j]
        let k = m.last_index().unwrap();
        let head = m.bumped(k, -1);
        let mut out = UElement::zero(n);
        let left = self.mono_times_gen(&head, j);
        for (t, c) in left.terms() {
            out.add_scaled(c, &self.mono_times_gen(t, k));
        }
        for (l, c) in self.g.bracket_basis(k, j).iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(c, &self.mono_times_gen(&head, l));
            }
        }
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    /// `u · b_j`.
    pub fn mul_gen(&self, u: &UElement, j: usize) -> UElement {
        let mut out = self.zero();
        for (m, c) in u.terms() {
            out.add_scaled(c, &self.mono_times_gen(m, j));
        }
        out
    }

    /// Normal form of `coeff · b_{w_0} b_{w_1} ...`.
    pub fn normalize(&self, word: &[usize], coeff: Scalar) -> UElement {
        let mut u = UElement::scalar(self.dim(), coeff);
        for &j in word {
            u = self.mul_gen(&u, j);
        }
        u
    }

    pub fn mul(&self, u: &UElement, v: &UElement) -> UElement {
        let mut out = self.zero();
        for (m, c) in v.terms() {
            let mut part = u.clone();
            for j in m.word() {
                part = self.mul_gen(&part, j);
            }
            out.add_scaled(c, &part);
        }
        out
    }

    pub fn pow(&self, u: &UElement, k: u32) -> UElement {
        let mut r = self.one();
        for _ in 0..k {
            r = self.mul(&r, u);
        }
        r
    }

    /// Principal anti-automorphism `b_i ↦ -b_i`.
    pub fn antipode(&self, u: &UElement) -> UElement {
        let mut out = self.zero();
        for (m, c) in u.terms() {
            let mut w = m.word();
            let sign = if w.len() % 2 == 0 { c.clone() } else { -c.clone() };
            w.reverse();
            out.add_scaled(&Scalar::one(), &self.normalize(&w, sign));
        }
        out
    }

    /// `Δ(u)`; ordered monomials split as `Σ_α Π C(e_i, α_i) x^α ⊗ x^{e-α}`.
    pub fn coproduct(&self, u: &UElement) -> Tensor2 {
        let mut out = Tensor2::new();
        for (m, c) in u.terms() {
            let e = m.exponents();
            let mut alpha = vec![0u32; e.len()];
            loop {
                let mut coef = c.clone();
                for (a, ei) in alpha.iter().zip(e) {
                    coef *= binomial(*ei, *a);
                }
                let rest: Vec<u32> = e.iter().zip(&alpha).map(|(ei, a)| ei - a).collect();
                add_tensor(&mut out, (Monomial(alpha.clone()), Monomial(rest)), coef);
                // odometer over 0 ≤ α ≤ e
                let mut i = 0;
                while i < e.len() && alpha[i] == e[i] {
                    alpha[i] = 0;
                    i += 1;
                }
                if i == e.len() {
                    break;
                }
                alpha[i] += 1;
            }
        }
        out
    }

    pub fn counit(&self, u: &UElement) -> Scalar {
        u.counit()
    }

    /// `m ∘ (S ⊗ id)` applied to a tensor.
    pub fn mul_antipode_left(&self, t: &Tensor2) -> UElement {
        let mut out = self.zero();
        for ((a, b), c) in t {
            let sa = self.antipode(&UElement::monomial(a.clone(), c.clone()));
            out.add_scaled(
                &Scalar::one(),
                &self.mul(&sa, &UElement::monomial(b.clone(), Scalar::one())),
            );
        }
        out
    }

    /// Image of `u ∈ U(h)` under the algebra map extending `b_i ↦ images[i] ∈ g`.
    pub fn push_forward(&self, source: &Enveloping, images: &[crate::linalg::Vector], u: &UElement) -> UElement {
        let gens: Vec<UElement> = images.iter().map(|v| UElement::from_lie(v)).collect();
        let mut out = self.zero();
        for (m, c) in u.terms() {
            debug_assert_eq!(m.nvars(), source.dim());
            let mut part = UElement::scalar(self.dim(), c.clone());
            for j in m.word() {
                part = self.mul(&part, &gens[j]);
            }
            out.add_scaled(&Scalar::one(), &part);
        }
        out
    }

    /// Adjoint action `[x, u] = x u - u x` of `x ∈ g`.
    pub fn ad(&self, x: &[Scalar], u: &UElement) -> UElement {
        let xu = UElement::from_lie(x);
        self.mul(&xu, u).sub(&self.mul(u, &xu))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog_algebra;
    use crate::scalar::int;

    fn env(name: &str) -> Enveloping {
        Enveloping::new(catalog_algebra(name).unwrap())
    }

    #[test]
    fn h3_rewrite() {
        let u = env("heisenberg3");
        let yx = u.normalize(&[1, 0], int(1));
        assert_eq!(u.format(&yx), "1 * x^1y^1 + -1 * z^1");
        let xy = u.mul(&u.generator(0), &u.generator(1));
        assert_eq!(u.format(&xy), "1 * x^1y^1");
    }

    #[test]
    fn sl2_rewrite() {
        let u = env("sl2");
        let fe = u.normalize(&[2, 0], int(1));
        assert_eq!(u.format(&fe), "1 * e^1f^1 + -1 * h^1");
    }

    #[test]
    fn antipode_examples() {
        let u = env("heisenberg3");
        let x = u.generator(0);
        assert_eq!(u.antipode(&x), x.neg());
        let xy = u.normalize(&[0, 1], int(1));
        assert_eq!(u.antipode(&xy), u.normalize(&[1, 0], int(1)));
        assert_eq!(u.antipode(&u.one()), u.one());
    }

    #[test]
    fn coproduct_examples() {
        let u = env("heisenberg3");
        let x = u.generator(0);
        let d = u.coproduct(&x);
        assert_eq!(d.len(), 2);
        let x2 = u.pow(&x, 2);
        let d2 = u.coproduct(&x2);
        let m = |e: [u32; 3]| Monomial::from_exponents(e.to_vec());
        assert_eq!(d2[&(m([1, 0, 0]), m([1, 0, 0]))], int(2));
        assert_eq!(d2[&(m([2, 0, 0]), m([0, 0, 0]))], int(1));
        assert_eq!(d2.len(), 3);
        let e = u.parse("1 * x^1y^1 + -1 * z^1 + 3").unwrap();
        assert_eq!(u.counit(&e), int(3));
    }

    #[test]
    fn filtration_counts() {
        let b = filtration_basis(3, 1);
        let names: Vec<_> = b.iter().map(|m| m.exponents().to_vec()).collect();
        assert_eq!(names, vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(filtration_basis(3, 2).len(), 10);
        assert_eq!(filtration_basis(1, 5).len(), 6);
        let b = filtration_basis(4, 3);
        assert!(b.windows(2).all(|w| w[0].degree() <= w[1].degree()));
    }

    #[test]
    fn antipode_axiom_sl2() {
        let u = env("sl2");
        let a = u.parse("2 * e^1h^1 + -1 * f^2 + 1/2 * h^1 + 5").unwrap();
        let lhs = u.mul_antipode_left(&u.coproduct(&a));
        assert_eq!(lhs, u.one().scale(&u.counit(&a)));
    }
}
