use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{basis, left_mul_gen, GenKind, Monomial, UElement, Weight};
use crate::exact::Rational;

/// `Σ c_L · L · 1_μ` with `L` a PBW monomial in lowering generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VermaVector {
    mu: Weight,
    terms: BTreeMap<Monomial, Rational>,
}

impl VermaVector {
    /// The highest vector `1_μ`.
    pub fn highest(mu: &Weight) -> Self {
        VermaVector {
            mu: mu.clone(),
            terms: BTreeMap::from([(Vec::new(), Rational::one())]),
        }
    }

    pub fn zero(mu: &Weight) -> Self {
        VermaVector {
            mu: mu.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.mu.len()
    }

    pub fn weight(&self) -> &Weight {
        &self.mu
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &VermaVector) -> VermaVector {
        assert_eq!(self.mu, other.mu, "vectors of different Verma modules");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            push(&mut out.terms, m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> VermaVector {
        let mut out = Self::zero(&self.mu);
        for (m, v) in &self.terms {
            push(&mut out.terms, m.clone(), v * c);
        }
        out
    }

    /// `x · 1_μ` for an arbitrary element `x` of `U(gl_m)`: Cartan factors
    /// evaluate at `μ`, terms with raising factors vanish.
    pub fn from_element(x: &UElement, mu: &Weight) -> Self {
        assert_eq!(x.rank(), mu.len(), "rank mismatch");
        let mut out = Self::zero(mu);
        for (m, c) in x.terms() {
            if let Some((low, val)) = evaluate(m, mu) {
                push(&mut out.terms, low, c * val);
            }
        }
        out
    }
}

fn push(acc: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(m).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        acc.retain(|_, v| !v.is_zero());
    }
}

/// Splits a normal-ordered monomial `L·C·R` and evaluates it on `1_μ`.
fn evaluate(m: &Monomial, mu: &Weight) -> Option<(Monomial, Rational)> {
    let b = basis(mu.len());
    let mut low = Vec::new();
    let mut val = Rational::one();
    for &g in m {
        match b.kind(g) {
            GenKind::Lowering => low.push(g),
            GenKind::Cartan => val *= &mu.0[b.unit(g).0],
            GenKind::Raising => return None,
        }
    }
    Some((low, val))
}

/// Action of `E_ab` on a Verma module vector.
pub fn verma_apply(a: usize, b: usize, v: &VermaVector) -> VermaVector {
    let k = v.rank();
    let g = basis(k).gen(a, b);
    let mut out = VermaVector::zero(&v.mu);
    for (m, c) in &v.terms {
        for (m2, c2) in left_mul_gen(k, g, m).iter() {
            if let Some((low, val)) = evaluate(m2, &v.mu) {
                push(&mut out.terms, low, c * c2 * val);
            }
        }
    }
    out
}

/// Action of an arbitrary element of `U(gl_m)`.
pub fn verma_apply_element(x: &UElement, v: &VermaVector) -> VermaVector {
    let k = v.rank();
    let mut out = VermaVector::zero(&v.mu);
    for (mono, c) in x.terms() {
        let mut cur = v.clone();
        for &g in mono.iter().rev() {
            let (a, b) = basis(k).unit(g);
            cur = verma_apply(a, b, &cur);
        }
        out = out.add(&cur.scale(c));
    }
    out
}
