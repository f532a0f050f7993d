//! `U(gl_k)` in PBW normal form.
//!
//! Generators are numbered in the fixed PBW order: lowering `E_ba` (`a < b`,
//! sorted by `(b, a)`), then the Cartan generators `E_aa`, then raising
//! `E_ab` (`a < b`, sorted by `(a, b)`). A monomial is a nondecreasing list
//! of generator numbers. Indices are zero-based.

mod lemma;
mod verma;
mod weight;

pub use lemma::{check_lemma2, x_series, z_series, LemmaOutcome};
pub use verma::{verma_apply, verma_apply_element, VermaVector};
pub use weight::{default_generic, rho, shifted_action, Weight};

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::{One, Zero};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{Rational, Ring};
use crate::report::CheckOutcome;

pub type Gen = u16;
pub type Monomial = Vec<Gen>;
type Terms = BTreeMap<Monomial, Rational>;

/// Kind of a generator with respect to the triangular decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    Lowering,
    Cartan,
    Raising,
}

/// Numbering of the matrix units of `gl_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlBasis {
    k: usize,
    units: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), Gen>,
}

impl GlBasis {
    pub fn new(k: usize) -> Self {
        let mut units = Vec::with_capacity(k * k);
        for b in 0..k {
            for a in 0..b {
                units.push((b, a));
            }
        }
        for a in 0..k {
            units.push((a, a));
        }
        for a in 0..k {
            for b in a + 1..k {
                units.push((a, b));
            }
        }
        let index = units.iter().enumerate().map(|(g, &u)| (u, g as Gen)).collect();
        GlBasis { k, units, index }
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    /// Generator number of `E_ab`.
    pub fn gen(&self, a: usize, b: usize) -> Gen {
        self.index[&(a, b)]
    }

    /// Matrix unit `(a, b)` of a generator number.
    pub fn unit(&self, g: Gen) -> (usize, usize) {
        self.units[g as usize]
    }

    pub fn kind(&self, g: Gen) -> GenKind {
        let (a, b) = self.unit(g);
        match a.cmp(&b) {
            std::cmp::Ordering::Greater => GenKind::Lowering,
            std::cmp::Ordering::Equal => GenKind::Cartan,
            std::cmp::Ordering::Less => GenKind::Raising,
        }
    }

    /// `[E_ab, E_cd] = δ_bc E_ad − δ_da E_cb` as a list of `(coefficient, generator)`.
    pub fn bracket(&self, g: Gen, h: Gen) -> Vec<(i64, Gen)> {
        let ((a, b), (c, d)) = (self.unit(g), self.unit(h));
        let mut out = Vec::new();
        if b == c {
            out.push((1, self.gen(a, d)));
        }
        if d == a {
            out.push((-1, self.gen(c, b)));
        }
        if out.len() == 2 && out[0].1 == out[1].1 {
            out.clear();
        }
        out
    }
}

thread_local! {
    static BASES: RefCell<HashMap<usize, Rc<GlBasis>>> = RefCell::new(HashMap::new());
    static STRAIGHTEN: RefCell<HashMap<(usize, Gen, Monomial), Rc<Terms>>> = RefCell::new(HashMap::new());
}

/// Shared basis table for `gl_k`.
pub fn basis(k: usize) -> Rc<GlBasis> {
    BASES.with(|b| b.borrow_mut().entry(k).or_insert_with(|| Rc::new(GlBasis::new(k))).clone())
}

fn add_into(acc: &mut Terms, mono: &Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(mono) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                acc.remove(mono);
            }
        }
        None => {
            acc.insert(mono.clone(), c);
        }
    }
}

/// Normal form of `g · mono` for a sorted monomial, by the single-swap rule
/// `g h rest = h (g rest) + [g, h] rest` when `g > h`. Results are cached
/// per thread.
fn left_mul_gen(k: usize, g: Gen, mono: &[Gen]) -> Rc<Terms> {
    if mono.first().is_none_or(|&h| g <= h) {
        let mut m = Vec::with_capacity(mono.len() + 1);
        m.push(g);
        m.extend_from_slice(mono);
        return Rc::new(BTreeMap::from([(m, Rational::one())]));
    }
    let key = (k, g, mono.to_vec());
    if let Some(hit) = STRAIGHTEN.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let h = mono[0];
    let rest = &mono[1..];
    let mut acc = Terms::new();
    for (m, c) in left_mul_gen(k, g, rest).iter() {
        for (m2, c2) in left_mul_gen(k, h, m).iter() {
            add_into(&mut acc, m2, c * c2);
        }
    }
    for (coef, gen) in basis(k).bracket(g, h) {
        for (m, c) in left_mul_gen(k, gen, rest).iter() {
            add_into(&mut acc, m, c * Rational::from_integer(coef.into()));
        }
    }
    let acc = Rc::new(acc);
    STRAIGHTEN.with(|c| c.borrow_mut().insert(key, acc.clone()));
    acc
}

/// An element of `U(gl_k)` in PBW normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UElement {
    k: usize,
    terms: Terms,
}

impl UElement {
    pub fn zero(k: usize) -> Self {
        UElement { k, terms: Terms::new() }
    }

    pub fn scalar(k: usize, c: Rational) -> Self {
        let mut u = Self::zero(k);
        add_into(&mut u.terms, &Vec::new(), c);
        u
    }

    pub fn one(k: usize) -> Self {
        Self::scalar(k, Rational::one())
    }

    /// The generator `E_ab`.
    pub fn e(k: usize, a: usize, b: usize) -> Self {
        assert!(a < k && b < k, "E_({a},{b}) outside gl_{k}");
        let g = basis(k).gen(a, b);
        UElement {
            k,
            terms: BTreeMap::from([(vec![g], Rational::one())]),
        }
    }

    /// Wraps terms that are already in normal form.
    pub fn from_terms(k: usize, terms: BTreeMap<Monomial, Rational>) -> Self {
        debug_assert!(terms.keys().all(|m| m.windows(2).all(|w| w[0] <= w[1])));
        UElement {
            k,
            terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn add(&self, other: &UElement) -> UElement {
        assert_eq!(self.k, other.k, "rank mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            add_into(&mut out.terms, m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> UElement {
        let mut out = Self::zero(self.k);
        for (m, v) in &self.terms {
            add_into(&mut out.terms, m, v * c);
        }
        out
    }

    pub fn sub(&self, other: &UElement) -> UElement {
        self.add(&other.scale(&-Rational::one()))
    }

    /// `E_ab · self`.
    pub fn left_mul_unit(&self, a: usize, b: usize) -> UElement {
        let g = basis(self.k).gen(a, b);
        let mut out = Self::zero(self.k);
        for (m, c) in &self.terms {
            for (m2, c2) in left_mul_gen(self.k, g, m).iter() {
                add_into(&mut out.terms, m2, c * c2);
            }
        }
        out
    }

    pub fn mul(&self, other: &UElement) -> UElement {
        assert_eq!(self.k, other.k, "rank mismatch");
        let mut out = Self::zero(self.k);
        for (mx, cx) in &self.terms {
            let mut cur = other.terms.clone();
            for &g in mx.iter().rev() {
                let mut next = Terms::new();
                for (m, c) in &cur {
                    for (m2, c2) in left_mul_gen(self.k, g, m).iter() {
                        add_into(&mut next, m2, c * c2);
                    }
                }
                cur = next;
            }
            for (m, c) in cur {
                add_into(&mut out.terms, &m, c * cx);
            }
        }
        out
    }

    pub fn commutator(&self, other: &UElement) -> UElement {
        self.mul(other).sub(&other.mul(self))
    }

    /// Human-readable form with one-based indices, e.g. `E21*E12 + E11`.
    pub fn pretty(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let b = basis(self.k);
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let word: Vec<String> = m
                    .iter()
                    .map(|&g| {
                        let (a, bb) = b.unit(g);
                        format!("E{}{}", a + 1, bb + 1)
                    })
                    .collect();
                let c = crate::exact::fmt_rational(c);
                if word.is_empty() {
                    c
                } else {
                    format!("({c})*{}", word.join("*"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// PBW normal form of `coeff · E_{a_1 b_1} E_{a_2 b_2} …`.
pub fn u_normal_form(k: usize, word: &[(usize, usize)], coeff: Rational) -> UElement {
    let mut u = UElement::scalar(k, coeff);
    for &(a, b) in word.iter().rev() {
        u = u.left_mul_unit(a, b);
    }
    u
}

impl Ring for UElement {
    fn zero_like(&self) -> Self {
        UElement::zero(self.k)
    }
    fn one_like(&self) -> Self {
        UElement::one(self.k)
    }
    fn add(&self, other: &Self) -> Self {
        UElement::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        UElement::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        UElement::mul(self, other)
    }
    fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }
    fn scale(&self, c: &Rational) -> Self {
        UElement::scale(self, c)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    /// Only nonzero scalars are invertible here.
    fn try_inverse(&self) -> Option<Self> {
        match self.terms.len() {
            1 => {
                let c = self.terms.get(&Vec::new())?;
                Some(UElement::scalar(self.k, Rational::one() / c))
            }
            _ => None,
        }
    }
}

/// The bracket relations in the normal-form algebra, associativity on
/// seeded random products, and compatibility of the Verma action with
/// brackets on seeded random vectors.
pub fn check_enveloping(k: usize, seed: u64) -> Vec<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fail = None;
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                for d in 0..k {
                    let lhs = UElement::e(k, a, b).commutator(&UElement::e(k, c, d));
                    let mut rhs = UElement::zero(k);
                    if b == c {
                        rhs = rhs.add(&UElement::e(k, a, d));
                    }
                    if d == a {
                        rhs = rhs.sub(&UElement::e(k, c, b));
                    }
                    if lhs != rhs {
                        fail.get_or_insert(format!("[E_{}{}, E_{}{}]", a + 1, b + 1, c + 1, d + 1));
                    }
                }
            }
        }
    }
    let mut out = vec![CheckOutcome::from_failure("pbw-brackets", fail)];

    let mut word = |len: usize| -> Vec<(usize, usize)> {
        (0..len).map(|_| (rng.gen_range(0..k), rng.gen_range(0..k))).collect()
    };
    let mut fail = None;
    for _ in 0..10 {
        let (w1, w2, w3) = (word(2), word(2), word(1));
        let (x, y, z) = (
            u_normal_form(k, &w1, Rational::one()),
            u_normal_form(k, &w2, Rational::one()),
            u_normal_form(k, &w3, Rational::one()),
        );
        let whole = u_normal_form(k, &[w1.clone(), w2.clone(), w3.clone()].concat(), Rational::one());
        if x.mul(&y).mul(&z) != x.mul(&y.mul(&z)) || x.mul(&y).mul(&z) != whole {
            fail.get_or_insert(format!("words {w1:?} {w2:?} {w3:?}"));
        }
    }
    out.push(CheckOutcome::from_failure("pbw-associativity", fail));

    let mu = default_generic(k);
    let lowering: Vec<(usize, usize)> = (0..k).flat_map(|b| (0..b).map(move |a| (b, a))).collect();
    let mut fail = None;
    for _ in 0..3 {
        let mut v = VermaVector::highest(&mu);
        for _ in 0..2 {
            if let Some(&(a, b)) = lowering.get(rng.gen_range(0..lowering.len().max(1))) {
                v = v.add(&verma_apply(a, b, &v));
            }
        }
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    for d in 0..k {
                        let lhs = verma_apply(a, b, &verma_apply(c, d, &v))
                            .add(&verma_apply(c, d, &verma_apply(a, b, &v)).scale(&-Rational::one()));
                        let br = UElement::e(k, a, b).commutator(&UElement::e(k, c, d));
                        if lhs != verma_apply_element(&br, &v) {
                            fail.get_or_insert(format!("[E_{}{}, E_{}{}] on M_mu", a + 1, b + 1, c + 1, d + 1));
                        }
                    }
                }
            }
        }
    }
    out.push(CheckOutcome::from_failure("verma-brackets", fail));
    out
}
