//! The Grassmann algebra `G(C^m ⊗ C^n)` and its Clifford operators.
//!
//! Generator `x_{ai}` (zero-based `a < m`, `i < n`) is bit `a*n + i` of a
//! mask; a monomial is the product of its generators in increasing bit
//! order. Operators are kept in normal order `x_A ∂_B` (creations left,
//! both factors increasing), which makes equality a map comparison.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{QMatrix, Rational, Ring};
use crate::perm::{sorting_sign, Perm};
use crate::report::CheckOutcome;

/// Bitmask of Grassmann generators.
pub type Mask = u64;

/// Dimensions of the generator grid: rows carry the `gl_m` action, columns
/// the `gl_n` action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    pub m: usize,
    pub n: usize,
}

impl Shape {
    pub fn new(m: usize, n: usize) -> Self {
        assert!(m * n <= 62, "Grassmann algebra with {} generators is too large", m * n);
        Shape { m, n }
    }

    pub fn bits(&self) -> usize {
        self.m * self.n
    }

    pub fn dim(&self) -> usize {
        1usize << self.bits()
    }

    /// Bit of `x_{ai}`; panics when out of range.
    pub fn beta(&self, a: usize, i: usize) -> usize {
        assert!(a < self.m && i < self.n, "x_({a},{i}) outside {}x{}", self.m, self.n);
        a * self.n + i
    }

    pub fn check(&self, a: usize, i: usize) -> Result<usize> {
        if a < self.m && i < self.n {
            Ok(a * self.n + i)
        } else {
            Err(Error::IndexOutOfRange(format!(
                "generator ({a},{i}) for shape {}x{}",
                self.m, self.n
            )))
        }
    }

    pub fn row_of(&self, bit: usize) -> usize {
        bit / self.n
    }

    pub fn col_of(&self, bit: usize) -> usize {
        bit % self.n
    }

    /// `gl_m`-weight of a monomial: number of generators in each row.
    pub fn row_weight(&self, mask: Mask) -> Vec<usize> {
        let mut w = vec![0; self.m];
        for b in bits_of(mask) {
            w[self.row_of(b)] += 1;
        }
        w
    }

    /// `gl_n`-weight of a monomial: number of generators in each column.
    pub fn col_weight(&self, mask: Mask) -> Vec<usize> {
        let mut w = vec![0; self.n];
        for b in bits_of(mask) {
            w[self.col_of(b)] += 1;
        }
        w
    }
}

/// Set bits in increasing order.
pub fn bits_of(mask: Mask) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(b)
    })
}

fn below(mask: Mask, bit: usize) -> u32 {
    (mask & ((1u64 << bit) - 1)).count_ones()
}

fn parity_sign(k: u32) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `x_A x_B = ± x_{A∪B}`; `None` when the masks overlap.
pub fn monomial_product(a: Mask, b: Mask) -> Option<(bool, Mask)> {
    if a & b != 0 {
        return None;
    }
    let swaps: u32 = bits_of(a).map(|x| below(b, x)).sum();
    Some((swaps % 2 == 1, a | b))
}

/// Removes `∂_B` (applied right to left) from `x_S`: `None` unless `B ⊆ S`.
fn derive_monomial(b: Mask, s: Mask) -> Option<(bool, Mask)> {
    if b & !s != 0 {
        return None;
    }
    let mut cur = s;
    let mut neg = false;
    let bs: Vec<usize> = bits_of(b).collect();
    for &bit in bs.iter().rev() {
        neg ^= below(cur, bit) % 2 == 1;
        cur &= !(1u64 << bit);
    }
    Some((neg, cur))
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, v: Rational) {
    if v.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(v);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += v;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// An element of `G(C^m ⊗ C^n)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GElement {
    shape: Shape,
    terms: BTreeMap<Mask, Rational>,
}

impl GElement {
    pub fn zero(shape: Shape) -> Self {
        GElement {
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(shape: Shape) -> Self {
        Self::monomial(shape, 0, Rational::one())
    }

    pub fn monomial(shape: Shape, mask: Mask, c: Rational) -> Self {
        assert!(mask >> shape.bits() == 0, "mask outside the generator range");
        let mut g = Self::zero(shape);
        accumulate(&mut g.terms, mask, c);
        g
    }

    /// The product `x_{a_1 i_1} x_{a_2 i_2} …` in the given order.
    pub fn product_of(shape: Shape, gens: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::one(shape);
        for &(a, i) in gens.iter().rev() {
            g = g_multiply(a, i, &g)?;
        }
        Ok(g)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn terms(&self) -> &BTreeMap<Mask, Rational> {
        &self.terms
    }

    pub fn coeff(&self, mask: Mask) -> Rational {
        self.terms.get(&mask).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &GElement) -> GElement {
        assert_eq!(self.shape, other.shape, "shape mismatch");
        let mut out = self.clone();
        for (k, v) in &other.terms {
            accumulate(&mut out.terms, *k, v.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> GElement {
        let mut out = Self::zero(self.shape);
        for (k, v) in &self.terms {
            accumulate(&mut out.terms, *k, v * c);
        }
        out
    }

    pub fn sub(&self, other: &GElement) -> GElement {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Grassmann product.
    pub fn mul(&self, other: &GElement) -> GElement {
        assert_eq!(self.shape, other.shape, "shape mismatch");
        let mut out = Self::zero(self.shape);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some((neg, m)) = monomial_product(*a, *b) {
                    let v = x * y;
                    accumulate(&mut out.terms, m, if neg { -v } else { v });
                }
            }
        }
        out
    }

    /// Homogeneous component of degree `d`.
    pub fn degree_part(&self, d: u32) -> GElement {
        GElement {
            shape: self.shape,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.count_ones() == d)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Coordinates in the monomial basis (index = mask).
    pub fn to_vector(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.shape.dim()];
        for (k, c) in &self.terms {
            v[*k as usize] = c.clone();
        }
        v
    }

    pub fn from_vector(shape: Shape, v: &[Rational]) -> Self {
        let mut g = Self::zero(shape);
        for (k, c) in v.iter().enumerate() {
            accumulate(&mut g.terms, k as Mask, c.clone());
        }
        g
    }
}

/// Left multiplication by `x_{ai}`.
pub fn g_multiply(a: usize, i: usize, g: &GElement) -> Result<GElement> {
    let bit = g.shape.check(a, i)?;
    let mut out = GElement::zero(g.shape);
    for (s, c) in &g.terms {
        if s >> bit & 1 == 0 {
            accumulate(&mut out.terms, s | 1 << bit, parity_sign(below(*s, bit)) * c);
        }
    }
    Ok(out)
}

/// Left derivative `∂_{ai}`.
pub fn g_derive(a: usize, i: usize, g: &GElement) -> Result<GElement> {
    let bit = g.shape.check(a, i)?;
    let mut out = GElement::zero(g.shape);
    for (s, c) in &g.terms {
        if s >> bit & 1 == 1 {
            accumulate(&mut out.terms, s & !(1 << bit), parity_sign(below(*s, bit)) * c);
        }
    }
    Ok(out)
}

/// A normal-ordered Clifford operator `Σ c_{AB} x_A ∂_B`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct COperator {
    shape: Shape,
    terms: BTreeMap<(Mask, Mask), Rational>,
}

impl COperator {
    pub fn zero(shape: Shape) -> Self {
        COperator {
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(shape: Shape, c: Rational) -> Self {
        let mut op = Self::zero(shape);
        accumulate(&mut op.terms, (0, 0), c);
        op
    }

    pub fn identity(shape: Shape) -> Self {
        Self::scalar(shape, Rational::one())
    }

    /// The normal-ordered monomial `c · x_A ∂_B`.
    pub fn term(shape: Shape, a: Mask, b: Mask, c: Rational) -> Self {
        assert!(a >> shape.bits() == 0 && b >> shape.bits() == 0, "mask outside the generator range");
        let mut op = Self::zero(shape);
        accumulate(&mut op.terms, (a, b), c);
        op
    }

    /// Multiplication by `x_{ai}`.
    pub fn x(shape: Shape, a: usize, i: usize) -> Result<Self> {
        let bit = shape.check(a, i)?;
        Ok(Self::term(shape, 1 << bit, 0, Rational::one()))
    }

    /// Left derivative `∂_{ai}`.
    pub fn d(shape: Shape, a: usize, i: usize) -> Result<Self> {
        let bit = shape.check(a, i)?;
        Ok(Self::term(shape, 0, 1 << bit, Rational::one()))
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn terms(&self) -> &BTreeMap<(Mask, Mask), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar `c` if the operator is `c · 1`.
    pub fn as_scalar(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, other: &COperator) -> COperator {
        assert_eq!(self.shape, other.shape, "shape mismatch");
        let mut out = self.clone();
        for (k, v) in &other.terms {
            accumulate(&mut out.terms, *k, v.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> COperator {
        let mut out = Self::zero(self.shape);
        for (k, v) in &self.terms {
            accumulate(&mut out.terms, *k, v * c);
        }
        out
    }

    pub fn sub(&self, other: &COperator) -> COperator {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Applies the operator to a Grassmann element.
    pub fn apply(&self, g: &GElement) -> GElement {
        assert_eq!(self.shape, g.shape, "shape mismatch");
        let mut out = GElement::zero(g.shape);
        for ((a, b), c) in &self.terms {
            for (s, x) in &g.terms {
                let Some((neg1, rest)) = derive_monomial(*b, *s) else {
                    continue;
                };
                let Some((neg2, res)) = monomial_product(*a, rest) else {
                    continue;
                };
                let v = c * x;
                accumulate(&mut out.terms, res, if neg1 ^ neg2 { -v } else { v });
            }
        }
        out
    }

    /// Dense-indexed sparse matrix on the monomial basis (index = mask).
    pub fn to_matrix(&self) -> QMatrix {
        let dim = self.shape.dim();
        let mut trip = Vec::new();
        for s in 0..dim as Mask {
            for ((a, b), c) in &self.terms {
                let Some((neg1, rest)) = derive_monomial(*b, s) else {
                    continue;
                };
                let Some((neg2, res)) = monomial_product(*a, rest) else {
                    continue;
                };
                trip.push((res as usize, s as usize, if neg1 ^ neg2 { -c.clone() } else { c.clone() }));
            }
        }
        QMatrix::from_triplets(dim, dim, trip)
    }

    /// `[self, other]`.
    pub fn commutator(&self, other: &COperator) -> COperator {
        c_compose(self, other).sub(&c_compose(other, self))
    }
}

/// `∂_b ∘ Σ c x_C ∂_D`, rewritten into normal order with
/// `∂_b x_C = [b ∈ C] ε x_{C∖b} + (-1)^{|C|} x_C ∂_b`.
fn derive_then(bit: usize, terms: &BTreeMap<(Mask, Mask), Rational>) -> BTreeMap<(Mask, Mask), Rational> {
    let mut out = BTreeMap::new();
    for ((c, d), v) in terms {
        if c >> bit & 1 == 1 {
            accumulate(&mut out, (c & !(1 << bit), *d), parity_sign(below(*c, bit)) * v);
        }
        if d >> bit & 1 == 0 {
            let k = c.count_ones() + below(*d, bit);
            accumulate(&mut out, (*c, d | 1 << bit), parity_sign(k) * v);
        }
    }
    out
}

/// Normal-ordered composite `P ∘ Q`.
pub fn c_compose(p: &COperator, q: &COperator) -> COperator {
    assert_eq!(p.shape, q.shape, "shape mismatch in composition");
    let mut out = COperator::zero(p.shape);
    for ((a, b), pc) in &p.terms {
        let mut cur = q.terms.clone();
        let bs: Vec<usize> = bits_of(*b).collect();
        for &bit in bs.iter().rev() {
            cur = derive_then(bit, &cur);
        }
        for ((c, d), v) in cur {
            if let Some((neg, ac)) = monomial_product(*a, c) {
                let w = pc * v;
                accumulate(&mut out.terms, (ac, d), if neg { -w } else { w });
            }
        }
    }
    out
}

/// Checked composition.
pub fn try_compose(p: &COperator, q: &COperator) -> Result<COperator> {
    if p.shape != q.shape {
        return Err(Error::DimensionMismatch(format!("{:?} vs {:?}", p.shape, q.shape)));
    }
    Ok(c_compose(p, q))
}

/// `γ(E_ab) = Σ_k x_{ak} ∂_{bk}`.
pub fn gamma(shape: Shape, a: usize, b: usize) -> Result<COperator> {
    if a >= shape.m || b >= shape.m {
        return Err(Error::IndexOutOfRange(format!("E_({a},{b}) for m = {}", shape.m)));
    }
    let mut op = COperator::zero(shape);
    for k in 0..shape.n {
        accumulate(&mut op.terms, (1 << shape.beta(a, k), 1 << shape.beta(b, k)), Rational::one());
    }
    Ok(op)
}

/// `E_ij ↦ Σ_c x_{ci} ∂_{cj}`.
pub fn gln_op(shape: Shape, i: usize, j: usize) -> Result<COperator> {
    if i >= shape.n || j >= shape.n {
        return Err(Error::IndexOutOfRange(format!("E_({i},{j}) for n = {}", shape.n)));
    }
    let mut op = COperator::zero(shape);
    for c in 0..shape.m {
        accumulate(&mut op.terms, (1 << shape.beta(c, i), 1 << shape.beta(c, j)), Rational::one());
    }
    Ok(op)
}

/// Image of a monomial under `x_{ak} ↦ x_{σ(a)k}`, with the sign from
/// restoring increasing order.
pub fn relabel_mask(shape: Shape, sigma: &Perm, mask: Mask) -> (bool, Mask) {
    assert_eq!(sigma.size(), shape.m, "permutation size must equal m");
    let images: Vec<usize> = bits_of(mask)
        .map(|b| shape.beta(sigma.apply(shape.row_of(b)), shape.col_of(b)))
        .collect();
    let out = images.iter().fold(0, |acc, &b| acc | 1 << b);
    (sorting_sign(&images) < 0, out)
}

/// The `S_m` automorphism on Grassmann elements.
pub fn sym_act_element(sigma: &Perm, g: &GElement) -> GElement {
    let mut out = GElement::zero(g.shape);
    for (s, c) in &g.terms {
        let (neg, t) = relabel_mask(g.shape, sigma, *s);
        accumulate(&mut out.terms, t, if neg { -c.clone() } else { c.clone() });
    }
    out
}

/// The `S_m` automorphism on operators (`∂_{bk} ↦ ∂_{σ(b)k}` likewise).
pub fn sym_act_operator(sigma: &Perm, op: &COperator) -> COperator {
    let mut out = COperator::zero(op.shape);
    for ((a, b), c) in &op.terms {
        let (na, ta) = relabel_mask(op.shape, sigma, *a);
        let (nb, tb) = relabel_mask(op.shape, sigma, *b);
        accumulate(&mut out.terms, (ta, tb), if na ^ nb { -c.clone() } else { c.clone() });
    }
    out
}

impl Ring for COperator {
    fn zero_like(&self) -> Self {
        COperator::zero(self.shape)
    }
    fn one_like(&self) -> Self {
        COperator::identity(self.shape)
    }
    fn add(&self, other: &Self) -> Self {
        COperator::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        COperator::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        c_compose(self, other)
    }
    fn neg(&self) -> Self {
        COperator::scale(self, &-Rational::one())
    }
    fn scale(&self, c: &Rational) -> Self {
        COperator::scale(self, c)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    /// Only nonzero scalars are inverted.
    fn try_inverse(&self) -> Option<Self> {
        let c = self.as_scalar()?;
        (!c.is_zero()).then(|| COperator::scalar(self.shape, Rational::one() / c))
    }
}

/// How a Grassmann algebra on a larger grid splits into two factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Split {
    /// `G(C^{m+l} ⊗ C^n) = G(C^m ⊗ C^n) ⊗ G(C^l ⊗ C^n)`, rows `0..m` first.
    Rows { m: usize, l: usize, n: usize },
    /// `G(C^m ⊗ C^{n+l}) = G(C^m ⊗ C^l) ⊗ G(C^m ⊗ C^n)`: the last `l`
    /// columns form the first factor.
    Columns { m: usize, n: usize, l: usize },
}

impl Split {
    pub fn whole(&self) -> Shape {
        match *self {
            Split::Rows { m, l, n } => Shape::new(m + l, n),
            Split::Columns { m, n, l } => Shape::new(m, n + l),
        }
    }

    pub fn factors(&self) -> (Shape, Shape) {
        match *self {
            Split::Rows { m, l, n } => (Shape::new(m, n), Shape::new(l, n)),
            Split::Columns { m, n, l } => (Shape::new(m, l), Shape::new(m, n)),
        }
    }

    /// `x_S = ± x_{S1} x_{S2}` with `S1`, `S2` in the factor numbering.
    pub fn split_mask(&self, mask: Mask) -> (bool, Mask, Mask) {
        match *self {
            Split::Rows { m, n, .. } => {
                let low = m * n;
                (false, mask & ((1u64 << low) - 1), mask >> low)
            }
            Split::Columns { n, l, .. } => {
                let w = n + l;
                let (mut first, mut second) = (0u64, 0u64);
                let mut swaps = 0u32;
                let mut seen_second = 0u32;
                for b in bits_of(mask) {
                    let (c, i) = (b / w, b % w);
                    if i >= n {
                        first |= 1 << (c * l + (i - n));
                        // every earlier second-block generator must pass it
                        swaps += seen_second;
                    } else {
                        second |= 1 << (c * n + i);
                        seen_second += 1;
                    }
                }
                (swaps % 2 == 1, first, second)
            }
        }
    }

    /// Inverse of [`Split::split_mask`].
    pub fn merge_mask(&self, first: Mask, second: Mask) -> (bool, Mask) {
        match *self {
            Split::Rows { m, n, .. } => (false, first | second << (m * n)),
            Split::Columns { n, l, .. } => {
                let w = n + l;
                let mut mask = 0u64;
                for b in bits_of(first) {
                    mask |= 1 << ((b / l) * w + n + b % l);
                }
                for b in bits_of(second) {
                    mask |= 1 << ((b / n) * w + b % n);
                }
                let (neg, _, _) = self.split_mask(mask);
                (neg, mask)
            }
        }
    }

    /// Signed basis map: entry `k` is `(sign, mask)` with
    /// `e_k = sign · x_mask`, where `k = first · 2^{|second|} + second`
    /// indexes the tensor product basis.
    pub fn basis_map(&self) -> Vec<(Rational, usize)> {
        let (_, f2) = self.factors();
        let d2 = f2.dim();
        (0..self.whole().dim())
            .map(|k| {
                let (first, second) = ((k / d2) as Mask, (k % d2) as Mask);
                let (neg, mask) = self.merge_mask(first, second);
                (if neg { -Rational::one() } else { Rational::one() }, mask as usize)
            })
            .collect()
    }
}

/// Splits a Grassmann element into a sum of tensor components.
pub fn split_reindex(split: Split, g: &GElement) -> Result<BTreeMap<(Mask, Mask), Rational>> {
    if g.shape != split.whole() {
        return Err(Error::DimensionMismatch(format!(
            "element of shape {:?} cannot be split as {:?}",
            g.shape, split
        )));
    }
    let mut out = BTreeMap::new();
    for (s, c) in &g.terms {
        let (neg, a, b) = split.split_mask(*s);
        accumulate(&mut out, (a, b), if neg { -c.clone() } else { c.clone() });
    }
    Ok(out)
}

/// `{x_ai, ∂_bj} = δ_ab δ_ij`, `{x_ai, x_bj} = 0`, `{∂_ai, ∂_bj} = 0` for
/// every pair of generators, plus the `gl_m` and `gl_n` brackets of `γ`.
pub fn check_clifford(shape: Shape) -> Vec<CheckOutcome> {
    let gens: Vec<(usize, usize)> = (0..shape.m).flat_map(|a| (0..shape.n).map(move |i| (a, i))).collect();
    let anti = |p: &COperator, q: &COperator| c_compose(p, q).add(&c_compose(q, p));
    let mut fail = None;
    'outer: for &(a, i) in &gens {
        for &(b, j) in &gens {
            let (xa, da) = (COperator::x(shape, a, i).unwrap(), COperator::d(shape, a, i).unwrap());
            let (xb, db) = (COperator::x(shape, b, j).unwrap(), COperator::d(shape, b, j).unwrap());
            let delta = if (a, i) == (b, j) {
                COperator::identity(shape)
            } else {
                COperator::zero(shape)
            };
            let bad = if anti(&xa, &db) != delta {
                Some("{x, d}")
            } else if !anti(&xa, &xb).is_zero() {
                Some("{x, x}")
            } else if !anti(&da, &db).is_zero() {
                Some("{d, d}")
            } else {
                None
            };
            if let Some(kind) = bad {
                fail = Some(format!("{kind} for ({},{}), ({},{})", a + 1, i + 1, b + 1, j + 1));
                break 'outer;
            }
        }
    }
    let mut out = vec![CheckOutcome::from_failure("clifford-anticommutators", fail)];

    let bracket_failure = |rank: usize, op: &dyn Fn(usize, usize) -> COperator| {
        for a in 0..rank {
            for b in 0..rank {
                for c in 0..rank {
                    for d in 0..rank {
                        let lhs = op(a, b).commutator(&op(c, d));
                        let mut rhs = COperator::zero(shape);
                        if b == c {
                            rhs = rhs.add(&op(a, d));
                        }
                        if d == a {
                            rhs = rhs.sub(&op(c, b));
                        }
                        if lhs != rhs {
                            return Some(format!("[E_{}{}, E_{}{}]", a + 1, b + 1, c + 1, d + 1));
                        }
                    }
                }
            }
        }
        None
    };
    out.push(CheckOutcome::from_failure(
        "gamma-gl-m",
        bracket_failure(shape.m, &|a, b| gamma(shape, a, b).unwrap()),
    ));
    out.push(CheckOutcome::from_failure(
        "gamma-gl-n",
        bracket_failure(shape.n, &|i, j| gln_op(shape, i, j).unwrap()),
    ));
    let mut fail = None;
    for a in 0..shape.m {
        for b in 0..shape.m {
            for i in 0..shape.n {
                for j in 0..shape.n {
                    if !gamma(shape, a, b).unwrap().commutator(&gln_op(shape, i, j).unwrap()).is_zero() {
                        fail.get_or_insert(format!("E_{}{} and E'_{}{}", a + 1, b + 1, i + 1, j + 1));
                    }
                }
            }
        }
    }
    out.push(CheckOutcome::from_failure("gamma-commuting-pair", fail));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sh(m: usize, n: usize) -> Shape {
        Shape::new(m, n)
    }

    fn mono(shape: Shape, gens: &[(usize, usize)]) -> GElement {
        GElement::product_of(shape, gens).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let s = sh(1, 2);
        let x11 = mono(s, &[(0, 0)]);
        assert_eq!(g_multiply(0, 0, &GElement::one(s)).unwrap(), x11);
        assert!(g_multiply(0, 0, &x11).unwrap().is_zero());
        let lhs = g_multiply(0, 1, &x11).unwrap();
        assert_eq!(lhs, GElement::monomial(s, 0b11, int(-1)));
        assert!(g_multiply(1, 0, &x11).is_err());
    }

    #[test]
    fn derive_examples() {
        let s = sh(1, 2);
        let x11 = mono(s, &[(0, 0)]);
        assert_eq!(g_derive(0, 0, &x11).unwrap(), GElement::one(s));
        let x11x12 = GElement::monomial(s, 0b11, int(1));
        assert_eq!(g_derive(0, 1, &x11x12).unwrap(), x11.scale(&int(-1)));
        assert!(g_derive(0, 0, &mono(s, &[(0, 1)])).unwrap().is_zero());
    }

    #[test]
    fn number_operator_is_idempotent() {
        let s = sh(1, 1);
        let n = c_compose(&COperator::x(s, 0, 0).unwrap(), &COperator::d(s, 0, 0).unwrap());
        assert_eq!(c_compose(&n, &n), n);
    }

    #[test]
    fn clifford_relations() {
        for m in 1..=3 {
            for n in 1..=3 {
                let s = sh(m, n);
                for a in 0..m {
                    for i in 0..n {
                        for b in 0..m {
                            for j in 0..n {
                                let x = COperator::x(s, a, i).unwrap();
                                let d = COperator::d(s, b, j).unwrap();
                                let anti = c_compose(&x, &d).add(&c_compose(&d, &x));
                                let expect = if (a, i) == (b, j) {
                                    COperator::identity(s)
                                } else {
                                    COperator::zero(s)
                                };
                                assert_eq!(anti, expect);
                            }
                        }
                    }
                }
            }
        }
    }

    fn random_operator(rng: &mut ChaCha8Rng, s: Shape, terms: usize) -> COperator {
        let full = (1u64 << s.bits()) - 1;
        let mut op = COperator::zero(s);
        for _ in 0..terms {
            let a = rng.gen::<u64>() & full;
            let b = rng.gen::<u64>() & full;
            let c = int(rng.gen_range(-3..4));
            op = op.add(&COperator::term(s, a, b, c));
        }
        op
    }

    /// Composition against the application oracle on every basis monomial.
    #[test]
    fn compose_agrees_with_application() {
        let s = sh(2, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let p = random_operator(&mut rng, s, 4);
            let q = random_operator(&mut rng, s, 4);
            let pq = c_compose(&p, &q);
            for mask in 0..s.dim() as Mask {
                let g = GElement::monomial(s, mask, int(1));
                assert_eq!(pq.apply(&g), p.apply(&q.apply(&g)));
            }
            assert_eq!(pq.to_matrix(), &p.to_matrix() * &q.to_matrix());
        }
    }

    /// `x_A ∂_B` applied via single generator operations, as an oracle for
    /// the bulk sign computation.
    #[test]
    fn apply_matches_generator_by_generator() {
        let s = sh(2, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let full = (1u64 << s.bits()) - 1;
            let (a, b, t) = (rng.gen::<u64>() & full, rng.gen::<u64>() & full, rng.gen::<u64>() & full);
            let g = GElement::monomial(s, t, int(1));
            let mut h = g.clone();
            let bs: Vec<usize> = bits_of(b).collect();
            for &bit in bs.iter().rev() {
                h = g_derive(bit / 2, bit % 2, &h).unwrap();
            }
            let as_: Vec<usize> = bits_of(a).collect();
            for &bit in as_.iter().rev() {
                h = g_multiply(bit / 2, bit % 2, &h).unwrap();
            }
            assert_eq!(COperator::term(s, a, b, int(1)).apply(&g), h);
        }
    }

    #[test]
    fn gamma_examples() {
        let s = sh(1, 1);
        assert_eq!(gamma(s, 0, 0).unwrap(), COperator::term(s, 1, 1, int(1)));
        assert_eq!(gln_op(s, 0, 0).unwrap(), COperator::term(s, 1, 1, int(1)));
        let s = sh(1, 2);
        let g = GElement::monomial(s, 0b11, int(1));
        assert_eq!(gamma(s, 0, 0).unwrap().apply(&g), g.scale(&int(2)));
        let x12 = mono(s, &[(0, 1)]);
        assert_eq!(gln_op(s, 0, 1).unwrap().apply(&x12), mono(s, &[(0, 0)]));
        assert!(gamma(s, 1, 0).is_err());
    }

    #[test]
    fn gamma_is_a_lie_homomorphism_and_commutes_with_gln() {
        for m in 1..=3 {
            for n in 1..=3 {
                let s = sh(m, n);
                let g = |a, b| gamma(s, a, b).unwrap();
                for a in 0..m {
                    for b in 0..m {
                        for c in 0..m {
                            for d in 0..m {
                                let mut rhs = COperator::zero(s);
                                if b == c {
                                    rhs = rhs.add(&g(a, d));
                                }
                                if d == a {
                                    rhs = rhs.sub(&g(c, b));
                                }
                                assert_eq!(g(a, b).commutator(&g(c, d)), rhs);
                            }
                        }
                        for i in 0..n {
                            for j in 0..n {
                                assert!(g(a, b).commutator(&gln_op(s, i, j).unwrap()).is_zero());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn symmetric_group_action() {
        let s = sh(2, 1);
        let t = Perm::simple(2, 0);
        assert_eq!(sym_act_element(&t, &mono(s, &[(0, 0)])), mono(s, &[(1, 0)]));
        let s = sh(3, 2);
        for sigma in Perm::all(3) {
            for a in 0..3 {
                for b in 0..3 {
                    assert_eq!(
                        sym_act_operator(&sigma, &gamma(s, a, b).unwrap()),
                        gamma(s, sigma.apply(a), sigma.apply(b)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn symmetric_action_is_an_automorphism() {
        let s = sh(3, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for sigma in Perm::all(3) {
            for tau in Perm::all(3) {
                let p = random_operator(&mut rng, s, 3);
                let q = random_operator(&mut rng, s, 3);
                let lhs = sym_act_operator(&sigma, &c_compose(&p, &q));
                let rhs = c_compose(&sym_act_operator(&sigma, &p), &sym_act_operator(&sigma, &q));
                assert_eq!(lhs, rhs);
                let twice = sym_act_operator(&sigma, &sym_act_operator(&tau, &p));
                assert_eq!(twice, sym_act_operator(&sigma.compose(&tau), &p));
                let g = GElement::monomial(s, rng.gen::<u64>() & 7, int(1));
                assert_eq!(
                    sym_act_element(&sigma, &p.apply(&g)),
                    sym_act_operator(&sigma, &p).apply(&sym_act_element(&sigma, &g))
                );
            }
            if sigma.length() == 1 {
                let p = random_operator(&mut rng, s, 3);
                assert_eq!(sym_act_operator(&sigma, &sym_act_operator(&sigma, &p)), p);
            }
        }
    }

    /// Bubble sort oracle for the reordering sign.
    fn bubble_sign(mut keys: Vec<(usize, usize)>) -> bool {
        let mut neg = false;
        for i in 0..keys.len() {
            for j in 0..keys.len() - 1 - i {
                if keys[j] > keys[j + 1] {
                    keys.swap(j, j + 1);
                    neg = !neg;
                }
            }
        }
        neg
    }

    #[test]
    fn column_split_sign_matches_bubble_sort() {
        let split = Split::Columns { m: 2, n: 2, l: 1 };
        let w = 3;
        for mask in 0..(1u64 << 6) {
            // sort key: first-factor generators before second-factor ones
            let keys: Vec<(usize, usize)> = bits_of(mask)
                .map(|b| if b % w >= 2 { (0, b) } else { (1, b) })
                .collect();
            let (neg, f, s) = split.split_mask(mask);
            assert_eq!(neg, bubble_sign(keys), "mask {mask:b}");
            assert_eq!(split.merge_mask(f, s), (neg, mask));
        }
    }

    #[test]
    fn row_split_is_sign_free() {
        let split = Split::Rows { m: 2, l: 1, n: 1 };
        let g = mono(Shape::new(3, 1), &[(0, 0), (1, 0)]);
        let parts = split_reindex(split, &g).unwrap();
        assert_eq!(parts.into_iter().collect::<Vec<_>>(), vec![((0b11, 0), int(1))]);
        let g = mono(Shape::new(2, 1), &[(0, 0), (1, 0)]);
        let parts = split_reindex(Split::Rows { m: 1, l: 1, n: 1 }, &g).unwrap();
        assert_eq!(parts.into_iter().collect::<Vec<_>>(), vec![((1, 1), int(1))]);
        assert!(split_reindex(split, &GElement::one(Shape::new(2, 2))).is_err());
    }

    /// The gl_m action of the whole grid equals the sum of the factor actions
    /// after splitting, for both split directions.
    #[test]
    fn split_intertwines_block_actions() {
        let split = Split::Columns { m: 2, n: 1, l: 2 };
        let (f1, f2) = split.factors();
        let map = split.basis_map();
        for a in 0..2 {
            for b in 0..2 {
                let whole = gamma(split.whole(), a, b).unwrap().to_matrix().transport(&map);
                let blocks = &gamma(f1, a, b).unwrap().to_matrix().kron(&QMatrix::identity(f2.dim()))
                    + &QMatrix::identity(f1.dim()).kron(&gamma(f2, a, b).unwrap().to_matrix());
                assert_eq!(whole, blocks);
            }
        }
        let split = Split::Rows { m: 1, l: 2, n: 2 };
        let (f1, f2) = split.factors();
        let map = split.basis_map();
        for i in 0..2 {
            for j in 0..2 {
                let whole = gln_op(split.whole(), i, j).unwrap().to_matrix().transport(&map);
                let blocks = &gln_op(f1, i, j).unwrap().to_matrix().kron(&QMatrix::identity(f2.dim()))
                    + &QMatrix::identity(f1.dim()).kron(&gln_op(f2, i, j).unwrap().to_matrix());
                assert_eq!(whole, blocks);
            }
        }
    }
}
