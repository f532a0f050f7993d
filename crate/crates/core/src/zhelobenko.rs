//! Zhelobenko operators on the `n`-coinvariants of `M_μ ⊗ G(C^m ⊗ C^n)`.
//!
//! Coinvariant vectors are stored as Grassmann elements `g`, standing for
//! the class of `1_μ ⊗ g`; the weight `μ` is carried alongside.

use num_traits::{One, Zero};

use crate::enveloping::{shifted_action, Weight};
use crate::error::{Error, Result};
use crate::exact::{QMatrix, Rational};
use crate::grassmann::{gamma, sym_act_element, GElement, Mask, Shape};
use crate::induced::verma_coinvariants_module;
use crate::perm::Perm;
use crate::report::CheckOutcome;

/// `m`, `n` and a generic weight `μ`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZContext {
    pub shape: Shape,
    pub mu: Weight,
}

impl ZContext {
    pub fn new(mu: &Weight, n: usize) -> Result<Self> {
        mu.require_generic()?;
        Ok(ZContext {
            shape: Shape::new(mu.len(), n),
            mu: mu.clone(),
        })
    }

    /// The context at `σ_c ∘ μ`.
    pub fn reflected(&self, c: usize) -> Self {
        ZContext {
            shape: self.shape,
            mu: shifted_action(&Perm::simple(self.shape.m, c), &self.mu),
        }
    }
}

fn falling(x: &Rational, s: usize) -> Rational {
    (0..s).fold(Rational::one(), |acc, r| acc * (x - Rational::from_integer((r as i64).into())))
}

fn factorial(s: usize) -> Rational {
    (1..=s).fold(Rational::one(), |acc, r| acc * Rational::from_integer((r as i64).into()))
}

/// `I_c`: the class of `1_μ ⊗ g` goes to
/// `Σ_s (s! κ(H_c)^{(s)})^{-1} · 1_{μ′} ⊗ γ(E_c)^s γ(F_c)^s σ_c(g)` with
/// `μ′ = σ_c ∘ μ` and `κ = μ′ + (weight of the Grassmann monomial)`.
pub fn xi_check(c: usize, ctx: &ZContext, v: &GElement) -> Result<GElement> {
    let shape = ctx.shape;
    let m = shape.m;
    if c + 1 >= m {
        return Err(Error::IndexOutOfRange(format!("simple reflection {c} for m = {m}")));
    }
    let target = ctx.reflected(c);
    let e_c = gamma(shape, c, c + 1)?;
    let f_c = gamma(shape, c + 1, c)?;
    let mut cur = sym_act_element(&Perm::simple(m, c), v);
    let mut out = GElement::zero(shape);
    let mut s = 0usize;
    // γ(F_c) is nilpotent, so the sum is finite.
    while !cur.is_zero() {
        let mut raised = cur.clone();
        for _ in 0..s {
            raised = e_c.apply(&raised);
        }
        for (mask, coeff) in raised.terms() {
            let w = shape.row_weight(*mask);
            let kappa_h = &target.mu.0[c] - &target.mu.0[c + 1]
                + Rational::from_integer((w[c] as i64 - w[c + 1] as i64).into());
            let denom = factorial(s) * falling(&kappa_h, s);
            if denom.is_zero() {
                return Err(Error::NonGenericWeight(format!(
                    "H_c vanishes at {}",
                    crate::exact::fmt_rational(&kappa_h)
                )));
            }
            out = out.add(&GElement::monomial(shape, *mask, coeff / denom));
        }
        cur = f_c.apply(&cur);
        s += 1;
    }
    Ok(out)
}

/// `I_σ = I_{c_1} ⋯ I_{c_K}` along the given word (`c_K` applied first).
pub fn i_word(word: &[usize], ctx: &ZContext, v: &GElement) -> Result<GElement> {
    let mut cur = v.clone();
    let mut here = ctx.clone();
    for &c in word.iter().rev() {
        cur = xi_check(c, &here, &cur)?;
        here = here.reflected(c);
    }
    Ok(cur)
}

/// `I_σ` along the lexicographically minimal reduced word of `σ`.
pub fn i_sigma(sigma: &Perm, ctx: &ZContext, v: &GElement) -> Result<GElement> {
    i_word(&sigma.reduced_word(), ctx, v)
}

/// Matrix of `I` along a word on the `2^{mn}` canonical basis.
pub fn i_word_matrix(word: &[usize], ctx: &ZContext) -> Result<QMatrix> {
    let dim = ctx.shape.dim();
    let mut trip = Vec::new();
    for g in 0..dim {
        let img = i_word(word, ctx, &GElement::monomial(ctx.shape, g as Mask, Rational::one()))?;
        for (mask, c) in img.terms() {
            trip.push((*mask as usize, g, c.clone()));
        }
    }
    Ok(QMatrix::from_triplets(dim, dim, trip))
}

/// `w_ν = (x_{11} ⋯ x_{1ν_1}) ⋯ (x_{m1} ⋯ x_{mν_m})`, the representative of
/// `v_μ^λ` with `λ = μ + ν`.
pub fn v_mu_lambda(shape: Shape, nu: &[usize]) -> Result<GElement> {
    if nu.len() != shape.m || nu.iter().any(|&x| x > shape.n) {
        return Err(Error::InvalidDegreeSequence(format!("{nu:?} for {}x{}", shape.m, shape.n)));
    }
    let gens: Vec<(usize, usize)> = nu
        .iter()
        .enumerate()
        .flat_map(|(a, &k)| (0..k).map(move |i| (a, i)))
        .collect();
    GElement::product_of(shape, &gens)
}

/// `Π_{a<b, σ(a)>σ(b)} (−1)^{ν_aν_b} · [(λ_a − λ_b + b − a)/(μ_a − μ_b + b − a)
/// if ν_a < ν_b, else 1]`.
pub fn scalar_formula(sigma: &Perm, mu: &Weight, nu: &[usize]) -> Result<Rational> {
    mu.require_generic()?;
    let mut out = Rational::one();
    for (a, b) in sigma.inversions() {
        if (nu[a] * nu[b]) % 2 == 1 {
            out = -out;
        }
        if nu[a] < nu[b] {
            let gap = Rational::from_integer(((b - a) as i64).into());
            let dnu = Rational::from_integer((nu[a] as i64 - nu[b] as i64).into());
            let dmu = &mu.0[a] - &mu.0[b];
            out *= (&dmu + &dnu + &gap) / (&dmu + &gap);
        }
    }
    Ok(out)
}

/// Both sides of `Σ_{s=0}^{d} Π_{r=1}^{s} (d−r+1)/(−t−r−1) = (t+1)/(t+d+1)`.
pub fn falling_factorial_sum(d: usize, t: &Rational) -> Result<(Rational, Rational)> {
    let mut lhs = Rational::zero();
    let mut term = Rational::one();
    for s in 0..=d {
        if s > 0 {
            let den = -t - Rational::from_integer((s as i64 + 1).into());
            if den.is_zero() {
                return Err(Error::PoleEncountered(format!("r = {s}")));
            }
            term *= Rational::from_integer(((d - s + 1) as i64).into()) / den;
        }
        lhs += &term;
    }
    let den = t + Rational::from_integer(((d + 1) as i64).into());
    if den.is_zero() {
        return Err(Error::PoleEncountered("t + d + 1 = 0".into()));
    }
    Ok((lhs, (t + Rational::one()) / den))
}

/// `I` along each reduced word of `σ`, which must all agree.
pub fn check_reduced_words(sigma: &Perm, ctx: &ZContext) -> Result<CheckOutcome> {
    let words = sigma.reduced_words();
    let first = i_word_matrix(&words[0], ctx)?;
    for w in &words[1..] {
        if i_word_matrix(w, ctx)? != first {
            return Ok(CheckOutcome::fail(
                "zhel-reduced-words",
                format!("words {:?} and {:?} differ for sigma = {sigma}", words[0], w),
            ));
        }
    }
    Ok(CheckOutcome::pass("zhel-reduced-words"))
}

/// `I_b I_c I_b = I_c I_b I_c` for `|b − c| = 1` and `I_b I_c = I_c I_b`
/// for `|b − c| ≥ 2`, as maps out of the coinvariants at `μ`.
pub fn check_braid(ctx: &ZContext) -> Result<CheckOutcome> {
    let m = ctx.shape.m;
    for b in 0..m.saturating_sub(1) {
        for c in b + 1..m - 1 {
            let (lhs, rhs) = if c == b + 1 {
                (vec![b, c, b], vec![c, b, c])
            } else {
                (vec![b, c], vec![c, b])
            };
            if i_word_matrix(&lhs, ctx)? != i_word_matrix(&rhs, ctx)? {
                return Ok(CheckOutcome::fail(
                    "zhel-braid",
                    format!("{lhs:?} and {rhs:?} differ at mu = {}", ctx.mu),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass("zhel-braid"))
}

/// `I_c T^{(s)}_ij(μ) = T^{(s)}_ij(σ_c∘μ) I_c` on the coinvariant modules of
/// order `order`, for every simple reflection `c`.
pub fn check_intertwining(ctx: &ZContext, order: usize) -> Result<CheckOutcome> {
    let n = ctx.shape.n;
    let src = verma_coinvariants_module(&ctx.mu, n, order);
    for c in 0..ctx.shape.m.saturating_sub(1) {
        let i = i_word_matrix(&[c], ctx)?;
        let dst = verma_coinvariants_module(&ctx.reflected(c).mu, n, order);
        for ((s, a, b, x), (_, _, _, y)) in src.module.generators().zip(dst.module.generators()) {
            if &i * x != y * &i {
                return Ok(CheckOutcome::fail(
                    "zhel-intertwine",
                    format!("I_{} and T^({s})_{}{} at mu = {}", c + 1, a + 1, b + 1, ctx.mu),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass("zhel-intertwine"))
}

/// Every degree sequence `ν ∈ {0..n}^m`, lexicographically.
pub fn degree_sequences(m: usize, n: usize) -> Vec<Vec<usize>> {
    (0..m).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|p| (0..=n).map(move |k| [p.clone(), vec![k]].concat()))
            .collect()
    })
}

/// `I_σ(v_μ^λ) = scalar_formula(σ, μ, ν) · v_{σ∘μ}^{σ∘λ}` for every `ν`.
pub fn check_scalar_for(sigma: &Perm, ctx: &ZContext) -> Result<CheckOutcome> {
    let shape = ctx.shape;
    for nu in degree_sequences(shape.m, shape.n) {
        let got = i_sigma(sigma, ctx, &v_mu_lambda(shape, &nu)?)?;
        let target = v_mu_lambda(shape, &sigma.act_on(&nu))?;
        let expect = target.scale(&scalar_formula(sigma, &ctx.mu, &nu)?);
        if got != expect {
            return Ok(CheckOutcome::fail(
                "zhel-scalar",
                format!("sigma = {sigma}, nu = {nu:?}, mu = {}", ctx.mu),
            ));
        }
    }
    Ok(CheckOutcome::pass("zhel-scalar"))
}

/// [`check_scalar_for`] over all of `S_m`.
pub fn check_scalar(ctx: &ZContext) -> Result<CheckOutcome> {
    for sigma in Perm::all(ctx.shape.m) {
        let out = check_scalar_for(&sigma, ctx)?;
        if !out.passed {
            return Ok(out);
        }
    }
    Ok(CheckOutcome::pass("zhel-scalar"))
}
