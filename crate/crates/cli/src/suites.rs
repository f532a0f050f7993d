//! The named verification suites.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ymick_core::enveloping::{check_enveloping, check_lemma2};
use ymick_core::exact::{binomial, fmt_rational, int, rat, Rational};
use ymick_core::glmodule::GlModule;
use ymick_core::grassmann::{check_clifford, Shape};
use ymick_core::hecke::{cherednik, diagonal_action};
use ymick_core::induced::{check_bimequiv, check_dast_oracle, check_parind, hom_multiplicity, verma_coinvariants_module};
use ymick_core::olshanski::{beta_via_composition, beta_via_schur, check_arol};
use ymick_core::perm::Perm;
use ymick_core::report::CheckOutcome;
use ymick_core::yangian::{check_yangian_relations, evaluation_module, skew_drinfeld, tensor, YangianModule};
use ymick_core::zhelobenko::{
    check_braid, check_intertwining, check_reduced_words, degree_sequences, falling_factorial_sum, i_sigma,
    scalar_formula, v_mu_lambda, ZContext,
};

use crate::error::{HarnessError, HarnessResult};
use crate::params::{pow2, SuiteParams};
use crate::report::Report;

type SuiteFn = fn(&SuiteParams) -> HarnessResult<Vec<CheckOutcome>>;

/// Every suite except `all`, in run order.
pub const SUITES: [(&str, SuiteFn); 13] = [
    ("clifford", clifford),
    ("enveloping", enveloping),
    ("lemma2", lemma2),
    ("hecke", hecke),
    ("yangian-defrel", yangian_defrel),
    ("dast-oracle", dast_oracle),
    ("parind", parind),
    ("bimequiv", bimequiv),
    ("zhel-braid", zhel_braid),
    ("zhel-intertwine", zhel_intertwine),
    ("zhel-scalar", zhel_scalar),
    ("olshanski", olshanski),
    ("howe-hom", howe_hom),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).chain(["all"]).collect()
}

fn named(mut o: CheckOutcome, name: impl Into<String>) -> CheckOutcome {
    o.name = name.into();
    o
}

fn upow(base: usize, exp: usize) -> u128 {
    (base as u128).saturating_pow(exp as u32)
}

fn clifford(p: &SuiteParams) -> HarnessResult<Vec<CheckOutcome>> {
    p.require_dim(pow2(p.m * p.n))?;
    Ok(check_clifford(Shape::new(p.m, p.n)))
}

fn enveloping(p: &SuiteParams) -> HarnessResult<Vec<CheckOutcome>> {
    p.require_dim(upow(p.m, 4))?;
    Ok(check_enveloping(p.m, p.seed))
}

fn lemma2(p: &SuiteParams) -> HarnessResult<Vec<CheckOutcome>> {
    if p.l == 0 {
        return Err(HarnessError::InvalidParameter("lemma2 needs l ≥ 1".into()));
    }
    p.require_dim(upow(p.m + p.l, 2))?;
    Ok(check_lemma2(p.m, p.l, p.order)
        .into_iter()
        .map(|o| {
            let name = format!("lemma2 a={} d={}", o.a + 1, o.d + 1);
            let fail = o
                .first_mismatch
                .map(|(s, lhs, rhs)| format!("coefficient of u^-{s}: {lhs} vs {rhs}"));
            CheckOutcome::from_failure(name, fail)
        })
        .collect())
}

fn hecke(p: &SuiteParams) -> HarnessResult<Vec<CheckOutcome>> {
    p.require_dim(upow(p.m, p.big_n + 1))?;
    let v = GlModule::natural(p.m);
    let w = cherednik(&v, p.big_n);
    let mut out = w.check_relations();
    let mut fail = None;
    for a in 0..p.m {
        for b in 0..p.m {
            let d = diagonal_action(&v, p.big_n, a, b);
            let moved = (0..p.big_n).any(|q| !d.commutator(w.y(q)).is_zero())
                || (0..p.big_n.saturating_sub(1)).any(|q| !d.commutator(w.sigma(q)).is_zero());
            if moved {
                fail.get_or_insert(format!("diagonal E_{}{}", a + 1, b + 1));
            }
        }
    }
    out.push(CheckOutcome::from_failure("gl-equivariance", fail));
    Ok(out)
}

fn yangian_defrel(p: &SuiteParams) -> HarnessResult<Vec<CheckOutcome>> {
    let (m, n, l, np, s) = (p.m, p.n, p.l, p.big_n, p.order);
    p.require_dim(pow2(m * (n + l)).max(upow(m, np + 1) * upow(n, np)))?;
    let z1 = p.mu.labels()[0].clone();
    let z2 = p.mu.labels().get(1).cloned().unwrap_or_else(|| &z1 - rat(1, 2));
    let mut modules: Vec<(String, YangianModule)> = Vec::new();
    for k in 0..=n {
        modules.push((format!("evaluation k={k}"), evaluation_module(n, k, &z1, s)?));
    }
    modules.push((
        "tensor of evaluations".into(),
        tensor(&evaluation_module(n, 1, &z1, s)?, &evaluation_module(n, 1, &z2, s)?)?,
    ));
    modules.push(("skew Drinfeld".into(), skew_drinfeld(&cherednik(&GlModule::natural(m), np), n, s)?));
    modules.push(("Verma coinvariants".into(), verma_coinvariants_module(&p.mu, n, s).module));
    modules.push(("beta via Schur".into(), beta_via_schur(m, n, l, s)?));
    modules.push(("beta via composition".into(), beta_via_composition(m, n, l, s)));
    Ok(modules
        .iter()
        .map(|(name, mdl)| named(check_yangian_relations(mdl), format!("yangian-relations {name}")))
        .collect())
}

fn dast_oracle(p: &SuiteParams) -> HarnessResult<Vec<CheckOutcome>> {
    p.require_dim(upow(p.m, p.big_n + 1) * upow(p.n, p.big_n))?;
    Ok([("trivial", GlModule::trivial(p.m)), ("natural", GlModule::natural(p.m))]
        .iter()
        .map(|(label, v)| named(check_dast_oracle(v, p.n, p.big_n, p.order), format!("dast-oracle V={label}")))
        .collect())
}

fn parind(p: &SuiteParams) -> HarnessResult<Vec<CheckOutcome>> {
    let (m, l, n) = (p.m, p.l, p.n);
    if l == 0 {
        return Err(HarnessError::InvalidParameter("parind needs l ≥ 1".into()));
    }
    p.require_dim((m * l) as u128 * pow2((m + l) * n))?;
    let t = p.mu.labels()[0].clone();
    let cases = [
        ("characters", GlModule::scalar_character(m, t.clone()), GlModule::scalar_character(l, &t - rat(1, 2))),
        ("natural", GlModule::natural(m), GlModule::natural(l)),
    ];
    Ok(cases
        .iter()
        .map(|(label, v, u)| named(check_parind(v, u, n, p.order), format!("parind {label}")))
        .collect())
}

fn bimequiv(p: &SuiteParams) -> HarnessResult<Vec<CheckOutcome>> {
    p.require_generic()?;
    p.require_dim(pow2(p.m * p.n))?;
    let out = check_bimequiv(&p.mu, p.n, p.order, p.seed);
    let mut o = out.outcome;
    if o.passed {
        o.diagnostic = Some(format!(
            "intertwiner space of dimension {}, determinant {}",
            out.solution_dim,
            fmt_rational(&out.determinant)
        ));
    }
    Ok(vec![o])
}

fn zcontext(p: &SuiteParams) -> HarnessResult<ZContext> {
    p.require_generic()?;
    p.require_dim(pow2(p.m * p.n))?;
    Ok(ZContext::new(&p.mu, p.n)?)
}

fn zhel_braid(p: &SuiteParams) -> HarnessResult<Vec<CheckOutcome>> {
    let ctx = zcontext(p)?;
    let sigma = p.sigma.clone().unwrap_or_else(|| Perm::longest(p.m));
    Ok(vec![
        check_braid(&ctx)?,
        named(check_reduced_words(&sigma, &ctx)?, format!("zhel-reduced-words sigma={sigma}")),
    ])
}

fn zhel_intertwine(p: &SuiteParams) -> HarnessResult<Vec<CheckOutcome>> {
    let ctx = zcontext(p)?;
    Ok(vec![check_intertwining(&ctx, p.order)?])
}

fn zhel_scalar(p: &SuiteParams) -> HarnessResult<Vec<CheckOutcome>> {
    let ctx = zcontext(p)?;
    let perms = match &p.sigma {
        Some(s) => vec![s.clone()],
        None => Perm::all(p.m),
    };
    let mut out = Vec::new();
    for sigma in perms {
        for nu in degree_sequences(p.m, p.n) {
            let c = scalar_formula(&sigma, &ctx.mu, &nu)?;
            let got = i_sigma(&sigma, &ctx, &v_mu_lambda(ctx.shape, &nu)?)?;
            let expect = v_mu_lambda(ctx.shape, &sigma.act_on(&nu))?.scale(&c);
            let name = format!("zhel-scalar sigma={sigma} nu={nu:?} c={}", fmt_rational(&c));
            let fail = got.terms().keys().chain(expect.terms().keys()).find_map(|&mask| {
                let (g, e) = (got.coeff(mask), expect.coeff(mask));
                (g != e).then(|| {
                    format!("coefficient of monomial {mask:#b}: {} vs {}", fmt_rational(&g), fmt_rational(&e))
                })
            });
            out.push(CheckOutcome::from_failure(name, fail));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut fail = None;
    for _ in 0..20 {
        let den = rng.gen_range(2i64..=30);
        let num = rng.gen_range(-200i64..=200);
        // keep t off the integers, where the poles are
        let t = rat(if num % den == 0 { num + 1 } else { num }, den);
        for d in 0..=6 {
            let (lhs, rhs) = falling_factorial_sum(d, &t)?;
            if lhs != rhs {
                fail.get_or_insert(format!("d = {d}, t = {}", fmt_rational(&t)));
            }
        }
    }
    out.push(CheckOutcome::from_failure("falling-factorial", fail));
    Ok(out)
}

fn olshanski(p: &SuiteParams) -> HarnessResult<Vec<CheckOutcome>> {
    p.require_dim(pow2(p.m * (p.n + p.l)) * (p.n + p.l) as u128)?;
    Ok(check_arol(p.m, p.n, p.l, p.order)?)
}

/// Polynomial weights of rank `m` with labels at most `max`.
fn polynomial_weights(m: usize, max: i64) -> Vec<Vec<i64>> {
    (0..m).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|w: Vec<i64>| {
                let cap = *w.last().unwrap_or(&max);
                (0..=cap).map(move |x| [w.clone(), vec![x]].concat())
            })
            .collect()
    })
}

fn howe_hom(p: &SuiteParams) -> HarnessResult<Vec<CheckOutcome>> {
    let (m, n) = (p.m, p.n);
    p.require_dim(pow2(m * n) * upow(3, m))?;
    let (mut criterion, mut counts) = (None, None);
    for lam in polynomial_weights(m, 2) {
        for mu in polynomial_weights(m, 2) {
            let mult = hom_multiplicity(&lam, &mu, n)?;
            let fits = lam.iter().zip(&mu).all(|(a, b)| (0..=n as i64).contains(&(a - b)));
            if (mult > 0) != fits {
                criterion.get_or_insert(format!("lambda = {lam:?}, mu = {mu:?}: multiplicity {mult}"));
            }
            if m == 1 && fits && Rational::from_integer(binomial(n, (lam[0] - mu[0]) as usize)) != int(mult as i64) {
                counts.get_or_insert(format!("lambda = {lam:?}, mu = {mu:?}: multiplicity {mult}"));
            }
        }
    }
    let mut out = vec![CheckOutcome::from_failure("howe-hom-criterion", criterion)];
    if m == 1 {
        out.push(CheckOutcome::from_failure("howe-hom-binomial", counts));
    }
    Ok(out)
}

/// Runs a suite (or `all`, whose check names are prefixed by the suite).
/// `stable` zeroes the elapsed time so reports are byte-identical.
pub fn run_suite(params: &SuiteParams, stable: bool) -> HarnessResult<Report> {
    let start = Instant::now();
    let checks = if params.suite == "all" {
        let mut out = Vec::new();
        for (name, run) in SUITES {
            out.extend(run(params)?.into_iter().map(|o| {
                let full = format!("{name}/{}", o.name);
                named(o, full)
            }));
        }
        out
    } else {
        let run = SUITES
            .iter()
            .find(|(n, _)| *n == params.suite)
            .map(|(_, f)| *f)
            .ok_or_else(|| HarnessError::UnknownSuite(params.suite.clone()))?;
        run(params)?
    };
    let elapsed = if stable { 0 } else { start.elapsed().as_millis() as u64 };
    Ok(Report::new(params, checks.into_iter().map(Into::into).collect(), elapsed))
}
