//! The homomorphism `β_l : Y(gl_n) → U(gl_{n+l})` realized on
//! `G(C^m ⊗ C^{n+l})` in two independent ways, and its comparison with the
//! functor action `E_m(G(C^m ⊗ C^l))`.

use num_traits::One;

use crate::error::Result;
use crate::exact::{series_inverse, QMatrix, Rational, Ring, TruncatedSeries};
use crate::glmodule::GlModule;
use crate::grassmann::{gln_op, Shape, Split};
use crate::induced::e_action_module;
use crate::report::CheckOutcome;
use crate::yangian::{check_yangian_relations, omega_pullback, pi_pullback, tau_shift, YangianModule};

/// Inverse of the block series `[[A, B], [C, D]]` as its four blocks
/// `(Ã, B̃, C̃, D̃)`, via the Schur complements `A − BD^{-1}C` and
/// `D − CA^{-1}B`. The truncation order is the smallest input order.
#[allow(clippy::type_complexity)]
pub fn block_inverse<R: Ring>(
    a: &TruncatedSeries<R>,
    b: &TruncatedSeries<R>,
    c: &TruncatedSeries<R>,
    d: &TruncatedSeries<R>,
) -> Result<(TruncatedSeries<R>, TruncatedSeries<R>, TruncatedSeries<R>, TruncatedSeries<R>)> {
    let a_inv = series_inverse(a)?;
    let d_inv = series_inverse(d)?;
    let at = series_inverse(&a.sub(&b.mul(&d_inv).mul(c)))?;
    let dt = series_inverse(&d.sub(&c.mul(&a_inv).mul(b)))?;
    let bt = a_inv.mul(b).mul(&dt).neg();
    let ct = d_inv.mul(c).mul(&at).neg();
    Ok((at, bt, ct, dt))
}

/// Block `[r0, r0 + nr) × [c0, c0 + nc)` of a series of block matrices with
/// square blocks of size `dim`.
fn series_block(f: &TruncatedSeries<QMatrix>, dim: usize, r0: usize, nr: usize, c0: usize, nc: usize) -> TruncatedSeries<QMatrix> {
    f.map(|x| x.block(r0 * dim, c0 * dim, nr * dim, nc * dim))
}

/// `gl_{n+l}` acting on the columns of `G(C^m ⊗ C^{n+l})`.
pub fn column_action(m: usize, width: usize) -> GlModule {
    let shape = Shape::new(m, width);
    let e = (0..width * width)
        .map(|k| gln_op(shape, k / width, k % width).expect("in range").to_matrix())
        .collect();
    GlModule::new(width, e).expect("column action is a representation")
}

fn module_from_block_series(n: usize, dim: usize, f: &TruncatedSeries<QMatrix>) -> YangianModule {
    let t = (1..=f.order())
        .map(|s| {
            (0..n * n)
                .map(|k| f.coeff(s).block((k / n) * dim, (k % n) * dim, dim, dim))
                .collect()
        })
        .collect();
    YangianModule::new(n, dim, t).expect("consistent sizes")
}

/// `T_ij(u)` for `i, j < n` as the `ij`-entry of `Ã^{-1}`, where `Ã` is the
/// upper-left block of the inverse of `1 + (u − l)^{-1} [Σ_c x_ci ∂_cj]`.
pub fn beta_via_schur(m: usize, n: usize, l: usize, order: usize) -> Result<YangianModule> {
    let width = n + l;
    let gl = column_action(m, width);
    let dim = gl.dim();
    let grid: Vec<Vec<QMatrix>> = (0..width)
        .map(|i| (0..width).map(|j| gl.e(i, j).clone()).collect())
        .collect();
    let big_e = QMatrix::from_blocks(&grid);
    let l_rat = Rational::from_integer((l as i64).into());
    // (u − l)^{-1} = Σ_{s≥1} l^{s−1} u^{−s}
    let mut coeffs = vec![QMatrix::identity(width * dim)];
    let mut p = Rational::one();
    for _ in 1..=order {
        coeffs.push(big_e.scale(&p));
        p *= &l_rat;
    }
    let full = TruncatedSeries::new(coeffs);
    let a = series_block(&full, dim, 0, n, 0, n);
    if l == 0 {
        return Ok(module_from_block_series(n, dim, &a));
    }
    let b = series_block(&full, dim, 0, n, n, l);
    let c = series_block(&full, dim, n, l, 0, n);
    let d = series_block(&full, dim, n, l, n, l);
    let (at, _, _, _) = block_inverse(&a, &b, &c, &d)?;
    Ok(module_from_block_series(n, dim, &series_inverse(&at)?))
}

/// Restriction of a `Y(gl_{n+l})`-module to the subalgebra generated by
/// `T_ij^{(s)}` with `i, j < n`.
pub fn corner(mdl: &YangianModule, n: usize) -> YangianModule {
    let t = (1..=mdl.order())
        .map(|s| (0..n * n).map(|k| mdl.t(s, k / n, k % n).clone()).collect())
        .collect();
    YangianModule::new(n, mdl.dim(), t).expect("consistent sizes")
}

/// The same module through the chain of pullbacks
/// `π_{n+l}`, `ω_{n+l}`, corner restriction, `ω_n`, `τ_l`.
pub fn beta_via_composition(m: usize, n: usize, l: usize, order: usize) -> YangianModule {
    let big = pi_pullback(&column_action(m, n + l), order);
    if l == 0 {
        return omega_pullback(&omega_pullback(&big));
    }
    let small = omega_pullback(&corner(&omega_pullback(&big), n));
    tau_shift(&small, &Rational::from_integer((l as i64).into()))
}

/// `β_l` with every generator written in the basis of
/// `G(C^m ⊗ C^l) ⊗ G(C^m ⊗ C^n)`.
pub fn transported(beta: &YangianModule, m: usize, n: usize, l: usize) -> YangianModule {
    let src = Split::Columns { m, n, l }.basis_map();
    let t = (1..=beta.order())
        .map(|s| (0..n * n).map(|k| beta.t(s, k / n, k % n).transport(&src)).collect())
        .collect();
    YangianModule::new(n, beta.dim(), t).expect("consistent sizes")
}

fn first_mismatch(x: &YangianModule, y: &YangianModule) -> Option<String> {
    x.generators()
        .zip(y.generators())
        .find(|((_, _, _, a), (_, _, _, b))| a != b)
        .map(|((s, i, j, _), _)| format!("T^({s})_{}{}", i + 1, j + 1))
}

/// Both realizations of `β_l` agree, satisfy the defining relations,
/// commute with `gl_l`, and coincide with `E_m(G(C^m ⊗ C^l))`.
pub fn check_arol(m: usize, n: usize, l: usize, order: usize) -> Result<Vec<CheckOutcome>> {
    let tag = format!("(m,n,l,S) = ({m},{n},{l},{order})");
    let schur = beta_via_schur(m, n, l, order)?;
    let comp = beta_via_composition(m, n, l, order);
    let mut out = vec![CheckOutcome::from_failure(
        "olshanski-pipelines",
        first_mismatch(&schur, &comp).map(|g| format!("{g} differs at {tag}")),
    )];
    let mut rel = check_yangian_relations(&schur);
    rel.name = "olshanski-relations".into();
    out.push(rel);

    let gl = column_action(m, n + l);
    let mut fail = None;
    'outer: for (s, i, j, x) in schur.generators() {
        for a in n..n + l {
            for b in n..n + l {
                if !x.commutator(gl.e(a, b)).is_zero() {
                    fail = Some(format!("T^({s})_{}{} and E_{}{} at {tag}", i + 1, j + 1, a + 1, b + 1));
                    break 'outer;
                }
            }
        }
    }
    out.push(CheckOutcome::from_failure("olshanski-centralizer", fail));

    let target = e_action_module(&GlModule::grassmann(m, l), n, order);
    out.push(CheckOutcome::from_failure(
        "olshanski-functor",
        first_mismatch(&transported(&schur, m, n, l), &target).map(|g| format!("{g} differs at {tag}")),
    ));
    Ok(out)
}
