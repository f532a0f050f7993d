//! Modules over the degenerate affine Hecke algebra `H_N`.
//!
//! A module stores the matrices of the simple transpositions `σ_p`
//! (`p = 0..N-1` swapping `p` and `p + 1`) and of the elements `y_p`; the
//! commuting generators are recovered as `x_p = y_p + Σ_{q<p} σ_qp`.

use num_traits::One;

use crate::exact::{QMatrix, Rational};
use crate::glmodule::GlModule;
use crate::perm::Perm;
use crate::report::CheckOutcome;

#[derive(Clone, Debug, PartialEq)]
pub struct HeckeModule {
    dim: usize,
    points: usize,
    sigma: Vec<QMatrix>,
    y: Vec<QMatrix>,
}

/// Permutation of tensor factors on `(C^m)^{⊗N}`: `e_{a_0} ⊗ … ⊗ e_{a_{N-1}}`
/// is sent to the tensor with `a_k` in slot `π(k)`. Index of a basis
/// tensor is `Σ a_k m^{N-1-k}` (first factor most significant).
pub fn factor_permutation(m: usize, pi: &Perm) -> QMatrix {
    let n = pi.size();
    let dim = m.pow(n as u32);
    let trip = (0..dim).map(|idx| {
        let digits = digits_of(idx, m, n);
        let mut out = vec![0; n];
        for (k, &d) in digits.iter().enumerate() {
            out[pi.apply(k)] = d;
        }
        (index_of(&out, m), idx, Rational::one())
    });
    QMatrix::from_triplets(dim, dim, trip.collect::<Vec<_>>())
}

pub(crate) fn digits_of(mut idx: usize, m: usize, n: usize) -> Vec<usize> {
    let mut d = vec![0; n];
    for k in (0..n).rev() {
        d[k] = idx % m;
        idx /= m;
    }
    d
}

pub(crate) fn index_of(digits: &[usize], m: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * m + d)
}

/// `E_ab` acting in tensor slot `p` of `(C^m)^{⊗N}`.
pub fn slot_unit(m: usize, n: usize, p: usize, a: usize, b: usize) -> QMatrix {
    let mut out = QMatrix::identity(1);
    for q in 0..n {
        let f = if q == p {
            QMatrix::from_triplets(m, m, [(a, b, Rational::one())])
        } else {
            QMatrix::identity(m)
        };
        out = out.kron(&f);
    }
    out
}

impl HeckeModule {
    pub fn new(dim: usize, sigma: Vec<QMatrix>, y: Vec<QMatrix>) -> Self {
        let points = y.len();
        assert_eq!(sigma.len(), points.saturating_sub(1), "need N-1 transpositions");
        HeckeModule { dim, points, sigma, y }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `N`.
    pub fn points(&self) -> usize {
        self.points
    }

    pub fn sigma(&self, p: usize) -> &QMatrix {
        &self.sigma[p]
    }

    pub fn y(&self, p: usize) -> &QMatrix {
        &self.y[p]
    }

    /// Matrix of an arbitrary permutation, via its reduced word.
    pub fn perm_matrix(&self, pi: &Perm) -> QMatrix {
        pi.reduced_word()
            .iter()
            .fold(QMatrix::identity(self.dim), |acc, &c| &acc * &self.sigma[c])
    }

    /// The transposition `σ_pq`.
    pub fn sigma_pq(&self, p: usize, q: usize) -> QMatrix {
        self.perm_matrix(&Perm::transposition(self.points, p, q))
    }

    /// `x_p = y_p + Σ_{q<p} σ_qp`.
    pub fn x(&self, p: usize) -> QMatrix {
        (0..p).fold(self.y[p].clone(), |acc, q| &acc + &self.sigma_pq(q, p))
    }

    /// Every defining relation, one outcome per relation family.
    pub fn check_relations(&self) -> Vec<CheckOutcome> {
        let n = self.points;
        let id = QMatrix::identity(self.dim);
        let mut out = Vec::new();

        let mut fail = None;
        for p in 0..n.saturating_sub(1) {
            if &self.sigma[p] * &self.sigma[p] != id {
                fail.get_or_insert(format!("sigma_{} squared is not 1", p + 1));
            }
        }
        out.push(CheckOutcome::from_failure("sigma-involution", fail));

        let mut fail = None;
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n - 1 {
                let (a, b) = (&self.sigma[p], &self.sigma[q]);
                let ok = if q == p + 1 {
                    &(a * b) * a == &(b * a) * b
                } else {
                    a * b == b * a
                };
                if !ok {
                    fail.get_or_insert(format!("braid relation for sigma_{}, sigma_{}", p + 1, q + 1));
                }
            }
        }
        out.push(CheckOutcome::from_failure("sigma-braid", fail));

        let mut fail = None;
        for pi in Perm::all(n) {
            let s = self.perm_matrix(&pi);
            let sinv = self.perm_matrix(&pi.inverse());
            for p in 0..n {
                if &(&s * &self.y[p]) * &sinv != self.y[pi.apply(p)] {
                    fail.get_or_insert(format!("sigma y_{} sigma^-1 for sigma = {pi}", p + 1));
                }
            }
        }
        out.push(CheckOutcome::from_failure("y-equivariance", fail));

        let mut fail = None;
        for p in 0..n {
            for q in 0..n {
                let lhs = self.y[p].commutator(&self.y[q]);
                let rhs = if p == q {
                    QMatrix::zeros(self.dim, self.dim)
                } else {
                    &self.sigma_pq(p, q) * &(&self.y[p] - &self.y[q])
                };
                if lhs != rhs {
                    fail.get_or_insert(format!("[y_{}, y_{}]", p + 1, q + 1));
                }
            }
        }
        out.push(CheckOutcome::from_failure("y-commutator", fail));

        let xs: Vec<QMatrix> = (0..n).map(|p| self.x(p)).collect();
        let mut fail = None;
        for p in 0..n {
            for q in 0..n {
                if !xs[p].commutator(&xs[q]).is_zero() {
                    fail.get_or_insert(format!("x_{} and x_{} do not commute", p + 1, q + 1));
                }
            }
        }
        out.push(CheckOutcome::from_failure("x-commute", fail));

        let mut fail = None;
        for p in 0..n.saturating_sub(1) {
            let s = &self.sigma[p];
            if s * &xs[p] != &(&xs[p + 1] * s) - &id {
                fail.get_or_insert(format!("sigma_{0} x_{0} = x_{1} sigma_{0} - 1", p + 1, p + 2));
            }
            for q in 0..n {
                if q != p && q != p + 1 && s * &xs[q] != &xs[q] * s {
                    fail.get_or_insert(format!("sigma_{} commutes with x_{}", p + 1, q + 1));
                }
            }
        }
        out.push(CheckOutcome::from_failure("cross-relations", fail));
        out
    }
}

/// `V ⊗ (C^m)^{⊗N}` with `σ_p` permuting tensor factors and
/// `y_p = Σ_{a,b} ρ(E_ba) ⊗ E_ab^{(p)}`.
pub fn cherednik(v: &GlModule, n: usize) -> HeckeModule {
    let m = v.rank();
    let tdim = m.pow(n as u32);
    let iv = QMatrix::identity(v.dim());
    let sigma = (0..n.saturating_sub(1))
        .map(|p| iv.kron(&factor_permutation(m, &Perm::simple(n, p))))
        .collect();
    let y = (0..n)
        .map(|p| {
            let mut acc = QMatrix::zeros(v.dim() * tdim, v.dim() * tdim);
            for a in 0..m {
                for b in 0..m {
                    acc = &acc + &v.e(b, a).kron(&slot_unit(m, n, p, a, b));
                }
            }
            acc
        })
        .collect();
    HeckeModule::new(v.dim() * tdim, sigma, y)
}

/// Diagonal `gl_m` action `ρ(E_ab) ⊗ 1 + Σ_p E_ab^{(p)}` on the space of
/// [`cherednik`].
pub fn diagonal_action(v: &GlModule, n: usize, a: usize, b: usize) -> QMatrix {
    let m = v.rank();
    let tdim = m.pow(n as u32);
    let mut acc = v.e(a, b).kron(&QMatrix::identity(tdim));
    for p in 0..n {
        acc = &acc + &QMatrix::identity(v.dim()).kron(&slot_unit(m, n, p, a, b));
    }
    acc
}

/// The regular `S_N`-module (basis ordered as [`Perm::all`], `σ` acting by
/// left multiplication) with `x_p ↦ Σ_{q<p} σ_qp`, hence `y_p = 0`.
pub fn jm_evaluation(n: usize) -> HeckeModule {
    let elems = Perm::all(n);
    let pos = |p: &Perm| elems.iter().position(|q| q == p).unwrap();
    let dim = elems.len();
    let sigma = (0..n.saturating_sub(1))
        .map(|p| {
            let s = Perm::simple(n, p);
            let trip = elems
                .iter()
                .enumerate()
                .map(|(j, e)| (pos(&s.compose(e)), j, Rational::one()));
            QMatrix::from_triplets(dim, dim, trip.collect::<Vec<_>>())
        })
        .collect();
    HeckeModule::new(dim, sigma, vec![QMatrix::zeros(dim, dim); n])
}

/// Twist by `σ_p ↦ −σ_p`, `y_q ↦ −y_q`.
pub fn sign_twist(w: &HeckeModule) -> HeckeModule {
    HeckeModule {
        dim: w.dim,
        points: w.points,
        sigma: w.sigma.iter().map(|s| -s).collect(),
        y: w.y.iter().map(|s| -s).collect(),
    }
}
