use super::UElement;
use crate::exact::{series_inverse, Mat, Ring, TruncatedSeries};

/// `X(u) = (u − E′)^{-1}` with `E′_ab = E_ba`, for the `gl_m` generators
/// sitting inside `U(gl_k)` (`m ≤ k`), truncated at `u^{-order}`.
pub fn x_series_in(k: usize, m: usize, order: usize) -> TruncatedSeries<Mat<UElement>> {
    assert!(m <= k && order >= 1);
    let proto = UElement::zero(k);
    let e_prime = Mat::from_fn(m, m, &proto, |a, b| UElement::e(k, b, a));
    let mut coeffs = vec![Mat::identity(m, &proto), e_prime.neg()];
    coeffs.resize(order + 1, Mat::zeros(m, m, &proto));
    // (u − E′)^{-1} = u^{-1} (1 − E′u^{-1})^{-1}
    let inv = series_inverse(&TruncatedSeries::new(coeffs)).expect("leading term is the identity");
    inv.shift_down()
}

/// `X(u)` over `U(gl_m)`.
pub fn x_series(m: usize, order: usize) -> TruncatedSeries<Mat<UElement>> {
    x_series_in(m, m, order)
}

/// `Z(u) = Σ_c X_cc(u)` over `U(gl_k)`.
pub fn z_series_in(k: usize, m: usize, order: usize) -> TruncatedSeries<UElement> {
    let x = x_series_in(k, m, order);
    x.map(|c| (0..m).fold(UElement::zero(k), |acc, i| acc.add(c.get(i, i))))
}

/// `Z(u)` over `U(gl_m)`.
pub fn z_series(m: usize, order: usize) -> TruncatedSeries<UElement> {
    z_series_in(m, m, order)
}

/// Outcome of the series identity for one pair `(a, d)` (zero-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaOutcome {
    pub a: usize,
    pub d: usize,
    /// First order `s` at which the `u^{-s}` coefficients differ, with both
    /// sides printed.
    pub first_mismatch: Option<(usize, String, String)>,
}

impl LemmaOutcome {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares `Σ_b E_{m+d,b} X_ab(u)` with `Σ_b X_ab(u) E_{m+d,b} (1 + Z(u))`
/// in `U(gl_{m+l})`, coefficientwise up to `u^{-order}`.
pub fn check_lemma2(m: usize, l: usize, order: usize) -> Vec<LemmaOutcome> {
    let k = m + l;
    let x = x_series_in(k, m, order);
    let z = z_series_in(k, m, order);
    let one_plus_z = TruncatedSeries::constant(UElement::one(k), order).add(&z);
    let entry = |a: usize, b: usize| x.map(|c| c.get(a, b).clone());
    let mut out = Vec::new();
    for a in 0..m {
        for d in 0..l {
            let mut lhs = TruncatedSeries::constant(UElement::zero(k), order);
            let mut rhs = lhs.clone();
            for b in 0..m {
                let e = TruncatedSeries::constant(UElement::e(k, m + d, b), order);
                let xab = entry(a, b);
                lhs = lhs.add(&e.mul(&xab));
                rhs = rhs.add(&xab.mul(&e).mul(&one_plus_z));
            }
            let first_mismatch = lhs
                .first_difference(&rhs)
                .map(|s| (s, lhs.coeff(s).pretty(), rhs.coeff(s).pretty()));
            out.push(LemmaOutcome { a, d, first_mismatch });
        }
    }
    out
}
