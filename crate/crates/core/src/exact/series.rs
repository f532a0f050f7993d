//! Truncated power series in `u^{-1}` over an arbitrary coefficient ring.

use num_traits::{One, Zero};

use super::rational::{binomial, Rational};
use super::ring::Ring;
use crate::error::{Error, Result};

/// `c_0 + c_1 u^{-1} + ... + c_S u^{-S}`; products drop every term beyond
/// `u^{-S}`.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c_0");
        TruncatedSeries { coeffs }
    }

    /// The constant series `c` of order `order`.
    pub fn constant(c: R, order: usize) -> Self {
        let z = c.zero_like();
        let mut coeffs = vec![z; order + 1];
        coeffs[0] = c;
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncatedSeries::new(self.coeffs[..=order].to_vec())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries::new(self.coeffs.iter().map(f).collect())
    }

    fn common_order(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let s = self.common_order(other);
        TruncatedSeries::new((0..=s).map(|k| self.coeffs[k].add(&other.coeffs[k])).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let s = self.common_order(other);
        TruncatedSeries::new((0..=s).map(|k| self.coeffs[k].sub(&other.coeffs[k])).collect())
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|x| x.scale(c))
    }

    /// Cauchy product truncated at the smaller of the two orders. The
    /// coefficient ring may be noncommutative; `self` stays on the left.
    pub fn mul(&self, other: &Self) -> Self {
        let s = self.common_order(other);
        let coeffs = (0..=s)
            .map(|k| {
                let mut acc: Option<R> = None;
                for r in 0..=k {
                    let (a, b) = (&self.coeffs[r], &other.coeffs[k - r]);
                    if a.vanishes() || b.vanishes() {
                        continue;
                    }
                    let t = a.mul(b);
                    acc = Some(match acc {
                        Some(x) => x.add(&t),
                        None => t,
                    });
                }
                acc.unwrap_or_else(|| self.coeffs[0].mul(&other.coeffs[0]).zero_like())
            })
            .collect();
        TruncatedSeries::new(coeffs)
    }

    /// `f(-u)`: multiplies `c_s` by `(-1)^s`.
    pub fn negate_variable(&self) -> Self {
        TruncatedSeries::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(s, c)| if s % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        )
    }

    /// `u^{-1} f(u)`, keeping the order.
    pub fn shift_down(&self) -> Self {
        let mut coeffs = vec![self.coeffs[0].zero_like()];
        coeffs.extend(self.coeffs[..self.order()].iter().cloned());
        TruncatedSeries::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::vanishes)
    }

    /// First index at which two series differ, within the common order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        (0..=self.common_order(other)).find(|&k| self.coeffs[k] != other.coeffs[k])
    }
}

/// Inverse series by `g_0 = c_0^{-1}`,
/// `g_s = -c_0^{-1} Σ_{r=1}^{s} c_r g_{s-r}`.
pub fn series_inverse<R: Ring>(f: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    let c0inv = f.coeff(0).try_inverse().ok_or(Error::NonInvertibleLeadingTerm)?;
    let mut g: Vec<R> = vec![c0inv.clone()];
    for s in 1..=f.order() {
        let mut acc = c0inv.zero_like();
        for r in 1..=s {
            let c = f.coeff(r);
            if !c.vanishes() && !g[s - r].vanishes() {
                acc = acc.add(&c.mul(&g[s - r]));
            }
        }
        g.push(c0inv.mul(&acc).neg());
    }
    Ok(TruncatedSeries::new(g))
}

/// Re-expansion of `f(u - z)` in powers of `u^{-1}`:
/// `c'_s = Σ_{r=1}^{s} C(s-1, s-r) z^{s-r} c_r` for `s ≥ 1`.
pub fn series_substitute_shift<R: Ring>(f: &TruncatedSeries<R>, z: &Rational) -> TruncatedSeries<R> {
    let mut zp = vec![Rational::one()];
    for k in 1..=f.order() {
        zp.push(&zp[k - 1] * z);
    }
    let mut coeffs = vec![f.coeff(0).clone()];
    for s in 1..=f.order() {
        let mut acc = f.coeff(0).zero_like();
        for r in 1..=s {
            let w: Rational = Rational::from_integer(binomial(s - 1, s - r)) * &zp[s - r];
            if !Zero::is_zero(&w) && !f.coeff(r).vanishes() {
                acc = acc.add(&f.coeff(r).scale(&w));
            }
        }
        coeffs.push(acc);
    }
    TruncatedSeries::new(coeffs)
}

/// Coefficients of `(u - z)^{-1} = Σ_{k≥1} z^{k-1} u^{-k}` up to `u^{-order}`.
pub fn geometric_pole(z: &Rational, order: usize) -> TruncatedSeries<Rational> {
    let mut coeffs = vec![Rational::zero()];
    let mut p = Rational::one();
    for _ in 1..=order {
        coeffs.push(p.clone());
        p *= z;
    }
    TruncatedSeries::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::matrix::QMatrix;
    use crate::exact::rational::{int, rat};
    use proptest::prelude::*;

    fn qseries(c: &[Rational]) -> TruncatedSeries<Rational> {
        TruncatedSeries::new(c.to_vec())
    }

    #[test]
    fn geometric_inverse() {
        let a = rat(3, 2);
        let f = qseries(&[int(1), a.clone(), int(0), int(0), int(0)]);
        let g = series_inverse(&f).unwrap();
        let expect: Vec<Rational> = (0..5).map(|k| crate::exact::rational::pow(&-a.clone(), k)).collect();
        assert_eq!(g.coeffs(), expect.as_slice());
    }

    #[test]
    fn inverse_of_one() {
        let f = TruncatedSeries::constant(int(1), 3);
        assert_eq!(series_inverse(&f).unwrap(), f);
    }

    #[test]
    fn second_order_inverse_multiplies_back() {
        let (a, b) = (rat(2, 3), rat(-5, 7));
        let f = qseries(&[int(1), a.clone(), b.clone()]);
        let g = series_inverse(&f).unwrap();
        assert_eq!(g.coeff(2), &(&a * &a - &b));
        assert_eq!(f.mul(&g), TruncatedSeries::constant(int(1), 2));
    }

    #[test]
    fn non_invertible_leading_term() {
        let f = qseries(&[int(0), int(1)]);
        assert_eq!(series_inverse(&f), Err(Error::NonInvertibleLeadingTerm));
    }

    #[test]
    fn shift_by_zero_is_identity() {
        let f = qseries(&[int(1), int(2), int(3), int(4)]);
        assert_eq!(series_substitute_shift(&f, &int(0)), f);
    }

    /// 1/(u - z) by long division: u^{-1} (1 - z u^{-1})^{-1}.
    #[test]
    fn shift_matches_long_division() {
        let z = rat(-2, 5);
        let a = rat(7, 3);
        let order = 6;
        let mut c = vec![int(0); order + 1];
        c[0] = int(1);
        c[1] = a.clone();
        let shifted = series_substitute_shift(&qseries(&c), &z);
        // Long division of a/(u - z): remainder a, quotient terms a z^{k-1} u^{-k}.
        let mut rem = a.clone();
        let mut expect = vec![int(1)];
        for _ in 1..=order {
            expect.push(rem.clone());
            rem = &rem * &z;
        }
        assert_eq!(shifted.coeffs(), expect.as_slice());
    }

    #[test]
    fn second_coefficient_rule() {
        let z = rat(1, 3);
        let f = qseries(&[int(1), int(2), int(5)]);
        let g = series_substitute_shift(&f, &z);
        assert_eq!(g.coeff(2), &(int(5) + &z * int(2)));
    }

    #[test]
    fn matrix_coefficients_inverse_both_sides() {
        let a = QMatrix::from_dense(&[vec![int(0), int(1)], vec![int(2), int(0)]]);
        let b = QMatrix::from_dense(&[vec![int(1), int(0)], vec![int(3), int(-1)]]);
        let f = TruncatedSeries::new(vec![QMatrix::identity(2), a, b, QMatrix::zeros(2, 2)]);
        let g = series_inverse(&f).unwrap();
        let one = TruncatedSeries::constant(QMatrix::identity(2), 3);
        assert_eq!(f.mul(&g), one);
        assert_eq!(g.mul(&f), one);
    }

    fn arb_series() -> impl Strategy<Value = TruncatedSeries<Rational>> {
        proptest::collection::vec((-5i64..6, 1i64..4), 4).prop_map(|v| {
            let mut c: Vec<Rational> = v.into_iter().map(|(n, d)| rat(n, d)).collect();
            c[0] = int(1) + c[0].clone() * c[0].clone();
            TruncatedSeries::new(c)
        })
    }

    proptest! {
        #[test]
        fn double_inverse(f in arb_series()) {
            let g = series_inverse(&series_inverse(&f).unwrap()).unwrap();
            prop_assert_eq!(g, f);
        }

        #[test]
        fn shift_there_and_back(f in arb_series(), n in -4i64..5, d in 1i64..4) {
            let z = rat(n, d);
            let g = series_substitute_shift(&series_substitute_shift(&f, &z), &-z);
            prop_assert_eq!(g, f);
        }

        #[test]
        fn shift_composes(f in arb_series(), a in -3i64..4, b in -3i64..4) {
            let (za, zb) = (rat(a, 2), rat(b, 3));
            let two = series_substitute_shift(&series_substitute_shift(&f, &za), &zb);
            let one = series_substitute_shift(&f, &(za + zb));
            prop_assert_eq!(two, one);
        }

        #[test]
        fn pole_series_is_inverse_of_u_minus_z(n in -4i64..5, d in 1i64..4) {
            // u^{-1}(1 - z u^{-1})^{-1}
            let z = rat(n, d);
            let base = series_inverse(&qseries(&[int(1), -z.clone(), int(0), int(0), int(0)])).unwrap();
            prop_assert_eq!(base.shift_down(), geometric_pole(&z, 4));
        }
    }
}
