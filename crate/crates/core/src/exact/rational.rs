//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always normalized with a positive denominator.
pub type Rational = BigRational;

/// `n / d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats as `p/q`, including integers (`3/1`, `0/1`).
pub fn fmt_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p`, `-p`, `p/q` (whitespace tolerant).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("rational '{s}'"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Binomial coefficient `C(n, k)` as a big integer (0 when `k > n`).
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `q^k` for a non-negative integer exponent.
pub fn pow(q: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= q;
    }
    acc
}

/// `(-1)^k`.
pub fn sign_pow(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_is_p_over_q() {
        assert_eq!(fmt_rational(&rat(2, 4)), "1/2");
        assert_eq!(fmt_rational(&rat(-3, 1)), "-3/1");
        assert_eq!(fmt_rational(&int(0)), "0/1");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["1/3", "-7/2", "5", " 10/4 ", "0"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(parse_rational(&fmt_rational(&q)).unwrap(), q);
        }
        assert_eq!(parse_rational("10/4").unwrap(), rat(5, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn lowest_terms_positive_denominator() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 0), BigInt::from(1));
        assert_eq!(binomial(2, 3), BigInt::from(0));
        for n in 0..10 {
            let row: BigInt = (0..=n).map(|k| binomial(n, k)).sum();
            assert_eq!(row, BigInt::from(1u64 << n));
        }
    }
}
