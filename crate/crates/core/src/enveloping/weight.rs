use std::fmt;

use num_traits::Zero;

use crate::exact::{fmt_rational, int, parse_rational, rat, Rational};
use crate::perm::Perm;
use crate::error::{Error, Result};

/// A weight of `gl_m`, given by its labels `(μ_1, …, μ_m)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn new(labels: Vec<Rational>) -> Self {
        Weight(labels)
    }

    pub fn zero(m: usize) -> Self {
        Weight(vec![Rational::zero(); m])
    }

    pub fn from_ints(labels: &[i64]) -> Self {
        Weight(labels.iter().map(|&x| int(x)).collect())
    }

    /// Parses comma separated labels such as `1/3,0`.
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        s.split(',').map(parse_rational).collect::<Result<Vec<_>>>().map(Weight)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[Rational] {
        &self.0
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.len(), other.len(), "weights of different length");
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.len(), other.len(), "weights of different length");
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Adds integer multiplicities, e.g. a Grassmann row weight.
    pub fn add_counts(&self, counts: &[usize]) -> Weight {
        assert_eq!(self.len(), counts.len(), "weights of different length");
        Weight(
            self.0
                .iter()
                .zip(counts)
                .map(|(a, &c)| a + int(c as i64))
                .collect(),
        )
    }

    /// True iff no label difference `μ_a − μ_b` (`a ≠ b`) is an integer.
    pub fn is_generic(&self) -> bool {
        let m = self.len();
        (0..m).all(|a| (a + 1..m).all(|b| !(&self.0[a] - &self.0[b]).is_integer()))
    }

    pub fn require_generic(&self) -> Result<()> {
        if self.is_generic() {
            Ok(())
        } else {
            Err(Error::NonGenericWeight(self.to_string()))
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_rational).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{self}")
    }
}

/// `ρ = (0, −1, …, 1 − m)`.
pub fn rho(m: usize) -> Weight {
    Weight((0..m).map(|a| int(-(a as i64))).collect())
}

/// `σ∘μ = σ(μ + ρ) − ρ`, where `σ(μ)_a = μ_{σ^{-1}(a)}`.
pub fn shifted_action(sigma: &Perm, mu: &Weight) -> Weight {
    assert_eq!(sigma.size(), mu.len(), "permutation and weight sizes differ");
    let r = rho(mu.len());
    Weight(sigma.act_on(&mu.add(&r).0)).sub(&r)
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `(1/p, 2/p, …, m/p)` with `p` the smallest prime greater than `m`.
pub fn default_generic(m: usize) -> Weight {
    let p = (m + 1..).find(|&p| is_prime(p)).unwrap();
    Weight((1..=m).map(|a| rat(a as i64, p as i64)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_action_examples() {
        let mu = Weight(vec![rat(1, 3), int(0)]);
        assert_eq!(shifted_action(&Perm::identity(2), &mu), mu);
        assert_eq!(
            shifted_action(&Perm::simple(2, 0), &mu),
            Weight(vec![int(-1), rat(4, 3)])
        );
    }

    #[test]
    fn shifted_action_is_a_group_action() {
        let mu = Weight(vec![rat(2, 7), rat(-5, 3), rat(1, 11)]);
        for s in Perm::all(3) {
            for t in Perm::all(3) {
                assert_eq!(
                    shifted_action(&s, &shifted_action(&t, &mu)),
                    shifted_action(&s.compose(&t), &mu)
                );
            }
        }
    }

    #[test]
    fn genericity() {
        assert!(Weight(vec![rat(1, 3), int(0)]).is_generic());
        assert!(!Weight::from_ints(&[1, 0]).is_generic());
        assert!(Weight(vec![rat(1, 7), rat(2, 7), rat(3, 7)]).is_generic());
        for m in 1..=6 {
            assert!(default_generic(m).is_generic());
        }
        assert_eq!(default_generic(3), Weight(vec![rat(1, 5), rat(2, 5), rat(3, 5)]));
        assert_eq!(default_generic(2), Weight(vec![rat(1, 3), rat(2, 3)]));
    }

    #[test]
    fn parse_weights() {
        assert_eq!(Weight::parse("1/3, 0").unwrap(), Weight(vec![rat(1, 3), int(0)]));
        assert!(Weight::parse("").is_err());
        assert_eq!(Weight::parse("1/3,0").unwrap().to_string(), "(1/3,0/1)");
    }
}
