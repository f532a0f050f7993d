//! Suite parameters: defaults, then config values, then command-line flags.

use std::collections::BTreeMap;

use ymick_core::enveloping::{default_generic, Weight};
use ymick_core::perm::Perm;

use crate::error::{HarnessError, HarnessResult};

pub const DEFAULT_MAX_DIM: u128 = 4096;

/// Values given explicitly (command line or config); `None` keeps the
/// lower-priority value.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub l: Option<usize>,
    pub big_n: Option<usize>,
    pub order: Option<usize>,
    pub mu: Option<String>,
    pub sigma: Option<String>,
    pub seed: Option<u64>,
    pub max_dim: Option<u128>,
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> HarnessResult<T> {
    value
        .trim()
        .parse()
        .map_err(|_| HarnessError::InvalidParameter(format!("{key} = `{value}` is not a non-negative integer")))
}

impl Overrides {
    /// Reads the recognized keys of a config map; unknown keys are errors.
    pub fn from_map(map: &BTreeMap<String, String>) -> HarnessResult<Self> {
        let mut out = Overrides::default();
        for (k, v) in map {
            match k.as_str() {
                "m" => out.m = Some(parse_num(k, v)?),
                "n" => out.n = Some(parse_num(k, v)?),
                "l" => out.l = Some(parse_num(k, v)?),
                "N" => out.big_n = Some(parse_num(k, v)?),
                "order" | "S" => out.order = Some(parse_num(k, v)?),
                "mu" => out.mu = Some(v.clone()),
                "sigma" => out.sigma = Some(v.clone()),
                "seed" => out.seed = Some(parse_num(k, v)?),
                "max_dim" => out.max_dim = Some(parse_num(k, v)?),
                _ => return Err(HarnessError::InvalidParameter(format!("unknown key `{k}`"))),
            }
        }
        Ok(out)
    }

    /// `self` with every value present in `top` replaced.
    pub fn overlay(&self, top: &Overrides) -> Overrides {
        Overrides {
            m: top.m.or(self.m),
            n: top.n.or(self.n),
            l: top.l.or(self.l),
            big_n: top.big_n.or(self.big_n),
            order: top.order.or(self.order),
            mu: top.mu.clone().or_else(|| self.mu.clone()),
            sigma: top.sigma.clone().or_else(|| self.sigma.clone()),
            seed: top.seed.or(self.seed),
            max_dim: top.max_dim.or(self.max_dim),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteParams {
    pub suite: String,
    pub m: usize,
    pub n: usize,
    pub l: usize,
    pub big_n: usize,
    pub order: usize,
    /// Always of length `m`; the default is `(1/p, …, m/p)`.
    pub mu: Weight,
    pub sigma: Option<Perm>,
    pub seed: u64,
    pub max_dim: u128,
}

impl SuiteParams {
    pub fn resolve(suite: &str, given: &Overrides) -> HarnessResult<Self> {
        let m = given.m.unwrap_or(2);
        if m == 0 {
            return Err(HarnessError::InvalidParameter("m must be at least 1".into()));
        }
        let order = given.order.unwrap_or(4);
        if order == 0 {
            return Err(HarnessError::InvalidParameter("order must be at least 1".into()));
        }
        let mu = match &given.mu {
            Some(text) => Weight::parse(text)?,
            None => default_generic(m),
        };
        if mu.len() != m {
            return Err(HarnessError::InvalidParameter(format!("mu has {} labels but m = {m}", mu.len())));
        }
        let sigma = match &given.sigma {
            Some(text) => {
                let entries = text
                    .split(',')
                    .map(|x| parse_num::<usize>("sigma", x))
                    .collect::<HarnessResult<Vec<_>>>()?;
                let p = Perm::from_one_line(&entries)?;
                if p.size() != m {
                    return Err(HarnessError::InvalidParameter(format!("sigma has {} entries but m = {m}", p.size())));
                }
                Some(p)
            }
            None => None,
        };
        Ok(SuiteParams {
            suite: suite.to_string(),
            m,
            n: given.n.unwrap_or(2),
            l: given.l.unwrap_or(1),
            big_n: given.big_n.unwrap_or(2),
            order,
            mu,
            sigma,
            seed: given.seed.unwrap_or(42),
            max_dim: given.max_dim.unwrap_or(DEFAULT_MAX_DIM),
        })
    }

    pub fn require_generic(&self) -> HarnessResult<()> {
        if self.mu.is_generic() {
            Ok(())
        } else {
            Err(HarnessError::NonGenericWeight(self.mu.to_string()))
        }
    }

    pub fn require_dim(&self, needed: u128) -> HarnessResult<()> {
        if needed > self.max_dim {
            Err(HarnessError::DimensionCapExceeded {
                needed,
                cap: self.max_dim,
            })
        } else {
            Ok(())
        }
    }
}

/// `2^bits`, saturating.
pub fn pow2(bits: usize) -> u128 {
    if bits >= 127 {
        u128::MAX
    } else {
        1u128 << bits
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ymick_core::exact::rat;

    #[test]
    fn defaults() {
        let p = SuiteParams::resolve("clifford", &Overrides::default()).unwrap();
        assert_eq!((p.m, p.n, p.l, p.big_n, p.order, p.seed), (2, 2, 1, 2, 4, 42));
        assert_eq!(p.mu, Weight(vec![rat(1, 3), rat(2, 3)]));
        assert_eq!(p.max_dim, 4096);
    }

    #[test]
    fn overlay_prefers_the_top_layer() {
        let low = Overrides { m: Some(3), seed: Some(1), ..Default::default() };
        let top = Overrides { m: Some(2), ..Default::default() };
        let both = low.overlay(&top);
        assert_eq!((both.m, both.seed), (Some(2), Some(1)));
    }

    #[test]
    fn validation() {
        let bad_len = Overrides { mu: Some("1/3".into()), ..Default::default() };
        assert!(SuiteParams::resolve("x", &bad_len).is_err());
        let sigma = Overrides { sigma: Some("2,1".into()), ..Default::default() };
        assert_eq!(SuiteParams::resolve("x", &sigma).unwrap().sigma, Some(Perm::simple(2, 0)));
        let bad_sigma = Overrides { sigma: Some("2,2".into()), ..Default::default() };
        assert!(SuiteParams::resolve("x", &bad_sigma).is_err());
        let p = SuiteParams::resolve("x", &Overrides { mu: Some("1,0".into()), ..Default::default() }).unwrap();
        assert!(matches!(p.require_generic(), Err(HarnessError::NonGenericWeight(_))));
        assert!(p.require_dim(4097).is_err());
        assert!(p.require_dim(4096).is_ok());
        let mut map = BTreeMap::new();
        map.insert("bogus".to_string(), "1".to_string());
        assert!(Overrides::from_map(&map).is_err());
    }
}
