//! Machine-readable reports.

use serde::Serialize;

use ymick_core::exact::fmt_rational;
use ymick_core::report::CheckOutcome;

use crate::params::SuiteParams;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamsRecord {
    pub m: usize,
    pub n: usize,
    pub l: usize,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub order: usize,
    /// Labels as `"p/q"` strings.
    pub mu: Vec<String>,
    /// One-based one-line notation.
    pub sigma: Option<Vec<usize>>,
    pub seed: u64,
    pub max_dim: u128,
}

impl From<&SuiteParams> for ParamsRecord {
    fn from(p: &SuiteParams) -> Self {
        ParamsRecord {
            m: p.m,
            n: p.n,
            l: p.l,
            big_n: p.big_n,
            order: p.order,
            mu: p.mu.labels().iter().map(fmt_rational).collect(),
            sigma: p.sigma.as_ref().map(|s| s.images().iter().map(|x| x + 1).collect()),
            seed: p.seed,
            max_dim: p.max_dim,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    pub diagnostic: Option<String>,
}

impl From<CheckOutcome> for CheckRecord {
    fn from(o: CheckOutcome) -> Self {
        CheckRecord {
            name: o.name,
            status: if o.passed { Status::Pass } else { Status::Fail },
            diagnostic: o.diagnostic,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: ParamsRecord,
    /// Sorted by name.
    pub checks: Vec<CheckRecord>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(params: &SuiteParams, mut checks: Vec<CheckRecord>, elapsed_ms: u64) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        Report {
            suite: params.suite.clone(),
            params: params.into(),
            checks,
            elapsed_ms,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_table(&self) -> String {
        let p = &self.params;
        let sigma = p.sigma.as_ref().map_or("-".to_string(), |s| {
            s.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        });
        let mut out = format!(
            "suite: {}\nparams: m={} n={} l={} N={} order={} mu=({}) sigma={} seed={} max_dim={}\n",
            self.suite,
            p.m,
            p.n,
            p.l,
            p.big_n,
            p.order,
            p.mu.join(","),
            sigma,
            p.seed,
            p.max_dim
        );
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out += &format!("{status}  {:<width$}", c.name);
            if let Some(d) = &c.diagnostic {
                out += &format!("  {d}");
            }
            out = out.trim_end().to_string() + "\n";
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        out += &format!("result: {passed}/{} checks passed in {} ms\n", self.checks.len(), self.elapsed_ms);
        out
    }
}
