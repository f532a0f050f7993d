//! Plain-text configuration: `key = value` lines, `#` comments, and
//! `[suite-name]` headers scoping the lines below them to one suite.

use std::collections::BTreeMap;

use crate::error::{HarnessError, HarnessResult};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    global: BTreeMap<String, String>,
    sections: BTreeMap<String, BTreeMap<String, String>>,
}

impl Config {
    pub fn parse(text: &str, path: &str) -> HarnessResult<Self> {
        let mut cfg = Config::default();
        let mut section: Option<String> = None;
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: &str| HarnessError::Config {
                path: path.to_string(),
                line: k + 1,
                message: message.to_string(),
            };
            if let Some(rest) = line.strip_prefix('[') {
                let name = rest.strip_suffix(']').ok_or_else(|| err("unterminated section header"))?.trim();
                if name.is_empty() {
                    return Err(err("empty section name"));
                }
                section = Some(name.to_string());
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| err("expected `key = value`"))?;
            let (key, value) = (key.trim(), value.trim());
            if key.is_empty() {
                return Err(err("empty key"));
            }
            let map = match &section {
                Some(s) => cfg.sections.entry(s.clone()).or_default(),
                None => &mut cfg.global,
            };
            map.insert(key.to_string(), value.to_string());
        }
        Ok(cfg)
    }

    pub fn load(path: &str) -> HarnessResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
            path: path.to_string(),
            source,
        })?;
        Self::parse(&text, path)
    }

    /// Values for `suite`: global lines overridden by the suite's section.
    pub fn for_suite(&self, suite: &str) -> BTreeMap<String, String> {
        let mut out = self.global.clone();
        if let Some(sec) = self.sections.get(suite) {
            out.extend(sec.iter().map(|(k, v)| (k.clone(), v.clone())));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_override_globals() {
        let cfg = Config::parse("m = 3\nseed = 1 # comment\n\n[hecke]\nm = 2\n", "t").unwrap();
        assert_eq!(cfg.for_suite("hecke")["m"], "2");
        assert_eq!(cfg.for_suite("hecke")["seed"], "1");
        assert_eq!(cfg.for_suite("clifford")["m"], "3");
    }

    #[test]
    fn malformed_lines_are_reported() {
        let err = Config::parse("m = 2\nbogus\n", "x.cfg").unwrap_err();
        assert!(matches!(err, HarnessError::Config { line: 2, .. }));
        assert!(Config::parse("[open\n", "x").is_err());
        assert!(Config::parse("= 3\n", "x").is_err());
    }
}
