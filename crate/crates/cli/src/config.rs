//! Flat `key = value` run configuration.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;
use qeuclid::scalars::rat;
use thiserror::Error;

use crate::suites::Suite;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("line {0}: expected `key = value`")]
    Syntax(usize),
    #[error("line {0}: unknown key `{1}`")]
    UnknownKey(usize, String),
    #[error("line {line}: bad value `{value}` for `{key}`")]
    BadValue { line: usize, key: String, value: String },
    #[error("invalid configuration: {0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub q0: BigRational,
    pub x0: BigRational,
    /// Lattice window half-width `J`.
    pub window: i32,
    /// Lattice margin `M`.
    pub margin: i32,
    /// Total degree cap for the star-product oracle comparison.
    pub star_deg: u16,
    /// Degree cap for coproduct and counit checks.
    pub braid_deg: u16,
    /// Largest exponential cap for eigenvalue checks.
    pub exp_cap: u32,
    /// Number of random samples per randomized check.
    pub samples: usize,
    pub seed: u64,
    /// Record per-check runtimes; off gives byte-identical reports.
    pub timing: bool,
    pub enabled: BTreeMap<Suite, bool>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            q0: rat(11, 10),
            x0: BigRational::one(),
            window: 10,
            margin: 4,
            star_deg: 6,
            braid_deg: 5,
            exp_cap: 5,
            samples: 20,
            seed: 7,
            timing: true,
            enabled: Suite::ALL.iter().map(|s| (*s, true)).collect(),
        }
    }
}

fn value<T: FromStr>(line: usize, key: &str, v: &str) -> Result<T, ConfigError> {
    v.parse().map_err(|_| ConfigError::BadValue { line, key: key.to_string(), value: v.to_string() })
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut c = Config::default();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (k, v) = body.split_once('=').ok_or(ConfigError::Syntax(line))?;
            let (k, v) = (k.trim(), v.trim());
            match k {
                "q0" => c.q0 = value(line, k, v)?,
                "x0" => c.x0 = value(line, k, v)?,
                "J" => c.window = value(line, k, v)?,
                "M" => c.margin = value(line, k, v)?,
                "deg" | "star_deg" => c.star_deg = value(line, k, v)?,
                "braid_deg" => c.braid_deg = value(line, k, v)?,
                "exp_cap" => c.exp_cap = value(line, k, v)?,
                "samples" => c.samples = value(line, k, v)?,
                "seed" => c.seed = value(line, k, v)?,
                "timing" => c.timing = value(line, k, v)?,
                _ => match k.strip_prefix("suite.").and_then(Suite::from_name) {
                    Some(s) => {
                        c.enabled.insert(s, value(line, k, v)?);
                    }
                    None => return Err(ConfigError::UnknownKey(line, k.to_string())),
                },
            }
        }
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.q0 <= BigRational::one() {
            return Err(ConfigError::Invalid("q0 must exceed 1".into()));
        }
        if self.x0 <= BigRational::from_integer(0.into()) {
            return Err(ConfigError::Invalid("x0 must be positive".into()));
        }
        if self.margin < 4 || self.window <= self.margin {
            return Err(ConfigError::Invalid("need M >= 4 and J > M".into()));
        }
        if self.exp_cap < 1 {
            return Err(ConfigError::Invalid("exp_cap must be at least 1".into()));
        }
        Ok(())
    }

    pub fn is_enabled(&self, s: Suite) -> bool {
        self.enabled.get(&s).copied().unwrap_or(true)
    }

    /// Key-value pairs echoed into the report header.
    pub fn echo(&self) -> BTreeMap<&'static str, String> {
        BTreeMap::from([
            ("q0", self.q0.to_string()),
            ("x0", self.x0.to_string()),
            ("J", self.window.to_string()),
            ("M", self.margin.to_string()),
            ("deg", self.star_deg.to_string()),
            ("braid_deg", self.braid_deg.to_string()),
            ("exp_cap", self.exp_cap.to_string()),
            ("samples", self.samples.to_string()),
            ("seed", self.seed.to_string()),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let c = Config::parse("# desk run\nq0 = 6/5\nJ=12\nsuite.lattice = false  # slow\n").unwrap();
        assert_eq!(c.q0, rat(6, 5));
        assert_eq!(c.window, 12);
        assert!(!c.is_enabled(Suite::Lattice));
        assert!(c.is_enabled(Suite::Star));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Config::parse("q0 6/5"), Err(ConfigError::Syntax(1)));
        assert!(matches!(Config::parse("\nfoo = 1"), Err(ConfigError::UnknownKey(2, _))));
        assert!(matches!(Config::parse("J = ten"), Err(ConfigError::BadValue { line: 1, .. })));
        assert!(matches!(Config::parse("q0 = 9/10"), Err(ConfigError::Invalid(_))));
        assert!(matches!(Config::parse("M = 3"), Err(ConfigError::Invalid(_))));
    }
}
