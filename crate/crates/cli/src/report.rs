//! Check records and their JSON rendering.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use qeuclid::scalars::Gauss;
use qeuclid::series::CPoly;
use serde::Serialize;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A measured or candidate-selection outcome that does not gate the run.
    Finding,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: String,
    #[serde(rename = "check-id")]
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub mandatory: bool,
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(rename = "runtime-ms")]
    pub runtime_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub config: BTreeMap<&'static str, String>,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
    pub findings: usize,
}

impl Report {
    pub fn new(config: BTreeMap<&'static str, String>, checks: Vec<Check>) -> Self {
        let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
        let (passed, failed, findings) = (count(Status::Pass), count(Status::Fail), count(Status::Finding));
        Report { config, checks, passed, failed, findings }
    }

    pub fn mandatory_failure(&self) -> bool {
        self.checks.iter().any(|c| c.mandatory && c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `num/den`, also for integers.
pub fn render_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn render_gauss(g: &Gauss) -> String {
    let re = render_rational(&g.re);
    if g.im.is_zero() {
        re
    } else if g.im.is_negative() {
        format!("{re} - {}*i", render_rational(&-g.im.clone()))
    } else {
        format!("{re} + {}*i", render_rational(&g.im))
    }
}

/// The lowest-degree terms of a nonzero residual, or `0/1`.
pub fn render_poly_residual(p: &CPoly) -> String {
    if p.is_zero() {
        return "0/1".to_string();
    }
    let low = p.terms().map(|(e, _)| e.degree()).min().unwrap_or(0);
    p.filter(|e| e.degree() == low).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use qeuclid::scalars::rat;

    #[test]
    fn rendering() {
        assert_eq!(render_rational(&rat(3, 1)), "3/1");
        assert_eq!(render_gauss(&Gauss::new(rat(-1, 2), rat(0, 1))), "-1/2");
        assert_eq!(render_gauss(&Gauss::new(rat(1, 2), rat(2, 3))), "1/2 + 2/3*i");
        assert_eq!(render_gauss(&Gauss::new(rat(1, 2), rat(-2, 3))), "1/2 - 2/3*i");
        let p: CPoly = "x3^3 + 2*x+ - x-".parse().unwrap();
        assert_eq!(render_poly_residual(&p), "2*x+ - x-");
        assert_eq!(render_poly_residual(&CPoly::zero()), "0/1");
    }

    #[test]
    fn empty_report_is_valid() {
        let r = Report::new(BTreeMap::new(), Vec::new());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["checks"], serde_json::json!([]));
        assert!(!r.mandatory_failure());
    }
}
