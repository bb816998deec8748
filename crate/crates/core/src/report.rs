//! Verification reports and their JSON form.
//!
//! Output is byte-stable: cases are sorted by name, parameters by key, and
//! floats are written with 17 significant digits.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Serialize, Serializer};

/// `v` in scientific notation with 17 significant digits.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

fn fixed_float<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if v.is_finite() {
        let n =
            serde_json::Number::from_str(&format_float(*v)).map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    } else {
        s.serialize_none()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Case {
    pub name: String,
    pub params: BTreeMap<String, String>,
    #[serde(serialize_with = "fixed_float")]
    pub metric: f64,
    #[serde(serialize_with = "fixed_float")]
    pub tol: f64,
    pub pass: bool,
}

impl Case {
    /// A case passing when `metric <= tol`. A NaN metric fails.
    pub fn new(name: impl Into<String>, metric: f64, tol: f64) -> Self {
        Self {
            name: name.into(),
            params: BTreeMap::new(),
            metric,
            tol,
            pass: metric <= tol,
        }
    }

    /// A case that could not be evaluated.
    pub fn failed(name: impl Into<String>, tol: f64, error: &dyn std::fmt::Display) -> Self {
        Self::new(name, f64::NAN, tol).param("error", error)
    }

    pub fn param(mut self, key: &str, value: impl std::fmt::Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    /// Replaces the tolerance and recomputes `pass`.
    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self.pass = self.metric <= tol;
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    fn add(self, other: Summary) -> Summary {
        Summary {
            total: self.total + other.total,
            passed: self.passed + other.passed,
            failed: self.failed + other.failed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, mut cases: Vec<Case>) -> Self {
        cases.sort_by(|a, b| a.name.cmp(&b.name));
        let passed = cases.iter().filter(|c| c.pass).count();
        Self {
            suite: suite.into(),
            summary: Summary {
                total: cases.len(),
                passed,
                failed: cases.len() - passed,
            },
            cases,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn first_failure(&self) -> Option<&Case> {
        self.cases.iter().find(|c| !c.pass)
    }

    pub fn with_tol_override(self, tol: f64) -> Self {
        let cases = self.cases.into_iter().map(|c| c.with_tol(tol)).collect();
        Self::new(self.suite, cases)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// Several suites with a combined summary.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportBundle {
    pub suites: Vec<VerificationReport>,
    pub summary: Summary,
}

impl ReportBundle {
    pub fn new(mut suites: Vec<VerificationReport>) -> Self {
        suites.sort_by(|a, b| a.suite.cmp(&b.suite));
        let summary = suites
            .iter()
            .fold(Summary::default(), |acc, r| acc.add(r.summary));
        Self { suites, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}
