//! Structured run reports with stable text and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use dlv_core::QPoly;

/// A named result value: an integer count, a polynomial in `q` as an
/// ascending coefficient array of decimal strings, or free text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReportValue {
    Int(u64),
    Poly(Vec<String>),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: ReportValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub results: Vec<NamedValue>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            results: Vec::new(),
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.insert(key.to_string(), value.to_string());
    }

    pub fn result_poly(&mut self, name: &str, p: &QPoly) {
        self.results.push(NamedValue {
            name: name.to_string(),
            value: ReportValue::Poly(p.json_coeffs()),
        });
    }

    pub fn result_int(&mut self, name: &str, v: u64) {
        self.results.push(NamedValue {
            name: name.to_string(),
            value: ReportValue::Int(v),
        });
    }

    pub fn result_text(&mut self, name: &str, v: impl ToString) {
        self.results.push(NamedValue {
            name: name.to_string(),
            value: ReportValue::Text(v.to_string()),
        });
    }

    /// Records an equality check; pass iff the renderings match bit-exactly.
    pub fn check(&mut self, name: &str, expected: impl ToString, actual: impl ToString) {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let pass = expected == actual;
        self.checks.push(Check {
            name: name.to_string(),
            expected,
            actual,
            pass,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        for (k, v) in &self.inputs {
            writeln!(out, "input {k} = {v}").unwrap();
        }
        for r in &self.results {
            match &r.value {
                ReportValue::Int(v) => writeln!(out, "result {} = {v}", r.name).unwrap(),
                ReportValue::Text(v) => writeln!(out, "result {} = {v}", r.name).unwrap(),
                ReportValue::Poly(coeffs) => {
                    let poly = poly_from_strings(coeffs);
                    writeln!(out, "result {} = {poly}", r.name).unwrap();
                }
            }
        }
        for c in &self.checks {
            writeln!(
                out,
                "check {}: expected {} actual {} -> {}",
                c.name,
                c.expected,
                c.actual,
                if c.pass { "pass" } else { "FAIL" }
            )
            .unwrap();
        }
        writeln!(out, "elapsed_ms: {}", self.elapsed_ms).unwrap();
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn poly_from_strings(coeffs: &[String]) -> QPoly {
    use num_bigint::BigInt;
    QPoly::from_coeffs(
        coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().expect("decimal coefficient"))
            .collect(),
    )
}
