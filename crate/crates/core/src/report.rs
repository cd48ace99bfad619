//! Structured pass/fail results for identity checks.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::Value;

use crate::serialize::{element_json, RenderKey};
use crate::algebra::LinComb;
use crate::series::Series;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Nonzero difference between the two sides of an identity at one order.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Residual {
    pub label: String,
    pub degree: usize,
    pub element: Value,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub residuals: Vec<Residual>,
    /// Number of individual comparisons performed.
    pub checks: usize,
    /// Free-form findings (diagnoses, comments on known discrepancies).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<VerificationReport>,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>) -> Self {
        VerificationReport {
            identity: identity.into(),
            params: BTreeMap::new(),
            status: Status::Pass,
            residuals: Vec::new(),
            checks: 0,
            notes: Vec::new(),
            children: Vec::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn fail(&mut self) {
        self.status = Status::Fail;
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Records `diff` as a residual (and fails) when it is nonzero.
    pub fn check_zero<K: RenderKey>(&mut self, label: &str, degree: usize, diff: &LinComb<K>) -> bool {
        self.checks += 1;
        if diff.is_zero() {
            return true;
        }
        self.status = Status::Fail;
        self.residuals.push(Residual {
            label: label.to_string(),
            degree,
            element: element_json(diff),
        });
        false
    }

    pub fn check_eq<K: RenderKey>(&mut self, label: &str, degree: usize, lhs: &LinComb<K>, rhs: &LinComb<K>) -> bool {
        self.check_zero(label, degree, &(lhs - rhs))
    }

    /// Compares two series coefficientwise through `order`.
    pub fn check_series<K: RenderKey>(&mut self, label: &str, lhs: &Series<K>, rhs: &Series<K>, order: usize) -> bool {
        let mut ok = true;
        if lhs.constant() != rhs.constant() {
            ok &= self.check_zero(label, 0, &LinComb::<K>::scalar(lhs.constant() - rhs.constant()));
        }
        for k in 1..=order {
            ok &= self.check_zero(label, k, &(&lhs.coeff(k) - &rhs.coeff(k)));
        }
        ok
    }

    /// Earliest order with a residual.
    pub fn first_failing_degree(&self) -> Option<usize> {
        let own = self.residuals.iter().map(|r| r.degree).min();
        let nested = self.children.iter().filter_map(|c| c.first_failing_degree()).min();
        match (own, nested) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    /// Comparisons performed here and in all children.
    pub fn total_checks(&self) -> usize {
        self.checks + self.children.iter().map(|c| c.total_checks()).sum::<usize>()
    }

    pub fn push_child(&mut self, child: VerificationReport) {
        if !child.passed() {
            self.status = Status::Fail;
        }
        self.children.push(child);
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(r: &VerificationReport, depth: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let pad = "  ".repeat(depth);
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(f, "{pad}[{status}] {} {} ({} checks)", r.identity, params.join(" "), r.total_checks())?;
            for res in &r.residuals {
                writeln!(f, "{pad}  residual {} at u^-{}: {} term(s)", res.label, res.degree, res.element.as_array().map_or(0, |a| a.len()))?;
            }
            for note in &r.notes {
                writeln!(f, "{pad}  note: {note}")?;
            }
            for c in &r.children {
                go(c, depth + 1, f)?;
            }
            Ok(())
        }
        go(self, 0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Element, Generator, Word};
    use crate::scalar::int;

    #[test]
    fn residuals_flip_status() {
        let mut r = VerificationReport::new("demo").with_param("n", 2);
        assert!(r.check_zero("zero", 1, &Element::zero()));
        assert!(r.passed());
        let x = Element::term(Word::single(Generator::new(1, 2, 1)), int(1));
        assert!(!r.check_zero("x", 2, &x));
        assert!(!r.passed());
        assert_eq!(r.first_failing_degree(), Some(2));
        let v = r.to_json();
        assert_eq!(v["status"], "fail");
        assert_eq!(v["residuals"][0]["degree"], 2);
    }
}
