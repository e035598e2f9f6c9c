//! Pass/fail reports with witnesses, as emitted in JSON certificate bundles.

use serde::Serialize;

use crate::linalg::Vector;

/// How much of a quantified statement was actually checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuantifierSpace {
    /// Size of the full quantifier domain (saturating).
    pub total: u64,
    pub checked: u64,
    pub exhaustive: bool,
    /// Sampling seed, present only when the check was sampled.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl QuantifierSpace {
    pub fn exhaustive(total: u64) -> Self {
        QuantifierSpace { total, checked: total, exhaustive: true, seed: None }
    }

    pub fn coverage(&self) -> f64 {
        if self.total == 0 {
            1.0
        } else {
            self.checked as f64 / self.total as f64
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub condition: String,
    pub pass: bool,
    /// Coordinates of the offending element(s), in the order the condition
    /// quantifies them.
    pub witness: Option<Vec<Vector>>,
    pub quantifier_space: QuantifierSpace,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckReport {
    pub fn new(condition: impl Into<String>, witness: Option<Vec<Vector>>, space: QuantifierSpace) -> Self {
        CheckReport {
            condition: condition.into(),
            pass: witness.is_none(),
            witness,
            quantifier_space: space,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// Forces the verdict, for reports whose pass criterion is not "no witness".
    pub fn with_pass(mut self, pass: bool) -> Self {
        self.pass = pass;
        self
    }
}

/// `true` when every report passes.
pub fn all_pass(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

pub fn find<'a>(reports: &'a [CheckReport], condition: &str) -> Option<&'a CheckReport> {
    reports.iter().find(|r| r.condition == condition)
}
