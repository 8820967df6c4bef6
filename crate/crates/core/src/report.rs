//! Uniform pass/fail reporting for the verification suites.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn pass(&mut self, label: impl Into<String>) {
        self.items.push(CheckItem {
            label: label.into(),
            passed: true,
            witness: None,
        });
    }

    pub fn fail(&mut self, label: impl Into<String>, witness: impl Into<String>) {
        self.items.push(CheckItem {
            label: label.into(),
            passed: false,
            witness: Some(witness.into()),
        });
    }

    pub fn check(&mut self, label: impl Into<String>, ok: bool, witness: impl Into<String>) {
        if ok {
            self.pass(label);
        } else {
            self.fail(label, witness);
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.items.extend(other.items);
    }

    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|c| !c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.failures().next()
    }

    /// One-line summary, stable across runs.
    pub fn summary(&self) -> String {
        let failed = self.items.iter().filter(|c| !c.passed).count();
        format!("{} checks, {} failed", self.items.len(), failed)
    }
}
