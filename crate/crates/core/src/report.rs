//! Pass/fail records shared by the verification routines and the CLI.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Outcome of one comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub computed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    /// Compares two displayable values for equality.
    pub fn equal<T: PartialEq + fmt::Display>(name: impl Into<String>, expected: T, computed: T) -> Self {
        Self {
            name: name.into(),
            passed: expected == computed,
            expected: expected.to_string(),
            computed: computed.to_string(),
            counterexample: None,
        }
    }

    /// A predicate check with an optional counterexample on failure.
    pub fn holds(name: impl Into<String>, counterexample: Option<String>) -> Self {
        Self {
            name: name.into(),
            passed: counterexample.is_none(),
            expected: "holds".into(),
            computed: if counterexample.is_none() { "holds" } else { "violated" }.into(),
            counterexample,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}: expected {}, computed {}", self.name, self.expected, self.computed)?;
        if let Some(c) = &self.counterexample {
            write!(f, " (counterexample: {c})")?;
        }
        Ok(())
    }
}

/// A machine-readable verification report.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub wall_time_ms: u128,
}

impl Report {
    pub fn new(command: impl Into<String>, params: BTreeMap<String, String>, checks: Vec<Check>, wall_time_ms: u128) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        Self { command: command.into(), params, passed, checks, wall_time_ms }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Whether every check passed.
pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
