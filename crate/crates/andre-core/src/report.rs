use std::fmt;
use std::time::Duration;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Named pass/fail checks of one suite. Overall status is their conjunction.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    /// Wall time; kept out of `Display` so report content stays deterministic.
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        SuiteReport {
            suite: suite.into(),
            checks: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "pass" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "[{tag}] {}: {}", self.suite, c.name)?;
            } else {
                writeln!(f, "[{tag}] {}: {} -- {}", self.suite, c.name, c.detail)?;
            }
        }
        let n_ok = self.checks.iter().filter(|c| c.passed).count();
        write!(
            f,
            "{}: {} ({}/{} checks)",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            n_ok,
            self.checks.len()
        )
    }
}
