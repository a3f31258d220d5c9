//! Pass/fail reports shared by every verifier.

use std::fmt;

use serde::Serialize;

use crate::poly::SuperPoly;
use crate::tensor::GradedTensor;
use crate::uenv::UEnvElement;

/// Values that can be compared in a check and whose difference is printable.
pub trait Checkable: PartialEq + fmt::Display {
    fn difference(&self, other: &Self) -> String;
}

impl Checkable for SuperPoly {
    fn difference(&self, other: &Self) -> String {
        (self - other).to_string()
    }
}

impl Checkable for UEnvElement {
    fn difference(&self, other: &Self) -> String {
        self.sub(other).to_string()
    }
}

impl Checkable for GradedTensor {
    fn difference(&self, other: &Self) -> String {
        if self.arity() != other.arity() {
            return format!("arity {} vs {}", self.arity(), other.arity());
        }
        self.sub(other).to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
    pub difference: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "    input: {}", self.input)?;
        writeln!(f, "    lhs:   {}", self.lhs)?;
        writeln!(f, "    rhs:   {}", self.rhs)?;
        write!(f, "    diff:  {}", self.difference)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>) -> Self {
        CheckResult { name: name.into(), cases: 0, passed: true, note: None, counterexample: None }
    }

    /// Record one comparison; the first failure is kept.
    pub fn compare<T: Checkable>(&mut self, input: impl fmt::Display, lhs: &T, rhs: &T) -> bool {
        self.cases += 1;
        if lhs == rhs {
            return true;
        }
        self.fail_with(Counterexample {
            input: input.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            difference: lhs.difference(rhs),
        });
        false
    }

    /// Record a boolean condition.
    pub fn assert(&mut self, input: impl fmt::Display, ok: bool, detail: impl FnOnce() -> String) -> bool {
        self.cases += 1;
        if !ok {
            self.fail_with(Counterexample {
                input: input.to_string(),
                lhs: detail(),
                rhs: String::new(),
                difference: String::new(),
            });
        }
        ok
    }

    fn fail_with(&mut self, c: Counterexample) {
        if self.passed {
            self.counterexample = Some(c);
        }
        self.passed = false;
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), seed: None, checks: Vec::new() }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "suite {}", self.suite)?;
        if let Some(seed) = self.seed {
            write!(f, " (seed {seed})")?;
        }
        writeln!(f, ": {}", if self.passed() { "PASS" } else { "FAIL" })?;
        for c in &self.checks {
            writeln!(f, "  [{}] {} ({} cases)", if c.passed { "ok" } else { "FAIL" }, c.name, c.cases)?;
            if let Some(note) = &c.note {
                writeln!(f, "    note: {note}")?;
            }
            if let Some(ce) = &c.counterexample {
                writeln!(f, "{ce}")?;
            }
        }
        Ok(())
    }
}
