//! Lightweight pass/fail reporting shared by the verification surfaces.

use std::fmt;

use serde_json::{json, Value};

/// One named check with its verdict and a short human-readable detail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, details: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            details: details.into(),
        }
    }
}

/// A titled collection of checks plus free-form notes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, details: impl Into<String>) {
        self.checks.push(Check::new(name, passed, details));
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "title": self.title,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "details": c.details,
            })).collect::<Vec<_>>(),
            "notes": self.notes,
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.details
            )?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        write!(
            f,
            "  => {}",
            if self.passed() {
                "all checks passed"
            } else {
                "FAILURES PRESENT"
            }
        )
    }
}
