use std::fmt;

use serde::Serialize;

/// One failed identity or law, with the witness that broke it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: String,
    pub witness: String,
}

/// Outcome of a validator: how many individual equations were checked and
/// which of them failed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub subject: String,
    pub checks: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        Self {
            subject: subject.into(),
            checks: 0,
            violations: Vec::new(),
        }
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records one check; `ok == false` adds a violation built lazily from `witness`.
    pub fn check(&mut self, ok: bool, rule: &str, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation {
                rule: rule.to_string(),
                witness: witness(),
            });
        }
    }

    pub fn fail(&mut self, rule: &str, witness: impl Into<String>) {
        self.checks += 1;
        self.violations.push(Violation {
            rule: rule.to_string(),
            witness: witness.into(),
        });
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.checks += other.checks;
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            write!(f, "{}: ok ({} checks)", self.subject, self.checks)
        } else {
            writeln!(
                f,
                "{}: {} violation(s) in {} checks",
                self.subject,
                self.violations.len(),
                self.checks
            )?;
            for v in &self.violations {
                writeln!(f, "  [{}] {}", v.rule, v.witness)?;
            }
            Ok(())
        }
    }
}
