//! Structured pass/fail reports for the symbolic verification suites.

use serde::Serialize;

use crate::algebra::OperatorExpr;

/// Outcome of one relation check. `residual` carries the normal-ordered dump
/// of the nonzero difference when the relation fails (or when the caller asks
/// to exhibit it).
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

impl RelationCheck {
    /// Check that `expr` is exactly the zero operator.
    pub fn expect_zero(name: impl Into<String>, expr: &OperatorExpr) -> Self {
        let passed = expr.is_zero();
        RelationCheck {
            name: name.into(),
            passed,
            residual: if passed { None } else { Some(expr.dump()) },
        }
    }

    /// Check that two operators are identical.
    pub fn expect_equal(name: impl Into<String>, got: &OperatorExpr, want: &OperatorExpr) -> Self {
        Self::expect_zero(name, &got.sub(want))
    }
}

/// A named batch of relation checks.
#[derive(Clone, Debug, Serialize, Default)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<RelationCheck>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: RelationCheck) {
        self.checks.push(check);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.checks.extend(other.checks);
        self
    }
}
