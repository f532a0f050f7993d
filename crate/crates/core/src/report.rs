//! Outcome records shared by all checkers.

/// Result of one named verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// First counterexample when the check failed, or extra detail.
    pub diagnostic: Option<String>,
}

impl CheckOutcome {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            passed: true,
            diagnostic: None,
        }
    }

    pub fn fail(name: impl Into<String>, diagnostic: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            passed: false,
            diagnostic: Some(diagnostic.into()),
        }
    }

    /// Pass when `failure` is `None`, otherwise fail with that diagnostic.
    pub fn from_failure(name: impl Into<String>, failure: Option<String>) -> Self {
        match failure {
            None => Self::pass(name),
            Some(d) => Self::fail(name, d),
        }
    }
}

/// True when every outcome passed.
pub fn all_passed(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().all(|o| o.passed)
}
