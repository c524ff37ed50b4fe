//! Result records shared by the ball checks and the law suites.

use serde::Serialize;

/// A concrete violation: the elements involved, rendered as text, and
/// which law or inclusion they break.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub law: String,
    pub elements: Vec<String>,
}

impl Counterexample {
    pub fn new(law: impl Into<String>, elements: Vec<String>) -> Self {
        Self {
            law: law.into(),
            elements,
        }
    }
}

/// Outcome of one exhaustive check, serialised as `{ok, cases, counterexample?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub ok: bool,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    pub fn from_search(cases: u64, counterexample: Option<Counterexample>) -> Self {
        Self {
            ok: counterexample.is_none(),
            cases,
            counterexample,
        }
    }
}

/// Outcome of a law suite, serialised as `{suite, cases, failures, seed}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Counterexample>,
    pub seed: Option<u64>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            cases: 0,
            failures: Vec::new(),
            seed: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Folds a check into this suite under a label.
    pub fn absorb_check(&mut self, label: &str, check: CheckReport) {
        self.cases += check.cases;
        if let Some(mut c) = check.counterexample {
            c.law = format!("{label}: {}", c.law);
            self.failures.push(c);
        }
    }

    pub fn absorb(&mut self, other: SuiteReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }
}
