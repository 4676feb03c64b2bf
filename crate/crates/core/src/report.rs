//! Verification reports: one case per input, with a digest of the input.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A known discrepancy between a stated closed form and the enumeration.
    Flagged,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Case {
    pub input: Value,
    /// Hex SHA-256 of the compact JSON of `input`.
    pub digest: String,
    pub expected: Value,
    pub actual: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub fn digest(input: &Value) -> String {
    let bytes = serde_json::to_vec(input).expect("JSON values serialize");
    Sha256::digest(&bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

impl Case {
    pub fn new(
        input: Value,
        expected: impl Serialize,
        actual: impl Serialize,
        status: Status,
    ) -> Case {
        Case {
            digest: digest(&input),
            input,
            expected: to_value(expected),
            actual: to_value(actual),
            status,
            note: None,
        }
    }

    /// Passes exactly when `expected` and `actual` serialize identically.
    pub fn compare(input: Value, expected: impl Serialize, actual: impl Serialize) -> Case {
        let (expected, actual) = (to_value(expected), to_value(actual));
        let status = if expected == actual {
            Status::Pass
        } else {
            Status::Fail
        };
        Case::new(input, expected, actual, status)
    }

    /// A failing case for an input whose computation raised an error.
    pub fn error(input: Value, err: &Error) -> Case {
        let mut c = Case::new(input, Value::Null, Value::Null, Status::Fail);
        c.note = Some(err.to_string());
        c
    }

    /// Downgrades a failure to `flagged` when `known` holds.
    pub fn flag_failure_if(mut self, known: bool, note: impl Into<String>) -> Case {
        if self.status == Status::Fail && known {
            self.status = Status::Flagged;
            self.note = Some(note.into());
        }
        self
    }

    /// Marks a passing case as flagged.
    pub fn flag_if(mut self, cond: bool, note: impl Into<String>) -> Case {
        if self.status == Status::Pass && cond {
            self.status = Status::Flagged;
            self.note = Some(note.into());
        }
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Case {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
    pub passed: usize,
    pub failed: usize,
    pub flagged: usize,
}

impl Report {
    pub fn new(suite: &str, cases: Vec<Case>) -> Report {
        let count = |s: Status| cases.iter().filter(|c| c.status == s).count();
        Report {
            suite: suite.to_string(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            flagged: count(Status::Flagged),
            cases,
        }
    }

    /// No failures, and no flagged cases unless `allow_flagged`.
    pub fn is_green(&self, allow_flagged: bool) -> bool {
        self.failed == 0 && (allow_flagged || self.flagged == 0)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }
}
