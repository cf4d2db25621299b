use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

/// `{"check": name, "result": "pass" | "fail", "witness" | "counterexample": ...}`
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifierReport {
    pub check: String,
    pub result: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl VerifierReport {
    pub fn pass(check: impl Into<String>, witness: Value) -> Self {
        VerifierReport {
            check: check.into(),
            result: Outcome::Pass,
            witness: Some(witness),
            counterexample: None,
        }
    }

    pub fn fail(check: impl Into<String>, counterexample: Value) -> Self {
        VerifierReport {
            check: check.into(),
            result: Outcome::Fail,
            witness: None,
            counterexample: Some(counterexample),
        }
    }

    /// Pass with `witness` when `ok`, otherwise fail with it as the
    /// counterexample.
    pub fn from_bool(check: impl Into<String>, ok: bool, detail: Value) -> Self {
        if ok {
            Self::pass(check, detail)
        } else {
            Self::fail(check, detail)
        }
    }

    pub fn passed(&self) -> bool {
        self.result == Outcome::Pass
    }
}
