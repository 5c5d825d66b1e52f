//! Verification report records.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub check: String,
    pub parameters: Value,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

impl Check {
    pub fn new(check: &str, parameters: Value, expected: impl Serialize, computed: impl Serialize) -> Self {
        let expected = serde_json::to_value(expected).unwrap_or(Value::Null);
        let computed = serde_json::to_value(computed).unwrap_or(Value::Null);
        let pass = expected == computed;
        Check { check: check.to_string(), parameters, expected, computed, pass }
    }

    /// A check whose outcome is decided by the caller rather than by equality.
    pub fn with_pass(check: &str, parameters: Value, expected: impl Serialize, computed: impl Serialize, pass: bool) -> Self {
        let mut c = Check::new(check, parameters, expected, computed);
        c.pass = pass;
        c
    }

    pub fn failed(check: &str, parameters: Value, error: impl std::fmt::Display) -> Self {
        Check {
            check: check.to_string(),
            parameters,
            expected: Value::Null,
            computed: Value::String(format!("error: {error}")),
            pass: false,
        }
    }
}
