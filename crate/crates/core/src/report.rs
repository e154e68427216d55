use std::fmt;

use serde::Serialize;

/// Outcome of an exhaustive check: either valid, or the first failing rule
/// together with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Report {
    pub fn ok() -> Self {
        Report {
            valid: true,
            failed: None,
            witness: None,
        }
    }

    pub fn fail(rule: impl Into<String>, witness: impl Into<String>) -> Self {
        Report {
            valid: false,
            failed: Some(rule.into()),
            witness: Some(witness.into()),
        }
    }

    pub fn is_ok(&self) -> bool {
        self.valid
    }

    /// Name of the failed rule, if any.
    pub fn rule(&self) -> Option<&str> {
        self.failed.as_deref()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.failed, &self.witness) {
            (None, _) => f.write_str("valid"),
            (Some(r), Some(w)) => write!(f, "{r} violated at {w}"),
            (Some(r), None) => write!(f, "{r} violated"),
        }
    }
}

/// Returns early with a failing report when `cond` is false.
macro_rules! ensure {
    ($cond:expr, $rule:expr, $($w:tt)+) => {
        if !$cond {
            return $crate::report::Report::fail($rule, format!($($w)+));
        }
    };
}
pub(crate) use ensure;
