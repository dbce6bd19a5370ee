use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Status::Pass
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// Outcome of one verification check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub status: Status,
    pub residual: Value,
    pub constants: BTreeMap<String, Value>,
    /// Wall time, kept out of the JSON so reports stay byte-identical.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, ok: bool) -> Self {
        CheckReport {
            check: check.into(),
            status: Status::from_bool(ok),
            residual: Value::String("0".into()),
            constants: BTreeMap::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn residual(mut self, r: impl Serialize) -> Self {
        self.residual = serde_json::to_value(r).unwrap_or(Value::Null);
        self
    }

    pub fn constant(mut self, key: &str, v: impl Serialize) -> Self {
        self.constants
            .insert(key.to_string(), serde_json::to_value(v).unwrap_or(Value::Null));
        self
    }

    pub fn passed(&self) -> bool {
        self.status.passed()
    }
}
