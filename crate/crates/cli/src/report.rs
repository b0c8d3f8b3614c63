use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA: &str = "v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    OutOfScope,
}

/// One verified identity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub identity: String,
    pub parameters: Value,
    pub order: Option<u32>,
    pub status: Status,
    pub max_order_checked: Option<u32>,
    /// Seconds.
    pub wall_time: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    /// Run `f`, which returns the first counterexample if any.
    pub fn run(identity: &str, parameters: Value, order: Option<u32>, f: impl FnOnce() -> Option<String>) -> Check {
        let start = Instant::now();
        let counterexample = f();
        Check {
            identity: identity.to_string(),
            parameters,
            order,
            status: if counterexample.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            max_order_checked: order,
            wall_time: start.elapsed().as_secs_f64(),
            counterexample,
        }
    }

    pub fn out_of_scope(identity: &str, parameters: Value) -> Check {
        Check {
            identity: identity.to_string(),
            parameters,
            order: None,
            status: Status::OutOfScope,
            max_order_checked: None,
            wall_time: 0.0,
            counterexample: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    /// Every effective setting, defaults included.
    pub header: Value,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str, header: Value, checks: Vec<Check>, result: Option<Value>) -> Report {
        let status = if checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        };
        Report {
            schema: SCHEMA.into(),
            command: command.into(),
            header,
            checks,
            result,
            status,
        }
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("# macd {} (schema {})\n", self.command, self.schema);
        if let Value::Object(h) = &self.header {
            for (k, v) in h {
                s.push_str(&format!("# {k} = {v}\n"));
            }
        }
        if let Some(r) = &self.result {
            match r {
                Value::String(text) => s.push_str(text),
                other => s.push_str(&serde_json::to_string_pretty(other).unwrap()),
            }
            if !s.ends_with('\n') {
                s.push('\n');
            }
        }
        for c in &self.checks {
            let st = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::OutOfScope => "SKIP",
            };
            let ord = c.order.map(|m| format!(" M={m}")).unwrap_or_default();
            s.push_str(&format!(
                "{st} {} {}{ord} [{:.3}s]\n",
                c.identity, c.parameters, c.wall_time
            ));
            if let Some(ce) = &c.counterexample {
                s.push_str(&format!("  counterexample: {ce}\n"));
            }
        }
        s.push_str(&format!(
            "status: {}\n",
            match self.status {
                Status::Fail => "fail",
                _ => "pass",
            }
        ));
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let c = Check::run("x", serde_json::json!({"d": 1}), Some(3), || None);
        let r = Report::new("verify", serde_json::json!({"order": 3}), vec![c], None);
        let text = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.status, Status::Pass);
    }
}
