use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

/// One verified claim. `expected` is the string `"none"` when the check
/// has no reference value. INFO results carry no verdict even when an
/// expected value is shown.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub paper_anchor: String,
    pub status: Status,
    pub computed: Value,
    pub expected: Value,
    pub witnesses: Vec<Value>,
}

pub const PLUMBING: &str = "plumbing";

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).unwrap_or_else(|e| Value::String(format!("unserializable: {e}")))
}

impl CheckResult {
    /// PASS iff the serialized values agree.
    pub fn compare(id: impl Into<String>, anchor: &str, computed: impl Serialize, expected: impl Serialize) -> Self {
        let (c, e) = (to_value(computed), to_value(expected));
        let status = if c == e { Status::Pass } else { Status::Fail };
        CheckResult { id: id.into(), paper_anchor: anchor.into(), status, computed: c, expected: e, witnesses: vec![] }
    }

    /// A yes/no claim.
    pub fn holds(id: impl Into<String>, anchor: &str, ok: bool) -> Self {
        CheckResult::compare(id, anchor, ok, true)
    }

    pub fn info(id: impl Into<String>, anchor: &str, computed: impl Serialize, expected: Option<Value>) -> Self {
        CheckResult {
            id: id.into(),
            paper_anchor: anchor.into(),
            status: Status::Info,
            computed: to_value(computed),
            expected: expected.unwrap_or_else(|| json!("none")),
            witnesses: vec![],
        }
    }

    pub fn error(id: impl Into<String>, anchor: &str, err: &Error) -> Self {
        CheckResult {
            id: id.into(),
            paper_anchor: anchor.into(),
            status: Status::Fail,
            computed: json!(format!("error: {err}")),
            expected: json!("none"),
            witnesses: vec![],
        }
    }

    pub fn witness(mut self, w: impl Serialize) -> Self {
        self.witnesses.push(to_value(w));
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub info: usize,
}

impl Summary {
    pub fn of(results: &[CheckResult]) -> Summary {
        let mut s = Summary::default();
        for r in results {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Info => s.info += 1,
            }
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub config: Value,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
    /// Wall time per task in milliseconds; left out of the JSON unless
    /// asked for, so that reports stay reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, u128>>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail == 0 {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let status = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            let computed = compact(&r.computed);
            out.push_str(&format!("{status}  {}  computed={computed}", r.id));
            if r.expected != json!("none") {
                out.push_str(&format!("  expected={}", compact(&r.expected)));
            }
            out.push('\n');
        }
        let s = self.summary;
        out.push_str(&format!("{} passed, {} failed, {} info\n", s.pass, s.fail, s.info));
        out
    }
}

fn compact(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if s.chars().count() > 120 {
        let cut: String = s.chars().take(117).collect();
        format!("{cut}...")
    } else {
        s
    }
}
