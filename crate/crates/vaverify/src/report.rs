//! Suite reports and their JSON and text renderings.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Map, Value};

use crate::catalog::Suite;

pub const SCHEMA_VERSION: u32 = 1;
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Refused,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Refused => "refused",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Refused => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub anchor: String,
    pub inputs: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub witnesses: Map<String, Value>,
    pub notes: Vec<String>,
    pub refusal: Option<String>,
    pub timing_ms: u128,
}

impl Report {
    pub fn new(suite: &Suite, inputs: BTreeMap<String, String>) -> Report {
        Report {
            suite: suite.name.into(),
            anchor: suite.anchor.into(),
            inputs,
            checks: Vec::new(),
            witnesses: Map::new(),
            notes: Vec::new(),
            refusal: None,
            timing_ms: 0,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check { name: name.into(), ok, detail: detail.into() });
        ok
    }

    pub fn witness(&mut self, key: impl Into<String>, v: Value) {
        self.witnesses.insert(key.into(), v);
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    pub fn refuse(&mut self, why: impl Into<String>) {
        self.refusal = Some(why.into());
    }

    /// Refused if the request needs data that is not bundled; otherwise pass
    /// exactly when there is at least one check and every check holds.
    pub fn verdict(&self) -> Verdict {
        if self.refusal.is_some() {
            Verdict::Refused
        } else if !self.checks.is_empty() && self.checks.iter().all(|c| c.ok) {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict() == Verdict::Pass
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self.checks.iter().map(|c| json!({ "name": c.name, "ok": c.ok, "detail": c.detail })).collect();
        json!({
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "anchor": self.anchor,
            "inputs": self.inputs,
            "verdict": self.verdict().as_str(),
            "refusal": self.refusal,
            "checks": checks,
            "witnesses": self.witnesses,
            "notes": self.notes,
            "timing_ms": self.timing_ms as u64,
            "engine_version": ENGINE_VERSION,
        })
    }

    /// Compact JSON on one line; keys are sorted, so equal reports give equal bytes.
    pub fn json_line(&self) -> String {
        self.to_json().to_string()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite   {} [{}]", self.suite, self.anchor)?;
        if !self.inputs.is_empty() {
            let ins: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(f, "inputs  {}", ins.join(" "))?;
        }
        for c in &self.checks {
            write!(f, "  {:<4} {}", if c.ok { "ok" } else { "FAIL" }, c.name)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        if let Some(r) = &self.refusal {
            writeln!(f, "  refused: {r}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        write!(f, "verdict {} ({} ms)", self.verdict(), self.timing_ms)
    }
}
