use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

pub const SCHEMA: &str = "hallkit-report v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }

    pub fn from_check(passed: bool) -> Self {
        if passed {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// A labeled element or pair backing a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub value: String,
}

impl Witness {
    pub fn new(label: impl Into<String>, value: impl Into<String>) -> Self {
        Witness {
            label: label.into(),
            value: value.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            inputs: Map::new(),
            results: Map::new(),
            status: Status::Pass,
            witnesses: Vec::new(),
            message: None,
            elapsed_ms: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.insert(key.to_string(), value.into());
        self
    }

    pub fn witness(&mut self, label: impl Into<String>, value: impl Into<String>) -> &mut Self {
        self.witnesses.push(Witness::new(label, value));
        self
    }

    /// Sets the status; a failure without any witness gets `message`.
    pub fn conclude(&mut self, passed: bool, message: &str) {
        self.status = Status::from_check(passed);
        if !passed && self.witnesses.is_empty() && self.message.is_none() {
            self.message = Some(message.to_string());
        }
    }

    pub fn error(command: &str, message: impl Into<String>) -> Self {
        let mut r = Report::new(command);
        r.status = Status::Error;
        r.message = Some(message.into());
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// Aligned `key  value` lines for terminals.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} [{}]", self.command, status_word(self.status));
        let section = |out: &mut String, title: &str, map: &Map<String, Value>| {
            if map.is_empty() {
                return;
            }
            let _ = writeln!(out, "{title}:");
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (k, v) in map {
                let _ = writeln!(out, "  {k:<width$}  {}", plain(v));
            }
        };
        section(&mut out, "inputs", &self.inputs);
        section(&mut out, "results", &self.results);
        if !self.witnesses.is_empty() {
            let _ = writeln!(out, "witnesses:");
            let width = self.witnesses.iter().map(|w| w.label.len()).max().unwrap_or(0);
            for w in &self.witnesses {
                let _ = writeln!(out, "  {:<width$}  {}", w.label, w.value);
            }
        }
        if let Some(m) = &self.message {
            let _ = writeln!(out, "message: {m}");
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed: {ms} ms");
        }
        out
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Error => "error",
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}
