//! The JSON report printed by every command.

use pentagon_core::CheckReport;
use serde_json::{json, Map, Value};

use crate::document::Document;

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub certificates: Vec<CheckReport>,
    pub summary: Map<String, Value>,
    pub outputs: Option<Document>,
    pub error: Option<String>,
}

fn certificate(c: &CheckReport) -> Value {
    json!({
        "name": c.name,
        "pass": c.pass(),
        "violations": c.violations.iter().map(|v| json!({"axiom": v.axiom, "count": v.count})).collect::<Vec<_>>(),
    })
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            certificates: Vec::new(),
            summary: Map::new(),
            outputs: None,
            error: None,
        }
    }

    pub fn cert(&mut self, c: CheckReport) -> &mut Self {
        self.certificates.push(c);
        self
    }

    pub fn note(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.summary.insert(key.to_string(), value.into());
        self
    }

    pub fn pass(&self) -> bool {
        self.error.is_none() && self.certificates.iter().all(CheckReport::pass)
    }

    pub fn to_value(&self) -> Value {
        let mut v = Map::new();
        v.insert("command".into(), json!(self.command));
        v.insert("pass".into(), json!(self.pass()));
        v.insert(
            "certificates".into(),
            self.certificates.iter().map(certificate).collect(),
        );
        if !self.summary.is_empty() {
            v.insert("summary".into(), Value::Object(self.summary.clone()));
        }
        if let Some(doc) = &self.outputs {
            v.insert("outputs".into(), doc.to_value());
        }
        if let Some(e) = &self.error {
            v.insert("error".into(), json!(e));
        }
        Value::Object(v)
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("report serializes");
        s.push('\n');
        s
    }
}
