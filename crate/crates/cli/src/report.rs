use serde_json::{json, Value};

use linf_core::gca::DgcAlgebra;
use linf_core::{Poly, Rational};

/// Result of a command. `lines` is the human-readable form of `payload`.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub lines: Vec<String>,
    pub payload: Value,
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// Some verification produced a nonzero residual.
    Failed,
    /// Usage or parse error.
    Error,
    /// The polynomial term limit was exceeded.
    Overflow,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Error => 2,
            Status::Overflow => 3,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Failed => "failed",
            Status::Error => "error",
            Status::Overflow => "overflow",
        }
    }
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), status: Status::Ok, lines: vec![], payload: json!({}), notes: vec![] }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn fail(&mut self) {
        if self.status == Status::Ok {
            self.status = Status::Failed;
        }
    }

    pub fn error(command: &str, status: Status, message: &str) -> Self {
        Report {
            command: command.to_string(),
            status,
            lines: vec![format!("error: {message}")],
            payload: json!({ "error": message }),
            notes: vec![],
        }
    }

    pub fn to_json(&self) -> String {
        let v = json!({
            "schema": 1,
            "command": self.command,
            "status": self.status.label(),
            "payload": self.payload,
            "notes": self.notes,
        });
        let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            s.push_str(l);
            s.push('\n');
        }
        for n in &self.notes {
            s.push_str("note: ");
            s.push_str(n);
            s.push('\n');
        }
        s
    }
}

pub fn poly_json(p: &Poly) -> Value {
    Value::String(p.render())
}

pub fn algebra_json(a: &DgcAlgebra<Rational>) -> Value {
    let gens: Vec<Value> = a
        .generators()
        .iter()
        .zip(a.differentials())
        .map(|(g, d)| json!({ "name": g.name, "degree": g.degree, "d": d.render() }))
        .collect();
    json!({ "name": a.name(), "generators": gens })
}
