//! Report envelope shared by every subcommand, and its JSON / CSV / text
//! renderings.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Fields are serialized in declaration order; `parameters` and `counts` are
/// sorted by key.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub tool_version: String,
    pub subcommand: String,
    pub parameters: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub findings: Vec<Value>,
    pub counts: BTreeMap<String, Value>,
    pub duration_ms: u64,
}

impl ReportEnvelope {
    pub fn new(subcommand: &str) -> Self {
        ReportEnvelope {
            tool_version: TOOL_VERSION.to_string(),
            subcommand: subcommand.to_string(),
            parameters: BTreeMap::new(),
            verdict: Verdict::Pass,
            findings: Vec::new(),
            counts: BTreeMap::new(),
            duration_ms: 0,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn count(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.counts.insert(key.to_string(), value.into());
        self
    }

    /// Copy with `duration_ms` zeroed, for comparing runs.
    pub fn normalized(&self) -> Self {
        ReportEnvelope { duration_ms: 0, ..self.clone() }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// One row per finding: `tool_version, subcommand, verdict`, then the
    /// finding's fields in their serialized order.
    pub fn to_csv(&self) -> String {
        let mut columns: Vec<String> = Vec::new();
        for f in &self.findings {
            if let Value::Object(map) = f {
                for k in map.keys() {
                    if !columns.contains(k) {
                        columns.push(k.clone());
                    }
                }
            } else if !columns.iter().any(|c| c == "value") {
                columns.push("value".into());
            }
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["tool_version".to_string(), "subcommand".into(), "verdict".into()];
        header.extend(columns.iter().cloned());
        w.write_record(&header).expect("csv header");
        for f in &self.findings {
            let mut row = vec![self.tool_version.clone(), self.subcommand.clone(), self.verdict.to_string()];
            for c in &columns {
                let cell = match f {
                    Value::Object(map) => map.get(c).map(cell_text).unwrap_or_default(),
                    other if c == "value" => cell_text(other),
                    _ => String::new(),
                };
                row.push(cell);
            }
            w.write_record(&row).expect("csv row");
        }
        String::from_utf8(w.into_inner().expect("csv flush")).expect("utf-8 csv")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} {}: {}\n", self.subcommand, self.tool_version, self.verdict.to_string().to_uppercase()));
        if !self.parameters.is_empty() {
            out.push_str("parameters:\n");
            for (k, v) in &self.parameters {
                out.push_str(&format!("  {k} = {}\n", cell_text(v)));
            }
        }
        if !self.counts.is_empty() {
            out.push_str("counts:\n");
            for (k, v) in &self.counts {
                out.push_str(&format!("  {k} = {}\n", cell_text(v)));
            }
        }
        out.push_str(&format!("findings ({}):\n", self.findings.len()));
        for f in &self.findings {
            out.push_str(&format!("  {}\n", serde_json::to_string(f).expect("finding serializes")));
        }
        out.push_str(&format!("duration_ms = {}\n", self.duration_ms));
        out
    }
}

fn cell_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}
