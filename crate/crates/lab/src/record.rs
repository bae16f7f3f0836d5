//! Report records and their three output encodings.

use std::io::Write;

use serde::Serialize;
use serde_json::Value;

use crate::LabError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// One line of output. Field order is the serialization order; nested
/// objects are `serde_json` maps, which keep their keys sorted.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub task: String,
    pub version: &'static str,
    pub seed: u64,
    pub params: Value,
    pub pass: bool,
    pub result: Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Record {
    pub fn new(task: impl Into<String>, seed: u64, params: Value) -> Record {
        Record {
            task: task.into(),
            version: VERSION,
            seed,
            params,
            pass: true,
            result: Value::Object(Default::default()),
            failures: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn with_result(mut self, result: Value) -> Record {
        self.result = result;
        self
    }

    /// Records a failed check; the record stops passing.
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.pass = false;
            self.failures.push(what());
        }
    }

    pub fn fail(&mut self, what: impl Into<String>) {
        self.pass = false;
        self.failures.push(what.into());
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

/// Writes records in the chosen format.
pub fn write_records(out: &mut dyn Write, records: &[Record], format: Format) -> Result<(), LabError> {
    match format {
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["task", "version", "seed", "pass", "params", "result", "failures", "elapsed_ms"])?;
            for r in records {
                w.write_record([
                    r.task.clone(),
                    r.version.to_string(),
                    r.seed.to_string(),
                    r.pass.to_string(),
                    r.params.to_string(),
                    r.result.to_string(),
                    r.failures.join("; "),
                    r.elapsed_ms.map(|t| t.to_string()).unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in records {
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                write!(out, "{verdict} {} seed={} params={} result={}", r.task, r.seed, r.params, r.result)?;
                if let Some(t) = r.elapsed_ms {
                    write!(out, " elapsed_ms={t}")?;
                }
                writeln!(out)?;
                for f in &r.failures {
                    writeln!(out, "  failure: {f}")?;
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_key_order_is_stable() {
        let r = Record::new("t", 3, json!({"z": 1, "a": 2})).with_result(json!({"dim": 8}));
        let mut buf = Vec::new();
        write_records(&mut buf, &[r], Format::Json).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(
            s,
            format!("{{\"task\":\"t\",\"version\":\"{VERSION}\",\"seed\":3,\"params\":{{\"a\":2,\"z\":1}},\"pass\":true,\"result\":{{\"dim\":8}}}}\n")
        );
    }

    #[test]
    fn failed_check_is_listed() {
        let mut r = Record::new("t", 0, json!({}));
        r.check(true, || "never".into());
        r.check(false, || "broken".into());
        assert!(!r.pass);
        assert_eq!(r.failures, vec!["broken".to_string()]);
        let mut buf = Vec::new();
        write_records(&mut buf, &[r], Format::Csv).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert!(s.lines().nth(1).unwrap().contains("broken"));
    }
}
