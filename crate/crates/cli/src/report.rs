use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub source: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(source: &str, bytes: &[u8]) -> Self {
        Self {
            source: source.to_string(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    pub fn equal(name: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        Self {
            name: name.into(),
            pass: lhs == rhs,
            lhs,
            rhs,
        }
    }

    pub fn new(name: impl Into<String>, pass: bool, lhs: impl ToString, rhs: impl ToString) -> Self {
        Self {
            name: name.into(),
            pass,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn failed(name: impl Into<String>, why: impl ToString) -> Self {
        Self::new(name, false, why, "")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

/// Everything a subcommand produced. `results` is keyed and sorted so the
/// JSON form is byte-stable.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub results: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
    /// Rows for `--format csv`; checks are emitted when absent.
    #[serde(skip)]
    pub table: Option<(Vec<String>, Vec<Vec<String>>)>,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Self {
            command,
            ..Self::default()
        }
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command.join(" ")).unwrap();
        for i in &self.inputs {
            writeln!(out, "input: {} (sha256 {})", i.source, i.sha256).unwrap();
        }
        for (k, v) in &self.results {
            match v {
                Value::String(s) => writeln!(out, "{k}: {s}").unwrap(),
                Value::Array(items) if items.iter().all(|x| x.is_object() || x.is_array()) => {
                    writeln!(out, "{k}:").unwrap();
                    for item in items {
                        writeln!(out, "  {item}").unwrap();
                    }
                }
                other => writeln!(out, "{k}: {other}").unwrap(),
            }
        }
        if !self.checks.is_empty() {
            writeln!(out, "checks:").unwrap();
            for c in &self.checks {
                let mark = if c.pass { "PASS" } else { "FAIL" };
                if c.rhs.is_empty() {
                    writeln!(out, "  [{mark}] {}: {}", c.name, c.lhs).unwrap();
                } else {
                    writeln!(out, "  [{mark}] {}: {} | {}", c.name, c.lhs, c.rhs).unwrap();
                }
            }
            let passed = self.checks.iter().filter(|c| c.pass).count();
            writeln!(out, "{passed}/{} checks passed", self.checks.len()).unwrap();
        }
        if let Some(t) = &self.timing {
            writeln!(out, "elapsed: {} ms", t.elapsed_ms).unwrap();
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        match &self.table {
            Some((header, rows)) => {
                w.write_record(header).unwrap();
                for r in rows {
                    w.write_record(r).unwrap();
                }
            }
            None => {
                w.write_record(["check", "pass", "lhs", "rhs"]).unwrap();
                for c in &self.checks {
                    w.write_record([c.name.as_str(), if c.pass { "true" } else { "false" }, &c.lhs, &c.rhs])
                        .unwrap();
                }
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 fields")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_hex_sha256() {
        let d = InputDigest::new("x", b"abc");
        assert_eq!(d.sha256, "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }

    #[test]
    fn timing_omitted_by_default() {
        let r = Report::new(vec!["catalog".into()]);
        assert!(!r.to_json().contains("timing"));
    }

    #[test]
    fn csv_falls_back_to_checks() {
        let mut r = Report::new(vec![]);
        r.check(Check::equal("a, b", 1, 1));
        assert_eq!(r.to_csv(), "check,pass,lhs,rhs\n\"a, b\",true,1,1\n");
    }
}
