//! Command output in table, JSON or CSV form.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn compare<T: PartialEq + std::fmt::Display>(name: impl Into<String>, expected: T, actual: T) -> Self {
        Check {
            name: name.into(),
            status: if expected == actual { Status::Pass } else { Status::Fail },
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn holds(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            expected: "true".into(),
            actual: if ok { "true".into() } else { detail.into() },
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub q: Option<u32>,
    pub command: String,
    pub method: String,
    pub data: Value,
    pub checks: Vec<Check>,
    /// Human-readable body for the table format.
    pub text: String,
    pub csv_header: Vec<String>,
    pub csv_rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(q: Option<u32>, command: &str, method: &str) -> Self {
        Report {
            q,
            command: command.into(),
            method: method.into(),
            data: Value::Null,
            checks: Vec::new(),
            text: String::new(),
            csv_header: Vec::new(),
            csv_rows: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "status": c.status.as_str(),
                    "expected": c.expected,
                    "actual": c.actual,
                })
            })
            .collect();
        json!({
            "q": self.q,
            "command": self.command,
            "method": self.method,
            "data": self.data,
            "checks": checks,
        })
    }

    pub fn render(&self, format: Format, header: Option<&str>) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.csv_header).expect("in-memory write");
                for row in &self.csv_rows {
                    w.write_record(row).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV is UTF-8")
            }
            Format::Table => {
                let mut s = String::new();
                if let Some(h) = header {
                    writeln!(s, "# {h}").unwrap();
                }
                let q = self.q.map_or_else(|| "-".to_string(), |q| q.to_string());
                writeln!(s, "# {} q={} method={}", self.command, q, self.method).unwrap();
                s.push_str(&self.text);
                if !self.text.is_empty() && !self.text.ends_with('\n') {
                    s.push('\n');
                }
                for c in &self.checks {
                    if c.status == Status::Pass {
                        writeln!(s, "[pass] {}", c.name).unwrap();
                    } else {
                        writeln!(s, "[FAIL] {}: expected {}, got {}", c.name, c.expected, c.actual).unwrap();
                    }
                }
                s
            }
        }
    }
}

/// Integers as JSON numbers when they fit, strings otherwise.
pub fn num(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => Value::from(x),
        None => Value::from(v.to_string()),
    }
}

/// Nested object {outer: {inner: value}} from (outer, inner) keyed entries.
pub fn nested<'a, I>(entries: I) -> Value
where
    I: IntoIterator<Item = (&'a (usize, usize), &'a BigInt)>,
{
    let mut out = Map::new();
    for (&(a, b), v) in entries {
        let inner = out
            .entry(a.to_string())
            .or_insert_with(|| Value::Object(Map::new()));
        inner
            .as_object_mut()
            .expect("inner values are objects")
            .insert(b.to_string(), num(v));
    }
    Value::Object(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new(Some(2), "spectra", "closed");
        r.data = json!({"A": {"1": {"1": 4}}});
        r.checks.push(Check::compare("count", 4, 4));
        r.checks.push(Check::compare("other", 1, 2));
        r.csv_header = vec!["r".into(), "w".into(), "A".into()];
        r.csv_rows = vec![vec!["1".into(), "1".into(), "4".into()]];
        r.text = "body".into();
        r
    }

    #[test]
    fn json_has_the_stable_top_level_keys() {
        let v: Value = serde_json::from_str(&sample().render(Format::Json, None)).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, vec!["checks", "command", "data", "method", "q"]);
        assert_eq!(v["checks"][1]["status"], "fail");
        assert_eq!(v["data"]["A"]["1"]["1"], 4);
    }

    #[test]
    fn csv_and_table_rendering() {
        let r = sample();
        assert_eq!(r.render(Format::Csv, None), "r,w,A\n1,1,4\n");
        let t = r.render(Format::Table, Some("generated 0"));
        assert!(t.starts_with("# generated 0\n# spectra q=2 method=closed\nbody\n[pass] count\n"));
        assert!(t.contains("[FAIL] other: expected 1, got 2"));
        assert!(!r.passed());
    }

    #[test]
    fn big_values_become_strings() {
        assert_eq!(num(&BigInt::from(7)), json!(7));
        let big = BigInt::from(u64::MAX) * 4;
        assert_eq!(num(&big), json!(big.to_string()));
    }
}
