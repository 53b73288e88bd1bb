use std::fmt;

use cymcm_core::numeric::{Rational, Scalar};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

/// An exact computed or expected value. Non-integral numbers are carried as
/// text so that reports never contain floats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(i64),
    List(Vec<i64>),
    Text(String),
}

impl Value {
    pub fn rational(q: &Rational) -> Value {
        match q.is_integer().then(|| q.to_integer().to_i64()).flatten() {
            Some(n) => Value::Int(n),
            None => Value::Text(q.to_string()),
        }
    }

    pub fn scalar(s: &Scalar) -> Value {
        match s.to_rational() {
            Some(q) => Value::rational(&q),
            None => Value::Text(s.to_string()),
        }
    }

    pub fn list<T: Into<i64> + Copy>(items: &[T]) -> Value {
        Value::List(items.iter().map(|&x| x.into()).collect())
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(n) => write!(f, "{n}"),
            Value::List(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", parts.join(", "))
            }
            Value::Text(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub section: String,
    pub computed: Value,
    pub expected: Value,
    pub pass: bool,
    pub provenance: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn new(checks: Vec<CheckRecord>) -> Self {
        let pass = checks.iter().filter(|c| c.pass).count();
        let summary = Summary {
            pass,
            fail: checks.len() - pass,
        };
        Report { checks, summary }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// One line per record.
    pub fn render_lines(&self) -> String {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        let mut out = String::new();
        let mut last = None;
        for c in &self.checks {
            out.push_str(&record_line(c, width, &mut last));
        }
        out.push_str(&self.render_summary());
        out
    }

    /// Records grouped by section, in order of first appearance.
    pub fn render_sections(&self) -> String {
        let mut sections: Vec<&str> = Vec::new();
        for c in &self.checks {
            if !sections.contains(&c.section.as_str()) {
                sections.push(&c.section);
            }
        }
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for s in sections {
            out.push_str(&format!("== {s}\n"));
            let mut last = None;
            for c in self.checks.iter().filter(|c| c.section == s) {
                out.push_str("  ");
                out.push_str(&record_line(c, width, &mut last));
            }
        }
        out.push_str(&self.render_summary());
        out
    }

    fn render_summary(&self) -> String {
        format!(
            "{} passed, {} failed\n",
            self.summary.pass, self.summary.fail
        )
    }
}

/// Provenance is printed only when it changes from the previous record.
fn record_line<'a>(c: &'a CheckRecord, width: usize, last: &mut Option<&'a str>) -> String {
    let status = if c.pass { "PASS" } else { "FAIL" };
    let mut line = if c.pass {
        format!("{status}  {:width$}  {}", c.id, c.computed)
    } else {
        format!(
            "{status}  {:width$}  computed {}, expected {}",
            c.id, c.computed, c.expected
        )
    };
    if *last != Some(c.provenance.as_str()) {
        line.push_str(&format!("  ({})", c.provenance));
        *last = Some(&c.provenance);
    }
    line.push('\n');
    line
}

#[cfg(test)]
mod tests {
    use super::*;
    use cymcm_core::numeric::ratio;

    fn record(pass: bool) -> CheckRecord {
        CheckRecord {
            id: "c.genus".into(),
            section: "Curves".into(),
            computed: Value::Int(9),
            expected: Value::Int(if pass { 9 } else { 8 }),
            pass,
            provenance: "Hurwitz count".into(),
        }
    }

    #[test]
    fn values() {
        assert_eq!(Value::rational(&ratio(-6, 3)), Value::Int(-2));
        assert_eq!(Value::rational(&ratio(1, 3)), Value::Text("1/3".into()));
        assert_eq!(Value::list(&[1u32, 3, 5]).to_string(), "[1, 3, 5]");
    }

    #[test]
    fn json_round_trip() {
        let r = Report::new(vec![
            record(true),
            record(false),
            CheckRecord {
                computed: Value::Bool(true),
                expected: Value::List(vec![10, 5, 5]),
                ..record(true)
            },
            CheckRecord {
                computed: Value::Text("1/2".into()),
                ..record(false)
            },
        ]);
        assert_eq!(r.summary, Summary { pass: 2, fail: 2 });
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(r.exit_code(), 1);
        assert_eq!(Report::new(vec![]).exit_code(), 0);
    }

    #[test]
    fn rendering() {
        let r = Report::new(vec![record(true), record(false)]);
        let text = r.render_sections();
        assert!(text.starts_with("== Curves\n"));
        assert!(text.contains("computed 9, expected 8"));
        assert!(text.ends_with("1 passed, 1 failed\n"));
    }
}
