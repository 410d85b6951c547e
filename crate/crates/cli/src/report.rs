//! Reports: a command echo, named tables, free-form facts and pass/fail
//! checks, rendered either as aligned text or as JSON with sorted keys.

use serde_json::{json, Map, Value};

pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Default)]
pub struct Report {
    pub command: Vec<String>,
    pub instance: Option<Value>,
    pub facts: Vec<(String, Value)>,
    pub tables: Vec<Table>,
    pub checks: Vec<Check>,
    /// Excluded from determinism comparisons.
    pub elapsed_ms: f64,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Self {
            command,
            ..Self::default()
        }
    }

    pub fn fact(&mut self, key: &str, value: impl Into<Value>) {
        self.facts.push((key.to_string(), value.into()));
    }

    pub fn table(&mut self, title: &str, columns: &[&str], rows: Vec<Vec<Value>>) {
        self.tables.push(Table {
            title: title.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows,
        });
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_value(&self) -> Value {
        let mut tables = Map::new();
        for t in &self.tables {
            let rows: Vec<Value> = t
                .rows
                .iter()
                .map(|r| Value::Object(t.columns.iter().cloned().zip(r.iter().cloned()).collect()))
                .collect();
            tables.insert(t.title.clone(), Value::Array(rows));
        }
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
            .collect();
        json!({
            "command": self.command,
            "instance": self.instance.clone().unwrap_or(Value::Null),
            "facts": Value::Object(self.facts.iter().cloned().collect()),
            "tables": tables,
            "checks": checks,
            "passed": self.passed(),
            "elapsed_ms": self.elapsed_ms,
        })
    }

    /// Pretty JSON; `serde_json` maps are ordered, so keys come out sorted.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("plain data");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("$ defcoh {}\n", self.command.join(" "));
        if let Some(Value::Object(i)) = &self.instance {
            let field = |k: &str| i.get(k).map(plain).unwrap_or_default();
            out += &format!(
                "instance: {} ({}, ambient dim {})\n",
                field("name"),
                field("kind"),
                field("ambient_dim")
            );
        }
        for (k, v) in &self.facts {
            out += &format!("{k}: {}\n", plain(v));
        }
        for t in &self.tables {
            out += &format!("\n{}\n", t.title);
            out += &render_rows(&t.columns, &t.rows);
        }
        if !self.checks.is_empty() {
            out.push('\n');
        }
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            out += &format!("{tag} {}: {}\n", c.name, c.detail);
        }
        out += &format!("elapsed: {:.1} ms\n", self.elapsed_ms);
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn render_rows(columns: &[String], rows: &[Vec<Value>]) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(plain).collect()).collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(j, c)| cells.iter().map(|r| r[j].chars().count()).chain([c.len()]).max().unwrap_or(0))
        .collect();
    let line = |r: &[String]| {
        let parts: Vec<String> = r.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        format!("  {}\n", parts.join("  "))
    };
    let mut out = line(columns);
    for r in &cells {
        out += &line(r);
    }
    out
}
