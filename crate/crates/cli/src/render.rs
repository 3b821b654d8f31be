//! Output rendering. One `Output` accumulates fields, matrices, catalog
//! rows, notes and checks; `finish` prints them in the selected format.
//! Output is deterministic: fixed arguments and seed give identical bytes.

use std::io::{ErrorKind, Write};

use gamma2_core::{F2Matrix, IntMatrix};
use serde_json::{json, Map, Value};

use crate::Format;

pub struct Check {
    name: String,
    params: String,
    ok: bool,
    witness: Option<(String, String)>,
}

impl Check {
    pub fn new(name: &str, params: &str, ok: bool) -> Self {
        Check {
            name: name.to_string(),
            params: params.to_string(),
            ok,
            witness: None,
        }
    }

    pub fn with_witness(mut self, lhs: &str, rhs: &str) -> Self {
        self.witness = Some((lhs.to_string(), rhs.to_string()));
        self
    }
}

/// Row-major entries, space separated: `"-1 2 0 1"`.
pub fn flat(m: &IntMatrix) -> String {
    m.to_string_rows()
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join(" ")
}

fn inline(m: &IntMatrix) -> String {
    let rows: Vec<String> = m
        .to_string_rows()
        .into_iter()
        .map(|r| format!("[{}]", r.join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

fn f2_flat(m: &F2Matrix) -> String {
    m.to_rows()
        .into_iter()
        .flatten()
        .map(|b| b.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn f2_inline(m: &F2Matrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .into_iter()
        .map(|r| {
            format!(
                "[{}]",
                r.iter().map(u8::to_string).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn matrix_json(m: &IntMatrix) -> Value {
    json!(m.to_string_rows())
}

fn f2_json(m: &F2Matrix) -> Value {
    json!(m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|b| b.to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub struct Output {
    format: Format,
    result: Map<String, Value>,
    entries: Vec<Value>,
    notes: Vec<String>,
    checks: Vec<Check>,
    plain: Vec<String>,
    csv: Vec<String>,
}

impl Output {
    pub fn new(format: Format) -> Self {
        Output {
            format,
            result: Map::new(),
            entries: Vec::new(),
            notes: Vec::new(),
            checks: Vec::new(),
            plain: Vec::new(),
            csv: Vec::new(),
        }
    }

    pub fn field_str(&mut self, name: &str, value: &str) {
        self.result.insert(name.to_string(), json!(value));
        self.plain.push(format!("{name}: {value}"));
        self.csv
            .push(format!("field,{name},{}", csv_escape(value)));
    }

    pub fn field_bool(&mut self, name: &str, value: bool) {
        self.result.insert(name.to_string(), json!(value));
        self.plain.push(format!("{name}: {value}"));
        self.csv.push(format!("field,{name},{value}"));
    }

    pub fn field_u64(&mut self, name: &str, value: u64) {
        self.result.insert(name.to_string(), json!(value));
        self.plain.push(format!("{name}: {value}"));
        self.csv.push(format!("field,{name},{value}"));
    }

    pub fn matrix(&mut self, name: &str, m: &IntMatrix) {
        self.result.insert(name.to_string(), matrix_json(m));
        self.plain.push(format!("{name}:"));
        for line in m.to_string().lines() {
            self.plain.push(line.to_string());
        }
        for (i, row) in m.to_string_rows().iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                self.csv.push(format!("matrix,{name},{i},{j},{v}"));
            }
        }
    }

    pub fn f2_matrix(&mut self, name: &str, m: &F2Matrix) {
        self.result.insert(name.to_string(), f2_json(m));
        self.plain.push(format!("{name}:"));
        for line in m.to_string().lines() {
            self.plain.push(line.to_string());
        }
        for (i, row) in m.to_rows().iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                self.csv.push(format!("matrix,{name},{i},{j},{v}"));
            }
        }
    }

    pub fn catalog_row(
        &mut self,
        index: usize,
        kind: &str,
        name: &str,
        image: &IntMatrix,
        invariant: &F2Matrix,
    ) {
        self.entries.push(json!({
            "index": index,
            "kind": kind,
            "name": name,
            "eta": matrix_json(image),
            "f_eta": f2_json(invariant),
        }));
        self.plain.push(format!(
            "[{index}] {kind} {name}  eta={}  f={}",
            inline(image),
            f2_inline(invariant)
        ));
        self.csv.push(format!(
            "entry,{index},{kind},{},{},{}",
            csv_escape(name),
            flat(image),
            f2_flat(invariant)
        ));
    }

    pub fn note(&mut self, text: &str) {
        self.notes.push(text.to_string());
        self.plain.push(format!("note: {text}"));
        self.csv.push(format!("note,{}", csv_escape(text)));
    }

    pub fn check(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn any_check_failed(&self) -> bool {
        self.checks.iter().any(|c| !c.ok)
    }

    pub fn finish(mut self, genus: usize, command: &str) {
        if !self.entries.is_empty() {
            self.result
                .insert("entries".to_string(), Value::Array(self.entries.clone()));
        }
        if !self.notes.is_empty() {
            self.result.insert("notes".to_string(), json!(self.notes));
        }
        let mut lines: Vec<String> = Vec::new();
        match self.format {
            Format::Json => {
                let checks: Vec<Value> = self
                    .checks
                    .iter()
                    .map(|c| {
                        let mut o = Map::new();
                        o.insert("name".into(), json!(c.name));
                        o.insert("params".into(), json!(c.params));
                        o.insert("status".into(), json!(if c.ok { "pass" } else { "fail" }));
                        if let Some((lhs, rhs)) = &c.witness {
                            o.insert("lhs".into(), json!(lhs));
                            o.insert("rhs".into(), json!(rhs));
                        }
                        Value::Object(o)
                    })
                    .collect();
                let top = json!({
                    "genus": genus,
                    "command": command,
                    "result": Value::Object(self.result),
                    "checks": checks,
                });
                lines.push(serde_json::to_string_pretty(&top).unwrap());
            }
            Format::Plain => {
                lines.append(&mut self.plain);
                for c in &self.checks {
                    let mark = if c.ok { "pass" } else { "FAIL" };
                    lines.push(format!("[{mark}] {} {}", c.name, c.params));
                    if !c.ok {
                        if let Some((lhs, rhs)) = &c.witness {
                            lines.push(format!("  lhs: {lhs}"));
                            lines.push(format!("  rhs: {rhs}"));
                        }
                    }
                }
            }
            Format::Csv => {
                lines.append(&mut self.csv);
                for c in &self.checks {
                    lines.push(format!(
                        "check,{},{},{}",
                        csv_escape(&c.name),
                        csv_escape(&c.params),
                        if c.ok { "pass" } else { "fail" }
                    ));
                }
            }
        }
        // stop quietly when the reader goes away (e.g. piping into head)
        let stdout = std::io::stdout();
        let mut w = stdout.lock();
        for line in &lines {
            if let Err(e) = writeln!(w, "{line}") {
                if e.kind() == ErrorKind::BrokenPipe {
                    return;
                }
                panic!("failed writing output: {e}");
            }
        }
    }
}
