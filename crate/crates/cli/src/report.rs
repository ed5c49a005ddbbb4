//! Ordered records and their JSON / CSV rendering.
//!
//! Floats go through `ryu` in both formats (shortest round-trip form), so the
//! same value prints the same way everywhere and runs are byte-reproducible.

use std::io::{self, Write};

use dunkl_core::Complex64;
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Num(f64),
    Complex(Complex64),
    Int(u64),
    Bool(bool),
    Str(String),
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Num(v)
    }
}

impl From<Complex64> for Field {
    fn from(v: Complex64) -> Self {
        Field::Complex(v)
    }
}

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Bool(v)
    }
}

impl From<usize> for Field {
    fn from(v: usize) -> Self {
        Field::Int(v as u64)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Str(v.to_owned())
    }
}

impl From<String> for Field {
    fn from(v: String) -> Self {
        Field::Str(v)
    }
}

/// Named fields in output order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record(Vec<(&'static str, Field)>);

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &'static str, v: impl Into<Field>) -> Self {
        self.0.push((name, v.into()));
        self
    }

    fn json(&self) -> Value {
        let mut m = Map::new();
        for (k, v) in &self.0 {
            m.insert((*k).to_owned(), json_field(v));
        }
        Value::Object(m)
    }

    /// Column names; a complex field `v` becomes `v_re`, `v_im`.
    fn header(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (k, v) in &self.0 {
            match v {
                Field::Complex(_) => {
                    out.push(format!("{k}_re"));
                    out.push(format!("{k}_im"));
                }
                _ => out.push((*k).to_owned()),
            }
        }
        out
    }

    fn cells(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (_, v) in &self.0 {
            match v {
                Field::Num(x) => out.push(fmt_f64(*x)),
                Field::Complex(z) => {
                    out.push(fmt_f64(z.re));
                    out.push(fmt_f64(z.im));
                }
                Field::Int(n) => out.push(n.to_string()),
                Field::Bool(b) => out.push(b.to_string()),
                Field::Str(s) => out.push(s.clone()),
            }
        }
        out
    }
}

pub fn fmt_f64(x: f64) -> String {
    ryu::Buffer::new().format(x).to_owned()
}

fn json_num(x: f64) -> Value {
    Number::from_f64(x).map_or(Value::Null, Value::Number)
}

fn json_field(f: &Field) -> Value {
    match f {
        Field::Num(x) => json_num(*x),
        Field::Complex(z) => {
            let mut m = Map::new();
            m.insert("re".into(), json_num(z.re));
            m.insert("im".into(), json_num(z.im));
            Value::Object(m)
        }
        Field::Int(n) => Value::from(*n),
        Field::Bool(b) => Value::Bool(*b),
        Field::Str(s) => Value::String(s.clone()),
    }
}

/// What a command produces.
#[derive(Debug, Clone, PartialEq)]
pub enum Report {
    /// A point evaluation: one JSON object, or a header plus one CSV row.
    Point(Record),
    /// A table: a JSON array, or a CSV table. The optional summary becomes
    /// the last array element in JSON and a trailing `# ` line in CSV.
    Table {
        rows: Vec<Record>,
        summary: Option<Record>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Report {
    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Json => {
                let v = match self {
                    Report::Point(r) => r.json(),
                    Report::Table { rows, summary } => {
                        Value::Array(rows.iter().chain(summary).map(Record::json).collect())
                    }
                };
                serde_json::to_writer_pretty(&mut *out, &v)?;
                out.write_all(b"\n")
            }
            Format::Csv => {
                let (rows, summary) = match self {
                    Report::Point(r) => (std::slice::from_ref(r), None),
                    Report::Table { rows, summary } => (rows.as_slice(), summary.as_ref()),
                };
                {
                    let mut w = csv::WriterBuilder::new()
                        .terminator(csv::Terminator::Any(b'\n'))
                        .from_writer(&mut *out);
                    if let Some(first) = rows.first() {
                        w.write_record(first.header())?;
                    }
                    for r in rows {
                        w.write_record(r.cells())?;
                    }
                    w.flush()?;
                }
                if let Some(s) = summary {
                    let parts: Vec<String> = s
                        .header()
                        .iter()
                        .zip(s.cells())
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect();
                    writeln!(out, "# {}", parts.join(" "))?;
                }
                Ok(())
            }
        }
    }
}
