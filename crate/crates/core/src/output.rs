// Copyright contributors to the qldpc-arch project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! JSON and CSV emission with fixed float precision.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};

/// Significant digits kept for every emitted float.
pub const SIG_DIGITS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::param("format", format!("unknown format {s:?}, expected json or csv"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

/// Something a subcommand emits.
#[derive(Clone, Debug, PartialEq)]
pub enum Artifact {
    /// A single record.
    Object(Value),
    /// Rows sharing one set of columns.
    Table(Vec<Value>),
}

impl Artifact {
    pub fn object<T: Serialize>(v: &T) -> Result<Self> {
        Ok(Artifact::Object(serde_json::to_value(v)?))
    }

    pub fn table<T: Serialize>(rows: &[T]) -> Result<Self> {
        Ok(Artifact::Table(rows.iter().map(serde_json::to_value).collect::<std::result::Result<_, _>>()?))
    }
}

/// Rounds to [`SIG_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIG_DIGITS - 1, x).parse().unwrap_or(x)
}

/// Plain decimal for moderate magnitudes, scientific otherwise.
pub fn fmt_float(x: f64) -> String {
    let r = round_sig(x);
    if r == 0.0 || !r.is_finite() {
        return format!("{r}");
    }
    let a = r.abs();
    if (1e-4..1e15).contains(&a) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

/// Seconds as a short human-readable duration.
pub fn humanize_seconds(secs: f64) -> String {
    const UNITS: [(f64, &str); 6] =
        [(365.25 * 86400.0, "years"), (86400.0, "days"), (3600.0, "h"), (60.0, "min"), (1.0, "s"), (1e-3, "ms")];
    if !secs.is_finite() {
        return "inf".into();
    }
    let (scale, unit) = UNITS.iter().copied().find(|(s, _)| secs >= *s).unwrap_or((1e-6, "us"));
    let v = secs / scale;
    let digits = if v < 10.0 {
        2
    } else if v < 100.0 {
        1
    } else {
        0
    };
    format!("{v:.digits$} {unit}")
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n.as_f64().and_then(|x| serde_json::Number::from_f64(round_sig(x))) {
                *n = r;
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_value),
        Value::Object(o) => o.values_mut().for_each(round_value),
        _ => {}
    }
}

fn flatten_into(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                flatten_into(&key(k), x, out);
            }
        }
        Value::Array(a) => {
            let cells: Vec<String> = a.iter().map(scalar).collect();
            out.push((prefix.to_string(), cells.join(";")));
        }
        _ => {
            out.push((prefix.to_string(), scalar(v)));
            if prefix.ends_with("runtime") && (v.is_number() || v.is_null()) {
                let h = v.as_f64().map(humanize_seconds).unwrap_or_default();
                out.push((format!("{prefix}_human"), h));
            }
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) if n.is_f64() => fmt_float(n.as_f64().unwrap_or(f64::NAN)),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Dotted-key columns of one record. Runtime fields gain a `_human` column.
pub fn flatten(v: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    flatten_into("", v, &mut out);
    out
}

/// Writes `artifact` in `format`. Tables with rows of different shapes
/// take their columns from the union in first-seen order.
pub fn write_artifact(artifact: &Artifact, format: Format, w: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => {
            let mut v = match artifact {
                Artifact::Object(v) => v.clone(),
                Artifact::Table(rows) => Value::Array(rows.clone()),
            };
            round_value(&mut v);
            serde_json::to_writer_pretty(&mut *w, &v)?;
            writeln!(w).map_err(|e| Error::io("<output>", e))?;
        }
        Format::Csv => {
            let rows: Vec<Vec<(String, String)>> = match artifact {
                Artifact::Object(v) => vec![flatten(v)],
                Artifact::Table(rows) => rows.iter().map(flatten).collect(),
            };
            let mut seen: Vec<String> = Vec::new();
            for r in &rows {
                for (k, _) in r {
                    if !seen.contains(k) {
                        seen.push(k.clone());
                    }
                }
            }
            // A null in one row and an object in another: the object's
            // columns take the null's place.
            let mut columns: Vec<String> = Vec::new();
            for c in &seen {
                let is_child = |k: &String, p: &String| {
                    k.len() > p.len() && k.starts_with(p.as_str()) && k.as_bytes()[p.len()] == b'.'
                };
                let children: Vec<&String> = seen.iter().filter(|k| is_child(k, c)).collect();
                if !children.is_empty() {
                    for k in children {
                        if !columns.contains(k) {
                            columns.push(k.clone());
                        }
                    }
                } else if !columns.contains(c) {
                    columns.push(c.clone());
                }
            }
            let mut out = csv::Writer::from_writer(w);
            out.write_record(&columns)?;
            for r in &rows {
                let map: Map<String, Value> = r.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
                out.write_record(columns.iter().map(|c| map.get(c).and_then(Value::as_str).unwrap_or("")))?;
            }
            out.flush().map_err(|e| Error::io("<output>", e))?;
        }
    }
    Ok(())
}

/// Renders to a string.
pub fn render(artifact: &Artifact, format: Format) -> Result<String> {
    let mut buf = Vec::new();
    write_artifact(artifact, format, &mut buf)?;
    Ok(String::from_utf8(buf).expect("emitters write UTF-8"))
}
