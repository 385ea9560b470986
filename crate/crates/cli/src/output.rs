//! Output plumbing: fixed float formatting, JSON canonicalization, and
//! the writer target.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use serde_json::Value;

/// Rounds a float to 15 significant digits so emitted reports are
/// byte-stable across runs.
pub fn sig15(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

/// Applies [`sig15`] to every number in a JSON tree.
pub fn canonicalize_numbers(value: Value) -> Value {
    match value {
        Value::Number(n) => match n.as_f64() {
            Some(f) if n.is_f64() => serde_json::Number::from_f64(sig15(f))
                .map(Value::Number)
                .unwrap_or(Value::Null),
            _ => Value::Number(n),
        },
        Value::Array(items) => Value::Array(items.into_iter().map(canonicalize_numbers).collect()),
        Value::Object(map) => Value::Object(
            map.into_iter()
                .map(|(k, v)| (k, canonicalize_numbers(v)))
                .collect(),
        ),
        other => other,
    }
}

/// Where a report goes: stdout by default, a file when requested.
pub struct Sink {
    path: Option<PathBuf>,
}

impl Sink {
    pub fn new(path: Option<PathBuf>) -> Self {
        Sink { path }
    }

    pub fn emit(&self, content: &str) -> std::io::Result<()> {
        match &self.path {
            Some(path) => {
                let mut text = content.to_string();
                if !text.ends_with('\n') {
                    text.push('\n');
                }
                fs::write(path, text)
            }
            None => {
                let stdout = std::io::stdout();
                let mut lock = stdout.lock();
                writeln!(lock, "{content}")
            }
        }
    }

    pub fn emit_json(&self, value: Value) -> std::io::Result<()> {
        let canonical = canonicalize_numbers(value);
        self.emit(&serde_json::to_string_pretty(&canonical).expect("valid JSON"))
    }
}
