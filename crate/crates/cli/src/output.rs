//! Deterministic CSV and JSON table writers.
//!
//! Numbers go out in the shortest round-trip decimal form in both formats,
//! so the two encodings of one run carry identical values. No timestamps
//! anywhere; the metadata's generated-by line names only the tool version.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::config::OutputFormat;
use crate::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub metadata: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            metadata: vec![(
                "generated-by".to_string(),
                format!("qosc {}", env!("CARGO_PKG_VERSION")),
            )],
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) {
        self.metadata.push((key.to_string(), value.to_string()));
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn to_csv(&self) -> String {
        let mut s = String::new();
        for (key, value) in &self.metadata {
            s.push_str(&format!("# {key} = {value}\n"));
        }
        s.push_str(&self.columns.join(","));
        s.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }

    fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            metadata: serde_json::Map<String, serde_json::Value>,
            columns: &'a [String],
            rows: &'a [Vec<f64>],
        }
        let mut metadata = serde_json::Map::new();
        for (key, value) in &self.metadata {
            metadata.insert(key.clone(), serde_json::Value::String(value.clone()));
        }
        let doc = Doc {
            metadata,
            columns: &self.columns,
            rows: &self.rows,
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("table serialization");
        text.push('\n');
        text
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }

    pub fn write(&self, format: OutputFormat, out: Option<&Path>) -> Result<(), CliError> {
        let text = self.render(format);
        match out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display()))),
            None => {
                let stdout = std::io::stdout();
                let mut handle = stdout.lock();
                handle
                    .write_all(text.as_bytes())
                    .map_err(|e| CliError::Config(format!("cannot write to stdout: {e}")))
            }
        }
    }
}
