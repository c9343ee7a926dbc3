//! Array text files and machine-readable reports.
//!
//! Array files hold one decimal key per line, `H(1)` first, with no header.
//! Reports are either CSV (header row plus data rows) or JSON (the same rows
//! wrapped with tool and invocation metadata).

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::heap::HeapArray;

pub fn parse_array(text: &str) -> Result<HeapArray> {
    let mut keys = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let key = line.parse::<u64>().map_err(|e| Error::Parse {
            line: idx + 1,
            message: format!("{line:?}: {e}"),
        })?;
        keys.push(key);
    }
    HeapArray::new(keys)
}

pub fn format_array(h: &HeapArray) -> String {
    let mut out = String::with_capacity(h.len() * 4);
    for key in h.keys() {
        out.push_str(&key.to_string());
        out.push('\n');
    }
    out
}

pub fn read_array(path: &Path) -> Result<HeapArray> {
    parse_array(&fs::read_to_string(path)?)
}

pub fn write_array(path: &Path, h: &HeapArray) -> Result<()> {
    fs::write(path, format_array(h))?;
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportMeta {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub arguments: serde_json::Map<String, serde_json::Value>,
    pub seed: Option<u64>,
}

impl ReportMeta {
    pub fn new(command: impl Into<String>) -> Self {
        ReportMeta {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            arguments: serde_json::Map::new(),
            seed: None,
        }
    }

    pub fn arg(mut self, name: &str, value: impl Serialize) -> Self {
        let value = serde_json::to_value(value).expect("argument values are plain data");
        self.arguments.insert(name.to_owned(), value);
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report<R> {
    #[serde(flatten)]
    pub meta: ReportMeta,
    pub format: Format,
    pub rows: Vec<R>,
}

impl<R: Serialize> Report<R> {
    pub fn new(meta: ReportMeta, format: Format, rows: Vec<R>) -> Self {
        Report { meta, format, rows }
    }

    pub fn write_to<W: Write>(&self, out: W) -> Result<()> {
        match self.format {
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(out);
                for row in &self.rows {
                    writer.serialize(row).map_err(csv_error)?;
                }
                writer.flush()?;
            }
            Format::Json => {
                let mut out = out;
                serde_json::to_writer_pretty(&mut out, self).map_err(std::io::Error::from)?;
                out.write_all(b"\n")?;
            }
        }
        Ok(())
    }

    pub fn render(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_to(&mut buf)?;
        Ok(String::from_utf8(buf).expect("reports are UTF-8"))
    }
}

fn csv_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Io(std::io::Error::other(format!("{other:?}"))),
    }
}
