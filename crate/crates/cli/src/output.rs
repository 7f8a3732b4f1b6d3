//! Record emission in the three output formats.
//!
//! Every subcommand produces records: ordered lists of named values. Plain
//! format prints one `key=value` line per record, jsonl one JSON object per
//! line with the same field order, csv one row per record under a single
//! header row.

use std::io::{self, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// key=value pairs, one record per line
    Plain,
    /// one JSON object per line
    Jsonl,
    /// comma-separated rows under a header row
    Csv,
}

/// One field value. The variants only differ in rendering: `Big` carries
/// counts already stringified (they outgrow u64 quickly), `Quoted` is
/// plain-quoted even when nonempty and spaceless, `Text` never is.
#[derive(Debug, Clone)]
pub enum Value {
    Int(usize),
    Big(String),
    Text(String),
    Quoted(String),
    Flag(bool),
}

impl Value {
    fn plain(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Big(s) | Value::Text(s) => s.clone(),
            Value::Quoted(s) => format!("{s:?}"),
            Value::Flag(b) => b.to_string(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Value::Int(v) => (*v).into(),
            Value::Big(s) | Value::Text(s) | Value::Quoted(s) => s.clone().into(),
            Value::Flag(b) => (*b).into(),
        }
    }

    fn csv(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Big(s) | Value::Text(s) | Value::Quoted(s) => s.clone(),
            Value::Flag(b) => b.to_string(),
        }
    }
}

pub type Record = Vec<(&'static str, Value)>;

pub struct Emitter<W: Write> {
    format: Format,
    out: W,
    csv_header_written: bool,
}

impl<W: Write> Emitter<W> {
    pub fn new(format: Format, out: W) -> Self {
        Self {
            format,
            out,
            csv_header_written: false,
        }
    }

    /// Writes one record in the configured format.
    pub fn emit(&mut self, record: &Record) -> io::Result<()> {
        match self.format {
            Format::Plain => {
                let line = record
                    .iter()
                    .map(|(key, value)| format!("{key}={}", value.plain()))
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(self.out, "{line}")
            }
            Format::Jsonl => self.emit_jsonl(record),
            Format::Csv => self.emit_csv(record),
        }
    }

    /// Like [`emit`](Self::emit), but plain format drops the keys and
    /// prints bare values. Used for tabular output.
    pub fn emit_bare(&mut self, record: &Record) -> io::Result<()> {
        match self.format {
            Format::Plain => {
                let line = record
                    .iter()
                    .map(|(_, value)| value.plain())
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(self.out, "{line}")
            }
            _ => self.emit(record),
        }
    }

    fn emit_jsonl(&mut self, record: &Record) -> io::Result<()> {
        // preserve_order keeps the map in field order
        let map: serde_json::Map<String, serde_json::Value> = record
            .iter()
            .map(|(key, value)| (key.to_string(), value.json()))
            .collect();
        let line = serde_json::to_string(&map).map_err(io::Error::other)?;
        writeln!(self.out, "{line}")
    }

    fn emit_csv(&mut self, record: &Record) -> io::Result<()> {
        let mut writer = csv::WriterBuilder::new()
            .has_headers(false)
            .from_writer(Vec::new());
        if !self.csv_header_written {
            writer
                .write_record(record.iter().map(|(key, _)| *key))
                .map_err(io::Error::other)?;
            self.csv_header_written = true;
        }
        writer
            .write_record(record.iter().map(|(_, value)| value.csv()))
            .map_err(io::Error::other)?;
        let bytes = writer
            .into_inner()
            .map_err(|e| io::Error::other(e.to_string()))?;
        self.out.write_all(&bytes)
    }
}
