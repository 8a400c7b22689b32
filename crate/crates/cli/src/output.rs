use std::fmt::Write as _;

use qdim_core::Precision;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str], rows: Vec<Vec<String>>) -> Self {
        Self { headers: headers.iter().map(|h| h.to_string()).collect(), rows }
    }
}

/// What a command produced, before formatting.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub result: Value,
    pub summary: Vec<(String, String)>,
    pub table: Option<Table>,
}

/// The `--json` document. Field order is the serialization order.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub group: Value,
    pub expr: Option<String>,
    pub command: String,
    pub result: Value,
    pub precision: usize,
    pub version: &'static str,
    #[serde(skip)]
    pub outcome: Outcome,
}

impl Report {
    pub fn new(group: Value, expr: Option<String>, command: &str, outcome: Outcome, prec: Precision) -> Self {
        Self {
            group,
            expr,
            command: command.to_string(),
            result: outcome.result.clone(),
            precision: prec.digits(),
            version: env!("CARGO_PKG_VERSION"),
            outcome,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut out = serde_json::to_string_pretty(self).expect("report serializes");
                out.push('\n');
                out
            }
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "{}", self.command);
        if let Some(expr) = &self.expr {
            let _ = write!(out, " of {expr}");
        }
        let _ = writeln!(out, " [{} digits]", self.precision);
        let width = self.outcome.summary.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (key, value) in &self.outcome.summary {
            let _ = writeln!(out, "  {key:<width$}  {value}");
        }
        if let Some(table) = &self.outcome.table {
            out.push('\n');
            let mut widths: Vec<usize> = table.headers.iter().map(String::len).collect();
            for row in &table.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                padded.join("  ").trim_end().to_string()
            };
            let _ = writeln!(out, "{}", line(&table.headers));
            for row in &table.rows {
                let _ = writeln!(out, "{}", line(row));
            }
        }
        out
    }

    /// The table as CSV with every field quoted; the summary as key/value
    /// pairs when there is no table.
    fn csv(&self) -> String {
        let mut writer = csv::WriterBuilder::new().quote_style(csv::QuoteStyle::Always).from_writer(Vec::new());
        let result = match &self.outcome.table {
            Some(table) => std::iter::once(&table.headers)
                .chain(&table.rows)
                .try_for_each(|record| writer.write_record(record)),
            None => std::iter::once(("key".to_string(), "value".to_string()))
                .chain(self.outcome.summary.iter().cloned())
                .try_for_each(|(k, v)| writer.write_record([k, v])),
        };
        result.expect("writing to memory");
        String::from_utf8(writer.into_inner().expect("flush to memory")).expect("utf-8 input")
    }
}
