use serde_json::{Map, Value};

use crate::config::Format;

pub const SCHEMA: &str = "1";

/// Ledger columns that come first, in this order.
const LEADING: [&str; 4] = ["id", "case", "n", "pass"];

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Rows of a ledger-shaped report, if it has an `entries` array of objects.
fn ledger_rows(report: &Map<String, Value>) -> Option<(Vec<String>, Vec<Vec<String>>)> {
    let entries = report.get("entries")?.as_array()?;
    let mut header: Vec<String> = Vec::new();
    for e in entries {
        for k in e.as_object()?.keys() {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
    }
    let rank = |k: &String| LEADING.iter().position(|l| l == k).unwrap_or(LEADING.len());
    header.sort_by_key(|k| rank(k));
    let rows = entries
        .iter()
        .map(|e| header.iter().map(|k| e.get(k).map(scalar).unwrap_or_default()).collect())
        .collect();
    Some((header, rows))
}

pub fn render(report: &Map<String, Value>, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("serializable") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            if let Some((header, rows)) = ledger_rows(report) {
                w.write_record(&header).expect("in-memory write");
                for r in rows {
                    w.write_record(&r).expect("in-memory write");
                }
            } else {
                w.write_record(["key", "value"]).expect("in-memory write");
                for (k, v) in report {
                    w.write_record([k.as_str(), &scalar(v)]).expect("in-memory write");
                }
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
        }
        Format::Pretty => {
            let mut out = String::new();
            for (k, v) in report {
                if k == "entries" {
                    continue;
                }
                out.push_str(&format!("{k:<16} {}\n", scalar(v)));
            }
            if let Some((header, rows)) = ledger_rows(report) {
                let widths: Vec<usize> = (0..header.len())
                    .map(|i| rows.iter().map(|r| r[i].len()).chain([header[i].len()]).max().unwrap_or(0))
                    .collect();
                let line = |cells: &[String]| {
                    cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
                };
                out.push_str(&line(&header));
                out.push('\n');
                for r in &rows {
                    out.push_str(&line(r));
                    out.push('\n');
                }
            }
            out
        }
    }
}
