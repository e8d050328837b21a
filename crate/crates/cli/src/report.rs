//! Report rendering: an aligned text table or pretty-printed JSON.

use serde::Serialize;
use serde_json::Value;

use crate::Format;

pub struct Report {
    table: String,
    structured: Value,
}

impl Report {
    pub fn new<T: Serialize>(data: &T, table: String) -> Report {
        Report {
            table,
            structured: serde_json::to_value(data).expect("report data serializes"),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.table.clone(),
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(&self.structured).expect("valid json");
                s.push('\n');
                s
            }
        }
    }
}

pub struct Outcome {
    pub report: Report,
    /// The answer is a mathematical "no".
    pub negative: bool,
}

impl Outcome {
    pub fn positive(report: Report) -> Outcome {
        Outcome { report, negative: false }
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    for r in rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

/// `key: value` lines.
pub fn fields(pairs: &[(&str, String)]) -> String {
    pairs.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligned() {
        let t = table(&["a", "bb"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(t, "a    bb\nxyz  1\n");
    }
}
