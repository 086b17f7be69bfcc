//! Renderers for index/value rows and polynomial lists.

use std::fmt::Write;

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    /// Values joined by commas on one line.
    List,
    /// `n,value` header and one row per index.
    Csv,
    /// Two-row markdown table: indices, then values.
    Md,
    Json,
}

/// A labelled row, e.g. `B_{1,n}^{exp}` for `n = 0..=14`.
#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub label: String,
    pub entries: Vec<(usize, String)>,
}

#[derive(Serialize)]
struct JsonEntry<'a> {
    n: usize,
    value: &'a str,
}

#[derive(Serialize)]
struct JsonTable<'a> {
    label: &'a str,
    values: Vec<JsonEntry<'a>>,
}

impl Table {
    pub fn new(label: impl Into<String>, entries: Vec<(usize, String)>) -> Self {
        Table { label: label.into(), entries }
    }

    pub fn render(&self, format: TableFormat) -> String {
        let mut out = String::new();
        match format {
            TableFormat::List => {
                let values: Vec<&str> = self.entries.iter().map(|(_, v)| v.as_str()).collect();
                out.push_str(&values.join(","));
                out.push('\n');
            }
            TableFormat::Csv => {
                out.push_str("n,value\n");
                for (n, v) in &self.entries {
                    // polynomial text has no commas or quotes, rationals neither
                    writeln!(out, "{n},{v}").unwrap();
                }
            }
            TableFormat::Md => {
                let mut head = String::from("| n |");
                let mut rule = String::from("|---|");
                let mut row = format!("| {} |", self.label);
                for (n, v) in &self.entries {
                    write!(head, " {n} |").unwrap();
                    rule.push_str("---|");
                    write!(row, " {v} |").unwrap();
                }
                writeln!(out, "{head}\n{rule}\n{row}").unwrap();
            }
            TableFormat::Json => {
                let t = JsonTable {
                    label: &self.label,
                    values: self.entries.iter().map(|(n, v)| JsonEntry { n: *n, value: v }).collect(),
                };
                out = serde_json::to_string_pretty(&t).expect("table serializes");
                out.push('\n');
            }
        }
        out
    }
}

/// One polynomial per line for the list format; the table formats for the rest.
pub fn render_polys(table: &Table, format: TableFormat) -> String {
    match format {
        TableFormat::List => table.entries.iter().map(|(_, p)| format!("{p}\n")).collect(),
        other => table.render(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        Table::new("B", vec![(0, "1".into()), (1, "-1/2".into())])
    }

    #[test]
    fn formats() {
        let t = sample();
        assert_eq!(t.render(TableFormat::List), "1,-1/2\n");
        assert_eq!(t.render(TableFormat::Csv), "n,value\n0,1\n1,-1/2\n");
        assert_eq!(t.render(TableFormat::Md), "| n | 0 | 1 |\n|---|---|---|\n| B | 1 | -1/2 |\n");
        let v: serde_json::Value = serde_json::from_str(&t.render(TableFormat::Json)).unwrap();
        assert_eq!(v["values"][1]["value"], "-1/2");
        assert_eq!(render_polys(&t, TableFormat::List), "1\n-1/2\n");
    }
}
