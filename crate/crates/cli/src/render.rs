use std::fmt::Display;

use serde::Serialize;
use serde_json::Value;

/// What a subcommand produced, in both output formats.
pub struct Report {
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn new(text: impl Into<String>, json: impl Serialize) -> Report {
        Report {
            text: text.into(),
            json: serde_json::to_value(json).expect("output types serialize"),
        }
    }

    /// `key: value` lines, in the given order.
    pub fn record(fields: &[(&str, String)], json: impl Serialize) -> Report {
        let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let text = fields
            .iter()
            .map(|(k, v)| format!("{:<w$}  {v}", format!("{k}:"), w = width + 1))
            .collect::<Vec<_>>()
            .join("\n");
        Report::new(text, json)
    }

    pub fn render(&self, json: bool) -> String {
        let mut out = if json {
            serde_json::to_string_pretty(&self.json).expect("json values print")
        } else {
            self.text.clone()
        };
        out.push('\n');
        out
    }
}

/// Two-column table with a header row.
pub fn table(header: (&str, &str), rows: &[(String, String)]) -> String {
    let width = rows
        .iter()
        .map(|(a, _)| a.chars().count())
        .chain([header.0.chars().count()])
        .max()
        .unwrap_or(0);
    let line = |a: &str, b: &str| {
        let pad = width - a.chars().count();
        format!("{a}{}  {b}", " ".repeat(pad))
    };
    let mut lines = vec![line(header.0, header.1)];
    lines.extend(rows.iter().map(|(a, b)| line(a, b)));
    lines.join("\n")
}

pub fn joined<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Big naturals go into JSON as numbers when they fit, as strings otherwise.
pub fn natural(value: impl Display) -> Value {
    let s = value.to_string();
    s.parse::<u64>().map_or(Value::String(s), Value::from)
}
