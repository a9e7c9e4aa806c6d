use serde_json::Value;

use crate::Format;

/// What a subcommand prints: JSON by default, lines of text with `--format text`.
pub struct Report {
    pub pass: bool,
    pub json: Value,
    pub text: Vec<String>,
}

impl Report {
    pub fn new(pass: bool) -> Report {
        Report {
            pass,
            json: Value::Null,
            text: Vec::new(),
        }
    }

    /// A single value; the text form is the value itself.
    pub fn value(v: Value) -> Report {
        let text = match &v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        Report {
            pass: true,
            json: v,
            text: vec![text],
        }
    }
}

pub fn emit(r: &Report, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(&r.json).expect("report serializes")),
        Format::Text => {
            for line in &r.text {
                println!("{line}");
            }
        }
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> Vec<String> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = vec![line(header.to_vec())];
    for row in rows {
        out.push(line(row.iter().map(|s| s.as_str()).collect()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_aligns() {
        let t = table(&["a", "bb"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(t, vec!["a    bb", "xyz  1"]);
    }
}
