use std::fmt::Display;

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One `key=value` record per line.
    #[default]
    Kv,
    /// Aligned two-column table.
    Table,
}

/// Ordered list of key/value records. Keys may repeat (e.g. one `key`
/// record per class).
#[derive(Debug, Default)]
pub struct Report {
    rows: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: &str, value: impl Display) {
        self.rows.push((key.to_string(), value.to_string()));
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Kv => {
                for (k, v) in &self.rows {
                    out.push_str(&format!("{k}={v}\n"));
                }
            }
            Format::Table => {
                let w = self.rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &self.rows {
                    out.push_str(&format!("{k:<w$}  {v}\n"));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        let mut r = Report::new();
        r.push("dim", 6);
        r.push("centered", true);
        assert_eq!(r.render(Format::Kv), "dim=6\ncentered=true\n");
        assert_eq!(r.render(Format::Table), "dim       6\ncentered  true\n");
    }
}
