use serde::Serialize;

use zecap::report::{csv_line, markdown_table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

/// A report renderable as pretty JSON or as a flat table.
pub trait Report: Serialize {
    fn header(&self) -> Vec<&'static str>;
    fn rows(&self) -> Vec<Vec<String>>;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
                text.push('\n');
                text
            }
            Format::Csv => {
                let mut out = csv_line(self.header());
                out.push('\n');
                for row in self.rows() {
                    out.push_str(&csv_line(row));
                    out.push('\n');
                }
                out
            }
            Format::Md => markdown_table(&self.header(), &self.rows()),
        }
    }
}

pub fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
