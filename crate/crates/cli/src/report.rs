use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::args::Format;

/// The single output object of every command. Fields that do not apply to a
/// command are `null`; `rows` hold one map per output row keyed by `columns`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub family: Option<String>,
    pub resolved_family: Option<String>,
    pub nilpotent_class: Option<usize>,
    pub rank: Option<usize>,
    pub ranks: Option<Vec<usize>>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub cap: Option<usize>,
    pub coefficients: Option<Vec<String>>,
    pub predicted_onset: Option<usize>,
    pub observed_onset: Option<usize>,
    pub guarantee: Option<String>,
    pub pass: Option<bool>,
    pub columns: Vec<String>,
    pub rows: Vec<BTreeMap<String, String>>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Report {
            command: command.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn push_row(&mut self, values: &[String]) {
        let row = self.columns.iter().cloned().zip(values.iter().cloned()).collect();
        self.rows.push(row);
    }

    fn cells(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|row| {
                self.columns
                    .iter()
                    .map(|c| row.get(c).cloned().unwrap_or_default())
                    .collect()
            })
            .collect()
    }

    pub fn emit(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns)?;
                for row in self.cells() {
                    w.write_record(&row)?;
                }
                w.flush()
            }
            Format::Table => self.emit_table(out),
        }
    }

    fn emit_table(&self, out: &mut impl Write) -> io::Result<()> {
        let opt = |v: Option<usize>| v.map(|x| x.to_string());
        let meta: Vec<(&str, Option<String>)> = vec![
            ("command", Some(self.command.clone())),
            ("family", self.family.clone()),
            ("resolved family", self.resolved_family.clone()),
            ("nilpotent class", opt(self.nilpotent_class)),
            ("rank", opt(self.rank)),
            (
                "ranks",
                self.ranks.as_ref().map(|r| match (r.first(), r.last()) {
                    (Some(a), Some(b)) => format!("{a}..{b}"),
                    _ => "(empty)".to_string(),
                }),
            ),
            ("n", opt(self.n)),
            ("k", opt(self.k)),
            ("cap", opt(self.cap)),
            ("coefficients", self.coefficients.as_ref().map(|c| format!("[{}]", c.join(", ")))),
            ("predicted onset", opt(self.predicted_onset)),
            (
                "observed onset",
                if self.ranks.is_some() && self.predicted_onset.is_some() {
                    Some(opt(self.observed_onset).unwrap_or_else(|| "none".into()))
                } else {
                    None
                },
            ),
            ("guarantee", self.guarantee.clone()),
            ("pass", self.pass.map(|p| p.to_string())),
        ];
        let width = meta.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (key, value) in meta {
            if let Some(v) = value {
                writeln!(out, "{key:<width$}  {v}")?;
            }
        }
        for note in &self.notes {
            writeln!(out, "note: {note}")?;
        }
        let cells = self.cells();
        if self.columns.is_empty() {
            return Ok(());
        }
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| {
                cells
                    .iter()
                    .map(|row| row[i].chars().count())
                    .chain([c.chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        writeln!(out)?;
        let line = |values: &[String]| -> String {
            values
                .iter()
                .zip(&widths)
                .map(|(v, w)| format!("{v:>w$}", w = *w))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        writeln!(out, "{}", line(&self.columns))?;
        writeln!(
            out,
            "{}",
            widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  ")
        )?;
        for row in &cells {
            writeln!(out, "{}", line(row))?;
        }
        Ok(())
    }
}
