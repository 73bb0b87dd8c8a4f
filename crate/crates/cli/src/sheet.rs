//! Row-oriented output rendered as aligned text, JSON or CSV.

use std::io::Write;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Align {
    Left,
    Right,
}

/// A cell's text form (text and CSV) next to its JSON form.
#[derive(Clone, Debug)]
pub struct Cell {
    text: String,
    json: Value,
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Self {
        let s = s.into();
        Cell {
            json: Value::String(s.clone()),
            text: s,
        }
    }

    pub fn with_json(s: impl Into<String>, json: Value) -> Self {
        Cell {
            text: s.into(),
            json,
        }
    }

    /// Exact integers stay strings in JSON.
    pub fn number(n: impl ToString) -> Self {
        Cell::text(n.to_string())
    }

    pub fn int(n: i64) -> Self {
        Cell::with_json(n.to_string(), Value::from(n))
    }

    pub fn missing() -> Self {
        Cell::with_json("?", Value::Null)
    }
}

pub struct Sheet {
    columns: Vec<(String, Align)>,
    rows: Vec<Vec<Cell>>,
}

impl Sheet {
    pub fn new(columns: &[(&str, Align)]) -> Self {
        Sheet {
            columns: columns.iter().map(|(h, a)| (h.to_string(), *a)).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn render<W: Write>(&self, format: Format, out: W) -> std::io::Result<()> {
        match format {
            Format::Text => self.text(out),
            Format::Json => self.json(out),
            Format::Csv => self.csv(out),
        }
    }

    fn text<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        let mut widths: Vec<usize> = self
            .columns
            .iter()
            .map(|(h, _)| h.chars().count())
            .collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.text.chars().count());
            }
        }
        let line = |cells: Vec<&str>| {
            let mut s = String::new();
            for (j, (cell, ((_, align), w))) in cells
                .iter()
                .zip(self.columns.iter().zip(&widths))
                .enumerate()
            {
                if j > 0 {
                    s.push_str("  ");
                }
                let pad = " ".repeat(w - cell.chars().count());
                match align {
                    Align::Left => {
                        s.push_str(cell);
                        s.push_str(&pad);
                    }
                    Align::Right => {
                        s.push_str(&pad);
                        s.push_str(cell);
                    }
                }
            }
            s.trim_end().to_string()
        };
        writeln!(
            out,
            "{}",
            line(self.columns.iter().map(|(h, _)| h.as_str()).collect())
        )?;
        for row in &self.rows {
            writeln!(
                out,
                "{}",
                line(row.iter().map(|c| c.text.as_str()).collect())
            )?;
        }
        Ok(())
    }

    fn json<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for ((h, _), cell) in self.columns.iter().zip(row) {
                    obj.insert(h.clone(), cell.json.clone());
                }
                Value::Object(obj)
            })
            .collect();
        serde_json::to_writer_pretty(&mut out, &rows)?;
        writeln!(out)
    }

    fn csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(self.columns.iter().map(|(h, _)| h.as_str()))?;
        for row in &self.rows {
            w.write_record(row.iter().map(|c| c.text.as_str()))?;
        }
        w.flush()
    }
}
