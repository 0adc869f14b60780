// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Tabular output as CSV (with `#` comment lines) or JSON.

use std::io::{self, Write};

use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Num)
    }
}

impl Cell {
    fn to_json(self) -> Value {
        match self {
            Cell::Int(i) => json!(i),
            Cell::Num(x) => json!(x),
            Cell::Empty => Value::Null,
        }
    }
}

/// A table with leading and trailing metadata.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<(String, String)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub trailer: Vec<(String, String)>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            ..Self::default()
        }
    }

    pub fn meta(&mut self, key: impl Into<String>, value: impl ToString) {
        self.header.push((key.into(), value.to_string()));
    }

    pub fn trailing(&mut self, key: impl Into<String>, value: impl ToString) {
        self.trailer.push((key.into(), value.to_string()));
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// `,`-delimited, `.` decimal, shortest round-trip float formatting
    /// (exponent notation for very large or small magnitudes).
    pub fn write_csv(&self, out: &mut impl Write) -> io::Result<()> {
        for (k, v) in &self.header {
            writeln!(out, "# {k}={v}")?;
        }
        writeln!(out, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let mut first = true;
            for cell in row {
                if !first {
                    out.write_all(b",")?;
                }
                first = false;
                match cell {
                    Cell::Int(i) => write!(out, "{i}")?,
                    Cell::Num(x) => write!(out, "{x:?}")?,
                    Cell::Empty => {}
                }
            }
            out.write_all(b"\n")?;
        }
        for (k, v) in &self.trailer {
            writeln!(out, "# {k}={v}")?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let meta: Map<String, Value> = self
            .header
            .iter()
            .chain(&self.trailer)
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(|c| c.to_json()).collect()))
            .collect();
        json!({
            "metadata": meta,
            "columns": self.columns,
            "rows": rows,
        })
    }
}
