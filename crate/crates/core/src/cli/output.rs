use std::io::Write;

use serde_json::{json, Value};

use super::RunConfig;

/// One output cell.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Cell {
    Real(f64),
    Count(u64),
}

impl Cell {
    /// 17 significant digits, which round-trips any `f64`. Negative zero
    /// prints as zero.
    fn to_csv(self) -> String {
        match self {
            Cell::Real(x) => format!("{:.16e}", x + 0.0),
            Cell::Count(n) => n.to_string(),
        }
    }

    fn to_json(self) -> Value {
        match self {
            Cell::Real(x) => json!(x + 0.0),
            Cell::Count(n) => json!(n),
        }
    }
}

/// Time series produced by a run, one row per grid point.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<String>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.columns.iter().position(|c| c == name)?;
        Some(
            self.rows
                .iter()
                .map(|r| match r[k] {
                    Cell::Real(x) => x,
                    Cell::Count(n) => n as f64,
                })
                .collect(),
        )
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|c| c.to_csv()).collect();
            writeln!(w, "{}", line.join(","))?;
        }
        Ok(())
    }

    /// `{"config": …, "columns": […], "rows": [[…], …]}`.
    pub fn write_json<W: Write>(&self, config: &RunConfig, mut w: W) -> std::io::Result<()> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(|c| c.to_json()).collect()))
            .collect();
        let doc = json!({
            "config": config,
            "columns": self.columns,
            "rows": rows,
        });
        serde_json::to_writer_pretty(&mut w, &doc)?;
        writeln!(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_uses_seventeen_digits() {
        let mut t = Table::new(vec!["t".into(), "x".into(), "seed".into()]);
        t.push(vec![
            Cell::Real(0.1),
            Cell::Real(-1.0 / 3.0),
            Cell::Count(7),
        ]);
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(
            s,
            "t,x,seed\n1.0000000000000001e-1,-3.3333333333333331e-1,7\n"
        );
        let x: f64 = "-3.3333333333333331e-1".parse().unwrap();
        assert_eq!(x, -1.0 / 3.0);
    }
}
