//! Rendering of computed values: single values, one-index lists and
//! two-index grids in text, CSV rows, or JSON.

use serde_json::{json, Map, Value};

/// Computed values over an index grid, in row-major index order.
pub struct Table {
    pub sequence: String,
    pub names: Vec<&'static str>,
    pub ranged: Vec<bool>,
    pub params: Vec<(String, String)>,
    pub rows: Vec<(Vec<i64>, String)>,
    pub triangular: bool,
}

impl Table {
    pub fn text(&self) -> String {
        let ranged: Vec<usize> = (0..self.names.len()).filter(|&i| self.ranged[i]).collect();
        match ranged.as_slice() {
            [] => format!("{}\n", self.rows[0].1),
            [a, b] => self.grid(*a, *b),
            _ => {
                let mut out = String::new();
                for (ix, v) in &self.rows {
                    let label: Vec<String> = ranged.iter().map(|&i| format!("{}={}", self.names[i], ix[i])).collect();
                    out.push_str(&format!("{}: {v}\n", label.join(" ")));
                }
                out
            }
        }
    }

    fn grid(&self, a: usize, b: usize) -> String {
        let mut row_keys: Vec<i64> = self.rows.iter().map(|(ix, _)| ix[a]).collect();
        let mut col_keys: Vec<i64> = self.rows.iter().map(|(ix, _)| ix[b]).collect();
        row_keys.dedup();
        col_keys.sort_unstable();
        col_keys.dedup();
        let cell = |r: i64, c: i64| -> String {
            if self.triangular && c > r {
                return String::new();
            }
            self.rows.iter().find(|(ix, _)| ix[a] == r && ix[b] == c).map(|(_, v)| v.clone()).unwrap_or_default()
        };
        let corner = format!("{}\\{}", self.names[a], self.names[b]);
        let mut cols: Vec<Vec<String>> = vec![std::iter::once(corner).chain(row_keys.iter().map(|r| r.to_string())).collect()];
        for &c in &col_keys {
            cols.push(std::iter::once(c.to_string()).chain(row_keys.iter().map(|&r| cell(r, c))).collect());
        }
        let widths: Vec<usize> = cols.iter().map(|col| col.iter().map(|s| s.chars().count()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for line in 0..=row_keys.len() {
            let cells: Vec<String> = cols.iter().zip(&widths).map(|(col, &w)| format!("{:<w$}", col[line])).collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    pub fn csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header: Vec<&str> = self.names.iter().copied().chain(std::iter::once("value")).collect();
        w.write_record(&header)?;
        for (ix, v) in &self.rows {
            let rec: Vec<String> = ix.iter().map(i64::to_string).chain(std::iter::once(v.clone())).collect();
            w.write_record(&rec)?;
        }
        Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("utf-8"))
    }

    pub fn json(&self) -> Value {
        let params: Map<String, Value> = self.params.iter().map(|(k, v)| (k.clone(), Value::from(v.as_str()))).collect();
        let values: Vec<Value> = self
            .rows
            .iter()
            .map(|(ix, v)| {
                let mut obj: Map<String, Value> = self.names.iter().zip(ix).map(|(n, i)| (n.to_string(), Value::from(*i))).collect();
                obj.insert("value".into(), Value::from(v.as_str()));
                Value::Object(obj)
            })
            .collect();
        json!({ "sequence": self.sequence, "params": params, "values": values })
    }
}
