//! Text dumps of the lower triangle: CSV (row `i` has `i` cells) and
//! JSON `{"n": n, "entries": [[...], ...]}` with polynomial-text cells.

use std::fmt::Display;

use serde_json::{json, Value};

use super::{LowerTri, MatrixError};
use crate::ring::{parse_poly, Ring};
use crate::Matrix;

impl<T: Ring + Display> LowerTri<T> {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Vec<String>> = self.rows().iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
        json!({ "n": self.n(), "entries": entries })
    }
}

impl Matrix {
    /// Reads back the output of [`LowerTri::to_csv`].
    pub fn from_csv(text: &str) -> Result<Self, MatrixError> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split(',').map(parse_poly).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(rows)
    }

    /// Reads back the output of [`LowerTri::to_json`].
    pub fn from_json(value: &Value) -> Result<Self, MatrixError> {
        let bad = |msg: &str| MatrixError::Dump(msg.to_string());
        let n = value.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing \"n\""))? as usize;
        let entries = value.get("entries").and_then(Value::as_array).ok_or_else(|| bad("missing \"entries\""))?;
        let mut rows = Vec::with_capacity(n);
        for row in entries {
            let row = row.as_array().ok_or_else(|| bad("row is not an array"))?;
            let cells = row
                .iter()
                .map(|c| c.as_str().ok_or_else(|| bad("cell is not a string")).and_then(|s| Ok(parse_poly(s)?)))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(cells);
        }
        if rows.len() != n {
            return Err(bad("\"n\" does not match the number of rows"));
        }
        Self::from_rows(rows)
    }
}

#[cfg(test)]
mod tests {
    use crate::matrices::{pascal, t_matrix};
    use crate::{Matrix, Poly, Symbol};

    #[test]
    fn csv_and_json_round_trip() {
        let p = pascal(4, &Poly::symbol(Symbol::Lambda), &Poly::symbol(Symbol::X));
        let csv = p.to_csv();
        assert_eq!(csv.lines().nth(2).unwrap(), "x^2 - x*lambda,2*x,1");
        assert_eq!(Matrix::from_csv(&csv).unwrap(), p);
        let json = p.to_json();
        assert_eq!(json["n"], 4);
        assert_eq!(Matrix::from_json(&json).unwrap(), p);
        let t = t_matrix(3, &Poly::from_int(1), &Poly::from_int(2));
        assert_eq!(t.to_json()["entries"][2][0], "2");
    }

    #[test]
    fn rejects_ragged_input() {
        assert!(Matrix::from_csv("1\n1,2,3\n").is_err());
        assert!(Matrix::from_json(&serde_json::json!({"n": 2, "entries": [["1"]]})).is_err());
    }
}
