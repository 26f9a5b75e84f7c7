//! JSON and CSV formats.
//!
//! Algebra files follow `schema/lie_algebra.schema.json`. Structure
//! constants are indexed `structure[k][i][j] = c^k_ij` with
//! `[e_i, e_j] = sum_k c^k_ij e_k`. Entries are JSON numbers or exact
//! rationals written as strings `"p"` or `"p/q"`.

use std::io::Write;
use std::path::Path;

use liemech_core::algebra::{self, LieAlgebra};
use liemech_core::roots::rational::{self, Q};
use liemech_core::roots::RootSystem;
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Number(f64),
    Exact(String),
}

impl Scalar {
    pub fn value(&self) -> CliResult<f64> {
        match self {
            Scalar::Number(x) => Ok(*x),
            Scalar::Exact(s) => parse_rational(s).map(rational::to_f64),
        }
    }

    /// Exact string when `x` is a small rational, else the number.
    pub fn from_f64(x: f64) -> Self {
        match rational::snap(x, 1e-12, 1000) {
            Some(q) => Scalar::Exact(q.to_string()),
            None => Scalar::Number(x),
        }
    }
}

pub fn parse_rational(s: &str) -> CliResult<Q> {
    let t = s.trim();
    let bad = || CliError::Format(format!("not a rational: {s:?}"));
    match t.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Q::new(p, q))
        }
        None => Ok(Q::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub name: String,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub structure: Vec<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<Vec<Vec<Vec<Scalar>>>>,
}

impl AlgebraDoc {
    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let n = g.dim();
        let structure = (0..n)
            .map(|k| {
                (0..n).map(|i| (0..n).map(|j| Scalar::from_f64(g.structure_constant(k, i, j))).collect()).collect()
            })
            .collect();
        let rep = g.representation().map(|mats| {
            mats.iter()
                .map(|m| {
                    (0..m.nrows()).map(|r| (0..m.ncols()).map(|c| Scalar::from_f64(m[(r, c)])).collect()).collect()
                })
                .collect()
        });
        AlgebraDoc { name: g.name().to_string(), dim: n, basis_labels: g.basis_labels().to_vec(), structure, rep }
    }

    pub fn to_algebra(&self) -> CliResult<LieAlgebra> {
        let n = self.dim;
        if self.basis_labels.len() != n {
            return Err(CliError::Format(format!("basis_labels has {} entries, dim is {n}", self.basis_labels.len())));
        }
        if self.structure.len() != n || self.structure.iter().any(|s| s.len() != n || s.iter().any(|r| r.len() != n)) {
            return Err(CliError::Format(format!("structure must be {n} x {n} x {n}")));
        }
        let mut flat = Vec::with_capacity(n * n * n);
        for plane in &self.structure {
            for row in plane {
                for c in row {
                    flat.push(c.value()?);
                }
            }
        }
        let rep = match &self.rep {
            None => None,
            Some(mats) => {
                let mut out = Vec::with_capacity(mats.len());
                for m in mats {
                    let d = m.len();
                    if d == 0 || m.iter().any(|r| r.len() != d) {
                        return Err(CliError::Format("rep matrices must be square".into()));
                    }
                    let mut vals = Vec::with_capacity(d * d);
                    for row in m {
                        for c in row {
                            vals.push(c.value()?);
                        }
                    }
                    out.push(DMatrix::from_row_slice(d, d, &vals));
                }
                Some(out)
            }
        };
        Ok(LieAlgebra::new(self.name.clone(), self.basis_labels.clone(), flat, rep)?)
    }
}

/// A built-in name, or a path to an algebra JSON file.
pub fn load_algebra(name: &str) -> CliResult<LieAlgebra> {
    let path = Path::new(name);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let doc: AlgebraDoc = serde_json::from_str(&text).map_err(|e| CliError::Format(format!("{name}: {e}")))?;
        return doc.to_algebra();
    }
    Ok(algebra::by_name(name)?)
}

/// Inline JSON, or `@path` / an existing file path holding JSON.
pub fn json_arg(flag: &str, s: &str) -> CliResult<Value> {
    let trimmed = s.trim();
    let text = if let Some(p) = trimmed.strip_prefix('@') {
        std::fs::read_to_string(p).map_err(|e| CliError::io(p, e))?
    } else if !trimmed.starts_with(['{', '[', '-', '0', '1', '2', '3', '4', '5', '6', '7', '8', '9'])
        && Path::new(trimmed).is_file()
    {
        std::fs::read_to_string(trimmed).map_err(|e| CliError::io(trimmed, e))?
    } else {
        trimmed.to_string()
    };
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("--{flag}: invalid JSON ({e})")))
}

pub fn as_f64_vec(flag: &str, v: &Value, len: Option<usize>) -> CliResult<Vec<f64>> {
    let bad = || {
        CliError::Input(match len {
            Some(n) => format!("--{flag}: expected an array of {n} numbers"),
            None => format!("--{flag}: expected an array of numbers"),
        })
    };
    let arr = v.as_array().ok_or_else(bad)?;
    let out: Vec<f64> = arr.iter().map(|x| x.as_f64()).collect::<Option<_>>().ok_or_else(bad)?;
    if let Some(n) = len {
        if out.len() != n {
            return Err(bad());
        }
    }
    Ok(out)
}

pub fn as_matrix(flag: &str, v: &Value, rows: usize, cols: usize) -> CliResult<DMatrix<f64>> {
    let bad = || CliError::Input(format!("--{flag}: expected a {rows}x{cols} array of rows"));
    let arr = v.as_array().ok_or_else(bad)?;
    if arr.len() != rows {
        return Err(bad());
    }
    let mut vals = Vec::with_capacity(rows * cols);
    for r in arr {
        vals.extend(as_f64_vec(flag, r, Some(cols)).map_err(|_| bad())?);
    }
    Ok(DMatrix::from_row_slice(rows, cols, &vals))
}

fn q_str(q: &Q) -> String {
    q.to_string()
}

/// JSON mirror of [`RootSystem`]; rationals as strings.
pub fn root_system_json(rs: &RootSystem) -> Value {
    let diagram = rs.dynkin();
    json!({
        "name": rs.name(),
        "family": rs.family.letter().to_string(),
        "rank": rs.rank,
        "roots": rs.roots.iter().zip(&rs.labels).map(|(r, l)| json!({
            "label": l,
            "coords": r.iter().map(q_str).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "positive": rs.positive.iter().map(|&i| rs.labels[i].clone()).collect::<Vec<_>>(),
        "simple": rs.simple.iter().map(|&i| rs.labels[i].clone()).collect::<Vec<_>>(),
        "simple_labels": rs.simple_labels,
        "cartan": rs.cartan_matrix(),
        "gram": rs.gram.iter().map(|r| r.iter().map(q_str).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "killing": rs.killing.iter().map(|r| r.iter().map(q_str).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "dynkin": diagram.edges.iter().map(|e| json!({
            "i": e.i, "j": e.j, "multiplicity": e.multiplicity, "arrow_to": e.arrow_to,
        })).collect::<Vec<_>>(),
    })
}

/// 17 significant digits; parses back to the same bits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// A table of floats with named columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(header: Vec<String>) -> Self {
        Self { header, rows: Vec::new() }
    }

    pub fn write_to(&self, w: impl Write) -> CliResult<()> {
        let mut wr = csv::Writer::from_writer(w);
        let fmt = |e: csv::Error| CliError::Format(e.to_string());
        wr.write_record(&self.header).map_err(fmt)?;
        for row in &self.rows {
            if row.len() != self.header.len() {
                return Err(CliError::Format("row length does not match header".into()));
            }
            wr.write_record(row.iter().map(|x| fmt_f64(*x))).map_err(fmt)?;
        }
        wr.flush().map_err(|e| CliError::Format(e.to_string()))
    }

    pub fn to_string(&self) -> CliResult<String> {
        let mut buf = Vec::new();
        self.write_to(&mut buf)?;
        String::from_utf8(buf).map_err(|e| CliError::Format(e.to_string()))
    }

    pub fn read_from(r: impl std::io::Read) -> CliResult<Self> {
        let mut rd = csv::Reader::from_reader(r);
        let fmt = |e: csv::Error| CliError::Format(e.to_string());
        let header = rd.headers().map_err(fmt)?.iter().map(String::from).collect();
        let mut rows = Vec::new();
        for rec in rd.records() {
            let rec = rec.map_err(fmt)?;
            let row = rec
                .iter()
                .map(|s| s.parse::<f64>().map_err(|e| CliError::Format(format!("{s:?}: {e}"))))
                .collect::<CliResult<Vec<_>>>()?;
            rows.push(row);
        }
        Ok(Self { header, rows })
    }
}

/// Write `table` to `path`.
pub fn emit_csv(table: &Table, path: &Path) -> CliResult<()> {
    let file = std::fs::File::create(path).map_err(|e| CliError::io(path, e))?;
    table.write_to(std::io::BufWriter::new(file))
}

/// Pretty JSON with a trailing newline.
pub fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

pub fn emit_json(v: &Value, path: &Path) -> CliResult<()> {
    std::fs::write(path, json_string(v)).map_err(|e| CliError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3").unwrap(), Q::from_integer(3));
        assert_eq!(parse_rational("-1/2").unwrap(), Q::new(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(Scalar::from_f64(-0.5), Scalar::Exact("-1/2".into()));
        assert_eq!(Scalar::from_f64(std::f64::consts::PI), Scalar::Number(std::f64::consts::PI));
    }

    #[test]
    fn float_format_round_trips() {
        for x in [0.1, -1.0 / 3.0, 1e-300, 6.02214076e23, 0.0, -0.0, f64::MIN_POSITIVE] {
            assert_eq!(fmt_f64(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
    }

    #[test]
    fn empty_table_is_header_only() {
        let t = Table::new(vec!["t".into(), "x".into()]);
        assert_eq!(t.to_string().unwrap(), "t,x\n");
    }

    #[test]
    fn json_arguments() {
        assert_eq!(
            as_f64_vec("mu0", &json_arg("mu0", "[1, 2.5, -3]").unwrap(), Some(3)).unwrap(),
            vec![1.0, 2.5, -3.0]
        );
        assert!(matches!(json_arg("mu0", "[1,"), Err(CliError::Input(_))));
        assert!(as_f64_vec("mu0", &json!([1, 2]), Some(3)).is_err());
        let m = as_matrix("a0", &json!([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), 3, 3).unwrap();
        assert_eq!(m, DMatrix::identity(3, 3));
    }
}
