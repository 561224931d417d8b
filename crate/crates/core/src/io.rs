//! JSON (de)serialization for everything the CLI reads or writes: matrices,
//! support graphs, polynomials, and check verdicts.
//!
//! Conventions: rationals are canonical `"p/q"` strings (plain `"p"` when the
//! denominator is 1); complex entries are `{"re": "p/q", "im": "p/q"}`;
//! vertex and position data is 1-based in files and 0-based in the API.
//! Writers emit pretty JSON with a trailing newline so files diff cleanly.

use crate::algebra::multi_poly::MultiQPoly;
use crate::algebra::poly::MuPoly;
use crate::algebra::rational::{parse_rational, rational_to_string, GaussianRational, Rational};
use crate::conjectures::{Claim, Status, Verdict, Witness};
use crate::error::{Error, Result};
use crate::matrices::graph::SupportGraph;
use crate::matrices::matrix::SquareMatrix;
use serde_json::{json, Map, Value};
use std::path::Path;

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(rational_to_string(r))
}

/// Accepts an integer literal or a `"p/q"` string.
pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::Parse(format!("non-integer number `{n}`")))?;
            parse_rational(&i.to_string())
        }
        Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("expected rational, got `{other}`"))),
    }
}

pub fn scalar_to_json(v: &GaussianRational) -> Value {
    if v.is_real() {
        rational_to_json(&v.re)
    } else {
        json!({
            "re": rational_to_string(&v.re),
            "im": rational_to_string(&v.im),
        })
    }
}

/// Accepts an integer, a `"p/q"` string, or a `{"re", "im"}` object.
pub fn scalar_from_json(v: &Value) -> Result<GaussianRational> {
    match v {
        Value::Object(map) => {
            let re = map
                .get("re")
                .map(rational_from_json)
                .transpose()?
                .unwrap_or_else(|| Rational::from_integer(0.into()));
            let im = map
                .get("im")
                .map(rational_from_json)
                .transpose()?
                .unwrap_or_else(|| Rational::from_integer(0.into()));
            Ok(GaussianRational::new(re, im))
        }
        other => Ok(GaussianRational::from_rational(rational_from_json(other)?)),
    }
}

pub fn matrix_to_json(a: &SquareMatrix) -> Value {
    let entries: Vec<Value> = (0..a.n())
        .map(|i| Value::Array((0..a.n()).map(|j| scalar_to_json(a.entry(i, j))).collect()))
        .collect();
    json!({ "n": a.n(), "entries": entries })
}

pub fn matrix_from_json(v: &Value) -> Result<SquareMatrix> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("matrix file must be a JSON object".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("matrix object needs an integer `n`".into()))? as usize;
    let rows = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("matrix object needs an `entries` array".into()))?;
    if rows.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} rows, found {}",
            rows.len()
        )));
    }
    let mut a = SquareMatrix::zero(n);
    for (i, row) in rows.iter().enumerate() {
        let cells = row
            .as_array()
            .ok_or_else(|| Error::Parse(format!("row {} is not an array", i + 1)))?;
        if cells.len() != n {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                cells.len()
            )));
        }
        for (j, cell) in cells.iter().enumerate() {
            a.set_entry(i, j, scalar_from_json(cell)?);
        }
    }
    Ok(a)
}

pub fn graph_to_json(g: &SupportGraph) -> Value {
    let edges: Vec<Value> = g
        .edges()
        .map(|(i, j)| json!([i + 1, j + 1]))
        .collect();
    json!({ "n": g.n(), "edges": edges })
}

pub fn graph_from_json(v: &Value) -> Result<SupportGraph> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("graph file must be a JSON object".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("graph object needs an integer `n`".into()))? as usize;
    let raw = obj
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("graph object needs an `edges` array".into()))?;
    let mut edges = Vec::with_capacity(raw.len());
    for e in raw {
        let pair = e
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| Error::Parse(format!("edge `{e}` is not a pair")))?;
        let mut ends = [0usize; 2];
        for (k, v) in pair.iter().enumerate() {
            let one_based = v
                .as_u64()
                .ok_or_else(|| Error::Parse(format!("edge endpoint `{v}` is not an integer")))?;
            if one_based == 0 {
                return Err(Error::Parse("edge endpoints are 1-based".into()));
            }
            ends[k] = (one_based - 1) as usize;
        }
        edges.push((ends[0], ends[1]));
    }
    SupportGraph::new(n, edges)
}

/// Terms sorted by ascending degree; includes a human-readable rendering.
pub fn poly_to_json(p: &MuPoly) -> Value {
    let coeffs: Vec<Value> = p.coeffs().iter().map(scalar_to_json).collect();
    json!({
        "coeffs": coeffs,
        "human": p.to_human("mu"),
    })
}

pub fn poly_from_json(v: &Value) -> Result<MuPoly> {
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("polynomial object needs a `coeffs` array".into()))?;
    let parsed: Result<Vec<GaussianRational>> = coeffs.iter().map(scalar_from_json).collect();
    Ok(MuPoly::from_coeffs(parsed?))
}

/// Terms sorted by the exponent-vector order of the underlying map.
pub fn qdet_to_json(q: &MultiQPoly) -> Value {
    let terms: Vec<Value> = q
        .terms()
        .map(|(exps, coeff)| {
            json!({
                "exponents": exps,
                "coeff": scalar_to_json(coeff),
            })
        })
        .collect();
    json!({
        "num_vars": q.num_vars(),
        "terms": terms,
        "human": q.to_human(),
    })
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Holds => "holds",
        Status::Counterexample => "counterexample",
        Status::Inconclusive => "inconclusive",
    }
}

fn status_from_name(s: &str) -> Result<Status> {
    match s {
        "holds" => Ok(Status::Holds),
        "counterexample" => Ok(Status::Counterexample),
        "inconclusive" => Ok(Status::Inconclusive),
        other => Err(Error::Parse(format!("unknown status `{other}`"))),
    }
}

pub fn witness_to_json(w: &Witness) -> Value {
    let mut map = Map::new();
    map.insert("matrix".into(), matrix_to_json(&w.matrix));
    if let Some(mu) = &w.mu {
        map.insert("mu".into(), rational_to_json(mu));
    }
    if let Some(subset) = &w.subset {
        let one_based: Vec<u64> = subset.iter().map(|&v| v as u64 + 1).collect();
        map.insert("subset".into(), json!(one_based));
    }
    if let Some(split) = w.split {
        map.insert("split".into(), json!(split));
    }
    if let Some((lo, hi)) = &w.points {
        map.insert(
            "points".into(),
            json!([rational_to_string(lo), rational_to_string(hi)]),
        );
    }
    if let Some(lhs) = &w.lhs {
        map.insert("lhs".into(), rational_to_json(lhs));
    }
    if let Some(rhs) = &w.rhs {
        map.insert("rhs".into(), rational_to_json(rhs));
    }
    if !w.detail.is_empty() {
        map.insert("detail".into(), Value::String(w.detail.clone()));
    }
    Value::Object(map)
}

pub fn witness_from_json(v: &Value) -> Result<Witness> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("witness must be a JSON object".into()))?;
    let matrix = matrix_from_json(
        obj.get("matrix")
            .ok_or_else(|| Error::Parse("witness needs a `matrix`".into()))?,
    )?;
    let mu = obj.get("mu").map(rational_from_json).transpose()?;
    let subset = obj
        .get("subset")
        .map(|s| -> Result<Vec<usize>> {
            let arr = s
                .as_array()
                .ok_or_else(|| Error::Parse("subset must be an array".into()))?;
            arr.iter()
                .map(|v| {
                    let one_based = v
                        .as_u64()
                        .filter(|&x| x > 0)
                        .ok_or_else(|| Error::Parse("subset entries are 1-based integers".into()))?;
                    Ok(one_based as usize - 1)
                })
                .collect()
        })
        .transpose()?;
    let split = obj
        .get("split")
        .map(|v| {
            v.as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| Error::Parse("split must be an integer".into()))
        })
        .transpose()?;
    let points = obj
        .get("points")
        .map(|v| -> Result<(Rational, Rational)> {
            let arr = v
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Parse("points must be a pair".into()))?;
            Ok((rational_from_json(&arr[0])?, rational_from_json(&arr[1])?))
        })
        .transpose()?;
    let lhs = obj.get("lhs").map(rational_from_json).transpose()?;
    let rhs = obj.get("rhs").map(rational_from_json).transpose()?;
    let detail = obj
        .get("detail")
        .and_then(Value::as_str)
        .unwrap_or_default()
        .to_string();
    Ok(Witness {
        matrix,
        mu,
        subset,
        split,
        points,
        lhs,
        rhs,
        detail,
    })
}

pub fn verdict_to_json(v: &Verdict) -> Value {
    let mut map = Map::new();
    map.insert("claim".into(), Value::String(v.claim.name().into()));
    map.insert("status".into(), Value::String(status_name(v.status).into()));
    map.insert("trials".into(), json!(v.trials));
    map.insert("seed".into(), json!(v.seed));
    if let Some(w) = &v.witness {
        map.insert("witness".into(), witness_to_json(w));
    }
    Value::Object(map)
}

pub fn verdict_from_json(v: &Value) -> Result<Verdict> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("verdict must be a JSON object".into()))?;
    let claim = Claim::parse(
        obj.get("claim")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("verdict needs a `claim` string".into()))?,
    )?;
    let status = status_from_name(
        obj.get("status")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("verdict needs a `status` string".into()))?,
    )?;
    let trials = obj.get("trials").and_then(Value::as_u64).unwrap_or(0);
    let seed = obj.get("seed").and_then(Value::as_u64).unwrap_or(0);
    let witness = obj.get("witness").map(witness_from_json).transpose()?;
    Ok(Verdict {
        claim,
        status,
        witness,
        trials,
        seed,
    })
}

pub fn read_json_file(path: impl AsRef<Path>) -> Result<Value> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

/// Pretty-printed with a trailing newline.
pub fn write_json_file(path: impl AsRef<Path>, value: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Parse(format!("serialization failed: {e}")))?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

pub fn read_matrix_file(path: impl AsRef<Path>) -> Result<SquareMatrix> {
    matrix_from_json(&read_json_file(path)?)
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<SupportGraph> {
    graph_from_json(&read_json_file(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn matrices_round_trip_including_complex_entries() {
        let mut a = SquareMatrix::from_int_rows(&[&[1, 2], &[3, 4]]).unwrap();
        a.set_entry(0, 1, GaussianRational::from_parts(1, 2, -3, 5));
        let v = matrix_to_json(&a);
        let b = matrix_from_json(&v).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn matrix_parsing_accepts_plain_integers_and_fraction_strings() {
        let v: Value = serde_json::from_str(
            r#"{"n": 2, "entries": [[1, "1/2"], [{"re": "0", "im": "2/3"}, -4]]}"#,
        )
        .unwrap();
        let a = matrix_from_json(&v).unwrap();
        assert_eq!(*a.entry(0, 0), GaussianRational::from_int(1));
        assert_eq!(
            *a.entry(0, 1),
            GaussianRational::from_rational(rat(1, 2))
        );
        assert_eq!(*a.entry(1, 0), GaussianRational::from_parts(0, 1, 2, 3));
        assert_eq!(*a.entry(1, 1), GaussianRational::from_int(-4));
    }

    #[test]
    fn matrix_parsing_rejects_ragged_input() {
        let v: Value = serde_json::from_str(r#"{"n": 2, "entries": [[1, 2], [3]]}"#).unwrap();
        assert!(matches!(matrix_from_json(&v), Err(Error::Parse(_))));
    }

    #[test]
    fn graphs_are_one_based_in_files() {
        let g = SupportGraph::new(3, [(0, 2), (1, 2)]).unwrap();
        let v = graph_to_json(&g);
        assert_eq!(v["edges"], serde_json::json!([[1, 3], [2, 3]]));
        assert_eq!(graph_from_json(&v).unwrap(), g);
        let zero: Value = serde_json::from_str(r#"{"n": 2, "edges": [[0, 1]]}"#).unwrap();
        assert!(graph_from_json(&zero).is_err());
    }

    #[test]
    fn polynomials_round_trip_with_human_rendering() {
        let p = MuPoly::from_int_coeffs(&[4, 6]);
        let v = poly_to_json(&p);
        assert_eq!(v["human"], "4 + 6mu");
        assert_eq!(poly_from_json(&v).unwrap(), p);
    }

    #[test]
    fn file_round_trip_writes_trailing_newline() {
        let dir = std::env::temp_dir().join("muperm-io-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("matrix.json");
        let a = SquareMatrix::from_int_rows(&[&[1, 2], &[3, 4]]).unwrap();
        write_json_file(&path, &matrix_to_json(&a)).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.ends_with('\n'));
        assert_eq!(read_matrix_file(&path).unwrap(), a);
        std::fs::remove_dir_all(&dir).ok();
    }
}
