//! JSON encoding.
//!
//! Rationals are written as integers when integral and as `"p/q"` strings
//! otherwise. Object keys come out sorted.

use serde_json::{json, Map, Value};

use crate::array::{GTPattern, StripConcaveArray};
use crate::boundary::{BoundarySpec, Structural};
use crate::config::ConvexConfig;
use crate::error::{Error, Result};
use crate::feasibility::{Certificate, FeasibilityVerdict};
use crate::flow::{Flow, FlowGraph, GraphShape, PathDecomposition};
use crate::polytope::{FacetInequality, FacetKind};
use crate::rat::{is_integral, parse_rat, Rat};
use crate::tableau::SkewTableau;

pub fn rat_to_json(x: &Rat) -> Value {
    if is_integral(x) {
        if let Some(v) = crate::rat::to_i64(x) {
            return Value::from(v);
        }
    }
    Value::String(x.to_string())
}

pub fn rat_from_json(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(num) => match num.as_i64() {
            Some(i) => Ok(crate::rat::rat(i)),
            None => num
                .as_u64()
                .map(|u| Rat::from_integer(u.into()))
                .ok_or_else(|| Error::Parse(format!("not an exact number: {num}"))),
        },
        Value::String(s) => parse_rat(s),
        other => Err(Error::Parse(format!("expected a rational, got {other}"))),
    }
}

pub fn vec_to_json(xs: &[Rat]) -> Value {
    Value::Array(xs.iter().map(rat_to_json).collect())
}

pub fn rows_to_json(rows: &[Vec<Rat>]) -> Value {
    Value::Array(rows.iter().map(|r| vec_to_json(r)).collect())
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Parse(format!("{what} must be a list")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

pub fn vec_from_json(v: &Value, what: &str) -> Result<Vec<Rat>> {
    as_array(v, what)?.iter().map(rat_from_json).collect()
}

pub fn rows_from_json(v: &Value, what: &str) -> Result<Vec<Vec<Rat>>> {
    as_array(v, what)?.iter().map(|r| vec_from_json(r, what)).collect()
}

fn usize_from_json(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|u| u as usize)
        .ok_or_else(|| Error::Parse(format!("{what} must be a nonnegative integer")))
}

fn usizes_from_json(v: &Value, what: &str) -> Result<Vec<usize>> {
    as_array(v, what)?.iter().map(|x| usize_from_json(x, what)).collect()
}

fn i64s_from_json(v: &Value, what: &str) -> Result<Vec<i64>> {
    as_array(v, what)?
        .iter()
        .map(|x| x.as_i64().ok_or_else(|| Error::Parse(format!("{what} must hold integers"))))
        .collect()
}

pub fn config_to_json(c: &ConvexConfig) -> Value {
    json!({ "n": c.n, "a": c.a, "b": c.b })
}

pub fn config_from_json(v: &Value) -> Result<ConvexConfig> {
    let n = usize_from_json(field(v, "n")?, "n")?;
    let a = usizes_from_json(field(v, "a")?, "a")?;
    let b = usizes_from_json(field(v, "b")?, "b")?;
    ConvexConfig::new(n, a, b)
}

pub fn spec_to_json(s: &BoundarySpec) -> Value {
    json!({
        "lambda": vec_to_json(&s.lambda),
        "lambda_bar": vec_to_json(&s.lambda_bar),
        "mu": vec_to_json(&s.mu),
        "nu": vec_to_json(&s.nu),
    })
}

/// Parses a boundary spec; a missing `mu` means all zeros.
pub fn spec_from_json(v: &Value) -> Result<BoundarySpec> {
    let lambda = vec_from_json(field(v, "lambda")?, "lambda")?;
    let lambda_bar = match v.get("lambda_bar") {
        Some(x) => vec_from_json(x, "lambda_bar")?,
        None => Vec::new(),
    };
    let nu = vec_from_json(field(v, "nu")?, "nu")?;
    let mu = match v.get("mu") {
        Some(x) => vec_from_json(x, "mu")?,
        None => vec![crate::rat::zero(); nu.len()],
    };
    Ok(BoundarySpec { lambda, lambda_bar, mu, nu })
}

pub fn array_to_json(x: &StripConcaveArray) -> Value {
    json!({ "config": config_to_json(&x.config), "rows": rows_to_json(&x.rows) })
}

pub fn pattern_to_json(p: &GTPattern) -> Value {
    json!({ "config": config_to_json(&p.config), "rows": rows_to_json(&p.rows) })
}

/// Guesses a trapezoid or parallelogram from row lengths; `offset` is 1 for
/// arrays and 0 for derivative patterns.
fn infer_config(rows: &[Vec<Rat>], offset: usize) -> Result<ConvexConfig> {
    if rows.len() < 2 || rows[0].len() < offset {
        return Err(Error::Parse("cannot infer a configuration from fewer than two rows".into()));
    }
    let n = rows.len() - 1;
    let m = rows[0].len() - offset;
    let trapezoid = ConvexConfig::trapezoid(n, m);
    if rows.iter().enumerate().all(|(i, r)| r.len() == i + m + offset) {
        return Ok(trapezoid);
    }
    if rows.iter().all(|r| r.len() == m + offset) {
        return Ok(ConvexConfig::parallelogram(n, m));
    }
    Err(Error::Parse("row lengths fit neither a trapezoid nor a parallelogram; give a config".into()))
}

fn rows_and_config(v: &Value, offset: usize) -> Result<(ConvexConfig, Vec<Vec<Rat>>)> {
    if v.is_array() {
        let rows = rows_from_json(v, "rows")?;
        return Ok((infer_config(&rows, offset)?, rows));
    }
    let rows = rows_from_json(field(v, "rows")?, "rows")?;
    let config = match v.get("config") {
        Some(c) => config_from_json(c)?,
        None => infer_config(&rows, offset)?,
    };
    Ok((config, rows))
}

/// Accepts `{"config":…, "rows":…}` or a bare list of rows.
pub fn array_from_json(v: &Value) -> Result<StripConcaveArray> {
    let (config, rows) = rows_and_config(v, 1)?;
    StripConcaveArray::new(config, rows)
}

pub fn pattern_from_json(v: &Value) -> Result<GTPattern> {
    let (config, rows) = rows_and_config(v, 0)?;
    GTPattern::new(config, rows)
}

pub fn flow_to_json(g: &Flow) -> Value {
    let mut obj = Map::new();
    obj.insert("n".into(), g.graph.n.into());
    obj.insert("m".into(), g.graph.m.into());
    if g.graph.shape == GraphShape::Parallelogram {
        obj.insert("shape".into(), "parallelogram".into());
    }
    obj.insert("e0".into(), rows_to_json(&g.e0));
    obj.insert("e1".into(), rows_to_json(&g.e1));
    Value::Object(obj)
}

pub fn flow_from_json(v: &Value) -> Result<Flow> {
    let n = usize_from_json(field(v, "n")?, "n")?;
    let m = usize_from_json(field(v, "m")?, "m")?;
    let graph = match v.get("shape").and_then(Value::as_str) {
        None | Some("trapezoid") => FlowGraph::trapezoid(n, m),
        Some("parallelogram") => FlowGraph::parallelogram(n, m),
        Some(other) => return Err(Error::Parse(format!("unknown graph shape {other:?}"))),
    };
    let e0 = rows_from_json(field(v, "e0")?, "e0")?;
    let e1 = rows_from_json(field(v, "e1")?, "e1")?;
    Flow::new(graph, e0, e1)
}

pub fn decomposition_to_json(d: &PathDecomposition) -> Value {
    Value::Array(
        d.paths
            .iter()
            .map(|(p, w)| json!({ "path": p, "weight": rat_to_json(w) }))
            .collect(),
    )
}

pub fn structural_to_json(s: &Structural) -> Value {
    match s {
        Structural::LambdaNotMonotone { index } => json!({ "kind": "lambda_not_monotone", "index": index }),
        Structural::LambdaBarNotMonotone { index } => {
            json!({ "kind": "lambda_bar_not_monotone", "index": index })
        }
        Structural::Imbalance { value } => json!({ "kind": "imbalance", "value": rat_to_json(value) }),
    }
}

pub fn certificate_to_json(c: &Certificate) -> Value {
    match c {
        Certificate::Structural(s) => structural_to_json(s),
        Certificate::Inequality { family, subset, value, deficit } => json!({
            "kind": "inequality",
            "family": family.name(),
            "subset": subset,
            "value": rat_to_json(value),
            "deficit": rat_to_json(deficit),
        }),
    }
}

pub fn verdict_to_json(v: &FeasibilityVerdict) -> Value {
    let mut obj = Map::new();
    obj.insert("feasible".into(), v.feasible.into());
    if let Some(c) = &v.certificate {
        obj.insert("certificate".into(), certificate_to_json(c));
    }
    Value::Object(obj)
}

pub fn facet_to_json(f: &FacetInequality) -> Value {
    match &f.kind {
        FacetKind::Horn { i, j } => json!({ "kind": "horn", "I": i, "J": j }),
        FacetKind::ChamberLambda(j) => json!({ "kind": "chamber_lambda", "j": j }),
        FacetKind::ChamberLambdaBar(j) => json!({ "kind": "chamber_lambda_bar", "j": j }),
    }
}

pub fn tableau_to_json(t: &SkewTableau) -> Value {
    json!({ "outer": t.outer, "inner": t.inner, "rows": t.rows })
}

pub fn tableau_from_json(v: &Value) -> Result<SkewTableau> {
    let outer = i64s_from_json(field(v, "outer")?, "outer")?;
    let inner = match v.get("inner") {
        Some(x) => i64s_from_json(x, "inner")?,
        None => Vec::new(),
    };
    let rows = as_array(field(v, "rows")?, "rows")?
        .iter()
        .map(|r| usizes_from_json(r, "rows"))
        .collect::<Result<_>>()?;
    Ok(SkewTableau { outer, inner, rows })
}

/// Compact, key-sorted text.
pub fn to_string(v: &Value) -> String {
    serde_json::to_string(v).expect("values built here always serialize")
}
