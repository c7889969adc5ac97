//! JSON model files: exact coordinates, 1-based edges, optional roles.
//!
//! ```json
//! {"dimension": 2, "vertices": [[0, 0], ["1/2", 3]], "edges": [[1, 2]], "roles": {"p": 1}}
//! ```
//!
//! `"edges": "complete"` stands for every pair. Coordinates are integers or
//! strings `"p/q"`; anything with a decimal point or exponent is rejected.

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Map, Value};
use stressforge::scalar::{format_rational, parse_rational};
use stressforge::surgery::SurgerySite;
use stressforge::{Configuration, Error, Framework, Graph, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    pub framework: Framework,
    pub roles: BTreeMap<String, usize>,
}

impl Model {
    pub fn site(&self) -> SurgerySite {
        SurgerySite { roles: self.roles.clone() }
    }
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn coordinate(v: &Value, at: &str) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| match e {
            Error::FloatRejected(_) => Error::FloatRejected(format!("{at}: {s}")),
            other => schema(format!("{at}: {other}")),
        }),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rational::from_integer(i.into())),
            None if n.is_u64() => Ok(Rational::from_integer(n.as_u64().unwrap_or_default().into())),
            None => Err(Error::FloatRejected(format!("{at}: {n}"))),
        },
        _ => Err(schema(format!("{at}: expected an integer or a \"p/q\" string"))),
    }
}

fn label(v: &Value, at: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| schema(format!("{at}: expected a positive integer label")))
}

/// Parses a model document.
pub fn parse_model_str(text: &str) -> Result<Model> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
    let obj = doc.as_object().ok_or_else(|| schema("top level must be an object"))?;
    for key in obj.keys() {
        if !["dimension", "vertices", "edges", "roles"].contains(&key.as_str()) {
            return Err(schema(format!("unknown field {key:?}")));
        }
    }
    let dim = obj.get("dimension").and_then(Value::as_u64).ok_or_else(|| schema("dimension: expected 2 or 3"))? as usize;
    if dim != 2 && dim != 3 {
        return Err(Error::UnsupportedDimension(dim));
    }
    let verts = obj.get("vertices").and_then(Value::as_array).ok_or_else(|| schema("vertices: expected a list"))?;
    let mut points = Vec::with_capacity(verts.len());
    for (i, v) in verts.iter().enumerate() {
        let at = format!("vertices[{i}]");
        let coords = v.as_array().filter(|c| c.len() == dim).ok_or_else(|| schema(format!("{at}: expected {dim} coordinates")))?;
        points.push(coords.iter().enumerate().map(|(k, c)| coordinate(c, &format!("{at}[{k}]"))).collect::<Result<Vec<_>>>()?);
    }
    let n = points.len();
    let graph = match obj.get("edges") {
        Some(Value::String(s)) if s == "complete" => Graph::complete(n),
        Some(Value::Array(es)) => {
            let mut g = Graph::empty(n);
            for (k, e) in es.iter().enumerate() {
                let at = format!("edges[{k}]");
                let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| schema(format!("{at}: expected [i, j]")))?;
                g.add_edge(label(&pair[0], &at)?, label(&pair[1], &at)?).map_err(|e| schema(format!("{at}: {e}")))?;
            }
            g
        }
        Some(_) => return Err(schema("edges: expected a list of pairs or \"complete\"")),
        None => return Err(schema("edges: missing")),
    };
    let mut roles = BTreeMap::new();
    if let Some(r) = obj.get("roles") {
        let r = r.as_object().ok_or_else(|| schema("roles: expected an object"))?;
        for (name, v) in r {
            let l = label(v, &format!("roles.{name}"))?;
            if l == 0 || l > n {
                return Err(schema(format!("roles.{name}: label {l} outside 1..={n}")));
            }
            roles.insert(name.clone(), l);
        }
    }
    let framework = Framework::new(graph, Configuration::new(dim, points)?)?;
    Ok(Model { framework, roles })
}

pub fn parse_model(path: &Path) -> Result<Model> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_model_str(&text)
}

/// Canonical JSON of a model: coordinates as strings, edges in order.
pub fn model_json(f: &Framework, roles: &BTreeMap<String, usize>) -> Value {
    let vertices: Vec<Value> = f.config().points().iter().map(|p| Value::Array(p.iter().map(|c| json!(format_rational(c))).collect())).collect();
    let edges: Vec<Value> = f.graph().edges().map(|e| json!([e.0, e.1])).collect();
    let mut obj = Map::new();
    obj.insert("dimension".into(), json!(f.dim()));
    obj.insert("vertices".into(), Value::Array(vertices));
    obj.insert("edges".into(), Value::Array(edges));
    if !roles.is_empty() {
        obj.insert("roles".into(), json!(roles));
    }
    Value::Object(obj)
}

pub fn write_model(f: &Framework, roles: &BTreeMap<String, usize>) -> String {
    let mut s = serde_json::to_string_pretty(&model_json(f, roles)).expect("model json serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square() {
        let m = parse_model_str(r#"{"dimension": 2, "vertices": [[0,0],[1,0],[1,1],[0,1]], "edges": "complete"}"#).unwrap();
        assert_eq!(m.framework.edge_count(), 6);
    }

    #[test]
    fn floats_are_rejected() {
        let e = parse_model_str(r#"{"dimension": 2, "vertices": [[0.5,0],[1,0]], "edges": [[1,2]]}"#).unwrap_err();
        assert!(matches!(e, Error::FloatRejected(_)));
        let e = parse_model_str(r#"{"dimension": 2, "vertices": [["1e3",0],[1,0]], "edges": [[1,2]]}"#).unwrap_err();
        assert!(matches!(e, Error::FloatRejected(_)));
    }

    #[test]
    fn thirds_are_exact() {
        let m = parse_model_str(r#"{"dimension": 2, "vertices": [["1/3","-2/6"],[1,0]], "edges": [[1,2]]}"#).unwrap();
        assert_eq!(format_rational(&m.framework.config().point(1)[1]), "-1/3");
    }

    #[test]
    fn schema_errors() {
        for bad in [
            r#"[1]"#,
            r#"{"dimension": 4, "vertices": [], "edges": []}"#,
            r#"{"dimension": 2, "vertices": [[0]], "edges": []}"#,
            r#"{"dimension": 2, "vertices": [[0,0],[1,1]], "edges": [[1,3]]}"#,
            r#"{"dimension": 2, "vertices": [[0,0],[1,1]], "edges": [[1,2]], "colour": 1}"#,
            r#"{"dimension": 2, "vertices": [[0,0],[1,1]], "edges": [[1,2]], "roles": {"p": 9}}"#,
        ] {
            assert!(parse_model_str(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn round_trip() {
        let text = r#"{"dimension": 3, "vertices": [["1/2",0,7],[1,"-5/3",2],[0,0,0]], "edges": [[1,2],[2,3]], "roles": {"v2": 3}}"#;
        let m = parse_model_str(text).unwrap();
        let again = parse_model_str(&write_model(&m.framework, &m.roles)).unwrap();
        assert_eq!(again, m);
    }
}
