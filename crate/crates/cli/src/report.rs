//! JSON reports. Objects serialize with sorted keys, so identical inputs
//! give byte-identical documents.

use serde_json::{json, Value};
use stressforge::census::{CellComplex, K4Class, Lambda5Census, StrataTable};
use stressforge::conditions::{edges_string, ConditionId, ConditionReport, SearchReport};
use stressforge::scalar::format_rational;
use stressforge::signature::FiberSignature;
use stressforge::surgery::SurgeryVerdict;
use stressforge::{Error, ProjectivePoint, StressSpace};

pub fn report(operation: &str, inputs: Value, results: Value, mut provenance: Value) -> Value {
    if let Value::Object(m) = &mut provenance {
        m.insert("tool".into(), json!(concat!("stressforge ", env!("CARGO_PKG_VERSION"))));
        m.insert("arithmetic".into(), json!("exact rational"));
    }
    json!({ "operation": operation, "inputs": inputs, "results": results, "provenance": provenance })
}

fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    let end = dbg.find(|c: char| !c.is_alphanumeric()).unwrap_or(dbg.len());
    dbg[..end].to_string()
}

pub fn error_report(e: &Error) -> Value {
    json!({ "error": { "kind": error_kind(e), "message": e.to_string() } })
}

pub fn stress_json(space: &StressSpace) -> Value {
    let basis: Vec<Value> = space
        .basis
        .iter()
        .map(|w| {
            let edges: Vec<Value> = w
                .edges()
                .iter()
                .enumerate()
                .map(|(k, e)| json!({ "edge": e.to_string(), "weight": format_rational(&w.weights()[k]), "member": w.member(k).to_string() }))
                .collect();
            Value::Array(edges)
        })
        .collect();
    json!({ "dim": space.dim(), "edges": space.edges.iter().map(|e| e.to_string()).collect::<Vec<_>>(), "basis": basis })
}

pub fn signature_json(s: &FiberSignature) -> Value {
    json!({
        "dim": s.dim,
        "edges": s.edges.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        "zero_edges": s.zero_edges.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        "covectors": s.covectors.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

fn keyed<V: Clone + Into<Value>>(m: &std::collections::BTreeMap<usize, V>) -> Value {
    Value::Object(m.iter().map(|(k, v)| (k.to_string(), v.clone().into())).collect())
}

pub fn strata_json(t: &StrataTable) -> Value {
    let by_kind: serde_json::Map<String, Value> = t.by_kind.iter().map(|(d, m)| (d.to_string(), json!(m))).collect();
    json!({
        "n": t.n,
        "counts": keyed(&t.counts),
        "total": t.counts.values().sum::<usize>(),
        "by_kind": by_kind,
        "merges": t.merges,
        "merge_candidates": t.merge_candidates,
        "fibered_rows": keyed(&t.replaced),
    })
}

pub fn complex_json(c: &CellComplex) -> Value {
    let cells: Vec<Value> = c
        .cells
        .iter()
        .map(|x| {
            json!({
                "id": x.id,
                "dim": x.dim,
                "sample": x.sample.to_string(),
                "condition": x.condition,
                "stratum": x.stratum,
                "signature": x.signature.as_ref().map(signature_json),
                "adjacent": x.adjacent.iter().map(|&k| c.cells[k].id.clone()).collect::<Vec<_>>(),
                "members": x.members,
            })
        })
        .collect();
    json!({
        "faces": c.count(2),
        "arcs": c.count(1),
        "vertices": c.count(0),
        "euler_characteristic": c.euler_characteristic(),
        "arc_groups": c.arc_groups(),
        "cells": cells,
    })
}

pub fn lambda5_json(c: &Lambda5Census) -> Value {
    let fibers: serde_json::Map<String, Value> = c.fiber_cells.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    json!({ "top": c.top, "codim1": c.codim1, "product_cells": c.cells, "fiber_cells_per_face": fibers })
}

pub fn k4_json(c: &K4Class) -> Value {
    json!({ "cell": c.cell, "dim": c.dim, "condition": c.condition, "formal": c.formal.to_string(), "signature": signature_json(&c.signature) })
}

fn point_json(p: &ProjectivePoint) -> Value {
    match p.affine() {
        Some(a) => json!({ "affine": [format_rational(&a[0]), format_rational(&a[1])] }),
        None => json!({ "homogeneous": p.coords().iter().map(format_rational).collect::<Vec<_>>() }),
    }
}

pub fn condition_json(id: &ConditionId, r: &ConditionReport) -> Value {
    let constructed: serde_json::Map<String, Value> = r.constructed.iter().map(|(k, p)| (k.clone(), point_json(p))).collect();
    json!({ "condition": id.to_string(), "holds": r.holds, "constructed": constructed })
}

pub fn search_json(r: &SearchReport, minimal: &[stressforge::Graph]) -> Value {
    json!({
        "witnesses": r.witnesses.iter().map(edges_string).collect::<Vec<_>>(),
        "minimal": minimal.iter().map(edges_string).collect::<Vec<_>>(),
        "candidates": r.candidates,
        "exact_checks": r.exact_checks,
    })
}

pub fn verdict_json(v: &SurgeryVerdict) -> Value {
    json!({
        "preconditions_ok": v.preconditions_ok,
        "checks": v.checks.iter().map(|c| json!({ "condition": c.condition, "ok": c.ok })).collect::<Vec<_>>(),
        "dim_before": v.dim_before,
        "dim_after": v.dim_after,
        "dims_equal": v.dims_equal,
    })
}
