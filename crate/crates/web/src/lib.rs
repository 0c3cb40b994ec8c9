//! Three operations for the static demo page. Each returns JSON text;
//! the `*_json` functions are the native entry points.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use somos_core::algebra::Rational;
use somos_core::invariants::{build_representation, DegreeComparison, Pattern};
use somos_core::projmap::ProjectivePoint;
use somos_core::somos::{eval_s, SomosRule, SomosSequence, Term};
use wasm_bindgen::prelude::*;

/// Largest index range the page will compute.
pub const MAX_TERMS: i64 = 200;

fn rationals(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',')
        .map(|t| t.trim().parse::<Rational>().map_err(|_| format!("bad number '{}'", t.trim())))
        .collect()
}

pub fn sequence_json(k: usize, init: &str, base: i64, from: i64, to: i64) -> Result<String, String> {
    if to < from || to - from >= MAX_TERMS {
        return Err(format!("range must hold 1..{MAX_TERMS} indices"));
    }
    let rule = SomosRule::new(k).map_err(|e| e.to_string())?;
    let mut seq = SomosSequence::new(rule, base, rationals(init)?).map_err(|e| e.to_string())?;
    let terms: Vec<Value> = (from..=to)
        .map(|n| match seq.term(n) {
            Term::Value(v) => json!({"n": n, "value": v.to_string()}),
            Term::Blocked { pivot } => json!({"n": n, "blocked": pivot}),
        })
        .collect();
    Ok(json!({"k": k, "terms": terms}).to_string())
}

fn image(rep: &somos_core::invariants::Representation, key: &str, p: &ProjectivePoint) -> Value {
    match rep.get(key).map_err(|e| e.to_string()).and_then(|h| h.apply(p, &BTreeMap::new()).map_err(|e| e.to_string())) {
        Ok(q) => json!({"point": q.to_string(), "s": eval_s(q.coords()).to_string()}),
        Err(e) => json!({"error": e}),
    }
}

/// `S` at a point of `P^3`, and where both a0-involutions send it.
pub fn surface_json(point: &str) -> Result<String, String> {
    let coords = rationals(point)?;
    if coords.len() != 4 {
        return Err("need four coordinates".into());
    }
    let p = ProjectivePoint::new(coords).map_err(|e| e.to_string())?;
    let rep = build_representation(4).map_err(|e| e.to_string())?;
    Ok(json!({
        "point": p.to_string(),
        "s": eval_s(p.coords()).to_string(),
        "vieta": image(&rep, "H", &p),
        "printed": image(&rep, "Hp", &p),
    })
    .to_string())
}

pub fn degrees_json(k: usize, pattern: &str, n_max: usize) -> Result<String, String> {
    let pattern: Pattern = pattern.parse()?;
    let rep = build_representation(k).map_err(|e| e.to_string())?;
    let cmp = DegreeComparison::compute(&rep, pattern, n_max).map_err(|e| e.to_string())?;
    serde_json::to_string(&cmp).map_err(|e| e.to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn sequence(k: usize, init: &str, base: i64, from: i64, to: i64) -> Result<String, JsValue> {
    js(sequence_json(k, init, base, from, to))
}

#[wasm_bindgen]
pub fn surface(point: &str) -> Result<String, JsValue> {
    js(surface_json(point))
}

#[wasm_bindgen]
pub fn degrees(k: usize, pattern: &str, n_max: usize) -> Result<String, JsValue> {
    js(degrees_json(k, pattern, n_max))
}
