//! Browser bindings. Each exported function takes document text (JSON or
//! Zadeh notation) and returns a JSON string for `www/index.js`, or throws
//! the error message.
//!
//! The `*_json` functions do the work and are plain Rust so they can be
//! tested natively.

use fuzzmorph::fixtures::{example_relation, f1};
use fuzzmorph::{
    classify, compress, neighborhood, verify_roundtrip, FuzzyRelation, GradeScale, MappingDocument,
    Mode, NeighborhoodKind, RelationDocument, RoundTrip, UniverseMapping,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

type Outcome = Result<String, String>;

fn relation(text: &str) -> Result<(String, FuzzyRelation), String> {
    let doc = RelationDocument::parse(text).map_err(|e| e.to_string())?;
    doc.to_single(GradeScale::default())
        .map_err(|e| e.to_string())
}

fn mapping(text: &str) -> Result<UniverseMapping, String> {
    let doc = MappingDocument::parse(text).map_err(|e| e.to_string())?;
    doc.to_mapping().map_err(|e| e.to_string())
}

/// Labels plus a grade matrix; `value` drives the heatmap shade.
fn matrix(r: &FuzzyRelation) -> Value {
    let n = r.size();
    let cells: Vec<Vec<Value>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let g = r.get(i, j);
                    json!({ "text": g.to_string(), "value": g.to_f64() })
                })
                .collect()
        })
        .collect();
    json!({ "labels": r.universe().labels(), "cells": cells })
}

/// The demo's starting documents: a 6-element relation and a mapping onto
/// three elements.
pub fn example_json() -> String {
    let relation = RelationDocument::single("R", &example_relation());
    json!({
        "relation": relation.to_zadeh().expect("fixture labels are plain"),
        "mapping": MappingDocument::from_mapping(&f1()).to_json(),
    })
    .to_string()
}

/// Consistency verdicts, the image f(R) and the pull-back f⁻¹(f(R)).
pub fn analyze_json(relation_text: &str, mapping_text: &str) -> Outcome {
    let (_, r) = relation(relation_text)?;
    let f = mapping(mapping_text)?;
    let report = classify(&f, &r).map_err(|e| e.to_string())?;
    let image = f.image_relation(&r).map_err(|e| e.to_string())?;
    let back = f.preimage_relation(&image).map_err(|e| e.to_string())?;
    let changed: Vec<Value> = match verify_roundtrip(&f, &r).map_err(|e| e.to_string())? {
        RoundTrip::Equal => Vec::new(),
        RoundTrip::Differs(diffs) => diffs.iter().map(|d| json!([d.from, d.to])).collect(),
    };
    Ok(json!({
        "pred": report.pred_consistent,
        "succ": report.succ_consistent,
        "blockwise": report.blockwise_consistent,
        "report": report.to_string(),
        "relation": matrix(&r),
        "image": matrix(&image),
        "reconstruction": matrix(&back),
        "changed": changed,
    })
    .to_string())
}

/// Quotient by the coarsest partition for `mode` (pred, succ or both).
pub fn compress_json(relation_text: &str, mode: &str) -> Outcome {
    let (_, r) = relation(relation_text)?;
    let mode: Mode = mode.parse().map_err(|e: fuzzmorph::Error| e.to_string())?;
    let result = compress(&r, mode);
    let blocks: Vec<Value> = (0..result.partition.len())
        .map(|b| json!({ "label": result.partition.canonical_label(b), "members": result.partition.block_labels(b) }))
        .collect();
    Ok(json!({
        "mode": mode.as_str(),
        "blocks": blocks,
        "quotient": matrix(&result.quotient),
        "lossless": result.roundtrip(&r).is_equal(),
    })
    .to_string())
}

/// All four neighborhoods of `element`, each in Zadeh notation.
pub fn neighborhoods_json(relation_text: &str, element: &str) -> Outcome {
    let (_, r) = relation(relation_text)?;
    let mut out = serde_json::Map::new();
    for kind in NeighborhoodKind::ALL {
        let set = neighborhood(&r, element, kind).map_err(|e| e.to_string())?;
        out.insert(kind.as_str().to_string(), Value::String(set.to_string()));
    }
    Ok(Value::Object(out).to_string())
}

#[wasm_bindgen]
pub fn example() -> String {
    example_json()
}

#[wasm_bindgen]
pub fn analyze(relation: &str, mapping: &str) -> Result<String, JsValue> {
    analyze_json(relation, mapping).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = compressRelation)]
pub fn compress_relation(relation: &str, mode: &str) -> Result<String, JsValue> {
    compress_json(relation, mode).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn neighborhoods(relation: &str, element: &str) -> Result<String, JsValue> {
    neighborhoods_json(relation, element).map_err(|e| JsValue::from_str(&e))
}
