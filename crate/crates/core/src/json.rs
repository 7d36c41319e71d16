//! JSON encodings shared by the CLI and the engine's external interface.
//! Multipartitions are arrays of arrays; tableaux are shape plus the entry
//! array in box-dominance order; Laurent polynomials are maps from exponent
//! to decimal-string coefficient; matrices are row-major with explicit label
//! arrays.

use crate::laurent::LaurentPoly;
use crate::multipartition::Multipartition;
use crate::params::Params;
use crate::tableau::StandardTableau;
use serde_json::{json, Value};

pub fn multipartition_to_json(mp: &Multipartition) -> Value {
    json!(mp.components)
}

pub fn laurent_to_json(p: &LaurentPoly) -> Value {
    let map: serde_json::Map<String, Value> = p
        .coeffs
        .iter()
        .map(|(e, c)| (e.to_string(), Value::String(c.to_string())))
        .collect();
    Value::Object(map)
}

pub fn tableau_to_json(t: &StandardTableau, p: &Params) -> Value {
    json!({
        "shape": multipartition_to_json(&t.shape()),
        "entries": t.entries_in_dominance_order(p),
        "degree": t.degree(p),
        "residues": t.residue_sequence(p),
    })
}

pub fn matrix_to_json(
    row_labels: Vec<Value>,
    col_labels: Vec<Value>,
    entries: &[Vec<LaurentPoly>],
) -> Value {
    json!({
        "rows": row_labels,
        "cols": col_labels,
        "entries": entries
            .iter()
            .map(|row| row.iter().map(laurent_to_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn params_to_json(p: &Params) -> Value {
    json!({
        "e": p.e.map(|e| Value::from(e)).unwrap_or(Value::String("infinity".into())),
        "ell": p.ell,
        "n": p.n,
        "theta": p.theta_num.iter().map(|&x| format!("{x}/{}", p.ell)).collect::<Vec<_>>(),
        "kappa": p.kappa,
    })
}

/// CSV rendering of a Laurent-matrix (entries printed as polynomials).
pub fn matrix_to_csv(
    row_labels: &[String],
    col_labels: &[String],
    entries: &[Vec<LaurentPoly>],
) -> String {
    let mut out = String::new();
    out.push_str("row");
    for c in col_labels {
        out.push(',');
        out.push_str(&c.replace(',', ";"));
    }
    out.push('\n');
    for (r, row) in entries.iter().enumerate() {
        out.push_str(&row_labels[r].replace(',', ";"));
        for e in row {
            out.push(',');
            out.push_str(&e.to_string().replace(',', ";"));
        }
        out.push('\n');
    }
    out
}
