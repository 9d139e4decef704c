//! JSON encodings of core values. Rational numbers are written as decimal
//! strings so arbitrarily large coefficients survive the round trip.

use serde_json::{json, Value};
use suq2_core::quantization::MatrixEntry;
use suq2_core::{AlgebraElement, FreeElement, PElement, PMonomial, Scalar, Window};

/// `[{"qexp", "hexp", "num", "den"}, ...]` in canonical term order.
pub fn scalar(s: &Scalar) -> Value {
    Value::Array(
        s.terms()
            .map(|(e, c)| {
                json!({
                    "qexp": e.q,
                    "hexp": e.h,
                    "num": c.numer().to_string(),
                    "den": c.denom().to_string(),
                })
            })
            .collect(),
    )
}

pub fn algebra(f: &AlgebraElement) -> Value {
    Value::Array(
        f.terms()
            .map(|(x, c)| json!({"k": x.k, "l": x.l, "m": x.m, "coeff": scalar(c)}))
            .collect(),
    )
}

pub fn p_element(f: &PElement) -> Value {
    Value::Array(f.terms().map(|(x, c)| json!({"i": x.i, "j": x.j, "coeff": scalar(c)})).collect())
}

pub fn free(f: &FreeElement) -> Value {
    Value::Array(
        f.terms()
            .map(|(w, c)| {
                let word: Vec<String> = w.0.iter().map(|g| g.to_string()).collect();
                json!({"word": word, "coeff": scalar(c)})
            })
            .collect(),
    )
}

pub fn monomial(x: PMonomial) -> Value {
    json!([x.i, x.j])
}

pub fn entry(e: &MatrixEntry) -> Value {
    match e {
        MatrixEntry::Exact(s) => scalar(s),
        MatrixEntry::Numeric(v) => json!(v),
    }
}

/// Sparse matrix over `window`; `basis` is `"unnormalized"` or `"normalized"`.
pub fn matrix(window: Window, basis: &str, entries: &[((PMonomial, PMonomial), MatrixEntry)]) -> Value {
    let entries: Vec<Value> = entries
        .iter()
        .map(|((row, col), e)| json!({"row": monomial(*row), "col": monomial(*col), "value": entry(e)}))
        .collect();
    json!({
        "window": [window.i_max, window.j_max],
        "basis": basis,
        "entries": entries,
    })
}

pub fn columns(nonzero: &[(PMonomial, PElement)]) -> Value {
    Value::Array(
        nonzero
            .iter()
            .map(|(x, image)| json!({"column": monomial(*x), "image": p_element(image)}))
            .collect(),
    )
}
