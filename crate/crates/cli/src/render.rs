//! JSON encodings of results. Rationals are always strings, `"p/q"` or
//! `"p"`, never floats.

use holonomic::arith::{CommPoly, Rational, UnivarPoly};
use holonomic::bfunction::BFunctionResult;
use holonomic::gb::ModulePresentation;
use holonomic::homological::{ExtTable, Integration};
use holonomic::weyl::WeylElement;
use serde_json::{json, Value};

pub fn rational(c: &Rational) -> Value {
    Value::String(c.to_string())
}

pub fn poly(p: &CommPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .rev()
        .map(|(e, c)| json!({ "coefficient": rational(c), "exponents": e }))
        .collect();
    json!({ "text": p.to_string(), "terms": terms })
}

pub fn operator(e: &WeylElement) -> Value {
    let n = e.ring().n();
    let terms: Vec<Value> = e
        .terms()
        .map(|(k, c)| json!({ "coefficient": rational(c), "x": &k[..n], "d": &k[n..2 * n] }))
        .collect();
    json!({ "text": e.to_string(), "terms": terms })
}

pub fn univar(b: &UnivarPoly) -> Value {
    let coeffs: Vec<Value> = b.coeffs().iter().map(rational).collect();
    json!({ "text": b.to_string(), "coefficients_ascending": coeffs })
}

pub fn bfunction(b: &BFunctionResult) -> Value {
    json!({
        "polynomial": univar(&b.b),
        "factored": holonomic::arith::univar::factored_form(&b.b),
        "integer_roots": b.integer_roots,
    })
}

pub fn presentation(m: &ModulePresentation) -> Value {
    let rows: Vec<Value> = m.relations.iter().map(|r| Value::Array(r.iter().map(operator).collect())).collect();
    json!({ "rank": m.rank, "relations": rows })
}

pub fn ext(e: &ExtTable, int: &Integration) -> Value {
    json!({
        "dims": e.dims,
        "display": e.to_string(),
        "euler_characteristic": e.euler_characteristic(),
        "bfunction": bfunction(&int.bfunction),
        "resolution_ranks": int.resolution.ranks(),
        "complex_dims": int.complex.as_ref().map(|c| c.dims.clone()),
    })
}
