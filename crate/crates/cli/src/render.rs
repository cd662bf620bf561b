//! JSON shapes shared by the commands. Polynomials are coefficient lists,
//! constant term first, every entry in `[0, p)`.

use constaring::{FpLinearCode, FpPoly, RLinearCode, RPoly, RingElement};
use serde_json::{json, Value};

pub const SCHEMA: &str = "constaring/1";

/// Wraps a command payload with the schema tag and command name.
pub fn tagged(command: &str, payload: Value) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("schema".into(), json!(SCHEMA));
    map.insert("command".into(), json!(command));
    if let Value::Object(fields) = payload {
        map.extend(fields);
    }
    Value::Object(map)
}

pub fn poly(f: &FpPoly) -> Value {
    json!(f.coeffs())
}

pub fn polys<'a>(fs: impl IntoIterator<Item = &'a FpPoly>) -> Value {
    Value::Array(fs.into_iter().map(poly).collect())
}

pub fn element(r: &RingElement) -> Value {
    json!(r.coeffs())
}

/// Basis parts `a + b u + c u^2 + d u^3` of a polynomial over the ring.
pub fn rpoly(f: &RPoly, p: u64) -> Value {
    let [a, b, c, d] = f.basis_parts(p);
    json!({ "a": poly(&a), "b": poly(&b), "c": poly(&c), "d": poly(&d) })
}

pub fn fp_code(c: &FpLinearCode, with_basis: bool) -> Value {
    let mut v = json!({ "n": c.n(), "k": c.dim() });
    if with_basis {
        v["basis"] = json!(c.basis());
    }
    v
}

pub fn r_code(c: &RLinearCode) -> Value {
    json!({
        "n": c.n(),
        "log_p_size": c.log_size(),
        "size": c.size().to_string(),
        "component_dims": c.comps().iter().map(FpLinearCode::dim).collect::<Vec<_>>(),
        "component_bases": c.comps().iter().map(|k| json!(k.basis())).collect::<Vec<_>>(),
    })
}

pub fn rows(rs: &[Vec<RingElement>]) -> Value {
    Value::Array(rs.iter().map(|r| Value::Array(r.iter().map(element).collect())).collect())
}
