//! Text and JSON renderings of exact values. JSON never carries floats:
//! integers that fit in `i64` are numbers, everything else is a string.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use deligne::arith::{BinomialForm, Coeff, Poly, Rat, RatFunc, Series};

pub fn int(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn rat(r: &Rat) -> Value {
    if r.is_integer() {
        int(r.numer())
    } else {
        json!(r.to_string())
    }
}

/// `{"power": [...], "binomial": [...] | null}`.
pub fn poly(p: &Poly) -> Value {
    let binomial = BinomialForm::from_poly(p)
        .ok()
        .map(|b| Value::Array(b.coeffs().iter().map(int).collect()));
    json!({
        "power": p.coeffs().iter().map(rat).collect::<Vec<_>>(),
        "binomial": binomial.unwrap_or(Value::Null),
    })
}

pub fn ratfunc(f: &RatFunc) -> Value {
    json!({ "num": poly(f.num()), "den": poly(f.den()) })
}

pub fn series<C: Coeff>(s: &Series<C>, coeff: impl Fn(&C) -> Value) -> Value {
    json!({ "trunc": s.trunc(), "coeffs": s.coeffs().iter().map(coeff).collect::<Vec<_>>() })
}

/// Inverse of [`poly`] on the power-basis array.
pub fn parse_poly(v: &Value) -> Option<Poly> {
    let coeffs = v.get("power")?.as_array()?;
    coeffs
        .iter()
        .map(|c| match c {
            Value::Number(n) => n.as_i64().map(|i| Rat::from_integer(i.into())),
            Value::String(s) => deligne::arith::parse_rat(s).ok(),
            _ => None,
        })
        .collect::<Option<Vec<_>>>()
        .map(Poly::new)
}
