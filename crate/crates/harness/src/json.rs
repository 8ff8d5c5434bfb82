//! JSON encodings of factored products and their diffs. Exponents are
//! arbitrary-precision JSON numbers.

use std::str::FromStr;

use num_bigint::BigUint;
use serde_json::{json, Number, Value};
use varchenko_core::{FactoredDiff, FactoredProduct, Monomial, VariableId};

use crate::error::{HarnessError, Result};

fn big(n: &BigUint) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal digits form a JSON number"))
}

fn monomial_to_json(m: &Monomial) -> Value {
    Value::Array(m.iter().map(|(v, e)| json!([v.to_string(), e])).collect())
}

/// `{"factors":[{"monomial":[["q_{1,2}",1]],"exponent":2},…]}` in canonical order.
pub fn factored_to_json(f: &FactoredProduct) -> Value {
    let factors: Vec<Value> = f
        .canonicalize()
        .factors()
        .iter()
        .map(|(m, e)| json!({"monomial": monomial_to_json(m), "exponent": big(e)}))
        .collect();
    json!({ "factors": factors })
}

pub fn factored_from_json(v: &Value) -> Result<FactoredProduct> {
    let bad = |what: &str| HarnessError::Json(format!("factored product: {what}"));
    let factors = v.get("factors").and_then(Value::as_array).ok_or_else(|| bad("missing `factors` array"))?;
    let mut out = FactoredProduct::empty();
    for f in factors {
        let mono = f.get("monomial").and_then(Value::as_array).ok_or_else(|| bad("missing `monomial`"))?;
        let mut exps = Vec::new();
        for pair in mono {
            let (Some(name), Some(e)) = (pair.get(0).and_then(Value::as_str), pair.get(1).and_then(Value::as_u64))
            else {
                return Err(bad("monomial entries are [name, exponent] pairs"));
            };
            let var: VariableId = name.parse()?;
            exps.push((var, u32::try_from(e).map_err(|_| bad("variable exponent too large"))?));
        }
        let e = match f.get("exponent") {
            Some(Value::Number(n)) => {
                BigUint::from_str(&n.to_string()).map_err(|_| bad("exponent is not a natural number"))?
            }
            _ => return Err(bad("missing `exponent`")),
        };
        out.push(Monomial::from_exponents(exps), e);
    }
    Ok(out.canonicalize())
}

pub fn diff_to_json(d: &FactoredDiff) -> Value {
    Value::Array(
        d.entries
            .iter()
            .map(|e| json!({"monomial": monomial_to_json(&e.monomial), "lhs": big(&e.lhs), "rhs": big(&e.rhs)}))
            .collect(),
    )
}
