//! Arrangement text files and assignment JSON.
//!
//! ```text
//! # comment lines start with #
//! dim 3
//! hyperplane 1 -1 0 0 q_{1,2}
//! hyperplane 1 0 -1 0 q_{1,3}
//! ```
//!
//! Each `hyperplane` line holds `dim` normal coefficients, the offset and the
//! weight name; it describes `normal · x = offset`.

use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use serde_json::Value;
use sha2::{Digest, Sha256};
use varchenko_core::exactalg::{parse_rational, Assignment};
use varchenko_core::{Arrangement, Error, Hyperplane, PrimeField, VariableId};

use crate::error::{HarnessError, Result};

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| HarnessError::Io { path: path.to_path_buf(), source })
}

pub fn parse_arrangement_file(text: &str) -> Result<Arrangement> {
    let mut dim: Option<(usize, usize)> = None;
    let mut hyperplanes = Vec::new();
    let mut lines = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(keyword) = tokens.next() else { continue };
        let rest: Vec<&str> = tokens.collect();
        match keyword {
            "dim" => {
                if let Some((_, first)) = dim {
                    return Err(HarnessError::parse(line, format!("dimension already declared on line {first}")));
                }
                let [n] = rest[..] else {
                    return Err(HarnessError::parse(line, "expected `dim <n>`"));
                };
                let n: usize = n.parse().map_err(|_| HarnessError::parse(line, format!("invalid dimension `{n}`")))?;
                if n == 0 {
                    return Err(HarnessError::parse(line, "dimension must be positive"));
                }
                dim = Some((n, line));
            }
            "hyperplane" => {
                let Some((n, _)) = dim else {
                    return Err(HarnessError::parse(line, "hyperplane before `dim`"));
                };
                if rest.len() != n + 2 {
                    return Err(HarnessError::parse(
                        line,
                        format!(
                            "dimension mismatch: expected {n} coefficients, an offset and a weight, found {} fields",
                            rest.len()
                        ),
                    ));
                }
                let nums = rest[..=n]
                    .iter()
                    .map(|t| parse_rational(t).map_err(|e| HarnessError::parse(line, e.to_string())))
                    .collect::<Result<Vec<_>>>()?;
                let weight: VariableId =
                    rest[n + 1].parse().map_err(|e: Error| HarnessError::parse(line, e.to_string()))?;
                let (normal, offset) = nums.split_at(n);
                hyperplanes.push(Hyperplane::new(normal.to_vec(), offset[0].clone(), weight));
                lines.push(line);
            }
            other => return Err(HarnessError::parse(line, format!("unknown directive `{other}`"))),
        }
    }
    let Some((n, _)) = dim else {
        return Err(HarnessError::parse(text.lines().count().max(1), "missing `dim` line"));
    };
    Arrangement::new(n, hyperplanes).map_err(|e| match e {
        Error::ZeroNormal(i) => HarnessError::parse(lines[i], "zero normal vector"),
        Error::DuplicateHyperplane { first, second } => HarnessError::parse(
            lines[second],
            format!("duplicate hyperplane: same affine set as line {}", lines[first]),
        ),
        Error::DuplicateWeight(w) => {
            let line = duplicate_weight_line(text, &w, &lines).unwrap_or(0);
            HarnessError::parse(line, format!("duplicate weight {w}"))
        }
        other => other.into(),
    })
}

fn duplicate_weight_line(text: &str, w: &VariableId, lines: &[usize]) -> Option<usize> {
    let name = w.to_string();
    let all: Vec<&str> = text.lines().collect();
    lines
        .iter()
        .filter(|&&l| all[l - 1].split('#').next().unwrap_or("").split_whitespace().last() == Some(name.as_str()))
        .nth(1)
        .copied()
}

/// Inverse of [`parse_arrangement_file`].
pub fn format_arrangement(arr: &Arrangement) -> String {
    let mut s = format!("dim {}\n", arr.dim());
    for h in arr.hyperplanes() {
        s.push_str("hyperplane");
        for c in &h.normal {
            write!(s, " {c}").unwrap();
        }
        writeln!(s, " {} {}", h.offset, h.weight).unwrap();
    }
    s
}

/// A JSON object from variable names to decimal integers (numbers or
/// strings), reduced into the field. Every weight of `arr` must be present
/// and no other name may appear.
pub fn parse_assignment_json(text: &str, arr: &Arrangement, field: &PrimeField) -> Result<Assignment> {
    let value: Value = serde_json::from_str(text).map_err(|e| HarnessError::Json(e.to_string()))?;
    let Value::Object(map) = value else {
        return Err(HarnessError::Json("assignment must be an object".into()));
    };
    let p = BigInt::from(field.modulus());
    let mut out = Assignment::new();
    for (name, v) in map {
        let var: VariableId = name.parse()?;
        if arr.index_of_weight(&var).is_none() {
            return Err(HarnessError::Usage(format!(
                "assignment names {var}, which is not a weight of the arrangement"
            )));
        }
        let digits = match &v {
            Value::Number(n) => n.to_string(),
            Value::String(s) => s.clone(),
            _ => return Err(HarnessError::Json(format!("value of {name} is not an integer"))),
        };
        let x: BigInt = digits
            .trim()
            .parse()
            .map_err(|_| HarnessError::Json(format!("value of {name} is not a decimal integer: {digits}")))?;
        let r = ((x % &p) + &p) % &p;
        out.insert(var, u64::try_from(r).expect("reduced below a u64 modulus"));
    }
    for w in arr.weights() {
        if !out.contains_key(w) {
            return Err(Error::MissingVariable(w.clone()).into());
        }
    }
    Ok(out)
}

/// First 16 hex digits of SHA-256 over `name=value;` in variable order.
pub fn assignment_digest(a: &Assignment) -> String {
    let mut h = Sha256::new();
    for (k, v) in a {
        h.update(format!("{k}={v};").as_bytes());
    }
    h.finalize()[..8].iter().map(|b| format!("{b:02x}")).collect()
}

pub fn assignment_to_json(a: &Assignment) -> Value {
    Value::Object(a.iter().map(|(k, v)| (k.to_string(), Value::from(*v))).collect())
}
