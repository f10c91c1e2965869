//! JSON forms of the exact scalars and matrices.
//!
//! `CycNum`: `{"n": N, "coeffs": ["p/q", ...]}` in the power basis.
//! Bivariate polynomials: `{"terms": [{"a": da, "b": db, "c": <CycNum>}]}`
//! with keys named after the indeterminates. Matrices:
//! `{"rows": r, "cols": c, "entries": [...]}` in row-major order.

use serde_json::{json, Map, Value};

use super::cyclotomic::CycNum;
use super::matrix::{Matrix, Scalar};
use super::poly2::{Poly2, Variables};
use super::rational::{format_rational, parse_rational};
use crate::error::{Error, Result};

pub trait JsonScalar: Scalar {
    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self>;
}

fn bad(what: &str) -> Error {
    Error::Parse(format!("malformed {what} JSON"))
}

impl JsonScalar for CycNum {
    fn to_json(&self) -> Value {
        let coeffs: Vec<String> = self.coeffs().iter().map(format_rational).collect();
        json!({ "n": self.order(), "coeffs": coeffs })
    }

    fn from_json(value: &Value) -> Result<Self> {
        let n = value
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("CycNum"))? as u32;
        if n < 1 {
            return Err(bad("CycNum"));
        }
        let coeffs = value
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("CycNum"))?
            .iter()
            .map(|c| {
                c.as_str()
                    .ok_or_else(|| bad("CycNum"))
                    .and_then(parse_rational)
            })
            .collect::<Result<Vec<_>>>()?;
        let z = CycNum::from_coeffs(n, coeffs.clone());
        if coeffs.len() != z.coeffs().len() {
            return Err(Error::Parse(format!(
                "CycNum of order {n} needs {} coefficients",
                z.coeffs().len()
            )));
        }
        Ok(z)
    }
}

impl<V: Variables> JsonScalar for Poly2<V> {
    fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|((da, db), c)| {
                let mut m = Map::new();
                m.insert(V::KEYS[0].into(), json!(da));
                m.insert(V::KEYS[1].into(), json!(db));
                m.insert("c".into(), c.to_json());
                Value::Object(m)
            })
            .collect();
        json!({ "n": self.order(), "terms": terms })
    }

    fn from_json(value: &Value) -> Result<Self> {
        let n = value
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("polynomial"))? as u32;
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("polynomial"))?;
        let mut out = Poly2::zero(n);
        for t in terms {
            let exp = |k: &str| {
                t.get(k)
                    .and_then(Value::as_u64)
                    .map(|e| e as u32)
                    .ok_or_else(|| bad("term"))
            };
            let c = CycNum::from_json(t.get("c").ok_or_else(|| bad("term"))?)?;
            if c.order() != n {
                return Err(Error::OrderMismatch(c.order(), n));
            }
            out.add_assign(&Poly2::monomial(c, exp(V::KEYS[0])?, exp(V::KEYS[1])?));
        }
        Ok(out)
    }
}

pub fn matrix_to_json<S: JsonScalar>(m: &Matrix<S>) -> Value {
    let entries: Vec<Value> = m.entries().iter().map(JsonScalar::to_json).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "n": m.order(), "entries": entries })
}

pub fn matrix_from_json<S: JsonScalar>(value: &Value) -> Result<Matrix<S>> {
    let dim = |k: &str| {
        value
            .get(k)
            .and_then(Value::as_u64)
            .map(|x| x as usize)
            .ok_or_else(|| bad("matrix"))
    };
    let (rows, cols) = (dim("rows")?, dim("cols")?);
    let n = value
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("matrix"))? as u32;
    let entries = value
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("matrix"))?
        .iter()
        .map(S::from_json)
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_entries(n, rows, cols, entries)
}

/// Serializes only the entries where two matrices differ.
pub fn matrix_diff_json<S: JsonScalar>(lhs: &Matrix<S>, rhs: &Matrix<S>) -> Result<(Value, Value)> {
    let pos = lhs.diff_positions(rhs)?;
    let side = |m: &Matrix<S>| {
        Value::Array(
            pos.iter()
                .map(|&(r, c)| json!({ "row": r, "col": c, "value": m.get(r, c).to_json() }))
                .collect(),
        )
    };
    Ok((side(lhs), side(rhs)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::poly2::ParamPoly;
    use crate::exactfield::rational::rat;

    #[test]
    fn cycnum_wire_format() {
        let x = CycNum::from_coeffs(3, vec![rat(1, 2), rat(-3, 1)]);
        let v = x.to_json();
        assert_eq!(v, json!({ "n": 3, "coeffs": ["1/2", "-3/1"] }));
        assert_eq!(CycNum::from_json(&v).unwrap(), x);
    }

    #[test]
    fn param_poly_wire_format() {
        let p = ParamPoly::var_a(2).sub(&ParamPoly::one(2));
        let v = p.to_json();
        assert_eq!(v["terms"][0]["a"], json!(0));
        assert_eq!(v["terms"][1]["a"], json!(1));
        assert_eq!(ParamPoly::from_json(&v).unwrap(), p);
    }

    #[test]
    fn rejects_wrong_coefficient_count() {
        assert!(CycNum::from_json(&json!({ "n": 5, "coeffs": ["1/1"] })).is_err());
    }
}
