//! JSON file format for matrices and vectors.
//!
//! ```text
//! {"field":"Q","entries":[[0,1],[0,"-1/2"]]}
//! {"field":"Fp","p":3,"entries":[[0,1],[0,2]]}
//! {"field":"Q","entries":[1,0,"3/4"]}
//! ```
//!
//! Rational entries are JSON integers or strings `"a"` / `"a/b"`; prime
//! field entries are integers in `[0, p)`. A vector uses a flat `entries`
//! array. [`AnyMatrix::to_json`] writes the canonical form (keys in the
//! order above, no whitespace, integers as numbers when they fit in an
//! `i64`, fractions as reduced `"a/b"` strings), which parses back to the
//! same value and re-serializes to the same bytes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::Value;

use crate::error::{Error, Result};

use super::field::{format_rational, parse_rational, Field, PrimeField, Rationals};
use super::matrix::{Matrix, Vector};

/// A matrix whose field is chosen at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatrix {
    Q(Matrix<Rationals>),
    Fp(Matrix<PrimeField>),
}

/// A vector whose field is chosen at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyVector {
    Q(Vector<Rationals>),
    Fp(PrimeField, Vector<PrimeField>),
}

enum FieldTag {
    Q,
    Fp(PrimeField),
}

fn parse_header(v: &Value) -> Result<(FieldTag, &Vec<Value>)> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("top level must be a JSON object".into()))?;
    let field = obj
        .get("field")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("missing string key \"field\"".into()))?;
    let tag = match field {
        "Q" => FieldTag::Q,
        "Fp" => {
            let p = obj
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse("field Fp requires integer key \"p\"".into()))?;
            FieldTag::Fp(PrimeField::new(p).map_err(|e| Error::Parse(e.to_string()))?)
        }
        other => return Err(Error::Parse(format!("unknown field {other:?}"))),
    };
    let entries = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing array key \"entries\"".into()))?;
    Ok((tag, entries))
}

fn parse_q_entry(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(num) => {
            let text = num.to_string();
            let int = text
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("non-integer number {text}")))?;
            Ok(BigRational::from_integer(int))
        }
        Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("bad rational entry {other}"))),
    }
}

fn parse_fp_entry(field: &PrimeField, v: &Value) -> Result<u64> {
    let x = v
        .as_u64()
        .ok_or_else(|| Error::Parse(format!("bad residue {v}")))?;
    if x >= field.modulus() {
        return Err(Error::Parse(format!(
            "residue {x} not below p = {}",
            field.modulus()
        )));
    }
    Ok(x)
}

fn parse_rows<T>(entries: &[Value], parse: impl Fn(&Value) -> Result<T>) -> Result<Vec<Vec<T>>> {
    entries
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse("matrix entries must be an array of rows".into()))?
                .iter()
                .map(&parse)
                .collect()
        })
        .collect()
}

pub fn parse_matrix_json(text: &str) -> Result<AnyMatrix> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let (tag, entries) = parse_header(&v)?;
    if entries.is_empty() {
        return Err(Error::Parse("matrix has no rows".into()));
    }
    let m = match tag {
        FieldTag::Q => AnyMatrix::Q(
            Matrix::from_rows(&Rationals, parse_rows(entries, parse_q_entry)?)
                .map_err(|e| Error::Parse(e.to_string()))?,
        ),
        FieldTag::Fp(f) => AnyMatrix::Fp(
            Matrix::from_rows(&f, parse_rows(entries, |x| parse_fp_entry(&f, x))?)
                .map_err(|e| Error::Parse(e.to_string()))?,
        ),
    };
    Ok(m)
}

pub fn parse_vector_json(text: &str) -> Result<AnyVector> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let (tag, entries) = parse_header(&v)?;
    Ok(match tag {
        FieldTag::Q => AnyVector::Q(entries.iter().map(parse_q_entry).collect::<Result<_>>()?),
        FieldTag::Fp(f) => AnyVector::Fp(
            f,
            entries
                .iter()
                .map(|x| parse_fp_entry(&f, x))
                .collect::<Result<_>>()?,
        ),
    })
}

fn q_entry_json(x: &BigRational) -> String {
    if x.is_integer() {
        if let Some(i) = x.numer().to_i64() {
            return i.to_string();
        }
    }
    format!("\"{}\"", format_rational(x))
}

fn header(field: &FieldTag) -> String {
    match field {
        FieldTag::Q => "{\"field\":\"Q\",".to_string(),
        FieldTag::Fp(f) => format!("{{\"field\":\"Fp\",\"p\":{},", f.modulus()),
    }
}

fn rows_json<F: Field>(m: &Matrix<F>, entry: impl Fn(&F::Elem) -> String) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|row| format!("[{}]", row.iter().map(&entry).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

impl AnyMatrix {
    pub fn to_json(&self) -> String {
        match self {
            AnyMatrix::Q(m) => format!(
                "{}\"entries\":{}}}",
                header(&FieldTag::Q),
                rows_json(m, q_entry_json)
            ),
            AnyMatrix::Fp(m) => format!(
                "{}\"entries\":{}}}",
                header(&FieldTag::Fp(*m.field())),
                rows_json(m, u64::to_string)
            ),
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            AnyMatrix::Q(m) => m.rows(),
            AnyMatrix::Fp(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            AnyMatrix::Q(m) => m.cols(),
            AnyMatrix::Fp(m) => m.cols(),
        }
    }
}

impl AnyVector {
    pub fn to_json(&self) -> String {
        match self {
            AnyVector::Q(v) => format!(
                "{}\"entries\":[{}]}}",
                header(&FieldTag::Q),
                v.iter().map(q_entry_json).collect::<Vec<_>>().join(",")
            ),
            AnyVector::Fp(f, v) => format!(
                "{}\"entries\":[{}]}}",
                header(&FieldTag::Fp(*f)),
                v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
            ),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnyVector::Q(v) => v.len(),
            AnyVector::Fp(_, v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        let text = r#"{"field":"Q","entries":[[0,1],[0,"-1/2"]]}"#;
        let m = parse_matrix_json(text).unwrap();
        assert_eq!(m.to_json(), text);
        let text = r#"{"field":"Fp","p":3,"entries":[[0,1],[0,2]]}"#;
        assert_eq!(parse_matrix_json(text).unwrap().to_json(), text);
        let text = r#"{"field":"Q","entries":[1,0,"3/4"]}"#;
        assert_eq!(parse_vector_json(text).unwrap().to_json(), text);
        let big = r#"{"field":"Q","entries":[["123456789012345678901234567890"]]}"#;
        assert_eq!(parse_matrix_json(big).unwrap().to_json(), big);
    }

    #[test]
    fn non_canonical_inputs_normalize() {
        let m = parse_matrix_json(r#"{ "entries": [["2/4", "3"]], "field": "Q" }"#).unwrap();
        assert_eq!(m.to_json(), r#"{"field":"Q","entries":[["1/2",3]]}"#);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_matrix_json("[]").is_err());
        assert!(parse_matrix_json(r#"{"field":"R","entries":[[1]]}"#).is_err());
        assert!(parse_matrix_json(r#"{"field":"Fp","entries":[[1]]}"#).is_err());
        assert!(parse_matrix_json(r#"{"field":"Fp","p":4,"entries":[[1]]}"#).is_err());
        assert!(parse_matrix_json(r#"{"field":"Fp","p":2,"entries":[[2]]}"#).is_err());
        assert!(parse_matrix_json(r#"{"field":"Q","entries":[[1,2],[3]]}"#).is_err());
        assert!(parse_matrix_json(r#"{"field":"Q","entries":[[1.5]]}"#).is_err());
        assert!(parse_vector_json(r#"{"field":"Q","entries":["1/0"]}"#).is_err());
    }
}
