//! JSON forms shared by the CLI and the Python bindings.
//!
//! * rational: `"p/q"` or `"p"`
//! * partition: `[3,1]`
//! * series: array of coefficient strings indexed by exponent
//! * Fock element: array of `{"partition": [...], "coeff": "p/q"}` records,
//!   by weight, then reverse-lexicographic partition order

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::fock::FockElement;
use crate::partition::Partition;
use crate::series::TruncatedSeries;

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) if n.is_i64() => Ok(Rational::from(n.as_i64().expect("checked"))),
        other => Err(Error::Parse(format!("expected a rational string, got {other}"))),
    }
}

pub fn partition_to_json(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn partition_from_json(v: &Value) -> Result<Partition> {
    let arr = v.as_array().ok_or_else(|| Error::Parse(format!("expected a partition array, got {v}")))?;
    let parts = arr
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|p| p as usize)
                .ok_or_else(|| Error::Parse(format!("bad part {x}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

/// Accepts `[3,1]`, `3,1` or `3 1`; `[]` is the empty partition.
pub fn parse_partition(s: &str) -> Result<Partition> {
    let trimmed = s.trim();
    if trimmed.starts_with('[') {
        let v: Value = serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
        return partition_from_json(&v);
    }
    let parts = trimmed
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

pub fn series_to_json(s: &TruncatedSeries) -> Value {
    Value::Array(s.coeffs().iter().map(rational_to_json).collect())
}

pub fn series_from_json(v: &Value) -> Result<TruncatedSeries> {
    let arr = v.as_array().ok_or_else(|| Error::Parse(format!("expected a coefficient array, got {v}")))?;
    let coeffs = arr.iter().map(rational_from_json).collect::<Result<Vec<_>>>()?;
    TruncatedSeries::from_coeffs(coeffs)
}

pub fn fock_to_json(e: &FockElement) -> Value {
    Value::Array(
        e.terms()
            .map(|(l, c)| json!({"partition": partition_to_json(l), "coeff": rational_to_json(c)}))
            .collect(),
    )
}

/// Parses a Fock element; the weight bound is the largest weight present
/// unless a larger one is given.
pub fn fock_from_json(v: &Value, weight_bound: Option<usize>) -> Result<FockElement> {
    let arr = v.as_array().ok_or_else(|| Error::Parse(format!("expected an array of terms, got {v}")))?;
    let mut terms = Vec::with_capacity(arr.len());
    for rec in arr {
        let lambda = partition_from_json(
            rec.get("partition").ok_or_else(|| Error::Parse(format!("term without partition: {rec}")))?,
        )?;
        let c = rational_from_json(rec.get("coeff").ok_or_else(|| Error::Parse(format!("term without coeff: {rec}")))?)?;
        terms.push((lambda, c));
    }
    let max = terms.iter().map(|(l, _)| l.weight()).max().unwrap_or(0);
    let bound = match weight_bound {
        Some(b) if b < max => {
            return Err(Error::Precondition(format!("term of weight {max} exceeds bound {b}")));
        }
        Some(b) => b,
        None => max,
    };
    Ok(FockElement::from_terms(bound, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fock_layout() {
        let e = FockElement::from_terms(
            3,
            [
                (Partition::new(vec![2]).unwrap(), "-1/2".parse().unwrap()),
                (Partition::new(vec![1, 1]).unwrap(), "1/2".parse().unwrap()),
            ],
        );
        assert_eq!(
            fock_to_json(&e).to_string(),
            r#"[{"partition":[2],"coeff":"-1/2"},{"partition":[1,1],"coeff":"1/2"}]"#
        );
    }

    #[test]
    fn partition_formats() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(parse_partition("[3,1]").unwrap(), p);
        assert_eq!(parse_partition("3,1").unwrap(), p);
        assert_eq!(parse_partition("[]").unwrap(), Partition::empty());
        assert!(parse_partition("1,3").is_err());
        assert!(parse_partition("a").is_err());
    }

    fn arb_fock() -> impl Strategy<Value = FockElement> {
        prop::collection::vec((prop::collection::vec(1usize..4, 0..4), -9i64..9, 1i64..5), 0..8).prop_map(|ts| {
            FockElement::from_terms(
                12,
                ts.into_iter()
                    .map(|(parts, p, q)| (Partition::from_unsorted(parts), Rational::new(p, q).unwrap())),
            )
        })
    }

    proptest! {
        #[test]
        fn fock_json_roundtrip(e in arb_fock()) {
            let back = fock_from_json(&fock_to_json(&e), Some(12)).unwrap();
            prop_assert_eq!(back, e);
        }

        #[test]
        fn series_json_roundtrip(cs in prop::collection::vec((-20i64..20, 1i64..7), 1..10)) {
            let coeffs: Vec<Rational> = cs.into_iter().map(|(p, q)| Rational::new(p, q).unwrap()).collect();
            let s = TruncatedSeries::from_coeffs(coeffs).unwrap();
            prop_assert_eq!(series_from_json(&series_to_json(&s)).unwrap(), s);
        }
    }
}
