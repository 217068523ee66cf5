//! Serialization: the JSON schemas and CSV layouts used by the CLI.
//!
//! * number field: `{"min_poly": [c0, c1, ..., 1]}`
//! * field element: `["p/q", ...]` in power-basis order
//! * formal sum:   `{"field": ..., "domain": ..., "terms": [[<elem>, re, im], ...]}`
//!   with terms sorted by exponent order; an optional `"header"` object
//!   (seed, config echo) is written by the CLI and ignored on read
//! * series CSV:   `n,p/q` (rational), `n,re/q,im/q` (gaussian) or
//!   `n,re,im` (binary64); `#`-prefixed lines are comments
//! * character:    `{"modulus": N, "values": [[r, m, k], ...]}`
//! * representation: `{"summands": [<character>, ...]}`

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::algebra::AlgElem;
use crate::characters::{self, DirichletCharacter};
use crate::coeff::{self, Domain};
use crate::error::{Error, Result};
use crate::numfield::{NFElem, NumberField};
use crate::reps::GaloisRep;
use crate::series::ArithSeries;

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn field_to_json(field: &NumberField) -> Value {
    let coeffs: Vec<Value> = field
        .min_poly()
        .iter()
        .map(|c| match c.to_i64() {
            Some(v) => json!(v),
            None => json!(c.to_string()),
        })
        .collect();
    json!({ "min_poly": coeffs })
}

pub fn field_from_json(v: &Value) -> Result<NumberField> {
    let arr = v
        .get("min_poly")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("expected {\"min_poly\": [...]}"))?;
    let coeffs = arr
        .iter()
        .map(|c| match c {
            Value::Number(n) => n
                .as_i64()
                .map(BigInt::from)
                .ok_or_else(|| bad("non-integer coefficient")),
            Value::String(s) => s.parse::<BigInt>().map_err(|_| bad("bad integer string")),
            _ => Err(bad("coefficient must be integer or string")),
        })
        .collect::<Result<Vec<_>>>()?;
    NumberField::from_min_poly(coeffs)
}

pub fn elem_coords_to_json(x: &NFElem) -> Value {
    Value::Array(
        x.coords()
            .iter()
            .map(|c| Value::String(coeff::format_rational(c)))
            .collect(),
    )
}

pub fn elem_coords_from_json(v: &Value, field: &NumberField) -> Result<NFElem> {
    let arr = v.as_array().ok_or_else(|| bad("exponent must be an array of rationals"))?;
    if arr.len() != field.degree() {
        return Err(Error::DimensionMismatch { expected: field.degree(), got: arr.len() });
    }
    let coords = arr
        .iter()
        .map(|c| {
            c.as_str()
                .ok_or_else(|| bad("exponent coordinates are strings"))
                .and_then(coeff::parse_rational)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NFElem::from_coords(coords))
}

fn domain_to_str(d: Domain) -> &'static str {
    match d {
        Domain::Rational => "rational",
        Domain::Gaussian => "gaussian",
        Domain::Complex => "complex64",
    }
}

fn domain_from_str(s: &str) -> Result<Domain> {
    match s {
        "rational" => Ok(Domain::Rational),
        "gaussian" => Ok(Domain::Gaussian),
        "complex64" => Ok(Domain::Complex),
        other => Err(bad(format!("unknown domain {other:?}"))),
    }
}

/// Extra key/value pairs recorded at the top of CLI outputs.
pub type Header = Vec<(String, String)>;

pub fn elem_to_json(elem: &AlgElem, header: Option<&Header>) -> Value {
    let mut obj = Map::new();
    if let Some(h) = header {
        let mut hm = Map::new();
        for (k, v) in h {
            hm.insert(k.clone(), Value::String(v.clone()));
        }
        obj.insert("header".into(), Value::Object(hm));
    }
    obj.insert("field".into(), field_to_json(elem.field()));
    obj.insert("domain".into(), Value::String(domain_to_str(elem.domain()).into()));
    let terms: Vec<Value> = elem
        .terms()
        .map(|(exp, c)| {
            let (re, im) = c.to_parts_strings();
            json!([elem_coords_to_json(exp), re, im])
        })
        .collect();
    obj.insert("terms".into(), Value::Array(terms));
    Value::Object(obj)
}

pub fn elem_from_json(v: &Value) -> Result<AlgElem> {
    let field = field_from_json(v.get("field").ok_or_else(|| bad("missing \"field\""))?)?;
    let terms_json = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"terms\" array"))?;
    let domain = match v.get("domain").and_then(Value::as_str) {
        Some(s) => domain_from_str(s)?,
        None => infer_domain(terms_json),
    };
    let mut terms = Vec::with_capacity(terms_json.len());
    for t in terms_json {
        let triple = t.as_array().filter(|a| a.len() == 3).ok_or_else(|| {
            bad("each term must be [exponent, re, im]")
        })?;
        let exp = elem_coords_from_json(&triple[0], &field)?;
        let re = triple[1]
            .as_str()
            .map(str::to_owned)
            .or_else(|| triple[1].as_f64().map(|x| x.to_string()))
            .ok_or_else(|| bad("coefficient parts are strings"))?;
        let im = triple[2]
            .as_str()
            .map(str::to_owned)
            .or_else(|| triple[2].as_f64().map(|x| x.to_string()))
            .ok_or_else(|| bad("coefficient parts are strings"))?;
        terms.push((exp, coeff::parse_parts(&re, &im, domain)?));
    }
    AlgElem::from_terms(field, domain, terms)
}

fn infer_domain(terms: &[Value]) -> Domain {
    let mut domain = Domain::Rational;
    for t in terms {
        if let Some(triple) = t.as_array() {
            for part in triple.iter().skip(1) {
                match part {
                    Value::String(s) => {
                        if s.contains('.') || s.contains('e') || s.contains('E') {
                            return Domain::Complex;
                        }
                    }
                    Value::Number(_) => return Domain::Complex,
                    _ => {}
                }
            }
            if let Some(Value::String(im)) = triple.get(2) {
                if im != "0" {
                    domain = Domain::Gaussian;
                }
            }
        }
    }
    domain
}

/// Series to CSV lines (no trailing newline); one `n,...` row per index.
pub fn series_to_csv(series: &ArithSeries, header: Option<&Header>) -> String {
    let mut out = String::new();
    if let Some(h) = header {
        out.push('#');
        for (k, v) in h {
            out.push_str(&format!(" {k}={v}"));
        }
        out.push('\n');
    }
    for n in 1..=series.truncation() {
        let c = series.get(n);
        match (series.domain(), c) {
            (Domain::Rational, _) => {
                let (re, _) = c.to_parts_strings();
                out.push_str(&format!("{n},{re}\n"));
            }
            _ => {
                let (re, im) = c.to_parts_strings();
                out.push_str(&format!("{n},{re},{im}\n"));
            }
        }
    }
    out
}

/// Parse series CSV.  Row shapes: `n,p/q` (rational) or `n,re,im`
/// (gaussian when both parts parse as rationals, binary64 otherwise).
pub fn series_from_csv(text: &str) -> Result<ArithSeries> {
    let mut rows: Vec<(usize, String, String)> = Vec::new();
    let mut exact = true;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split(',').map(str::trim).collect();
        if parts.len() != 2 && parts.len() != 3 {
            return Err(bad(format!("bad CSV row: {line:?}")));
        }
        let n: usize = parts[0]
            .parse()
            .map_err(|_| bad(format!("bad index in row: {line:?}")))?;
        if n == 0 {
            return Err(bad("indices start at 1"));
        }
        let re = parts[1].to_string();
        let im = parts.get(2).map(|s| s.to_string()).unwrap_or_else(|| "0".into());
        if coeff::parse_rational(&re).is_err() || coeff::parse_rational(&im).is_err() {
            exact = false;
        }
        rows.push((n, re, im));
    }
    if rows.is_empty() {
        return Err(bad("no data rows"));
    }
    let n_max = rows.iter().map(|r| r.0).max().unwrap();
    let has_imaginary = rows.iter().any(|(_, _, im)| {
        coeff::parse_rational(im).map_or(true, |q| !num_traits::Zero::is_zero(&q))
    });
    let domain = if !exact {
        Domain::Complex
    } else if has_imaginary {
        Domain::Gaussian
    } else {
        Domain::Rational
    };
    let mut series = ArithSeries::zero(n_max, domain);
    for (n, re, im) in rows {
        series.set(n, coeff::parse_parts(&re, &im, domain)?);
    }
    Ok(series)
}

pub fn character_to_json(chi: &DirichletCharacter) -> Value {
    let values: Vec<Value> = chi
        .value_table()
        .into_iter()
        .map(|(r, m, k)| json!([r, m, k]))
        .collect();
    json!({
        "modulus": chi.modulus(),
        "values": values,
        "conductor": chi.conductor(),
        "primitive": chi.is_primitive(),
    })
}

pub fn character_from_json(v: &Value) -> Result<DirichletCharacter> {
    let modulus = v
        .get("modulus")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing \"modulus\""))?;
    let values = v
        .get("values")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"values\""))?;
    let entries = values
        .iter()
        .map(|e| {
            let triple = e.as_array().filter(|a| a.len() == 3).ok_or_else(|| {
                bad("character values are [r, m, k] triples")
            })?;
            let nums = triple
                .iter()
                .map(|x| x.as_u64().ok_or_else(|| bad("character value entries are integers")))
                .collect::<Result<Vec<_>>>()?;
            Ok((nums[0], nums[1], nums[2]))
        })
        .collect::<Result<Vec<_>>>()?;
    characters::from_value_table(modulus, &entries)
}

pub fn rep_to_json(rep: &GaloisRep) -> Value {
    json!({
        "summands": rep.summands().iter().map(character_to_json).collect::<Vec<_>>(),
    })
}

pub fn rep_from_json(v: &Value) -> Result<GaloisRep> {
    let arr = v
        .get("summands")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"summands\""))?;
    let summands = arr
        .iter()
        .map(character_from_json)
        .collect::<Result<Vec<_>>>()?;
    GaloisRep::new(summands)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Coefficient;
    use num_complex::Complex64;

    #[test]
    fn elem_json_round_trip_exact() {
        let k = NumberField::quadratic(2).unwrap();
        let elem = AlgElem::from_terms(
            k.clone(),
            Domain::Rational,
            vec![
                (k.rational(1, 2), Coefficient::from_ratio(-3, 4)),
                (k.gen(), Coefficient::from_i64(5)),
            ],
        )
        .unwrap();
        let v = elem_to_json(&elem, None);
        let back = elem_from_json(&v).unwrap();
        assert_eq!(back, elem);
        // Serialized text is deterministic.
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            serde_json::to_string(&elem_to_json(&elem, None)).unwrap()
        );
    }

    #[test]
    fn elem_json_round_trip_complex() {
        let k = NumberField::rationals();
        let elem = AlgElem::from_terms(
            k.clone(),
            Domain::Complex,
            vec![(k.integer(3), Coefficient::Complex(Complex64::new(0.25, -1.5)))],
        )
        .unwrap();
        let back = elem_from_json(&elem_to_json(&elem, None)).unwrap();
        assert_eq!(back, elem);
    }

    #[test]
    fn header_is_ignored_on_read() {
        let k = NumberField::rationals();
        let elem = AlgElem::from_int_terms(&k, &[(1, 2), (4, -1)]);
        let header = vec![("seed".to_string(), "42".to_string())];
        let v = elem_to_json(&elem, Some(&header));
        assert!(v.get("header").is_some());
        assert_eq!(elem_from_json(&v).unwrap(), elem);
    }

    #[test]
    fn series_csv_round_trips() {
        let s = ArithSeries::from_fn(6, Domain::Rational, |i| {
            Coefficient::from_ratio(i as i64 - 3, 2)
        });
        let text = series_to_csv(&s, None);
        assert_eq!(series_from_csv(&text).unwrap(), s);

        let g = ArithSeries::from_fn(4, Domain::Gaussian, |i| {
            Coefficient::Gaussian(
                num_rational::BigRational::from_integer(i.into()),
                num_rational::BigRational::from_integer(1.into()),
            )
        });
        let text = series_to_csv(&g, None);
        assert_eq!(series_from_csv(&text).unwrap(), g);

        let c = ArithSeries::from_fn(3, Domain::Complex, |i| {
            Coefficient::Complex(Complex64::new(i as f64 * 0.5, -0.25))
        });
        let text = series_to_csv(&c, Some(&vec![("seed".into(), "7".into())]));
        assert!(text.starts_with("# seed=7"));
        let back = series_from_csv(&text).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn character_json_round_trip() {
        for chi in characters::enumerate(8).unwrap() {
            let v = character_to_json(&chi);
            let back = character_from_json(&v).unwrap();
            assert_eq!(back, chi);
        }
    }

    #[test]
    fn rep_json_round_trip() {
        let chars = characters::enumerate(5).unwrap();
        let rep = GaloisRep::new(vec![chars[1].clone(), chars[0].clone()]).unwrap();
        let back = rep_from_json(&rep_to_json(&rep)).unwrap();
        assert_eq!(back, rep);
    }

    #[test]
    fn malformed_inputs_are_parse_errors() {
        assert!(matches!(
            field_from_json(&json!({"min_poly": "x"})),
            Err(Error::Parse(_))
        ));
        assert!(series_from_csv("# only a comment\n").is_err());
        assert!(series_from_csv("0,1\n").is_err());
    }
}
