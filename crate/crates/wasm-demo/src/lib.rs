//! Browser bindings for three interactive views: coefficient flows on a
//! formal sum, the Δ coefficient profile with its eigenform check, and
//! Dirichlet character value wheels.
//!
//! All functions speak JSON strings so the page needs no generated
//! marshalling beyond the wasm-bindgen glue.  The `*_impl` functions carry
//! the logic and are what the native tests exercise; the exported wrappers
//! only translate errors into thrown strings.

use num_traits::ToPrimitive;
use wasm_bindgen::prelude::*;

use etaconv::characters;
use etaconv::coeff::Domain;
use etaconv::flows::{cauchy_flow, dirichlet_flow};
use etaconv::io;
use etaconv::modular::{delta_expansion, deligne_bound_report, hecke_operator, HeckeVariant};

/// Sweep a flow parameter and report the coefficient trajectory of every
/// term.  `mode` is "cauchy" or "dirichlet"; the input is the element JSON
/// used by the CLI (exact coefficients are promoted to binary64).
///
/// Returns `{"terms": [{"exponent": "...", "path": [[re, im], ...]}, ...]}`
/// with one path point per step, r running linearly from `r_from` to `r_to`.
#[wasm_bindgen]
pub fn flow_trajectory(
    elem_json: &str,
    mode: &str,
    r_from: f64,
    r_to: f64,
    steps: usize,
) -> Result<String, JsValue> {
    flow_trajectory_impl(elem_json, mode, r_from, r_to, steps).map_err(|e| JsValue::from_str(&e))
}

pub fn flow_trajectory_impl(
    elem_json: &str,
    mode: &str,
    r_from: f64,
    r_to: f64,
    steps: usize,
) -> Result<String, String> {
    if steps == 0 || steps > 4096 {
        return Err("steps must lie in 1..=4096".into());
    }
    let value: serde_json::Value = serde_json::from_str(elem_json).map_err(|e| e.to_string())?;
    let elem = io::elem_from_json(&value)
        .and_then(|e| e.promote(Domain::Complex))
        .map_err(|e| e.to_string())?;
    let field = elem.field().clone();
    if field.degree() != 1 {
        return Err("the demo sweeps one-dimensional flow times (K = Q)".into());
    }
    let exponents: Vec<_> = elem.terms().map(|(e, _)| e.clone()).collect();
    let mut paths: Vec<Vec<(f64, f64)>> = vec![Vec::with_capacity(steps); exponents.len()];
    for step in 0..steps {
        let t = step as f64 / (steps.max(2) - 1) as f64;
        let r = [r_from + (r_to - r_from) * t];
        let moved = match mode {
            "cauchy" => cauchy_flow(&field, &r, &elem),
            "dirichlet" => dirichlet_flow(&field, &r, &elem),
            other => return Err(format!("unknown mode {other:?}")),
        }
        .map_err(|e| e.to_string())?;
        for (i, exp) in exponents.iter().enumerate() {
            let z = moved.coefficient(exp).to_complex();
            paths[i].push((z.re, z.im));
        }
    }
    let terms: Vec<serde_json::Value> = exponents
        .iter()
        .zip(&paths)
        .map(|(exp, path)| {
            serde_json::json!({
                "exponent": exp.to_string(),
                "path": path.iter().map(|&(re, im)| vec![re, im]).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(serde_json::json!({ "terms": terms }).to_string())
}

/// First `n` coefficients of Δ with the normalized values and the sharpness
/// of the coefficient bound: rows `[n, a_n, λ_n, |a_n|/(d(n)·n^{11/2})]`.
/// `a_n` is rendered as a string (it outgrows f64 quickly).
#[wasm_bindgen]
pub fn delta_profile(n: usize) -> Result<String, JsValue> {
    delta_profile_impl(n).map_err(|e| JsValue::from_str(&e))
}

pub fn delta_profile_impl(n: usize) -> Result<String, String> {
    if n == 0 || n > 4096 {
        return Err("n must lie in 1..=4096 for the demo".into());
    }
    let delta = delta_expansion(n).map_err(|e| e.to_string())?;
    let report = deligne_bound_report(&delta);
    let rows: Vec<serde_json::Value> = (1..=n)
        .map(|m| {
            let a = delta.coeff(m);
            let lambda = delta.lambda(m).to_f64().unwrap_or(f64::NAN);
            let d = etaconv::series::divisors(m).len() as f64;
            let ratio = (a.unsigned_abs() as f64) / (d * (m as f64).powf(5.5));
            serde_json::json!([m, a.to_string(), lambda, ratio])
        })
        .collect();
    Ok(serde_json::json!({
        "rows": rows,
        "bound_holds": report.all_within_bound,
        "max_ratio": report.max_ratio,
        "max_ratio_at": report.max_ratio_at,
    })
    .to_string())
}

/// Apply the Hecke operator to Δ at a prime in either convention and report
/// whether the image equals τ(p)·Δ on the common truncation.
#[wasm_bindgen]
pub fn hecke_check(p: u64, variant: &str, n: usize) -> Result<String, JsValue> {
    hecke_check_impl(p, variant, n).map_err(|e| JsValue::from_str(&e))
}

pub fn hecke_check_impl(p: u64, variant: &str, n: usize) -> Result<String, String> {
    if n == 0 || n > 4096 {
        return Err("n must lie in 1..=4096 for the demo".into());
    }
    let variant = HeckeVariant::parse(variant).map_err(|e| e.to_string())?;
    let delta = delta_expansion(n).map_err(|e| e.to_string())?;
    let image = hecke_operator(&delta, p, variant).map_err(|e| e.to_string())?;
    let tau_p = delta.coeff(p as usize);
    let mut eigen = true;
    let rows: Vec<serde_json::Value> = (1..=image.truncation())
        .map(|m| {
            let expected = tau_p * delta.coeff(m);
            if image.coeff(m) != expected {
                eigen = false;
            }
            serde_json::json!([m, image.coeff(m).to_string(), expected.to_string()])
        })
        .collect();
    Ok(serde_json::json!({
        "tau_p": tau_p.to_string(),
        "eigenform": eigen,
        "rows": rows,
    })
    .to_string())
}

/// The characters of a modulus: metadata plus the values χ(1..count) as
/// points on the unit circle (zeros for non-units).
#[wasm_bindgen]
pub fn character_wheel(modulus: u64, index: usize, count: usize) -> Result<String, JsValue> {
    character_wheel_impl(modulus, index, count).map_err(|e| JsValue::from_str(&e))
}

pub fn character_wheel_impl(modulus: u64, index: usize, count: usize) -> Result<String, String> {
    if count == 0 || count > 4096 {
        return Err("count must lie in 1..=4096".into());
    }
    let chars = characters::enumerate(modulus).map_err(|e| e.to_string())?;
    let chi = chars
        .get(index)
        .ok_or_else(|| format!("index {index} out of range ({} characters)", chars.len()))?;
    let values: Vec<serde_json::Value> = (1..=count as u64)
        .map(|m| {
            let z = chi.value(m).to_complex();
            serde_json::json!([m, z.re, z.im])
        })
        .collect();
    Ok(serde_json::json!({
        "count": chars.len(),
        "modulus": chi.modulus(),
        "order": chi.order(),
        "conductor": chi.conductor(),
        "primitive": chi.is_primitive(),
        "values": values,
    })
    .to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    const ETA2: &str = r#"{"field": {"min_poly": [0, 1]}, "domain": "rational",
                           "terms": [[["2"], "1", "0"]]}"#;

    #[test]
    fn trajectory_stays_on_unit_circle() {
        let out = flow_trajectory_impl(ETA2, "dirichlet", 0.0, 2.0, 64).unwrap();
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        let path = value["terms"][0]["path"].as_array().unwrap();
        assert_eq!(path.len(), 64);
        for point in path {
            let re = point[0].as_f64().unwrap();
            let im = point[1].as_f64().unwrap();
            assert!((re * re + im * im - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn delta_profile_reports_bound() {
        let out = delta_profile_impl(64).unwrap();
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(value["bound_holds"], true);
        assert_eq!(value["rows"][1][1], "-24");
    }

    #[test]
    fn hecke_check_distinguishes_variants() {
        let classical: serde_json::Value =
            serde_json::from_str(&hecke_check_impl(2, "classical", 64).unwrap()).unwrap();
        assert_eq!(classical["eigenform"], true);
        let other: serde_json::Value =
            serde_json::from_str(&hecke_check_impl(2, "paper", 64).unwrap()).unwrap();
        assert_eq!(other["eigenform"], false);
    }

    #[test]
    fn character_wheel_mod_4() {
        let out = character_wheel_impl(4, 1, 8).unwrap();
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(value["conductor"], 4);
        assert_eq!(value["values"][2][1], -1.0); // χ(3) = −1
        assert_eq!(value["values"][1][1], 0.0); // χ(2) = 0
    }

    #[test]
    fn bad_inputs_surface_as_errors() {
        assert!(flow_trajectory_impl("{}", "cauchy", 0.0, 1.0, 8).is_err());
        assert!(flow_trajectory_impl(ETA2, "sideways", 0.0, 1.0, 8).is_err());
        assert!(character_wheel_impl(4, 9, 8).is_err());
        assert!(delta_profile_impl(0).is_err());
    }
}
