//! Browser bindings: basis certification, α_l and the coefficient matrix.
//!
//! Each export returns a JSON string; errors come back as a JS string.

use qaffine::basis::{basis_report, delta_matrix, Normalization};
use qaffine::extremal::{alpha_direct, Convention};
use qaffine::repmod::TensorShape;
use qaffine::scalars::{parse_rational, Point};
use wasm_bindgen::prelude::*;

fn norm(name: &str) -> Result<Normalization, String> {
    name.parse().map_err(|e: qaffine::Error| e.to_string())
}

pub fn basis_json(m: usize, n: usize, q: &str, x: &str, y: &str, dual: bool) -> Result<String, String> {
    let r = |s: &str| parse_rational(s.trim()).map_err(|e| e.to_string());
    let point = Point::new(r(q)?, r(x)?, r(y)?).map_err(|e| e.to_string())?;
    let report = basis_report(m, n, Some(&point), dual, Normalization::Unit).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

pub fn alpha_json(m: usize, n: usize, l: usize) -> Result<String, String> {
    let a = alpha_direct(&TensorShape::new(m, n), l, Convention::AsPrinted).map_err(|e| e.to_string())?;
    serde_json::to_string(&a).map_err(|e| e.to_string())
}

pub fn matrix_json(m: usize, n: usize, l: usize, normalization: &str) -> Result<String, String> {
    let mat = delta_matrix(m, n, l, norm(normalization)?).map_err(|e| e.to_string())?;
    serde_json::to_string(&mat).map_err(|e| e.to_string())
}

/// `BasisReport` for `Δ` (or `Λ`) at the rational point `(q, x, y)`.
#[wasm_bindgen]
pub fn basis(m: usize, n: usize, q: &str, x: &str, y: &str, dual: bool) -> Result<String, JsValue> {
    basis_json(m, n, q, x, y, dual).map_err(JsValue::from)
}

/// `α_l` on `V_m(x) ⊗ V_n(y)`.
#[wasm_bindgen]
pub fn alpha(m: usize, n: usize, l: usize) -> Result<String, JsValue> {
    alpha_json(m, n, l).map_err(JsValue::from)
}

/// `(Δ_l)` with `normalization` either `"unit"` or `"paper"`.
#[wasm_bindgen]
pub fn matrix(m: usize, n: usize, l: usize, normalization: &str) -> Result<String, JsValue> {
    matrix_json(m, n, l, normalization).map_err(JsValue::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_at_generic_point() {
        let v: serde_json::Value =
            serde_json::from_str(&basis_json(2, 1, "2", "3", "5", false).unwrap()).unwrap();
        assert_eq!(v["rank"], 6);
        assert_eq!(v["criterion_pass"], true);
    }

    #[test]
    fn basis_rejects_bad_input() {
        assert!(basis_json(1, 1, "1", "3", "5", false).is_err());
        assert!(basis_json(1, 1, "2", "x", "5", false).is_err());
        assert!(basis_json(1, 2, "2", "3", "5", false).is_err());
    }

    #[test]
    fn alpha_value() {
        assert_eq!(alpha_json(1, 1, 0).unwrap(), r#"{"l":0,"value":"q^1 + q^-1"}"#);
    }

    #[test]
    fn matrix_entries() {
        let v: serde_json::Value = serde_json::from_str(&matrix_json(1, 1, 1, "unit").unwrap()).unwrap();
        assert_eq!(v["entries"][1][1], "1");
        assert!(matrix_json(1, 1, 1, "other").is_err());
    }
}
