//! Browser bindings for braidlink.
//!
//! Words are realized with a fixed number of samples per letter and the
//! results handed to JavaScript as JSON strings or flat `Float64Array`s.

use braidlink::cli::report::ReportDocument;
use braidlink::{
    hopf, lambda_profile, normalize, parse_artin, parse_loop, realize_artin, realize_loop, total_lk, Pole,
    QuadratureSettings, SphericalBraid,
};
use wasm_bindgen::prelude::*;

fn loop_braid(word: &str, samples: usize) -> Result<SphericalBraid, String> {
    let w = parse_loop(word).map_err(|e| e.to_string())?;
    realize_loop(&w, samples).map_err(|e| e.to_string())
}

pub fn report_json(word: &str, samples: usize) -> Result<String, String> {
    let f = loop_braid(word, samples)?;
    let r = hopf(&f, &QuadratureSettings::default()).map_err(|e| e.to_string())?;
    Ok(ReportDocument::new(&r, 0.0).to_json())
}

/// `[re₀, im₀, re₁, im₁, …]` of the normalized strand-4 curve.
pub fn curve_points(word: &str, samples: usize) -> Result<Vec<f64>, String> {
    let path = normalize(&loop_braid(word, samples)?).map_err(|e| e.to_string())?;
    Ok(path.points().iter().flat_map(|z| [z.re, z.im]).collect())
}

/// `[λ₀, λ₁]` pairs along the curve, closing point included.
pub fn lambda_points(word: &str, samples: usize) -> Result<Vec<f64>, String> {
    let path = normalize(&loop_braid(word, samples)?).map_err(|e| e.to_string())?;
    let l0 = lambda_profile(&path, Pole::Zero, 0.0).map_err(|e| e.to_string())?;
    let l1 = lambda_profile(&path, Pole::One, 0.0).map_err(|e| e.to_string())?;
    Ok(l0.values().iter().zip(l1.values()).flat_map(|(a, b)| [*a, *b]).collect())
}

pub fn artin_json(word: &str, samples: usize) -> Result<String, String> {
    let w = parse_artin(word).map_err(|e| e.to_string())?;
    let f = realize_artin(&w, samples).map_err(|e| e.to_string())?;
    let t = total_lk(&f).map_err(|e| e.to_string())?;
    Ok(serde_json::json!({ "lk": t.lk, "lk_tilde": t.lk_tilde, "brunn": t.is_zero() }).to_string())
}

#[wasm_bindgen]
pub fn invariants(word: &str, samples: usize) -> Result<String, JsValue> {
    report_json(word, samples).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn curve(word: &str, samples: usize) -> Result<Vec<f64>, JsValue> {
    curve_points(word, samples).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn lambda_plane(word: &str, samples: usize) -> Result<Vec<f64>, JsValue> {
    lambda_points(word, samples).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn artin_linking(word: &str, samples: usize) -> Result<String, JsValue> {
    artin_json(word, samples).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn borromean_report() {
        let json = report_json("[x,y]", 64).unwrap();
        assert!(json.contains(r#""hopf":1"#), "{json}");
    }

    #[test]
    fn curve_is_interleaved() {
        let pts = curve_points("x", 32).unwrap();
        assert_eq!(pts.len() % 2, 0);
        assert_eq!(&pts[..2], &[2.0, 0.0]);
    }

    #[test]
    fn lambda_curve_closes_for_brunn_words() {
        let pts = lambda_points("[x,y]", 32).unwrap();
        let n = pts.len();
        assert!((pts[n - 2] - pts[0]).abs() < 1e-12 && (pts[n - 1] - pts[1]).abs() < 1e-12);
    }

    #[test]
    fn errors_are_messages() {
        assert!(report_json("[x,", 32).unwrap_err().contains("offset 3"));
        assert!(artin_json("s1", 32).is_err());
        assert_eq!(artin_json("s2^2", 32).unwrap(), r#"{"brunn":false,"lk":1,"lk_tilde":0}"#);
    }
}
