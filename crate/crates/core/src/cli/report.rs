//! Report serialization with a fixed field order and 12 significant digits.

use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::invariants::InvariantReport;

/// Rounds to 12 significant digits; the JSON writer then prints the shortest
/// representation of the rounded value.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn sig12<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig12(*x))
}

fn sig12_opt<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&round_sig12(*v)),
        None => s.serialize_none(),
    }
}

fn sig12_pair<S: Serializer>(x: &Option<[f64; 2]>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some([a, b]) => s.serialize_some(&[round_sig12(*a), round_sig12(*b)]),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportDocument {
    pub lk: i64,
    pub lk_tilde: i64,
    pub brunn: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hopf: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "sig12_opt")]
    pub hopf_raw: Option<f64>,
    pub diagnostics: DiagnosticsDocument,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiagnosticsDocument {
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "sig12_opt")]
    pub convergence_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "sig12_opt")]
    pub byparts_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "sig12_pair")]
    pub byparts: Option<[f64; 2]>,
    pub source_samples: usize,
    pub path_samples: usize,
    #[serde(serialize_with = "sig12")]
    pub start_lambda: f64,
}

impl ReportDocument {
    pub fn new(r: &InvariantReport, start_lambda: f64) -> Self {
        ReportDocument {
            lk: r.total.lk,
            lk_tilde: r.total.lk_tilde,
            brunn: r.brunn,
            hopf: r.hopf,
            hopf_raw: r.hopf_raw,
            diagnostics: DiagnosticsDocument {
                convergence_residual: r.diagnostics.convergence_residual,
                byparts_residual: r.diagnostics.byparts_residual,
                byparts: r.diagnostics.byparts.map(|(a, b)| [a, b]),
                source_samples: r.diagnostics.source_samples,
                path_samples: r.diagnostics.path_samples,
                start_lambda,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Diagnostic written to stderr on failure.
#[derive(Debug, Clone, Serialize)]
pub struct ErrorDocument {
    pub error: &'static str,
    pub message: String,
    pub exit_code: i32,
}

impl ErrorDocument {
    pub fn from_error(e: &Error) -> Self {
        let (error, exit_code) = if e.is_convergence() {
            ("convergence", super::EXIT_CONVERGENCE)
        } else {
            ("validation", super::EXIT_VALIDATION)
        };
        ErrorDocument {
            error,
            message: e.to_string(),
            exit_code,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("error serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(round_sig12(1.0000000000000004), 1.0);
        assert_eq!(round_sig12(0.123456789012345), 0.123456789012);
        assert_eq!(round_sig12(-2.5e-17), -2.5e-17);
        assert_eq!(round_sig12(0.0), 0.0);
    }

    #[test]
    fn field_order_is_fixed() {
        let r = InvariantReport {
            total: Default::default(),
            brunn: true,
            hopf_raw: Some(1.0000000000000004),
            hopf: Some(1),
            diagnostics: Default::default(),
        };
        let json = ReportDocument::new(&r, 0.0).to_json();
        assert!(json.starts_with(r#"{"lk":0,"lk_tilde":0,"brunn":true,"hopf":1,"hopf_raw":1.0,"diagnostics":{"#));
    }
}
