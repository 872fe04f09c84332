//! Fit report (JSON) and coefficient table (CSV) serialization.

use implicitize_core::{FitTrace64, ImplicitCurve64, Termination};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub method: String,
    pub config: ReportConfig,
    pub trace: Vec<TraceEntry>,
    pub chosen_degree: usize,
    pub termination: String,
    pub coeffs: Vec<f64>,
    pub basis_order: Vec<[usize; 2]>,
}

#[derive(Debug, Serialize)]
pub struct ReportConfig {
    pub degree: Option<usize>,
    pub n_max: usize,
    pub lambda: f64,
    pub eps_ad: f64,
    pub eps_wg: f64,
    pub samples: Option<usize>,
    pub normalize_coords: bool,
    pub normalize_tangents: bool,
}

#[derive(Debug, Serialize)]
pub struct TraceEntry {
    pub n: usize,
    pub e1: f64,
    pub e2: f64,
    pub lambda_min: f64,
    pub coeffs: Vec<f64>,
}

pub fn termination_str(t: Termination) -> &'static str {
    match t {
        Termination::ThresholdMet => "threshold_met",
        Termination::ReachedNMax => "reached_n_max",
    }
}

impl Report {
    pub fn from_trace(
        method: &str,
        config: ReportConfig,
        trace: &FitTrace64,
        curve: &ImplicitCurve64,
        termination: &str,
    ) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            method: method.to_string(),
            config,
            trace: trace
                .records
                .iter()
                .map(|r| TraceEntry {
                    n: r.n,
                    e1: r.e1,
                    e2: r.e2,
                    lambda_min: r.lambda_min,
                    coeffs: r.coeffs.clone(),
                })
                .collect(),
            chosen_degree: trace.chosen_degree,
            termination: termination.to_string(),
            coeffs: curve.coeffs().to_vec(),
            basis_order: curve
                .basis()
                .exponents()
                .iter()
                .map(|&(a, b)| [a, b])
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}

/// One row per monomial in basis order, header `a,b,coeff`.
pub fn coefficients_csv(curve: &ImplicitCurve64) -> String {
    let mut out = String::from("a,b,coeff\n");
    for (&(a, b), c) in curve.basis().exponents().iter().zip(curve.coeffs()) {
        out.push_str(&format!("{a},{b},{c:?}\n"));
    }
    out
}
