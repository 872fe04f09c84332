//! Curve specification files: a small JSON format describing either a
//! Bézier control net or a named builtin curve, with its parameter domain.

use implicitize_core::{BezierCurve64, ParametricFn64, Point64};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Parsed and validated curve specification.
#[derive(Debug, Clone, PartialEq)]
pub enum CurveSpec {
    Bezier {
        degree: usize,
        control_points: Vec<[f64; 2]>,
        domain: [f64; 2],
    },
    Named {
        name: NamedCurve,
        domain: [f64; 2],
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedCurve {
    CardioidC3,
    SpiralC4,
    Circle,
}

impl NamedCurve {
    #[allow(dead_code)] // round-trip serialization, exercised in tests
    pub fn as_str(self) -> &'static str {
        match self {
            NamedCurve::CardioidC3 => "cardioid_c3",
            NamedCurve::SpiralC4 => "spiral_c4",
            NamedCurve::Circle => "circle",
        }
    }

    fn from_str(s: &str) -> Option<Self> {
        match s {
            "cardioid_c3" => Some(NamedCurve::CardioidC3),
            "spiral_c4" => Some(NamedCurve::SpiralC4),
            "circle" => Some(NamedCurve::Circle),
            _ => None,
        }
    }
}

/// Raw JSON shape; unknown fields are rejected.
#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    control_points: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    domain: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

pub fn parse_spec(text: &str) -> Result<CurveSpec, CliError> {
    let raw: RawSpec =
        serde_json::from_str(text).map_err(|e| CliError::Spec(format!("malformed spec: {e}")))?;
    let domain = raw
        .domain
        .ok_or_else(|| CliError::Spec("missing field `domain`".into()))?;
    if !domain[0].is_finite() || !domain[1].is_finite() || domain[0] >= domain[1] {
        return Err(CliError::Spec(format!(
            "empty domain [{}, {}]",
            domain[0], domain[1]
        )));
    }
    match raw.kind.as_str() {
        "bezier" => {
            let degree = raw
                .degree
                .ok_or_else(|| CliError::Spec("missing field `degree`".into()))?;
            let control_points = raw
                .control_points
                .ok_or_else(|| CliError::Spec("missing field `control_points`".into()))?;
            if raw.name.is_some() {
                return Err(CliError::Spec("`name` is not valid for kind bezier".into()));
            }
            if degree < 1 {
                return Err(CliError::Spec("degree must be at least 1".into()));
            }
            if control_points.len() != degree + 1 {
                return Err(CliError::Spec(format!(
                    "control-point count mismatch: degree {} needs {} points, got {}",
                    degree,
                    degree + 1,
                    control_points.len()
                )));
            }
            if control_points
                .iter()
                .any(|p| !p[0].is_finite() || !p[1].is_finite())
            {
                return Err(CliError::Spec("non-finite control point".into()));
            }
            Ok(CurveSpec::Bezier {
                degree,
                control_points,
                domain,
            })
        }
        "named" => {
            let name = raw
                .name
                .ok_or_else(|| CliError::Spec("missing field `name`".into()))?;
            if raw.degree.is_some() || raw.control_points.is_some() {
                return Err(CliError::Spec(
                    "`degree`/`control_points` are not valid for kind named".into(),
                ));
            }
            let name = NamedCurve::from_str(&name)
                .ok_or_else(|| CliError::Spec(format!("unknown named curve `{name}`")))?;
            Ok(CurveSpec::Named { name, domain })
        }
        other => Err(CliError::Spec(format!("unknown kind `{other}`"))),
    }
}

impl CurveSpec {
    pub fn domain(&self) -> (f64, f64) {
        match self {
            CurveSpec::Bezier { domain, .. } | CurveSpec::Named { domain, .. } => {
                (domain[0], domain[1])
            }
        }
    }

    #[allow(dead_code)] // round-trip serialization, exercised in tests
    pub fn to_json(&self) -> String {
        let raw = match self {
            CurveSpec::Bezier {
                degree,
                control_points,
                domain,
            } => RawSpec {
                kind: "bezier".into(),
                degree: Some(*degree),
                control_points: Some(control_points.clone()),
                domain: Some(*domain),
                name: None,
            },
            CurveSpec::Named { name, domain } => RawSpec {
                kind: "named".into(),
                degree: None,
                control_points: None,
                domain: Some(*domain),
                name: Some(name.as_str().into()),
            },
        };
        serde_json::to_string(&raw).expect("spec serialization")
    }

    pub fn bezier_curve(&self) -> Result<Option<BezierCurve64>, CliError> {
        match self {
            CurveSpec::Bezier {
                control_points,
                domain,
                ..
            } => {
                let points = control_points
                    .iter()
                    .map(|p| Point64::new(p[0], p[1]))
                    .collect();
                BezierCurve64::new(points, (domain[0], domain[1]))
                    .map(Some)
                    .map_err(|e| CliError::Spec(e.to_string()))
            }
            CurveSpec::Named { .. } => Ok(None),
        }
    }

    pub fn parametric(&self) -> Result<ParametricFn64, CliError> {
        let map_err = |e: implicitize_core::Error| CliError::Spec(e.to_string());
        match self {
            CurveSpec::Named { name, domain } => {
                let d = (domain[0], domain[1]);
                match name {
                    NamedCurve::CardioidC3 => ParametricFn64::cardioid(d).map_err(map_err),
                    NamedCurve::SpiralC4 => ParametricFn64::archimedean_spiral(d).map_err(map_err),
                    NamedCurve::Circle => ParametricFn64::circle(d).map_err(map_err),
                }
            }
            CurveSpec::Bezier { .. } => {
                let curve = self.bezier_curve()?.expect("bezier spec");
                Ok(ParametricFn64::from_bezier(&curve))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_bezier_spec() {
        let text = r#"{"kind":"bezier","degree":3,"control_points":[[0,0],[2,1],[0,2],[1,0]],"domain":[0,1]}"#;
        let spec = parse_spec(text).unwrap();
        match &spec {
            CurveSpec::Bezier {
                degree,
                control_points,
                domain,
            } => {
                assert_eq!(*degree, 3);
                assert_eq!(control_points.len(), 4);
                assert_eq!(*domain, [0.0, 1.0]);
            }
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn parses_named_spec() {
        let spec = parse_spec(r#"{"kind":"named","name":"cardioid_c3","domain":[0,10]}"#).unwrap();
        assert_eq!(
            spec,
            CurveSpec::Named {
                name: NamedCurve::CardioidC3,
                domain: [0.0, 10.0]
            }
        );
    }

    #[test]
    fn rejects_control_point_mismatch() {
        let err =
            parse_spec(r#"{"kind":"bezier","degree":1,"control_points":[[0,0]],"domain":[0,1]}"#)
                .unwrap_err();
        assert!(err.to_string().contains("control-point count mismatch"));
    }

    #[test]
    fn rejects_unknown_kind_field_and_name() {
        assert!(parse_spec(r#"{"kind":"nurbs","domain":[0,1]}"#).is_err());
        assert!(parse_spec(r#"{"kind":"named","name":"helix","domain":[0,1]}"#).is_err());
        assert!(
            parse_spec(r#"{"kind":"named","name":"circle","domain":[0,1],"extra":1}"#).is_err()
        );
    }

    #[test]
    fn rejects_empty_domain_and_malformed_json() {
        assert!(parse_spec(r#"{"kind":"named","name":"circle","domain":[1,1]}"#).is_err());
        assert!(parse_spec("{not json").is_err());
    }

    #[test]
    fn round_trips_through_json() {
        for text in [
            r#"{"kind":"bezier","degree":3,"control_points":[[0,0],[2,1],[0,2],[1,0]],"domain":[0,1]}"#,
            r#"{"kind":"named","name":"spiral_c4","domain":[0,14]}"#,
        ] {
            let spec = parse_spec(text).unwrap();
            let round = parse_spec(&spec.to_json()).unwrap();
            assert_eq!(spec, round);
        }
    }
}
