//! Planar polynomial curves in Bernstein–Bézier form.

use crate::bernstein::BernsteinPoly;
use crate::error::{Error, Result};
use crate::point::Point2;
use crate::scalar::Scalar;

/// Degree-m Bézier curve with a parameter domain [a, b].
///
/// The domain is handled by affine reparametrization: the control points
/// describe the curve over [0, 1], and a parameter t in [a, b] maps to
/// s = (t - a)/(b - a). All quadratic-form assembly therefore works with the
/// [0, 1] coordinate polynomials directly.
#[derive(Debug, Clone, PartialEq)]
pub struct BezierCurve2<T> {
    control_points: Vec<Point2<T>>,
    domain: (T, T),
}

impl<T: Scalar> BezierCurve2<T> {
    pub fn new(control_points: Vec<Point2<T>>, domain: (T, T)) -> Result<Self> {
        if control_points.len() < 2 {
            return Err(Error::InvalidCurve(format!(
                "need at least 2 control points, got {}",
                control_points.len()
            )));
        }
        if control_points.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidCurve("non-finite control point".into()));
        }
        if !domain.0.is_finite() || !domain.1.is_finite() || domain.0 >= domain.1 {
            return Err(Error::InvalidCurve("empty or non-finite domain".into()));
        }
        Ok(Self {
            control_points,
            domain,
        })
    }

    pub fn degree(&self) -> usize {
        self.control_points.len() - 1
    }

    pub fn control_points(&self) -> &[Point2<T>] {
        &self.control_points
    }

    pub fn domain(&self) -> (T, T) {
        self.domain
    }

    fn to_unit(&self, t: T) -> T {
        (t - self.domain.0) / (self.domain.1 - self.domain.0)
    }

    /// Point at domain parameter t, by de Casteljau on the control points.
    pub fn point(&self, t: T) -> Point2<T> {
        let s = self.to_unit(t);
        let u = T::one() - s;
        let mut beta = self.control_points.clone();
        let n = beta.len();
        for j in 1..n {
            for k in 0..n - j {
                beta[k] = beta[k] * u + beta[k + 1] * s;
            }
        }
        beta[0]
    }

    /// Derivative with respect to the domain parameter t.
    pub fn velocity(&self, t: T) -> Point2<T> {
        let s = self.to_unit(t);
        let u = T::one() - s;
        let m = self.degree();
        let mut beta: Vec<Point2<T>> = self
            .control_points
            .windows(2)
            .map(|w| (w[1] - w[0]) * T::of_usize(m))
            .collect();
        let n = beta.len();
        for j in 1..n {
            for k in 0..n - j {
                beta[k] = beta[k] * u + beta[k + 1] * s;
            }
        }
        beta[0] * (self.domain.1 - self.domain.0).recip()
    }

    /// Coordinate polynomials over the unit parameter, as Bernstein
    /// coefficient vectors (the control coordinates themselves).
    pub fn coordinate_polys(&self) -> (BernsteinPoly<T>, BernsteinPoly<T>) {
        let xs = self.control_points.iter().map(|p| p.x).collect();
        let ys = self.control_points.iter().map(|p| p.y).collect();
        (BernsteinPoly::new(xs), BernsteinPoly::new(ys))
    }

    /// Axis-aligned bounding box of the control polygon; contains the curve
    /// by the convex-hull property.
    pub fn control_bbox(&self) -> (Point2<T>, Point2<T>) {
        let mut lo = self.control_points[0];
        let mut hi = self.control_points[0];
        for p in &self.control_points {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        (lo, hi)
    }
}
