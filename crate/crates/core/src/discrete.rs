//! Uniform sampling of parametric curves and the discrete quadratic forms:
//! A1 = D1'D1 over the sampled residuals and A2 = D2'D2 over the sampled
//! gradient-tangent inner products.

use crate::bezier::BezierCurve2;
use crate::continuous::QuadraticForms;
use crate::error::{Error, Result};
use crate::implicit::MonomialBasis2;
use crate::matrix::DenseMatrix;
use crate::point::Point2;
use crate::scalar::Scalar;

type CurveFn<T> = Box<dyn Fn(T) -> Point2<T> + Send + Sync>;

/// A general parametric curve given by position and velocity maps on a
/// domain [a, b]. Velocity must be the analytic derivative of position;
/// the tests check this with finite differences for every builtin.
pub struct ParametricFn<T> {
    position: CurveFn<T>,
    velocity: CurveFn<T>,
    domain: (T, T),
}

impl<T: Scalar> ParametricFn<T> {
    pub fn new(
        position: impl Fn(T) -> Point2<T> + Send + Sync + 'static,
        velocity: impl Fn(T) -> Point2<T> + Send + Sync + 'static,
        domain: (T, T),
    ) -> Result<Self> {
        if !domain.0.is_finite() || !domain.1.is_finite() || domain.0 >= domain.1 {
            return Err(Error::InvalidCurve("empty or non-finite domain".into()));
        }
        Ok(Self {
            position: Box::new(position),
            velocity: Box::new(velocity),
            domain,
        })
    }

    pub fn domain(&self) -> (T, T) {
        self.domain
    }

    pub fn position(&self, t: T) -> Point2<T> {
        (self.position)(t)
    }

    pub fn velocity(&self, t: T) -> Point2<T> {
        (self.velocity)(t)
    }

    /// Unit circle (cos t, sin t).
    pub fn circle(domain: (T, T)) -> Result<Self> {
        Self::new(
            |t: T| Point2::new(t.cos(), t.sin()),
            |t: T| Point2::new(-t.sin(), t.cos()),
            domain,
        )
    }

    /// Cardioid (2(1+cos t)cos t, 2(1+cos t)sin t); its image satisfies the
    /// quartic (x^2+y^2-2x)^2 = 4(x^2+y^2).
    pub fn cardioid(domain: (T, T)) -> Result<Self> {
        let two = T::two();
        Self::new(
            move |t: T| {
                let r = two * (T::one() + t.cos());
                Point2::new(r * t.cos(), r * t.sin())
            },
            move |t: T| {
                let (s, c) = (t.sin(), t.cos());
                Point2::new(
                    -two * s - two * two * c * s,
                    two * c + two * (c * c - s * s),
                )
            },
            domain,
        )
    }

    /// Archimedean spiral (t cos t, t sin t); not algebraic.
    pub fn archimedean_spiral(domain: (T, T)) -> Result<Self> {
        Self::new(
            |t: T| Point2::new(t * t.cos(), t * t.sin()),
            |t: T| Point2::new(t.cos() - t * t.sin(), t.sin() + t * t.cos()),
            domain,
        )
    }

    /// Wrap a polynomial curve so it can be sampled like any other.
    pub fn from_bezier(curve: &BezierCurve2<T>) -> Self {
        let pos = curve.clone();
        let vel = curve.clone();
        Self {
            position: Box::new(move |t| pos.point(t)),
            velocity: Box::new(move |t| vel.velocity(t)),
            domain: curve.domain(),
        }
    }
}

/// Point/tangent pairs drawn from a parametric curve at the recorded
/// parameter values. Tangents are raw velocities unless explicitly
/// unit-normalized.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve<T> {
    points: Vec<Point2<T>>,
    tangents: Vec<Point2<T>>,
    params: Vec<T>,
}

impl<T: Scalar> SampledCurve<T> {
    pub fn new(points: Vec<Point2<T>>, tangents: Vec<Point2<T>>, params: Vec<T>) -> Result<Self> {
        if points.len() != tangents.len() || points.len() != params.len() {
            return Err(Error::InvalidCurve(
                "points, tangents and params must have equal length".into(),
            ));
        }
        if points.len() < 2 {
            return Err(Error::TooFewSamples(points.len()));
        }
        Ok(Self {
            points,
            tangents,
            params,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point2<T>] {
        &self.points
    }

    pub fn tangents(&self) -> &[Point2<T>] {
        &self.tangents
    }

    pub fn params(&self) -> &[T] {
        &self.params
    }

    /// Copy with tangents rescaled to unit length (zero tangents kept as-is).
    pub fn with_unit_tangents(&self) -> Self {
        let tangents = self
            .tangents
            .iter()
            .map(|&t| {
                let n = t.norm();
                if n > T::zero() {
                    t * n.recip()
                } else {
                    t
                }
            })
            .collect();
        Self {
            points: self.points.clone(),
            tangents,
            params: self.params.clone(),
        }
    }

    pub fn bbox(&self) -> (Point2<T>, Point2<T>) {
        let mut lo = self.points[0];
        let mut hi = self.points[0];
        for p in &self.points {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        (lo, hi)
    }
}

/// Closed uniform grid over the domain: t_j = a + j (b-a)/(N-1), j = 0..N-1,
/// so both endpoints are sampled.
pub fn sample_uniform<T: Scalar>(f: &ParametricFn<T>, n: usize) -> Result<SampledCurve<T>> {
    if n < 2 {
        return Err(Error::TooFewSamples(n));
    }
    let (a, b) = f.domain();
    let step = (b - a) / T::of_usize(n - 1);
    let mut points = Vec::with_capacity(n);
    let mut tangents = Vec::with_capacity(n);
    let mut params = Vec::with_capacity(n);
    for j in 0..n {
        let t = if j == n - 1 {
            b
        } else {
            a + step * T::of_usize(j)
        };
        let p = f.position(t);
        let v = f.velocity(t);
        if !p.is_finite() || !v.is_finite() {
            return Err(Error::NonFiniteSample {
                t: t.to_f64().unwrap_or(f64::NAN),
            });
        }
        points.push(p);
        tangents.push(v);
        params.push(t);
    }
    SampledCurve::new(points, tangents, params)
}

/// D1 with entry (j, i) = phi_i(p_j): (D1 b)_j = f_b(p_j).
pub fn build_d1_discrete<T: Scalar>(s: &SampledCurve<T>, n: usize) -> Result<DenseMatrix<T>> {
    let basis = MonomialBasis2::new(n)?;
    let mut d1 = DenseMatrix::zeros(s.len(), basis.size());
    for (j, p) in s.points().iter().enumerate() {
        let (xp, yp) = powers(n, p.x, p.y);
        for (i, &(a, b)) in basis.exponents().iter().enumerate() {
            d1[(j, i)] = xp[a] * yp[b];
        }
    }
    Ok(d1)
}

/// D2 with entry (j, i) = grad phi_i(p_j) . T_j: (D2 b)_j = grad f_b(p_j) . T_j.
pub fn build_d2_discrete<T: Scalar>(s: &SampledCurve<T>, n: usize) -> Result<DenseMatrix<T>> {
    let basis = MonomialBasis2::new(n)?;
    let mut d2 = DenseMatrix::zeros(s.len(), basis.size());
    for (j, (p, t)) in s.points().iter().zip(s.tangents()).enumerate() {
        let (xp, yp) = powers(n, p.x, p.y);
        for (i, &(a, b)) in basis.exponents().iter().enumerate() {
            let mut g = T::zero();
            if a > 0 {
                g += T::of_usize(a) * xp[a - 1] * yp[b] * t.x;
            }
            if b > 0 {
                g += T::of_usize(b) * xp[a] * yp[b - 1] * t.y;
            }
            d2[(j, i)] = g;
        }
    }
    Ok(d2)
}

/// Assemble A1 = D1'D1 and A2 = D2'D2. The identities
/// b'A1b = sum_j f_b(p_j)^2 and b'A2b = sum_j (grad f_b(p_j) . T_j)^2 are
/// exact finite sums.
pub fn assemble_discrete<T: Scalar>(
    s: &SampledCurve<T>,
    n: usize,
    lambda: T,
) -> Result<QuadraticForms<T>> {
    if lambda < T::zero() {
        return Err(Error::NegativeLambda(lambda.to_f64().unwrap_or(f64::NAN)));
    }
    let d1 = build_d1_discrete(s, n)?;
    let d2 = build_d2_discrete(s, n)?;
    let a1 = d1.normal_matrix();
    let a2 = d2.normal_matrix();
    Ok(QuadraticForms { n, d1, d2, a1, a2 })
}

fn powers<T: Scalar>(n: usize, x: T, y: T) -> (Vec<T>, Vec<T>) {
    let mut xp = vec![T::one(); n + 1];
    let mut yp = vec![T::one(); n + 1];
    for i in 1..=n {
        xp[i] = xp[i - 1] * x;
        yp[i] = yp[i - 1] * y;
    }
    (xp, yp)
}
