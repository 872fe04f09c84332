//! The adaptive implicitization loops and the distance-only baseline.
//!
//! For polynomial curves the loop raises the implicit degree until the
//! algebraic-distance error is below eps_ad and the weak-gradient error has
//! stopped moving (|e2(n) - e2(n-1)| <= eps_wg); for sampled curves the
//! weak-gradient test is the absolute e2(n) <= eps_wg. Reaching n_max
//! returns that degree's fit unconditionally. Every visited degree is
//! recorded in the trace.

use crate::bezier::BezierCurve2;
use crate::continuous;
use crate::discrete::{self, ParametricFn, SampledCurve};
use crate::error::{Error, Result};
use crate::implicit::ImplicitCurve;
use crate::matrix::{squared_norm, DenseMatrix};
use crate::point::Point2;
use crate::scalar::Scalar;
use crate::solver::{self, DEFAULT_TOL};

/// Which quadratic objective drives the fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Distance plus weak-gradient term, lambda > 0.
    Wgm,
    /// Distance only (lambda = 0).
    Dm,
}

/// Why the adaptive loop stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    ThresholdMet,
    ReachedNMax,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitConfig<T> {
    pub n_max: usize,
    pub lambda: T,
    pub eps_ad: T,
    pub eps_wg: T,
    /// Sample count; required for the discrete loop, ignored otherwise.
    pub samples: Option<usize>,
    pub method: Method,
    /// Fit in coordinates affinely mapped to [-1, 1]^2, then pull the
    /// coefficients back to the original frame.
    pub normalize_coords: bool,
    /// Unit-normalize sampled tangents (discrete only).
    pub normalize_tangents: bool,
}

impl<T: Scalar> FitConfig<T> {
    /// Defaults for polynomial curves: n_max 7, lambda 0.1, eps_ad 1e-4,
    /// eps_wg 1e-3.
    pub fn polynomial_defaults() -> Self {
        Self {
            n_max: 7,
            lambda: T::of_f64(0.1),
            eps_ad: T::of_f64(1e-4),
            eps_wg: T::of_f64(1e-3),
            samples: None,
            method: Method::Wgm,
            normalize_coords: false,
            normalize_tangents: false,
        }
    }

    /// Defaults for sampled curves: n_max 7, lambda 0.01, eps_ad 1e-2,
    /// eps_wg 1e-1.
    pub fn discrete_defaults(samples: usize) -> Self {
        Self {
            n_max: 7,
            lambda: T::of_f64(0.01),
            eps_ad: T::of_f64(1e-2),
            eps_wg: T::of_f64(1e-1),
            samples: Some(samples),
            method: Method::Wgm,
            normalize_coords: false,
            normalize_tangents: false,
        }
    }

    /// The regulator gain the solve actually uses: zero for the
    /// distance-only method, `lambda` otherwise.
    pub fn effective_lambda(&self) -> T {
        match self.method {
            Method::Wgm => self.lambda,
            Method::Dm => T::zero(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_max < 1 {
            return Err(Error::InvalidConfig("n_max must be at least 1".into()));
        }
        if self.lambda < T::zero() {
            return Err(Error::NegativeLambda(
                self.lambda.to_f64().unwrap_or(f64::NAN),
            ));
        }
        let positive = |x: T| x.is_finite() && x > T::zero();
        if !positive(self.eps_ad) || !positive(self.eps_wg) {
            return Err(Error::InvalidConfig(
                "stopping thresholds must be positive".into(),
            ));
        }
        if let Some(s) = self.samples {
            if s < 2 {
                return Err(Error::InvalidConfig(format!(
                    "need at least 2 samples (got {s})"
                )));
            }
        }
        Ok(())
    }
}

/// One degree of the sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeRecord<T> {
    pub n: usize,
    /// Algebraic-distance error b'A1 b.
    pub e1: T,
    /// Weak-gradient error b'A2 b.
    pub e2: T,
    /// Smallest eigenvalue of A1 + lambda A2.
    pub lambda_min: T,
    /// Coefficients in the original coordinate frame.
    pub coeffs: Vec<T>,
    /// Multiplicity of the near-kernel at this degree.
    pub near_kernel_dim: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitTrace<T> {
    pub records: Vec<DegreeRecord<T>>,
    pub chosen_degree: usize,
    pub termination: Termination,
}

/// A fit problem: either a polynomial curve (continuous forms) or a sampled
/// curve (discrete forms).
#[derive(Debug, Clone, Copy)]
pub enum FitProblem<'a, T> {
    Polynomial(&'a BezierCurve2<T>),
    Sampled(&'a SampledCurve<T>),
}

/// Result of a single-degree solve.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeFit<T> {
    pub curve: ImplicitCurve<T>,
    pub e1: T,
    pub e2: T,
    pub lambda_min: T,
    pub near_kernel_dim: usize,
}

/// Solve one degree: assemble the forms, take the unit eigenvector of the
/// smallest eigenvalue of A1 + lambda A2, and evaluate both errors with it.
///
/// The eigenpair is computed through the square-root factors of the forms
/// (one-sided Jacobi on [S1; sqrt(lambda) S2]) rather than on the assembled
/// normal matrix; both describe the same operator, but the factored route
/// keeps eigenvalues near roundoff resolvable when the monomial collocation
/// is badly scaled.
pub fn fit_fixed_degree<T: Scalar>(
    problem: &FitProblem<'_, T>,
    n: usize,
    lambda: T,
) -> Result<DegreeFit<T>> {
    if lambda < T::zero() {
        return Err(Error::NegativeLambda(lambda.to_f64().unwrap_or(f64::NAN)));
    }
    let (s1, s2) = match problem {
        FitProblem::Polynomial(curve) => continuous::sqrt_factors(curve, n)?,
        FitProblem::Sampled(samples) => (
            discrete::build_d1_discrete(samples, n)?,
            discrete::build_d2_discrete(samples, n)?,
        ),
    };
    let stacked = if lambda == T::zero() {
        s1.clone()
    } else {
        s1.vstack(&s2.scale(lambda.sqrt()))
    };
    let eig = solver::smallest_eigenpair_factored(&stacked, T::of_f64(DEFAULT_TOL))?;
    let e1 = squared_norm(&s1.matvec(&eig.vector));
    let e2 = squared_norm(&s2.matvec(&eig.vector));
    let curve = ImplicitCurve::new(n, eig.vector)?;
    Ok(DegreeFit {
        curve,
        e1,
        e2,
        lambda_min: eig.value,
        near_kernel_dim: eig.near_kernel_dim,
    })
}

/// Distance-only baseline: the unit eigenvector of the smallest eigenvalue
/// of A1 alone. Returns the curve and its algebraic-distance error.
pub fn dokken_fit<T: Scalar>(
    problem: &FitProblem<'_, T>,
    n: usize,
) -> Result<(ImplicitCurve<T>, T)> {
    let fit = fit_fixed_degree(problem, n, T::zero())?;
    Ok((fit.curve, fit.e1))
}

/// Affine map taking a bounding box onto [-1, 1]^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoordMap<T> {
    pub cx: T,
    pub cy: T,
    pub sx: T,
    pub sy: T,
}

impl<T: Scalar> CoordMap<T> {
    pub fn from_points(points: &[Point2<T>]) -> Self {
        let mut lo = points[0];
        let mut hi = points[0];
        for p in points {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        let half = |a: T, b: T| {
            let h = (b - a) * T::half();
            if h > T::zero() {
                h
            } else {
                T::one()
            }
        };
        Self {
            cx: (lo.x + hi.x) * T::half(),
            cy: (lo.y + hi.y) * T::half(),
            sx: half(lo.x, hi.x),
            sy: half(lo.y, hi.y),
        }
    }

    pub fn apply_point(&self, p: Point2<T>) -> Point2<T> {
        Point2::new((p.x - self.cx) / self.sx, (p.y - self.cy) / self.sy)
    }

    pub fn apply_tangent(&self, t: Point2<T>) -> Point2<T> {
        Point2::new(t.x / self.sx, t.y / self.sy)
    }

    pub fn map_bezier(&self, curve: &BezierCurve2<T>) -> Result<BezierCurve2<T>> {
        let points = curve
            .control_points()
            .iter()
            .map(|&p| self.apply_point(p))
            .collect();
        BezierCurve2::new(points, curve.domain())
    }

    pub fn map_samples(&self, s: &SampledCurve<T>) -> Result<SampledCurve<T>> {
        SampledCurve::new(
            s.points().iter().map(|&p| self.apply_point(p)).collect(),
            s.tangents()
                .iter()
                .map(|&t| self.apply_tangent(t))
                .collect(),
            s.params().to_vec(),
        )
    }

    /// Pull a fit in normalized coordinates back to the original frame,
    /// re-canonicalized.
    pub fn pull_back(&self, fitted: &ImplicitCurve<T>) -> Result<ImplicitCurve<T>> {
        fitted
            .compose_affine(self.cx, self.cy, self.sx, self.sy)
            .canonicalized()
    }
}

/// Adaptive weak-gradient implicitization of a polynomial curve.
///
/// Sweeps n = 1..n_max. For n below n_max the loop returns once
/// e1(n) <= eps_ad and |e2(n) - e2(n-1)| <= eps_wg; the difference clause is
/// skipped at n = 1, where no previous value exists. At n_max the current
/// fit is returned unconditionally.
pub fn wgm_polynomial<T: Scalar>(
    curve: &BezierCurve2<T>,
    cfg: &FitConfig<T>,
) -> Result<(ImplicitCurve<T>, FitTrace<T>)> {
    cfg.validate()?;
    let map = cfg
        .normalize_coords
        .then(|| CoordMap::from_points(curve.control_points()));
    let work = match &map {
        Some(m) => m.map_bezier(curve)?,
        None => curve.clone(),
    };
    let lambda = cfg.effective_lambda();
    let mut records: Vec<DegreeRecord<T>> = Vec::new();
    let mut prev_e2: Option<T> = None;
    for n in 1..=cfg.n_max {
        let fit = fit_fixed_degree(&FitProblem::Polynomial(&work), n, lambda)?;
        let out = match &map {
            Some(m) => m.pull_back(&fit.curve)?,
            None => fit.curve.clone(),
        };
        records.push(DegreeRecord {
            n,
            e1: fit.e1,
            e2: fit.e2,
            lambda_min: fit.lambda_min,
            coeffs: out.coeffs().to_vec(),
            near_kernel_dim: fit.near_kernel_dim,
        });
        let termination = if n == cfg.n_max {
            Some(Termination::ReachedNMax)
        } else if fit.e1 <= cfg.eps_ad && prev_e2.is_none_or(|p| (fit.e2 - p).abs() <= cfg.eps_wg) {
            Some(Termination::ThresholdMet)
        } else {
            None
        };
        if let Some(termination) = termination {
            return Ok((
                out,
                FitTrace {
                    records,
                    chosen_degree: n,
                    termination,
                },
            ));
        }
        prev_e2 = Some(fit.e2);
    }
    unreachable!("loop returns at n_max")
}

/// Adaptive weak-gradient implicitization of a sampled curve: uniform
/// sampling happens once up front, and the weak-gradient stopping test is
/// the absolute e2(n) <= eps_wg.
pub fn wgm_discrete<T: Scalar>(
    f: &ParametricFn<T>,
    cfg: &FitConfig<T>,
) -> Result<(ImplicitCurve<T>, FitTrace<T>)> {
    cfg.validate()?;
    let n_samples = cfg
        .samples
        .ok_or_else(|| Error::InvalidConfig("discrete fitting needs a sample count".into()))?;
    let samples = discrete::sample_uniform(f, n_samples)?;
    wgm_sampled(&samples, cfg)
}

/// The discrete adaptive loop over an already-sampled curve. Tangent
/// normalization and coordinate normalization are applied here per the
/// config, so callers that sample themselves get identical semantics.
pub fn wgm_sampled<T: Scalar>(
    samples: &SampledCurve<T>,
    cfg: &FitConfig<T>,
) -> Result<(ImplicitCurve<T>, FitTrace<T>)> {
    cfg.validate()?;
    let samples = if cfg.normalize_tangents {
        samples.with_unit_tangents()
    } else {
        samples.clone()
    };
    let map = cfg
        .normalize_coords
        .then(|| CoordMap::from_points(samples.points()));
    let work = match &map {
        Some(m) => m.map_samples(&samples)?,
        None => samples,
    };
    let lambda = cfg.effective_lambda();
    let mut records: Vec<DegreeRecord<T>> = Vec::new();
    for n in 1..=cfg.n_max {
        let fit = fit_fixed_degree(&FitProblem::Sampled(&work), n, lambda)?;
        let out = match &map {
            Some(m) => m.pull_back(&fit.curve)?,
            None => fit.curve.clone(),
        };
        records.push(DegreeRecord {
            n,
            e1: fit.e1,
            e2: fit.e2,
            lambda_min: fit.lambda_min,
            coeffs: out.coeffs().to_vec(),
            near_kernel_dim: fit.near_kernel_dim,
        });
        let termination = if n == cfg.n_max {
            Some(Termination::ReachedNMax)
        } else if fit.e1 <= cfg.eps_ad && fit.e2 <= cfg.eps_wg {
            Some(Termination::ThresholdMet)
        } else {
            None
        };
        if let Some(termination) = termination {
            return Ok((
                out,
                FitTrace {
                    records,
                    chosen_degree: n,
                    termination,
                },
            ));
        }
    }
    unreachable!("loop returns at n_max")
}

/// Combined matrix A = A1 + lambda A2 for a problem and degree, assembled
/// explicitly. Used by diagnostics and tests; the fit path goes through the
/// factored solve.
pub fn combined_matrix<T: Scalar>(
    problem: &FitProblem<'_, T>,
    n: usize,
    lambda: T,
) -> Result<DenseMatrix<T>> {
    let forms = match problem {
        FitProblem::Polynomial(curve) => continuous::assemble(curve, n, lambda)?,
        FitProblem::Sampled(samples) => discrete::assemble_discrete(samples, n, lambda)?,
    };
    Ok(forms.combined(lambda))
}
