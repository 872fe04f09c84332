//! Approximate implicitization of planar parametric curves with a
//! weak-gradient regularizer.
//!
//! Given a parametric curve p(t), the library finds a bivariate polynomial
//! f(x, y) of degree n whose zero set follows the curve, by minimizing
//!
//! ```text
//! L(b) = L_AD + lambda * L_WG = b' (A1 + lambda A2) b,    ||b|| = 1,
//! ```
//!
//! where `L_AD` integrates (or sums) the squared algebraic distance
//! f_b(p(t)) and `L_WG` the squared inner product of the implicit gradient
//! with the curve tangent. The minimizer is the unit eigenvector of the
//! smallest eigenvalue. An adaptive sweep raises n until the distance error
//! is small and the weak-gradient error has settled.
//!
//! Polynomial curves get exact continuous forms through Bernstein algebra
//! ([`continuous`]); other curves are sampled uniformly and fitted through
//! discrete collocation ([`discrete`]). [`driver`] holds the adaptive loops
//! and the distance-only baseline, [`contour`] extracts zero sets for
//! rendering.
//!
//! All numerics are generic over [`Scalar`] (`f32` or `f64`); the `*64`
//! aliases below pin the common double-precision instantiation.

pub mod bernstein;
pub mod bezier;
pub mod continuous;
pub mod contour;
pub mod discrete;
pub mod driver;
mod error;
pub mod implicit;
pub mod matrix;
pub mod point;
pub mod quadrature;
mod scalar;
pub mod solver;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use bernstein::{BernsteinPoly, GramMatrix};
pub use bezier::BezierCurve2;
pub use continuous::{assemble, build_d1, build_d2, compose_monomial, QuadraticForms};
pub use contour::{marching_squares, ContourMesh};
pub use discrete::{
    assemble_discrete, build_d1_discrete, build_d2_discrete, sample_uniform, ParametricFn,
    SampledCurve,
};
pub use driver::{
    dokken_fit, fit_fixed_degree, wgm_discrete, wgm_polynomial, wgm_sampled, CoordMap, DegreeFit,
    DegreeRecord, FitConfig, FitProblem, FitTrace, Method, Termination,
};
pub use implicit::{ImplicitCurve, MonomialBasis2};
pub use matrix::DenseMatrix;
pub use point::Point2;
pub use solver::{
    smallest_eigenpair, smallest_eigenpair_factored, symmetric_eigenvalues, EigenResult,
    DEFAULT_TOL,
};

pub type Point64 = Point2<f64>;
pub type BernsteinPoly64 = BernsteinPoly<f64>;
pub type BezierCurve64 = BezierCurve2<f64>;
pub type ImplicitCurve64 = ImplicitCurve<f64>;
pub type SampledCurve64 = SampledCurve<f64>;
pub type ParametricFn64 = ParametricFn<f64>;
pub type FitConfig64 = FitConfig<f64>;
pub type FitTrace64 = FitTrace<f64>;
pub type DenseMatrix64 = DenseMatrix<f64>;
pub type ContourMesh64 = ContourMesh<f64>;
