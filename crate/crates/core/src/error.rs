use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by the implicitization pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("target degree {target} is below the polynomial degree {degree}")]
    ElevationBelowDegree { degree: usize, target: usize },

    #[error("cannot differentiate a degree-0 polynomial")]
    DerivativeOfConstant,

    #[error("implicit degree must be at least 1 (got {0})")]
    InvalidImplicitDegree(usize),

    #[error("coefficient vector has length {got}, basis needs {expected}")]
    CoefficientLength { expected: usize, got: usize },

    #[error("coefficient vector is zero")]
    ZeroCoefficients,

    #[error("regulator gain must be non-negative (got {0})")]
    NegativeLambda(f64),

    #[error("composition target degree {target} is below the required {required}")]
    ComposeDegree { required: usize, target: usize },

    #[error("curve evaluated to a non-finite value at t = {t}")]
    NonFiniteSample { t: f64 },

    #[error("need at least 2 samples (got {0})")]
    TooFewSamples(usize),

    #[error("matrix entry ({i},{j}) is not symmetric within tolerance")]
    AsymmetricMatrix { i: usize, j: usize },

    #[error("eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid contour request: {0}")]
    InvalidContour(String),
}
