use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the evaluation kernels and the numerical oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("map is singular at z = {z}")]
    SingularPoint { z: Complex64 },

    #[error("point {z} lies outside the closed unit disc")]
    OutsideDisc { z: Complex64 },

    #[error("unknown target map `{0}`")]
    UnknownTarget(String),

    #[error("unknown radius id `{0}`")]
    UnknownId(String),

    #[error("parameter {name} = {value} outside {range}")]
    ParamRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("series has nonzero constant term {0}")]
    NonzeroConstantTerm(Complex64),

    #[error("disc center a = {0} must satisfy a < 3/2")]
    CenterOutsideRange(f64),

    #[error("argument out of domain: {0}")]
    DomainError(String),

    #[error("argument of w - 2 is undefined at w = 2")]
    ArgUndefined,

    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("root search did not converge within {iterations} iterations")]
    MaxIterExceeded { iterations: usize },

    #[error("quadrature failed: estimate {estimate}, error estimate {error}")]
    QuadratureFailure { estimate: f64, error: f64 },

    #[error("sequence did not converge: {values:?}")]
    NoConvergence { values: Vec<f64> },

    #[error("map is not evaluable on |z| = {r} at angle {angle}")]
    SingularOnCircle { r: f64, angle: f64 },

    #[error("f'(z) vanishes at z = {z}")]
    DerivativeVanishes { z: Complex64 },

    #[error("f(z) vanishes or is not finite at sample z = {z}")]
    SingularSample { z: Complex64 },
}

pub type Result<T> = std::result::Result<T, Error>;
