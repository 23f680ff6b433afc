use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("zero polynomial has no roots to count")]
    ZeroPolynomial,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("Bessel index beta must be nonzero")]
    ZeroBeta,
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("invalid seed set: {0}")]
    InvalidSeedSet(String),
    #[error("invalid Morse parameter a = {a}: {reason}")]
    InvalidParameter { a: String, reason: String },
    #[error("invalid deformation: {0}")]
    InvalidSpec(String),
    #[error("seed set is not admissible: {0}")]
    Inadmissible(String),
    #[error("seed Wronskian vanishes identically")]
    VanishingWronskian,
    #[error("level {n} is not an eigenstate of this deformation: {reason}")]
    InvalidLevel { n: usize, reason: String },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("potential is singular or overflows at x = {x}")]
    PotentialPole { x: f64 },
    #[error("eigensolver did not converge: residual {residual:e} for level {level}")]
    NoConvergence { level: usize, residual: f64 },
    #[error("integral diverges: {0}")]
    Divergent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
