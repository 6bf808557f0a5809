//! Error type shared across the workspace.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("specialization hits a pole: denominator {denominator} vanishes")]
    PoleAtBinding { denominator: String },

    #[error("expression is not polynomial in {var}")]
    NonPolynomial { var: String },

    #[error("expected a constant rational value")]
    NonConstant,

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),

    #[error("unknown preset '{0}'")]
    UnknownPreset(String),

    #[error("negative product index {0}; use the normal-ordered product instead")]
    NegativeProductIndex(i64),

    #[error("generator name clash on '{0}'")]
    NameClash(String),

    #[error("presentation validation failed: {identity}")]
    Validation { identity: String },

    #[error("weight cutoff {cutoff} exceeded (needed {needed})")]
    CutoffExceeded { cutoff: i64, needed: i64 },

    #[error("central charge {0} is excluded for this construction")]
    ExcludedCentralCharge(String),

    #[error("expression is not homogeneous")]
    NonHomogeneous,

    #[error("vector is not Heisenberg-like: {0}")]
    NotHeisenberg(String),

    #[error("no highest-weight module over the simple quotient at ({x}, {y}, {z})")]
    NoHighestWeightModule { x: String, y: String, z: String },

    #[error("{0}")]
    Other(String),
}
