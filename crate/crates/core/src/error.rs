use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("payoff matrices must be square with a shared strategy set: {0}")]
    RectangularGame(String),

    #[error("strategy labels must be unique (duplicate: {0})")]
    DuplicateLabel(String),

    #[error("not a probability vector: {0}")]
    NotAProbability(String),

    #[error("strategy index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("far constraint infeasible: every point of the simplex is within 2δ of the anchor strategy")]
    FarInfeasible,

    #[error("punishment payoff must be strictly below the minimum payoff (sigma = {sigma}, min = {min})")]
    SigmaTooLarge { sigma: String, min: String },

    #[error("redistribution would drive strategy {index} below zero")]
    NegativeMass { index: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
