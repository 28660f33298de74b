use crate::exactla::{DimensionMismatch, ParseRatError};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Dimension(#[from] DimensionMismatch),
    #[error(transparent)]
    Rational(#[from] ParseRatError),
    #[error("unknown basis name {0:?}")]
    UnknownName(String),
    #[error("duplicate basis name {0:?}")]
    DuplicateName(String),
    #[error("grading violated: {0}")]
    Grading(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("subspace is not graded")]
    NotGraded,
    #[error("not a Jordan superalgebra: {0}")]
    NotJordan(String),
    #[error("format error: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
