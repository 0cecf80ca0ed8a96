//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("rank error: {0}")]
    Rank(String),

    #[error("did not converge: {0}")]
    Convergence(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("frame is not tight: {0}")]
    NotTight(String),

    #[error("frame is not Parseval: {0}")]
    NotParseval(String),

    #[error("zero column: {0}")]
    ZeroColumn(String),

    #[error("not a regular two-graph: {0}")]
    NotTwoGraph(String),

    #[error("factorization failed: {0}")]
    Factorization(String),

    #[error("search exhausted its budget: {0}")]
    SearchExhausted(String),

    #[error("precision budget exceeded: {0}")]
    Precision(String),

    #[error("empty frame: {0}")]
    EmptyFrame(String),

    #[error("not an equiangular tight frame: {0}")]
    NotEtf(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
