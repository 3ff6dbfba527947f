use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Core(#[from] qrmq_core::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("q = {q} exceeds n = {n}")]
    QExceedsN { q: usize, n: usize },
    #[error("need at least 4 distinct {axis} values with positive cost, found {found}")]
    InsufficientPoints { axis: &'static str, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
